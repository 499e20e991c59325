//! Independent oracles for the SSA solver and the common-side construction.

use rand::Rng;

use planimetry::exec::sample_rng;
use planimetry::geom::{Float, Point, Scalar, Triangle, Vertex};
use planimetry::logic::{compose_scheme, DisjunctionKind};
use planimetry::ssa::{lemma_common_side_check, lemma_pair, solve_ssa, Placement, SsaSpec};

const EPS: f64 = 1e-9;

/// Third sides found by walking the apex along the ray of the given angle
/// and bisecting every sign change of `|BC| - a`.
fn apex_sweep(a: f64, b: f64, angle: f64) -> Vec<f64> {
    let (ux, uy) = (angle.cos(), angle.sin());
    let f = |t: f64| ((t * ux - b).powi(2) + (t * uy).powi(2)).sqrt() - a;
    let top = 2.0 * (a + b);
    let n = 20_000;
    let mut roots = Vec::new();
    let mut prev = (0.0, f(0.0));
    for i in 1..=n {
        let t = top * i as f64 / n as f64;
        let cur = (t, f(t));
        if prev.1 != 0.0 && (prev.1 > 0.0) != (cur.1 > 0.0) {
            let (mut lo, mut hi) = (prev.0, cur.0);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if (f(mid) > 0.0) == (prev.1 > 0.0) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            roots.push(0.5 * (lo + hi));
        }
        prev = cur;
    }
    roots
}

#[test]
fn solver_matches_apex_sweep() {
    let mut rng = sample_rng(2024, 0);
    let mut compared = 0;
    let mut two = 0;
    while compared < 2_000 {
        let a: f64 = rng.random_range(0.1..10.0);
        let b: f64 = rng.random_range(0.1..10.0);
        let angle = rng.random_range(1.0f64..179.0).to_radians();
        // Stay clear of tangency and of a vanishing third side, where a
        // sweep cannot resolve the root count.
        let sin_ratio = b * angle.sin() / a;
        if (sin_ratio - 1.0).abs() < 1e-4 || (a - b).abs() < 1e-4 * a.max(b) {
            continue;
        }
        compared += 1;
        let expected = apex_sweep(a, b, angle);
        let spec = SsaSpec::from_degrees(a, b, angle.to_degrees(), EPS).unwrap();
        let got: Vec<f64> = solve_ssa(&spec).unwrap().solutions.iter().map(|s| s.third_side.to_f64()).collect();
        assert_eq!(got.len(), expected.len(), "a={a} b={b} angle={angle}");
        for (g, e) in got.iter().zip(&expected) {
            assert!((g - e).abs() <= 1e-9 * a.max(b), "a={a} b={b}: {g} vs {e}");
        }
        two += usize::from(got.len() == 2);
    }
    assert!(two > 100, "too few two-solution specs exercised: {two}");
}

fn fp(x: f64, y: f64) -> Point<Float> {
    Point::new(Float::new(x, EPS), Float::new(y, EPS))
}

/// Circumcenter from the perpendicular bisectors of `pq` and `pr`.
fn circumcenter(p: [f64; 2], q: [f64; 2], r: [f64; 2]) -> [f64; 2] {
    let (bx, by) = (q[0] - p[0], q[1] - p[1]);
    let (cx, cy) = (r[0] - p[0], r[1] - p[1]);
    let d = 2.0 * (bx * cy - by * cx);
    let (b2, c2) = (bx * bx + by * by, cx * cx + cy * cy);
    [p[0] + (cy * b2 - by * c2) / d, p[1] + (bx * c2 - cx * b2) / d]
}

#[test]
fn common_side_pair_with_base_30_degrees() {
    // AB = 2 along the x-axis, angle ABC = angle ABD = 30 deg, AC = AD = 1.2.
    let spec = SsaSpec::from_degrees(1.2, 2.0, 30.0, EPS).unwrap();
    let sols = solve_ssa(&spec).unwrap();
    assert_eq!(sols.len(), 2);
    let (t1, t2) = (&sols.solutions[0].triangle, &sols.solutions[1].triangle);
    let (abc, abd) = lemma_pair(t1, t2, Placement::OppositeSide).unwrap();
    let report = lemma_common_side_check(&abc, &abd).unwrap();
    assert!(report.supplementary && report.opposite_sides && report.ac_lt_ab);
    assert_eq!(report.concyclic, Some(true));

    let [a, b, c] = abc.to_f64();
    let d = abd.vertex(Vertex::C).to_f64();
    assert!((abd.vertex(Vertex::A).to_f64()[0] - a[0]).abs() < 1e-12);
    let o = circumcenter(a, b, c);
    let r = |p: [f64; 2]| ((p[0] - o[0]).powi(2) + (p[1] - o[1]).powi(2)).sqrt();
    assert!((r(d) - r(a)).abs() < 1e-12, "D is off the circle ABC");
    let dist = |p: [f64; 2], q: [f64; 2]| ((p[0] - q[0]).powi(2) + (p[1] - q[1]).powi(2)).sqrt();
    assert!((dist(a, c) - 1.2).abs() < 1e-12 && (dist(a, d) - 1.2).abs() < 1e-12);
    assert!((dist(a, b) - 2.0).abs() < 1e-12);

    // The angles at C and D read off the coordinates sum to 180 degrees.
    let angle = |v: [f64; 2], p: [f64; 2], q: [f64; 2]| {
        let (ux, uy, wx, wy) = (p[0] - v[0], p[1] - v[1], q[0] - v[0], q[1] - v[1]);
        (ux * wy - uy * wx).abs().atan2(ux * wx + uy * wy)
    };
    let sum = angle(c, a, b) + angle(d, a, b);
    assert!((sum - std::f64::consts::PI).abs() < 1e-12);
}

#[test]
fn longer_equal_legs_give_a_unique_triangle() {
    // AC = AD = 2.5 > AB = 2: no second, non-congruent triangle exists.
    let spec = SsaSpec::from_degrees(2.5, 2.0, 30.0, EPS).unwrap();
    assert_eq!(solve_ssa(&spec).unwrap().len(), 1);
    let t = Triangle::new(fp(0.0, 0.0), fp(2.0, 0.0), fp(1.0, 1.0)).unwrap();
    assert!(lemma_common_side_check(&t, &t).is_err());
}

#[test]
fn scheme_with_descriptive_atoms() {
    let s = compose_scheme("triangle", "right_angle", "isosceles", "on_bisector", DisjunctionKind::Inclusive).unwrap();
    assert_eq!(s.inverse.to_string(), "triangle & on_bisector -> right_angle | isosceles");
    assert_eq!(s.combined.to_string(), "triangle & (right_angle | isosceles) -> on_bisector");

    let s = compose_scheme("triangle", "congruent", "supplementary", "ssa_data", DisjunctionKind::Exclusive).unwrap();
    assert_eq!(s.inverse.to_string(), "triangle & ssa_data -> congruent ^ supplementary");
    assert_eq!(s.exclusivity().to_string(), "!(congruent & supplementary)");
}
