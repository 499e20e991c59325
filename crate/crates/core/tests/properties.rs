use proptest::prelude::*;

use planimetry::congruence::{congruent_any, criterion_a, criterion_b, criterion_c, Correspondence, TriangleElements};
use planimetry::exec::{map_indexed, Execution};
use planimetry::geom::{
    concyclic, cross, squared_distance, Exact, Float, Isometry, Point, Scalar, Triangle, Vertex,
};
use planimetry::logic::{equivalent, parse_formula, Formula};
use planimetry::scenarios::{Scenario, ScenarioKind, ShapeParams};
use planimetry::ssa::{classify_pair, lemma_common_side_check, lemma_pair, solve_ssa, DichotomyVerdict, Placement, SsaSpec, SSA_MATCH};
use planimetry::suite::{random_rational_spec, RationalSpec};

const EPS: f64 = 1e-9;

fn ex(n: i64) -> Exact {
    Exact::from_int(n)
}

fn exact_point() -> impl Strategy<Value = Point<Exact>> {
    (-50i64..=50, -50i64..=50).prop_map(|(x, y)| Point::new(ex(x), ex(y)))
}

fn exact_triangle() -> impl Strategy<Value = Triangle<Exact>> {
    (exact_point(), exact_point(), exact_point()).prop_filter_map("degenerate", |(a, b, c)| Triangle::new(a, b, c).ok())
}

/// Rigid motion with a rational rotation from a Pythagorean pair.
fn exact_isometry() -> impl Strategy<Value = Isometry<Exact>> {
    (1i64..9, 0i64..9, any::<bool>(), any::<bool>(), -20i64..=20, -20i64..=20).prop_filter_map(
        "m > n",
        |(m, n, flip, mirror, tx, ty)| {
            if m <= n {
                return None;
            }
            let h = m * m + n * n;
            let sin = Exact::from_ratio(2 * m * n, h);
            let sin = if flip { -sin } else { sin };
            Isometry::new(Exact::from_ratio(m * m - n * n, h), sin, Point::new(ex(tx), ex(ty)), mirror).ok()
        },
    )
}

fn float_triangle() -> impl Strategy<Value = Triangle<Float>> {
    let c = || -10.0f64..10.0;
    (c(), c(), c(), c(), c(), c()).prop_filter_map("degenerate", |(ax, ay, bx, by, cx, cy)| {
        let p = |x, y| Point::new(Float::new(x, EPS), Float::new(y, EPS));
        let t = Triangle::new(p(ax, ay), p(bx, by), p(cx, cy)).ok()?;
        // Keep away from slivers so float angles are well conditioned.
        Vertex::ALL.iter().all(|&v| t.angle_rad(v) > 0.05).then_some(t)
    })
}

fn rational_spec() -> impl Strategy<Value = RationalSpec> {
    any::<u64>().prop_map(|seed| random_rational_spec(&mut planimetry::exec::sample_rng(seed, 0)))
}

fn formula() -> impl Strategy<Value = Formula> {
    let leaf = prop::sample::select(vec!["p", "q", "r", "t", "x1"]).prop_map(Formula::atom);
    leaf.prop_recursive(5, 40, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Formula::and(l, r)),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Formula::or(l, r)),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Formula::xor(l, r)),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Formula::implies(l, r)),
            (inner.clone(), inner).prop_map(|(l, r)| Formula::iff(l, r)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rational_isometries_preserve_distances_exactly(t in exact_triangle(), g in exact_isometry()) {
        let moved = t.map_points(|p| g.apply(p)).unwrap();
        for v in Vertex::ALL {
            prop_assert_eq!(t.side_sq(v), moved.side_sq(v));
            prop_assert_eq!(t.cos_at(v), moved.cos_at(v));
        }
        let flipped = t.orientation() != moved.orientation();
        prop_assert_eq!(flipped, g.mirror);
    }

    #[test]
    fn float_angles_sum_to_pi(t in float_triangle()) {
        let sum: f64 = Vertex::ALL.iter().map(|&v| t.angle_rad(v)).sum();
        prop_assert!((sum - std::f64::consts::PI).abs() < 1e-12);
    }

    #[test]
    fn float_orientation_agrees_with_exact_given_margin(
        ax in -1000i64..1000, ay in -1000i64..1000,
        bx in -1000i64..1000, by in -1000i64..1000,
        cx in -1000i64..1000, cy in -1000i64..1000,
        k in 1i64..64,
    ) {
        let scaled = |n: i64| n as f64 / k as f64;
        let pe = |x: i64, y: i64| Point::new(Exact::from_ratio(x, k), Exact::from_ratio(y, k));
        let pf = |x: i64, y: i64| Point::new(Float::new(scaled(x), EPS), Float::new(scaled(y), EPS));
        let (a, b, c) = (pe(ax, ay), pe(bx, by), pe(cx, cy));
        let exact = cross(&(b.clone() - a.clone()), &(c.clone() - a.clone()));
        let (fa, fb, fc) = (pf(ax, ay), pf(bx, by), pf(cx, cy));
        let float = cross(&(fb - fa.clone()), &(fc - fa));
        let scale = 1.0 + squared_distance(&a, &b).to_f64() + squared_distance(&a, &c).to_f64();
        if exact.to_f64().abs() > 10.0 * EPS * scale {
            prop_assert_eq!(exact.sign_within(scale), float.sign_within(scale));
        }
    }

    #[test]
    fn criterion_c_implies_a_and_b(t in exact_triangle(), g in exact_isometry()) {
        let moved = t.map_points(|p| g.apply(p)).unwrap();
        let (e1, e2) = (TriangleElements::of(&t), TriangleElements::of(&moved));
        let corr = Correspondence::IDENTITY;
        prop_assert!(criterion_c(&e1, &e2, &corr));
        prop_assert!(criterion_a(&e1, &e2, &corr));
        prop_assert!(criterion_b(&e1, &e2, &corr));
    }

    #[test]
    fn congruence_search_is_symmetric(t in exact_triangle(), g in exact_isometry(), rot in 0usize..3) {
        let moved = t.map_points(|p| g.apply(p)).unwrap();
        let [a, b, c] = moved.vertices().clone();
        let relabeled = match rot {
            0 => Triangle::new(a, b, c),
            1 => Triangle::new(b, c, a),
            _ => Triangle::new(c, a, b),
        }.unwrap();
        let fwd = congruent_any(&t, &relabeled).expect("congruent by construction");
        let back = congruent_any(&relabeled, &t).expect("congruence is symmetric");
        prop_assert_eq!(back, fwd.inverse());
    }

    #[test]
    fn rational_two_solution_pairs_are_exactly_supplementary(rs in rational_spec()) {
        let sols = solve_ssa(&rs.spec()).unwrap();
        prop_assert_eq!(sols.len(), 2);
        let (t1, t2) = (&sols.solutions[0].triangle, &sols.solutions[1].triangle);
        match classify_pair(t1, t2, &Correspondence::IDENTITY, SSA_MATCH).unwrap() {
            DichotomyVerdict::Supplementary(c1, c2) => prop_assert_eq!(c1.negated(), c2),
            other => prop_assert!(false, "{:?}", other.kind()),
        }
        let (abc, abd) = lemma_pair(t1, t2, Placement::OppositeSide).unwrap();
        let report = lemma_common_side_check(&abc, &abd).unwrap();
        prop_assert!(report.holds());
        prop_assert_eq!(report.concyclicity_det, 0.0);
        let [a, b, c] = abc.vertices();
        prop_assert!(concyclic(a, b, c, abd.vertex(Vertex::C)).unwrap());
    }

    #[test]
    fn unambiguous_specs_have_at_most_one_solution(
        a in 0.1f64..10.0, b in 0.1f64..10.0, deg in 1.0f64..179.0,
    ) {
        let spec = SsaSpec::from_degrees(a, b, deg, EPS).unwrap();
        let sols = solve_ssa(&spec).unwrap();
        prop_assert!(sols.len() <= 2);
        if !spec.case().is_ambiguous() {
            prop_assert!(sols.len() <= 1);
        }
        if let [s1, s2] = sols.solutions.as_slice() {
            let fwd = classify_pair(&s1.triangle, &s2.triangle, &Correspondence::IDENTITY, SSA_MATCH);
            let back = classify_pair(&s2.triangle, &s1.triangle, &Correspondence::IDENTITY, SSA_MATCH);
            match (fwd.unwrap(), back.unwrap()) {
                (DichotomyVerdict::Supplementary(a1, a2), DichotomyVerdict::Supplementary(b1, b2)) => {
                    prop_assert_eq!(a1, b2);
                    prop_assert_eq!(a2, b1);
                }
                (f, b) => prop_assert!(false, "{:?} / {:?}", f.kind(), b.kind()),
            }
        }
    }

    #[test]
    fn solutions_reproduce_the_data(a in 0.1f64..10.0, b in 0.1f64..10.0, deg in 1.0f64..179.0) {
        let spec = SsaSpec::from_degrees(a, b, deg, EPS).unwrap();
        for t in solve_ssa(&spec).unwrap().triangles() {
            let scale = a.max(b);
            prop_assert!((t.side_sq(Vertex::A).to_f64().sqrt() - a).abs() <= 1e-9 * scale);
            prop_assert!((t.side_sq(Vertex::B).to_f64().sqrt() - b).abs() <= 1e-9 * scale);
            prop_assert!((t.angle_rad(Vertex::A) - deg.to_radians()).abs() <= 1e-9);
            // Canonical pose: B above the x-axis.
            prop_assert!(t.vertex(Vertex::B).to_f64()[1] > 0.0);
        }
    }

    #[test]
    fn printed_formulas_parse_back(f in formula()) {
        let text = f.to_string();
        prop_assert_eq!(parse_formula(&text).unwrap(), f);
    }

    #[test]
    fn equivalence_is_reflexive_and_symmetric(f in formula(), g in formula()) {
        prop_assert!(equivalent(&f, &f, None).unwrap().equivalent);
        let fg = equivalent(&f, &g, None).unwrap();
        let gf = equivalent(&g, &f, None).unwrap();
        prop_assert_eq!(fg.equivalent, gf.equivalent);
        prop_assert_eq!(fg.witness, gf.witness);
        // Double negation and the iff self-test never change the table.
        prop_assert!(equivalent(&f, &Formula::not(Formula::not(f.clone())), None).unwrap().equivalent);
        let taut = Formula::iff(f.clone(), f.clone());
        prop_assert!(equivalent(&taut, &Formula::or(Formula::atom("p"), Formula::not(Formula::atom("p"))), None).unwrap().equivalent);
    }

    #[test]
    fn equivalence_is_transitive(f in formula(), g in formula(), h in formula()) {
        let e = |x: &Formula, y: &Formula| equivalent(x, y, None).unwrap().equivalent;
        if e(&f, &g) && e(&g, &h) {
            prop_assert!(e(&f, &h));
        }
    }

    #[test]
    fn symmetric_scenarios_are_swap_invariant(a in 5.0f64..85.0, b in 5.0f64..85.0) {
        let p = ShapeParams::from_degrees(a, b).unwrap();
        for kind in [ScenarioKind::MedialCircumcenter, ScenarioKind::IncenterSegments, ScenarioKind::SquareCenter, ScenarioKind::RectangleCenter] {
            let s = Scenario::new(kind);
            let (r1, r2) = (s.residual(p).unwrap(), s.residual(p.swapped()).unwrap());
            prop_assert!((r1.abs() - r2.abs()).abs() <= 1e-12 * (1.0 + r1.abs()), "{kind}: {r1} vs {r2}");
        }
    }

    #[test]
    fn scenario_residuals_are_similarity_invariant(a in 10.0f64..80.0, b in 10.0f64..80.0, k in 0.25f64..4.0, rot in 0.0f64..6.28) {
        let p = ShapeParams::from_degrees(a, b).unwrap();
        let t = p.triangle(EPS).unwrap();
        let (c, s) = (rot.cos(), rot.sin());
        let moved = t
            .map_points(|q| {
                let [x, y] = q.to_f64();
                Point::new(Float::new(k * (c * x - s * y) + 3.0, EPS), Float::new(k * (s * x + c * y) - 1.0, EPS))
            })
            .unwrap();
        for kind in ScenarioKind::ALL {
            let s = Scenario::new(kind);
            let (r1, r2) = (s.residual(p), s.residual_on(&moved));
            if let (Ok(r1), Ok(r2)) = (r1, r2) {
                // Residuals are lengths or cosines; lengths scale with k.
                let ok = (r1 - r2).abs() <= 1e-9 || (k * r1 - r2).abs() <= 1e-9 || (k * k * r1 - r2).abs() <= 1e-9;
                prop_assert!(ok, "{kind}: {r1} vs {r2} at scale {k}");
            }
        }
    }
}

#[test]
fn parallel_and_sequential_maps_agree() {
    let f = |i: usize| {
        let spec = SsaSpec::from_degrees(1.0 + (i % 7) as f64, 2.0, 10.0 + (i % 150) as f64, EPS).unwrap();
        solve_ssa(&spec).unwrap().len()
    };
    assert_eq!(map_indexed(Execution::Parallel, 5000, f), map_indexed(Execution::Sequential, 5000, f));
}
