//! Seeded property suites behind the `verify` command.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use serde::Serialize;

use crate::congruence::Correspondence;
use crate::exec::{map_indexed, sample_rng, Execution};
use crate::geom::{Backend, Exact, Float, Isometry, Point, Scalar, Triangle, Vertex};
use crate::report::{Check, Outcome};
use crate::ssa::{
    classify_pair, lemma_common_side_check, lemma_pair, solve_ssa, DichotomyVerdict, LemmaReport, Placement, SsaSpec,
    VerdictKind, SSA_MATCH,
};

pub const ANGLE_TOL: f64 = 1e-9;
pub const COS_SUM_TOL: f64 = 1e-9;
pub const CONCYCLIC_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, Serialize)]
pub struct SuiteConfig {
    pub samples: usize,
    pub seed: u64,
    pub eps: f64,
    #[serde(skip)]
    pub exec: Execution,
}

impl SuiteConfig {
    pub fn new(samples: usize, seed: u64) -> Self {
        SuiteConfig {
            samples,
            seed,
            eps: Float::DEFAULT_EPS,
            exec: Execution::default(),
        }
    }

    /// Independent seed per check, so adding a check does not shift others.
    fn seed_for(&self, check: u64) -> u64 {
        self.seed ^ check.wrapping_mul(0x9E37_79B9_7F4A_7C15)
    }

    fn run(&self, check: u64, f: impl Fn(&mut rand_chacha::ChaCha8Rng) -> Outcome + Sync + Send) -> Vec<Outcome> {
        let seed = self.seed_for(check);
        map_indexed(self.exec, self.samples, |i| f(&mut sample_rng(seed, i as u64)))
    }
}

/// Float SSA data: opposite side, adjacent side, angle in degrees.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FloatSpec {
    pub a: f64,
    pub b: f64,
    pub angle_deg: f64,
}

impl FloatSpec {
    pub fn spec(&self, eps: f64) -> SsaSpec<Float> {
        SsaSpec::from_degrees(self.a, self.b, self.angle_deg, eps).expect("sampled spec is valid")
    }
}

impl std::fmt::Display for FloatSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "a={:.17} b={:.17} angle={:.17}deg", self.a, self.b, self.angle_deg)
    }
}

/// Lengths in `[0.1, 10]`, angle in `(1, 179)` degrees.
pub fn random_spec(rng: &mut impl Rng) -> FloatSpec {
    FloatSpec {
        a: rng.random_range(0.1..=10.0),
        b: rng.random_range(0.1..=10.0),
        angle_deg: rng.random_range(1.0..179.0),
    }
}

/// A spec with two solutions: acute angle and `b sin(A) < a < b`, kept a
/// little away from both ends.
pub fn random_two_solution_spec(rng: &mut impl Rng) -> FloatSpec {
    let angle_deg: f64 = rng.random_range(1.0..89.0);
    let b: f64 = rng.random_range(0.1..=10.0);
    let low = b * angle_deg.to_radians().sin();
    let u: f64 = rng.random_range(0.001..0.999);
    FloatSpec {
        a: low + u * (b - low),
        b,
        angle_deg,
    }
}

/// Remaining angles `(B, C)` in radians of every triangle with the given
/// data, by the law of sines, sorted by `B`.
pub fn law_of_sines(a: f64, b: f64, angle_a: f64) -> Vec<(f64, f64)> {
    const TIE: f64 = 1e-15;
    let sin_b = b * angle_a.sin() / a;
    let candidates = if sin_b > 1.0 + TIE {
        vec![]
    } else if sin_b >= 1.0 - TIE {
        vec![PI / 2.0]
    } else {
        let b1 = sin_b.asin();
        vec![b1, PI - b1]
    };
    let mut out: Vec<(f64, f64)> = candidates
        .into_iter()
        .map(|ang_b| (ang_b, PI - angle_a - ang_b))
        .filter(|&(_, ang_c)| ang_c > 0.0)
        .collect();
    out.sort_by(|x, y| x.0.total_cmp(&y.0));
    out
}

fn remaining_angles<S: Scalar>(t: &Triangle<S>) -> (f64, f64) {
    (t.angle_rad(Vertex::B), t.angle_rad(Vertex::C))
}

pub fn ssa_oracle_check(cfg: &SuiteConfig) -> Check {
    let outcomes = cfg.run(1, |rng| {
        let fs = random_spec(rng);
        let sols = match solve_ssa(&fs.spec(cfg.eps)) {
            Ok(s) => s,
            Err(e) => return Outcome::fail(None, format!("{fs}: {e}")),
        };
        let expected = law_of_sines(fs.a, fs.b, fs.angle_deg.to_radians());
        let mut got: Vec<(f64, f64)> = sols.triangles().map(remaining_angles).collect();
        got.sort_by(|x, y| x.0.total_cmp(&y.0));
        if got.len() != expected.len() {
            return Outcome::fail(None, format!("{fs}: {} solutions, oracle {}", got.len(), expected.len()));
        }
        let worst = got
            .iter()
            .zip(&expected)
            .map(|(g, e)| (g.0 - e.0).abs().max((g.1 - e.1).abs()))
            .fold(0.0, f64::max);
        Outcome::within(worst, ANGLE_TOL, || format!("{fs}: angle error {worst:.3e}"))
    });
    Check::from_outcomes("ssa solutions match the law-of-sines oracle", outcomes)
}

pub fn case_prediction_check(cfg: &SuiteConfig) -> Check {
    let outcomes = cfg.run(2, |rng| {
        let fs = random_spec(rng);
        let spec = fs.spec(cfg.eps);
        let case = spec.case();
        let n = solve_ssa(&spec).map(|s| s.len()).unwrap_or(usize::MAX);
        if (n == 2 && !case.is_ambiguous()) || n > 2 {
            Outcome::fail(None, format!("{fs}: {n} solutions in case {case:?}"))
        } else {
            Outcome::pass_exact()
        }
    });
    Check::from_outcomes("unambiguous cases have at most one solution", outcomes)
}

fn two_solutions<S: Scalar>(spec: &SsaSpec<S>) -> Result<(Triangle<S>, Triangle<S>), String> {
    let sols = solve_ssa(spec).map_err(|e| e.to_string())?;
    match sols.solutions.as_slice() {
        [s1, s2] => Ok((s1.triangle.clone(), s2.triangle.clone())),
        other => Err(format!("{} solutions", other.len())),
    }
}

pub fn dichotomy_float_check(cfg: &SuiteConfig) -> Check {
    let outcomes = cfg.run(3, |rng| {
        let fs = random_two_solution_spec(rng);
        let (t1, t2) = match two_solutions(&fs.spec(cfg.eps)) {
            Ok(p) => p,
            Err(e) => return Outcome::fail(None, format!("{fs}: {e}")),
        };
        match classify_pair(&t1, &t2, &Correspondence::IDENTITY, SSA_MATCH) {
            Ok(DichotomyVerdict::Supplementary(c1, c2)) => {
                let sum = (c1.value() + c2.value()).abs();
                Outcome::within(sum, COS_SUM_TOL, || format!("{fs}: |cos1 + cos2| = {sum:.3e}"))
            }
            Ok(v) => Outcome::fail(None, format!("{fs}: {:?}", v.kind())),
            Err(e) => Outcome::fail(None, format!("{fs}: {e}")),
        }
    });
    Check::from_outcomes("two-solution pairs are supplementary (float)", outcomes)
}

pub fn classify_symmetry_check(cfg: &SuiteConfig) -> Check {
    let outcomes = cfg.run(4, |rng| {
        let fs = random_two_solution_spec(rng);
        let (t1, t2) = match two_solutions(&fs.spec(cfg.eps)) {
            Ok(p) => p,
            Err(e) => return Outcome::fail(None, format!("{fs}: {e}")),
        };
        let fwd = classify_pair(&t1, &t2, &Correspondence::IDENTITY, SSA_MATCH);
        let back = classify_pair(&t2, &t1, &Correspondence::IDENTITY, SSA_MATCH);
        match (fwd, back) {
            (Ok(DichotomyVerdict::Supplementary(a1, a2)), Ok(DichotomyVerdict::Supplementary(b1, b2)))
                if a1 == b2 && a2 == b1 =>
            {
                Outcome::pass_exact()
            }
            (f, b) => Outcome::fail(None, format!("{fs}: {f:?} vs {b:?}")),
        }
    });
    Check::from_outcomes("classification is symmetric in the pair", outcomes)
}

fn lemma_outcome(report: &LemmaReport, same_side: &LemmaReport, what: &dyn Fn() -> String) -> Outcome {
    let det = report.concyclicity_det.abs() / report.scale.powi(4);
    let ok = report.supplementary
        && same_side.supplementary
        && report.opposite_sides
        && !same_side.opposite_sides
        && report.ac_lt_ab
        && report.concyclic == Some(true);
    if ok && det <= CONCYCLIC_TOL {
        Outcome::pass(det)
    } else {
        Outcome::fail(Some(det), format!("{}: {report:?}", what()))
    }
}

fn lemma_sample<S: Scalar>(t1: &Triangle<S>, t2: &Triangle<S>) -> Result<(LemmaReport, LemmaReport), String> {
    let check = |placement| {
        let (abc, abd) = lemma_pair(t1, t2, placement).map_err(|e| e.to_string())?;
        lemma_common_side_check(&abc, &abd).map_err(|e| e.to_string())
    };
    Ok((check(Placement::OppositeSide)?, check(Placement::SameSide)?))
}

pub fn lemma_float_check(cfg: &SuiteConfig) -> Check {
    let outcomes = cfg.run(5, |rng| {
        let fs = random_two_solution_spec(rng);
        let result = two_solutions(&fs.spec(cfg.eps)).and_then(|(t1, t2)| lemma_sample(&t1, &t2));
        match result {
            Ok((opp, same)) => lemma_outcome(&opp, &same, &|| fs.to_string()),
            Err(e) => Outcome::fail(None, format!("{fs}: {e}")),
        }
    });
    Check::from_outcomes("common-side pairs: supplementary, concyclic, AC < AB (float)", outcomes)
}

/// Rational SSA data whose two solutions have rational coordinates.
#[derive(Clone, Debug)]
pub struct RationalSpec {
    /// Angle with `cos = (m^2 - n^2) / (m^2 + n^2)`, `sin = 2mn / (m^2 + n^2)`.
    pub m: i64,
    pub n: i64,
    pub b: Exact,
    /// Half the difference of the two third sides.
    pub r: Exact,
}

impl RationalSpec {
    pub fn cos(&self) -> Exact {
        let (m2, n2) = (self.m * self.m, self.n * self.n);
        Exact::from_ratio(m2 - n2, m2 + n2)
    }

    pub fn spec(&self) -> SsaSpec<Exact> {
        let cos = self.cos();
        let sin_sq = Exact::one() - cos.clone() * cos.clone();
        let opposite_sq = self.r.clone() * self.r.clone() + self.b.clone() * self.b.clone() * sin_sq;
        SsaSpec::from_opposite_sq(opposite_sq, self.b.clone(), cos).expect("rational spec is valid")
    }
}

impl std::fmt::Display for RationalSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "m={} n={} b={} r={}", self.m, self.n, self.b, self.r)
    }
}

fn ratio(n: i64, d: i64) -> Exact {
    Exact::new(BigRational::new(BigInt::from(n), BigInt::from(d)))
}

pub fn random_rational_spec(rng: &mut impl Rng) -> RationalSpec {
    let n = rng.random_range(1..=12);
    let m = rng.random_range(n + 1..=13);
    let b = ratio(rng.random_range(1..=100), rng.random_range(1..=10));
    let (m2, n2) = (m * m, n * n);
    let j = rng.random_range(1..16);
    // 0 < r < b cos keeps both third sides positive.
    let r = b.clone() * Exact::from_ratio(m2 - n2, m2 + n2) * Exact::from_ratio(j, 16);
    RationalSpec { m, n, b, r }
}

pub fn dichotomy_exact_check(cfg: &SuiteConfig) -> Check {
    let outcomes = cfg.run(6, |rng| {
        let rs = random_rational_spec(rng);
        let (t1, t2) = match two_solutions(&rs.spec()) {
            Ok(p) => p,
            Err(e) => return Outcome::fail(None, format!("{rs}: {e}")),
        };
        match classify_pair(&t1, &t2, &Correspondence::IDENTITY, SSA_MATCH) {
            Ok(DichotomyVerdict::Supplementary(c1, c2)) => {
                let sum = c1.encoded().clone() + c2.encoded().clone();
                if sum == Exact::zero() {
                    Outcome::pass(0.0)
                } else {
                    Outcome::fail(Some(sum.to_f64().abs()), format!("{rs}: encoded cosine sum {sum}"))
                }
            }
            Ok(v) => Outcome::fail(None, format!("{rs}: {:?}", v.kind())),
            Err(e) => Outcome::fail(None, format!("{rs}: {e}")),
        }
    });
    Check::from_outcomes("two-solution pairs are supplementary (exact)", outcomes)
}

pub fn lemma_exact_check(cfg: &SuiteConfig) -> Check {
    let outcomes = cfg.run(7, |rng| {
        let rs = random_rational_spec(rng);
        match two_solutions(&rs.spec()).and_then(|(t1, t2)| lemma_sample(&t1, &t2)) {
            Ok((opp, same)) if opp.concyclicity_det == 0.0 => lemma_outcome(&opp, &same, &|| rs.to_string()),
            Ok((opp, _)) => Outcome::fail(Some(opp.concyclicity_det.abs()), format!("{rs}: nonzero determinant")),
            Err(e) => Outcome::fail(None, format!("{rs}: {e}")),
        }
    });
    Check::from_outcomes("common-side pairs: supplementary, concyclic, AC < AB (exact)", outcomes)
}

/// Rational rotation from a Pythagorean pair, integer translation.
fn random_rational_isometry(rng: &mut impl Rng) -> Isometry<Exact> {
    let n = rng.random_range(0..=8i64);
    let m = rng.random_range(n + 1..=9i64);
    let h = m * m + n * n;
    let (mut cos, mut sin) = (Exact::from_ratio(m * m - n * n, h), Exact::from_ratio(2 * m * n, h));
    if rng.random_bool(0.5) {
        sin = -sin;
    }
    if rng.random_bool(0.5) {
        cos = -cos;
    }
    let shift = Point::new(Exact::from_int(rng.random_range(-20..=20)), Exact::from_int(rng.random_range(-20..=20)));
    Isometry::new(cos, sin, shift, rng.random_bool(0.5)).expect("Pythagorean pair is on the unit circle")
}

/// Boolean verdicts compared across backends for one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdicts {
    pub classification: Option<VerdictKind>,
    pub lemma: Option<[bool; 4]>,
}

fn verdicts<S: Scalar>(t1: &Triangle<S>, t2: &Triangle<S>, with_lemma: bool) -> Verdicts {
    let classification = classify_pair(t1, t2, &Correspondence::IDENTITY, SSA_MATCH)
        .ok()
        .map(|v| v.kind());
    let lemma = with_lemma
        .then(|| lemma_sample(t1, t2).ok())
        .flatten()
        .map(|(opp, same)| [opp.supplementary, same.supplementary, opp.concyclic == Some(true), opp.ac_lt_ab]);
    Verdicts { classification, lemma }
}

/// A rational instance of one of three kinds (by `index % 3`): the two
/// solutions of a rational spec, a solution and a rigid image of it, or
/// solutions of two specs differing only in the opposite side.
pub fn rational_instance(rng: &mut impl Rng, index: usize) -> (String, Triangle<Exact>, Triangle<Exact>, bool) {
    let rs = random_rational_spec(rng);
    let (t1, t2) = two_solutions(&rs.spec()).expect("rational spec has two solutions");
    match index % 3 {
        0 => (format!("supplementary {rs}"), t1, t2, true),
        1 => {
            let g = random_rational_isometry(rng);
            let moved = t2.map_points(|p| g.apply(p)).expect("isometry keeps the triangle");
            (format!("rigid image {rs} {g:?}"), t2, moved, false)
        }
        _ => {
            let other = RationalSpec {
                r: rs.r.clone() * Exact::from_ratio(1, 2),
                ..rs.clone()
            };
            let (u1, _) = two_solutions(&other.spec()).expect("rational spec has two solutions");
            (format!("unmatched {rs}"), t1, u1, false)
        }
    }
}

pub fn backend_agreement_check(cfg: &SuiteConfig) -> Check {
    let outcomes = map_indexed(cfg.exec, cfg.samples, |i| {
        let mut rng = sample_rng(cfg.seed_for(8), i as u64);
        let (what, e1, e2, with_lemma) = rational_instance(&mut rng, i);
        let exact = verdicts(&e1, &e2, with_lemma);
        let float = match (e1.to_float(cfg.eps), e2.to_float(cfg.eps)) {
            (Ok(f1), Ok(f2)) => verdicts(&f1, &f2, with_lemma),
            _ => return Outcome::fail(None, format!("{what}: float conversion degenerate")),
        };
        if exact == float && exact.classification.is_some() {
            Outcome::pass_exact()
        } else {
            Outcome::fail(None, format!("{what}: exact {exact:?} vs float {float:?}"))
        }
    });
    Check::from_outcomes("exact and float backends agree", outcomes)
}

/// Checks run by `verify` for the chosen backend.
pub fn run_suite(cfg: &SuiteConfig, backend: Backend) -> Vec<Check> {
    match backend {
        Backend::Float => vec![
            ssa_oracle_check(cfg),
            case_prediction_check(cfg),
            dichotomy_float_check(cfg),
            classify_symmetry_check(cfg),
            lemma_float_check(cfg),
            backend_agreement_check(cfg),
        ],
        Backend::Exact => vec![dichotomy_exact_check(cfg), lemma_exact_check(cfg), backend_agreement_check(cfg)],
    }
}
