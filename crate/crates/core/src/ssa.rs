//! The ambiguous side-side-angle case.
//!
//! Two triangles that agree in two sides and a non-included angle are either
//! congruent, or the angles opposite the other matched side are
//! supplementary. This module solves the SSA construction, predicts which
//! classical case a designation falls into, classifies concrete triangle
//! pairs into the two branches, and checks the common-side configuration in
//! which the supplementary branch is usually argued.

use serde::Serialize;
use thiserror::Error;

use crate::congruence::{angles_match, congruent_any, sides_match, Correspondence, SidesAngle, TriangleElements};
use crate::geom::{
    concyclic, concyclicity_determinant, cross, extent, supplementary, Cosine, Float, GeomError, Isometry, Point,
    Scalar, Sign, Triangle, Vertex,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SsaError {
    #[error("invalid SSA spec: {0}")]
    InvalidSpec(&'static str),
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error("pair is neither congruent nor supplementary (cos {cos1} vs {cos2})")]
    DichotomyViolation { cos1: f64, cos2: f64 },
}

/// Side `a` opposite the given angle, side `b` adjacent to it, and the
/// angle itself as a (cos, sin) pair.
///
/// `a` is kept squared: in the exact backend the two solutions of a
/// rational configuration are rational even when `a` is not.
#[derive(Clone, Debug)]
pub struct SsaSpec<S> {
    opposite_sq: S,
    adjacent: S,
    cos_angle: S,
    sin_angle: S,
}

impl<S: Scalar> SsaSpec<S> {
    pub fn new(opposite: S, adjacent: S, cos_angle: S) -> Result<Self, SsaError> {
        if opposite.sign_within(0.0) != Sign::Positive {
            return Err(SsaError::InvalidSpec("side lengths must be positive"));
        }
        Self::from_opposite_sq(opposite.clone() * opposite, adjacent, cos_angle)
    }

    pub fn from_opposite_sq(opposite_sq: S, adjacent: S, cos_angle: S) -> Result<Self, SsaError> {
        let sin_sq = S::one() - cos_angle.clone() * cos_angle.clone();
        let sin_angle = sin_sq
            .sqrt()
            .ok_or(SsaError::Geom(GeomError::NotRepresentable("sine of the given angle")))?;
        Self::with_sin(opposite_sq, adjacent, cos_angle, sin_angle)
    }

    fn with_sin(opposite_sq: S, adjacent: S, cos_angle: S, sin_angle: S) -> Result<Self, SsaError> {
        if opposite_sq.sign_within(0.0) != Sign::Positive || adjacent.sign_within(0.0) != Sign::Positive {
            return Err(SsaError::InvalidSpec("side lengths must be positive"));
        }
        if sin_angle.sign_within(0.0) != Sign::Positive {
            return Err(SsaError::InvalidSpec("angle must lie strictly between 0 and 180 degrees"));
        }
        Ok(SsaSpec {
            opposite_sq,
            adjacent,
            cos_angle,
            sin_angle,
        })
    }

    pub fn opposite_sq(&self) -> &S {
        &self.opposite_sq
    }

    pub fn adjacent(&self) -> &S {
        &self.adjacent
    }

    pub fn cos_angle(&self) -> &S {
        &self.cos_angle
    }

    pub fn sin_angle(&self) -> &S {
        &self.sin_angle
    }

    pub fn angle_rad(&self) -> f64 {
        self.sin_angle.to_f64().atan2(self.cos_angle.to_f64())
    }

    /// The classical case this spec falls into.
    pub fn case(&self) -> CriterionCase {
        let b_sq = self.adjacent.clone() * self.adjacent.clone();
        predict_case(&self.opposite_sq, &b_sq, AnglePosition::OppositeFirst)
    }
}

impl SsaSpec<Float> {
    pub fn from_degrees(opposite: f64, adjacent: f64, angle_deg: f64, eps: f64) -> Result<Self, SsaError> {
        if !(opposite > 0.0 && adjacent > 0.0) || !opposite.is_finite() || !adjacent.is_finite() {
            return Err(SsaError::InvalidSpec("side lengths must be positive"));
        }
        if !(angle_deg > 0.0 && angle_deg < 180.0) {
            return Err(SsaError::InvalidSpec("angle must lie strictly between 0 and 180 degrees"));
        }
        let f = |x| Float::new(x, eps);
        let (sin, cos) = angle_deg.to_radians().sin_cos();
        Self::with_sin(f(opposite * opposite), f(adjacent), f(cos), f(sin))
    }
}

#[derive(Clone, Debug)]
pub struct SsaSolution<S> {
    pub triangle: Triangle<S>,
    /// Length of the side joining the angle vertex and the unknown vertex.
    pub third_side: S,
}

/// Solutions in canonical pose: the angle vertex `A` at the origin, the
/// adjacent side `AC` along the positive x-axis, `B` in the upper half-plane.
/// Sorted by ascending third side.
#[derive(Clone, Debug)]
pub struct SsaSolutions<S> {
    pub solutions: Vec<SsaSolution<S>>,
}

impl<S: Scalar> SsaSolutions<S> {
    pub fn len(&self) -> usize {
        self.solutions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty()
    }

    pub fn triangles(&self) -> impl Iterator<Item = &Triangle<S>> {
        self.solutions.iter().map(|s| &s.triangle)
    }
}

/// Matched elements of two SSA solutions: sides `a`, `b` and the angle at `A`.
pub const SSA_MATCH: SidesAngle = SidesAngle {
    sides: (Vertex::A, Vertex::B),
    angle: Vertex::A,
};

pub fn solve_ssa<S: Scalar>(spec: &SsaSpec<S>) -> Result<SsaSolutions<S>, SsaError> {
    let b = spec.adjacent.clone();
    let b_sq = b.clone() * b.clone();
    let scale_sq = spec.opposite_sq.to_f64().max(b_sq.to_f64());
    let scale = scale_sq.sqrt();
    // c^2 - 2bc cos + b^2 - a^2 = 0
    let disc = spec.opposite_sq.clone() - b_sq * spec.sin_angle.clone() * spec.sin_angle.clone();
    let base = b.clone() * spec.cos_angle.clone();
    // Tangency is decided on the root length sqrt(disc) against eps * scale,
    // with a floor at the rounding noise of the subtraction.
    let tol = disc.tolerance();
    let disc_scale = if tol > 0.0 {
        (tol + 8.0 * f64::EPSILON / tol) * scale_sq
    } else {
        0.0
    };
    let candidates = match disc.sign_within(disc_scale) {
        Sign::Negative => vec![],
        Sign::Zero => vec![base],
        Sign::Positive => {
            let root = disc
                .sqrt()
                .ok_or(SsaError::Geom(GeomError::NotRepresentable("SSA discriminant")))?;
            vec![base.clone() - root.clone(), base + root]
        }
    };
    let c_vertex = Point::new(b, S::zero());
    let mut solutions = Vec::with_capacity(2);
    for c in candidates {
        if c.sign_within(scale) != Sign::Positive {
            continue;
        }
        let apex = Point::new(c.clone() * spec.cos_angle.clone(), c.clone() * spec.sin_angle.clone());
        match Triangle::new(Point::origin(), apex, c_vertex.clone()) {
            Ok(triangle) => solutions.push(SsaSolution { triangle, third_side: c }),
            Err(GeomError::Degenerate(_)) => continue,
            Err(e) => return Err(e.into()),
        }
    }
    Ok(SsaSolutions { solutions })
}

/// Where the given angle sits relative to the two given sides.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AnglePosition {
    Included,
    OppositeFirst,
    OppositeSecond,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CriterionCase {
    IncludedAngle,
    IsoscelesEqualSides,
    AngleOppositeGreater,
    AngleOppositeSmaller,
}

impl CriterionCase {
    /// Whether two non-congruent triangles can share the data.
    pub fn is_ambiguous(self) -> bool {
        self == CriterionCase::AngleOppositeSmaller
    }
}

/// Case analysis for two sides (given squared) and one angle.
pub fn predict_case<S: Scalar>(first_sq: &S, second_sq: &S, position: AnglePosition) -> CriterionCase {
    let scale = first_sq.to_f64().abs().max(second_sq.to_f64().abs());
    if position == AnglePosition::Included {
        return CriterionCase::IncludedAngle;
    }
    if first_sq.eq_within(second_sq, scale) {
        return CriterionCase::IsoscelesEqualSides;
    }
    let (opposite, other) = match position {
        AnglePosition::OppositeFirst => (first_sq, second_sq),
        _ => (second_sq, first_sq),
    };
    if other.lt_within(opposite, scale) {
        CriterionCase::AngleOppositeGreater
    } else {
        CriterionCase::AngleOppositeSmaller
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum DichotomyVerdict<S> {
    Congruent(Correspondence),
    /// Cosines of the remaining angles (opposite the other matched side).
    Supplementary(Cosine<S>, Cosine<S>),
    NotSsaMatched,
}

impl<S: Scalar> DichotomyVerdict<S> {
    pub fn kind(&self) -> VerdictKind {
        match self {
            DichotomyVerdict::Congruent(_) => VerdictKind::Congruent,
            DichotomyVerdict::Supplementary(..) => VerdictKind::Supplementary,
            DichotomyVerdict::NotSsaMatched => VerdictKind::NotSsaMatched,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum VerdictKind {
    Congruent,
    Supplementary,
    NotSsaMatched,
}

/// Decides which branch of the SSA dichotomy a pair of triangles is in.
///
/// `corr` maps labels of `t1` to labels of `t2`; `matched` names the two
/// sides and the angle that are supposed to agree under it.
pub fn classify_pair<S: Scalar>(
    t1: &Triangle<S>,
    t2: &Triangle<S>,
    corr: &Correspondence,
    matched: SidesAngle,
) -> Result<DichotomyVerdict<S>, SsaError> {
    let (e1, e2) = (TriangleElements::of(t1), TriangleElements::of(t2));
    let (s1, s2) = matched.sides;
    if !(sides_match(&e1, &e2, corr, s1) && sides_match(&e1, &e2, corr, s2) && angles_match(&e1, &e2, corr, matched.angle))
    {
        return Ok(DichotomyVerdict::NotSsaMatched);
    }
    if let Some(found) = congruent_any(t1, t2) {
        return Ok(DichotomyVerdict::Congruent(found));
    }
    // Side-angle-side data forces congruence, so reaching here means the
    // matched angle is not the included one unless something is broken.
    let remaining = matched.other_side().ok_or(SsaError::DichotomyViolation {
        cos1: f64::NAN,
        cos2: f64::NAN,
    })?;
    let cos1 = e1.angle(remaining).clone();
    let cos2 = e2.angle(corr.map(remaining)).clone();
    if supplementary(&cos1, &cos2) {
        Ok(DichotomyVerdict::Supplementary(cos1, cos2))
    } else {
        Err(SsaError::DichotomyViolation {
            cos1: cos1.value(),
            cos2: cos2.value(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LemmaError {
    #[error("triangles do not share the segment AB")]
    NoCommonSide,
    #[error("triangles are congruent")]
    Congruent,
    #[error("AC and AD differ")]
    UnequalLegs,
    #[error("angles ABC and ABD differ")]
    UnequalAngles,
    #[error(transparent)]
    Geom(#[from] GeomError),
}

/// Outcome of checking two non-congruent triangles `ABC`, `ABD` on a
/// common side with `AC = AD` and equal angles at `B`.
#[derive(Clone, Debug, Serialize)]
pub struct LemmaReport {
    /// Angles `ACB` and `ADB` sum to a straight angle.
    pub supplementary: bool,
    pub cos_acb: f64,
    pub cos_adb: f64,
    pub opposite_sides: bool,
    /// Whether `A, C, B, D` are concyclic; only evaluated when `C` and `D`
    /// lie on opposite sides of `AB`.
    pub concyclic: Option<bool>,
    pub concyclicity_det: f64,
    /// Bounding-box size of `A, B, C, D`.
    pub scale: f64,
    pub ac_lt_ab: bool,
}

impl LemmaReport {
    pub fn holds(&self) -> bool {
        self.supplementary && self.ac_lt_ab && self.concyclic.unwrap_or(true)
    }
}

/// `t_abc` has vertices `(A, B, C)`, `t_abd` has `(A, B, D)` in its `A`,
/// `B`, `C` slots.
pub fn lemma_common_side_check<S: Scalar>(t_abc: &Triangle<S>, t_abd: &Triangle<S>) -> Result<LemmaReport, LemmaError> {
    let (a, b, c) = (t_abc.vertex(Vertex::A), t_abc.vertex(Vertex::B), t_abc.vertex(Vertex::C));
    let d = t_abd.vertex(Vertex::C);
    let scale = extent(&[a, b, c, d]);
    if !a.coincides(t_abd.vertex(Vertex::A), scale) || !b.coincides(t_abd.vertex(Vertex::B), scale) {
        return Err(LemmaError::NoCommonSide);
    }
    let (ac, ad) = (t_abc.side_sq(Vertex::B), t_abd.side_sq(Vertex::B));
    if !ac.eq_within(&ad, ac.to_f64().max(ad.to_f64())) {
        return Err(LemmaError::UnequalLegs);
    }
    if !t_abc.cos_at(Vertex::B).eq_within(&t_abd.cos_at(Vertex::B)) {
        return Err(LemmaError::UnequalAngles);
    }
    if congruent_any(t_abc, t_abd).is_some() {
        return Err(LemmaError::Congruent);
    }
    let (cos_acb, cos_adb) = (t_abc.cos_at(Vertex::C), t_abd.cos_at(Vertex::C));
    let side_of = |p: &Point<S>| cross(&(b.clone() - a.clone()), &(p.clone() - a.clone())).sign_within(scale * scale);
    let opposite_sides = side_of(c) == side_of(d).flip();
    let concyclic = if opposite_sides {
        Some(concyclic(a, c, b, d)?)
    } else {
        None
    };
    let ab = t_abc.side_sq(Vertex::C);
    Ok(LemmaReport {
        supplementary: supplementary(&cos_acb, &cos_adb),
        cos_acb: cos_acb.value(),
        cos_adb: cos_adb.value(),
        opposite_sides,
        concyclic,
        concyclicity_det: concyclicity_determinant(a, c, b, d).to_f64(),
        scale,
        ac_lt_ab: ac.lt_within(&ab, ab.to_f64()),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Placement {
    SameSide,
    OppositeSide,
}

#[derive(Clone, Debug)]
pub struct CommonSideOverlay<S> {
    pub first: Triangle<S>,
    /// Isometric copy of the second triangle, labels unchanged.
    pub second: Triangle<S>,
    pub isometry: Isometry<S>,
}

/// Moves `t2` rigidly so that its side corresponding (under `corr`) to the
/// side of `t1` opposite `side` lands on that side pointwise, with the
/// third vertex placed as requested relative to `t1`'s third vertex.
pub fn to_common_side<S: Scalar>(
    t1: &Triangle<S>,
    t2: &Triangle<S>,
    corr: &Correspondence,
    side: Vertex,
    placement: Placement,
) -> Result<CommonSideOverlay<S>, SsaError> {
    let (i, j) = side.others();
    let dst = (t1.vertex(i), t1.vertex(j));
    let src = (t2.vertex(corr.map(i)), t2.vertex(corr.map(j)));
    let scale = t1.extent().max(t2.extent());
    let line_side = |p: &Point<S>| {
        cross(&(dst.1.clone() - dst.0.clone()), &(p.clone() - dst.0.clone())).sign_within(scale * scale)
    };
    let target = line_side(t1.vertex(side));
    let want = match placement {
        Placement::SameSide => target,
        Placement::OppositeSide => target.flip(),
    };
    for mirror in [false, true] {
        let g = Isometry::taking_segment(src, dst, mirror)?;
        if line_side(&g.apply(t2.vertex(corr.map(side)))) == want {
            let second = t2.map_points(|p| g.apply(p))?;
            return Ok(CommonSideOverlay {
                first: t1.clone(),
                second,
                isometry: g,
            });
        }
    }
    Err(SsaError::Geom(GeomError::Degenerate("third vertex lies on the common side")))
}

/// Recasts two SSA solutions as the common-side pair `ABC`, `ABD`: `A` is
/// the far end of the shared adjacent side, `B` the angle vertex, and `C`,
/// `D` the apexes of the first and second solution.
pub fn lemma_pair<S: Scalar>(
    first: &Triangle<S>,
    second: &Triangle<S>,
    placement: Placement,
) -> Result<(Triangle<S>, Triangle<S>), SsaError> {
    let overlay = to_common_side(first, second, &Correspondence::IDENTITY, Vertex::B, placement)?;
    let relabel = |t: &Triangle<S>| {
        Triangle::new(
            t.vertex(Vertex::C).clone(),
            t.vertex(Vertex::A).clone(),
            t.vertex(Vertex::B).clone(),
        )
    };
    Ok((relabel(&overlay.first)?, relabel(&overlay.second)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{Exact, Reflect};

    const EPS: f64 = 1e-9;

    fn deg(x: f64) -> f64 {
        x.to_radians()
    }

    fn angles_deg<S: Scalar>(t: &Triangle<S>) -> [f64; 3] {
        Vertex::ALL.map(|v| t.angle_rad(v).to_degrees())
    }

    #[test]
    fn two_solutions_for_one_root3_30() {
        let spec = SsaSpec::from_degrees(1.0, 3f64.sqrt(), 30.0, EPS).unwrap();
        let sols = solve_ssa(&spec).unwrap();
        assert_eq!(sols.len(), 2);
        let thirds: Vec<f64> = sols.solutions.iter().map(|s| s.third_side.to_f64()).collect();
        assert!((thirds[0] - 1.0).abs() < 1e-12 && (thirds[1] - 2.0).abs() < 1e-12);
        // (B, C) = (120, 30) and (60, 90)
        let a0 = angles_deg(&sols.solutions[0].triangle);
        let a1 = angles_deg(&sols.solutions[1].triangle);
        assert!((a0[1] - 120.0).abs() < 1e-9 && (a0[2] - 30.0).abs() < 1e-9);
        assert!((a1[1] - 60.0).abs() < 1e-9 && (a1[2] - 90.0).abs() < 1e-9);
    }

    #[test]
    fn equilateral_has_one_solution() {
        let spec = SsaSpec::from_degrees(1.0, 1.0, 60.0, EPS).unwrap();
        let sols = solve_ssa(&spec).unwrap();
        assert_eq!(sols.len(), 1);
        for a in angles_deg(&sols.solutions[0].triangle) {
            assert!((a - 60.0).abs() < 1e-9);
        }
    }

    #[test]
    fn solution_counts() {
        assert_eq!(solve_ssa(&SsaSpec::from_degrees(1.0, 3.0, 30.0, EPS).unwrap()).unwrap().len(), 0);
        assert_eq!(solve_ssa(&SsaSpec::from_degrees(2.0, 1.0, 40.0, EPS).unwrap()).unwrap().len(), 1);
        // Obtuse angle opposite the smaller side: nothing.
        assert_eq!(solve_ssa(&SsaSpec::from_degrees(1.0, 2.0, 120.0, EPS).unwrap()).unwrap().len(), 0);
    }

    #[test]
    fn right_angle_boundary_gives_one_right_triangle() {
        // a = b sin(theta) exactly in rationals: b = 5, cos = 3/5, sin = 4/5, a = 4.
        let spec = SsaSpec::new(Exact::from_int(4), Exact::from_int(5), Exact::from_ratio(3, 5)).unwrap();
        let sols = solve_ssa(&spec).unwrap();
        assert_eq!(sols.len(), 1);
        let t = &sols.solutions[0].triangle;
        assert_eq!(t.cos_at(Vertex::B), Cosine::from_cos(Exact::zero()));
        assert_eq!(sols.solutions[0].third_side, Exact::from_int(3));
    }

    #[test]
    fn exact_two_solution_spec() {
        // b = 5, cos = 4/5, r = 1: c = 3 and 5, a^2 = 1 + 25 * 9/25 = 10.
        let spec = SsaSpec::from_opposite_sq(Exact::from_int(10), Exact::from_int(5), Exact::from_ratio(4, 5)).unwrap();
        let sols = solve_ssa(&spec).unwrap();
        assert_eq!(sols.len(), 2);
        assert_eq!(sols.solutions[0].third_side, Exact::from_int(3));
        assert_eq!(sols.solutions[1].third_side, Exact::from_int(5));
        let (t1, t2) = (&sols.solutions[0].triangle, &sols.solutions[1].triangle);
        match classify_pair(t1, t2, &Correspondence::IDENTITY, SSA_MATCH).unwrap() {
            DichotomyVerdict::Supplementary(c1, c2) => {
                assert_eq!(c1.encoded().clone() + c2.encoded().clone(), Exact::zero());
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn invalid_specs() {
        assert!(SsaSpec::from_degrees(0.0, 1.0, 30.0, EPS).is_err());
        assert!(SsaSpec::from_degrees(1.0, 1.0, 180.0, EPS).is_err());
        assert!(SsaSpec::new(Exact::from_int(1), Exact::from_int(1), Exact::from_int(1)).is_err());
        assert_eq!(
            SsaSpec::new(Exact::from_int(1), Exact::from_int(1), Exact::from_ratio(1, 2)).unwrap_err(),
            SsaError::Geom(GeomError::NotRepresentable("sine of the given angle"))
        );
    }

    #[test]
    fn case_prediction() {
        let (two, one) = (Exact::from_int(4), Exact::from_int(1));
        assert_eq!(predict_case(&two, &one, AnglePosition::Included), CriterionCase::IncludedAngle);
        assert_eq!(predict_case(&one, &one, AnglePosition::OppositeFirst), CriterionCase::IsoscelesEqualSides);
        assert_eq!(predict_case(&two, &one, AnglePosition::OppositeFirst), CriterionCase::AngleOppositeGreater);
        assert_eq!(predict_case(&two, &one, AnglePosition::OppositeSecond), CriterionCase::AngleOppositeSmaller);
        assert_eq!(predict_case(&one, &two, AnglePosition::OppositeSecond), CriterionCase::AngleOppositeGreater);
    }

    #[test]
    fn classify_two_solutions_supplementary() {
        let spec = SsaSpec::from_degrees(1.0, 3f64.sqrt(), 30.0, EPS).unwrap();
        let sols = solve_ssa(&spec).unwrap();
        let (t1, t2) = (&sols.solutions[0].triangle, &sols.solutions[1].triangle);
        let v = classify_pair(t1, t2, &Correspondence::IDENTITY, SSA_MATCH).unwrap();
        let DichotomyVerdict::Supplementary(c1, c2) = v else {
            panic!("expected supplementary, got {v:?}");
        };
        assert!((c1.radians() - deg(120.0)).abs() < 1e-9);
        assert!((c2.radians() - deg(60.0)).abs() < 1e-9);
        assert!((c1.radians() + c2.radians() - std::f64::consts::PI).abs() < 1e-9);

        // Symmetric: swapped triangles give the swapped cosine pair.
        let w = classify_pair(t2, t1, &Correspondence::IDENTITY, SSA_MATCH).unwrap();
        assert_eq!(w, DichotomyVerdict::Supplementary(c2, c1));
    }

    #[test]
    fn classify_isometric_copy_congruent() {
        let spec = SsaSpec::from_degrees(1.0, 3f64.sqrt(), 30.0, EPS).unwrap();
        let t = solve_ssa(&spec).unwrap().solutions[1].triangle.clone();
        let f = |x| Float::new(x, EPS);
        let (s, c) = 0.7f64.sin_cos();
        let g = Isometry::new(f(c), f(s), Point::new(f(3.0), f(-2.0)), true).unwrap();
        let moved = t.map_points(|p| g.apply(p)).unwrap();
        let v = classify_pair(&t, &moved, &Correspondence::IDENTITY, SSA_MATCH).unwrap();
        assert_eq!(v, DichotomyVerdict::Congruent(Correspondence::IDENTITY));
    }

    #[test]
    fn classify_unmatched_pair() {
        let e = |x, y| Point::new(Exact::from_int(x), Exact::from_int(y));
        // 3-4-5 and 3-4-6 share sides 3 and 4 but the angle opposite 3 differs.
        let t345 = Triangle::new(e(0, 0), e(4, 0), e(0, 3)).unwrap();
        let f = |x| Float::new(x, EPS);
        let cos = (9.0 + 16.0 - 36.0) / 24.0f64;
        let sin = (1.0 - cos * cos).sqrt();
        let t346 = Triangle::new(
            Point::new(f(0.0), f(0.0)),
            Point::new(f(4.0), f(0.0)),
            Point::new(f(3.0 * cos), f(3.0 * sin)),
        )
        .unwrap();
        let t345f = t345.to_float(EPS).unwrap();
        // sides a = BC (5 or 6), b = CA = 3, c = AB = 4; match b, c and the angle at B (opposite b).
        let matched = SidesAngle::new(Vertex::B, Vertex::C, Vertex::B);
        let v = classify_pair(&t345f, &t346, &Correspondence::IDENTITY, matched).unwrap();
        assert_eq!(v, DichotomyVerdict::NotSsaMatched);
    }

    fn lemma_config(placement: Placement) -> (Triangle<Float>, Triangle<Float>) {
        // AB = 2, base angle 30 deg at B, AC = AD = 1.2: SSA with the angle
        // at the far end of AB.
        let spec = SsaSpec::from_degrees(1.2, 2.0, 30.0, EPS).unwrap();
        let sols = solve_ssa(&spec).unwrap();
        assert_eq!(sols.len(), 2);
        lemma_pair(&sols.solutions[0].triangle, &sols.solutions[1].triangle, placement).unwrap()
    }

    #[test]
    fn lemma_opposite_sides() {
        let (abc, abd) = lemma_config(Placement::OppositeSide);
        let r = lemma_common_side_check(&abc, &abd).unwrap();
        assert!(r.supplementary && r.opposite_sides && r.ac_lt_ab);
        assert_eq!(r.concyclic, Some(true));
        assert!(r.holds());
        // A = (2, 0), B = origin.
        assert!((abc.vertex(Vertex::A).to_f64()[0] - 2.0).abs() < 1e-15);
        assert_eq!(abc.vertex(Vertex::B).to_f64(), [0.0, 0.0]);
    }

    #[test]
    fn lemma_same_side() {
        let (abc, abd) = lemma_config(Placement::SameSide);
        let r = lemma_common_side_check(&abc, &abd).unwrap();
        assert!(r.supplementary && !r.opposite_sides && r.ac_lt_ab);
        assert_eq!(r.concyclic, None);
    }

    #[test]
    fn lemma_rejects_mirror_image() {
        let (abc, _) = lemma_config(Placement::OppositeSide);
        let axis = crate::geom::line_through(abc.vertex(Vertex::A), abc.vertex(Vertex::B)).unwrap();
        let mirrored = abc.reflect(&axis);
        assert_eq!(lemma_common_side_check(&abc, &mirrored).unwrap_err(), LemmaError::Congruent);
    }

    #[test]
    fn lemma_long_leg_has_no_partner() {
        // AC = AD = 2.5 > AB = 2: only one triangle exists.
        let spec = SsaSpec::from_degrees(2.5, 2.0, 30.0, EPS).unwrap();
        assert_eq!(solve_ssa(&spec).unwrap().len(), 1);
    }

    #[test]
    fn lemma_precondition_errors() {
        let (abc, abd) = lemma_config(Placement::OppositeSide);
        let f = |x| Float::new(x, EPS);
        let shifted = abd.map_points(|p| Point::new(p.x + f(0.5), p.y)).unwrap();
        assert_eq!(lemma_common_side_check(&abc, &shifted).unwrap_err(), LemmaError::NoCommonSide);
        let longer = Triangle::new(
            abd.vertex(Vertex::A).clone(),
            abd.vertex(Vertex::B).clone(),
            abd.vertex(Vertex::C).scaled(&f(1.1)),
        )
        .unwrap();
        assert_eq!(lemma_common_side_check(&abc, &longer).unwrap_err(), LemmaError::UnequalLegs);
        let turned = Triangle::new(
            abd.vertex(Vertex::A).clone(),
            abd.vertex(Vertex::B).clone(),
            Point::new(f(2.0 - 1.2 * 0.6), f(-1.2 * 0.8)),
        )
        .unwrap();
        assert_eq!(lemma_common_side_check(&abc, &turned).unwrap_err(), LemmaError::UnequalAngles);
    }

    #[test]
    fn common_side_translation_is_identity_overlay() {
        let spec = SsaSpec::from_degrees(1.0, 3f64.sqrt(), 30.0, EPS).unwrap();
        let t = solve_ssa(&spec).unwrap().solutions[0].triangle.clone();
        let f = |x| Float::new(x, EPS);
        let moved = t.map_points(|p| Point::new(p.x.clone() + f(10.0), p.y.clone() - f(4.0))).unwrap();
        let o = to_common_side(&t, &moved, &Correspondence::IDENTITY, Vertex::C, Placement::SameSide).unwrap();
        assert!(!o.isometry.mirror);
        for v in Vertex::ALL {
            assert!(o.second.vertex(v).coincides(t.vertex(v), 1.0));
        }
        let axis = crate::geom::line_through(&Point::new(f(50.0), f(0.0)), &Point::new(f(50.0), f(1.0))).unwrap();
        let far_mirror = t.reflect(&axis);
        let o = to_common_side(&t, &far_mirror, &Correspondence::IDENTITY, Vertex::C, Placement::SameSide).unwrap();
        assert!(o.isometry.mirror);
        for v in Vertex::ALL {
            assert!(o.second.vertex(v).coincides(t.vertex(v), 1.0));
        }
    }

    #[test]
    fn common_side_rejects_length_mismatch() {
        let e = |x, y| Point::new(Exact::from_int(x), Exact::from_int(y));
        let t1 = Triangle::new(e(0, 0), e(4, 0), e(0, 3)).unwrap();
        let t2 = Triangle::new(e(0, 0), e(5, 0), e(0, 3)).unwrap();
        assert_eq!(
            to_common_side(&t1, &t2, &Correspondence::IDENTITY, Vertex::C, Placement::SameSide).unwrap_err(),
            SsaError::Geom(GeomError::LengthMismatch)
        );
    }

    #[test]
    fn reflected_partner_lies_between_angle_vertex_and_far_apex() {
        // Longer solution as C, shorter as D below AB; reflecting D back over
        // AB gives G strictly between B and C.
        let spec = SsaSpec::from_degrees(1.0, 3f64.sqrt(), 30.0, EPS).unwrap();
        let sols = solve_ssa(&spec).unwrap();
        let (abc, abd) =
            lemma_pair(&sols.solutions[1].triangle, &sols.solutions[0].triangle, Placement::OppositeSide).unwrap();
        let axis = crate::geom::line_through(abc.vertex(Vertex::A), abc.vertex(Vertex::B)).unwrap();
        let g = abd.vertex(Vertex::C).reflect(&axis);
        let (b, c) = (abc.vertex(Vertex::B), abc.vertex(Vertex::C));
        let bg = g.clone() - b.clone();
        let bc = c.clone() - b.clone();
        assert!(cross(&bg, &bc).to_f64().abs() < 1e-12);
        let t = crate::geom::dot(&bg, &bc).to_f64() / bc.norm_sq().to_f64();
        assert!(t > 0.0 && t < 1.0, "t = {t}");
        assert!((t - 0.5).abs() < 1e-12);
    }
}
