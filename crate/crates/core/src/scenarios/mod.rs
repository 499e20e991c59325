//! Triangle problems whose conclusion is an "either ... or" statement, as
//! executable scenarios over the similarity shape space.
//!
//! A triangle up to similarity is given by its base angles `(alpha, beta)`
//! at `A` and `B`, posed with `A = (0, 0)`, `B = (1, 0)` and `C` above the
//! x-axis. Each scenario provides a hypothesis residual that vanishes on
//! the configurations satisfying its hypothesis, and a conclusion set made
//! of branches (e.g. `alpha = beta` or `gamma = 60deg`).

pub mod constructions;
pub mod implications;
pub mod scan;

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::geom::{Float, GeomError, Point, Scalar, Triangle};
use constructions::{bisector_30, incenter_segments, inscribed_rectangle, inscribed_square, medial_circumcenter};

pub use scan::{level_set_scan, Region, Root, ScanConfig, ScanReport};

/// Tolerance used for the conclusion flags recorded in traces.
pub const FLAG_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ScenarioError {
    #[error("invalid shape: angles must be positive with alpha + beta < 180 degrees (got {alpha_deg}, {beta_deg})")]
    InvalidShape { alpha_deg: f64, beta_deg: f64 },
    #[error("base angles above 90 degrees put the square's feet off segment AB")]
    FeetOffSegment,
    #[error("rectangle height fraction must lie in (0, 1), got {0}")]
    InvalidHeight(f64),
    #[error("unknown scenario '{name}'; available: {available}")]
    UnknownScenario { name: String, available: String },
    #[error("scan region contains no grid points")]
    EmptyRegion,
    #[error("invalid scan settings: {0}")]
    InvalidScan(&'static str),
    #[error(transparent)]
    Geom(#[from] GeomError),
}

pub type Result<T> = std::result::Result<T, ScenarioError>;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ShapeParams {
    pub alpha: f64,
    pub beta: f64,
}

impl ShapeParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha > 0.0 && beta > 0.0 && alpha + beta < PI) {
            return Err(ScenarioError::InvalidShape {
                alpha_deg: alpha.to_degrees(),
                beta_deg: beta.to_degrees(),
            });
        }
        Ok(ShapeParams { alpha, beta })
    }

    pub fn from_degrees(alpha: f64, beta: f64) -> Result<Self> {
        Self::new(alpha.to_radians(), beta.to_radians())
    }

    pub fn gamma(&self) -> f64 {
        PI - self.alpha - self.beta
    }

    pub fn degrees(&self) -> [f64; 3] {
        [self.alpha.to_degrees(), self.beta.to_degrees(), self.gamma().to_degrees()]
    }

    pub fn swapped(&self) -> Self {
        ShapeParams {
            alpha: self.beta,
            beta: self.alpha,
        }
    }

    /// `A = (0, 0)`, `B = (1, 0)`, `C` by the law of sines.
    pub fn triangle(&self, eps: f64) -> Result<Triangle<Float>> {
        let f = |x| Float::new(x, eps);
        let ac = self.beta.sin() / (self.alpha + self.beta).sin();
        let (sin_a, cos_a) = self.alpha.sin_cos();
        Ok(Triangle::new(
            Point::new(f(0.0), f(0.0)),
            Point::new(f(1.0), f(0.0)),
            Point::new(f(ac * cos_a), f(ac * sin_a)),
        )?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ScenarioKind {
    /// Circumcenter of the medial triangle on the bisector of the angle at `C`.
    MedialCircumcenter,
    /// Equal incenter-to-bisector-foot segments `JA1 = JB1`.
    IncenterSegments,
    /// Center of the inscribed square on the bisector at `C`.
    SquareCenter,
    /// Center of an inscribed rectangle of given height fraction on the bisector at `C`.
    RectangleCenter,
    /// `angle BB1A1 = 30deg` for bisector feet `A1`, `B1`.
    Bisector30,
}

impl ScenarioKind {
    pub const ALL: [ScenarioKind; 5] = [
        ScenarioKind::MedialCircumcenter,
        ScenarioKind::IncenterSegments,
        ScenarioKind::SquareCenter,
        ScenarioKind::RectangleCenter,
        ScenarioKind::Bisector30,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ScenarioKind::MedialCircumcenter => "medial-circumcenter",
            ScenarioKind::IncenterSegments => "incenter-segments",
            ScenarioKind::SquareCenter => "square-center",
            ScenarioKind::RectangleCenter => "rectangle-center",
            ScenarioKind::Bisector30 => "bisector-30",
        }
    }

    pub fn available() -> String {
        Self::ALL.map(Self::name).join(", ")
    }
}

impl fmt::Display for ScenarioKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ScenarioKind {
    type Err = ScenarioError;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| ScenarioError::UnknownScenario {
                name: s.to_string(),
                available: Self::available(),
            })
    }
}

/// One branch of a conclusion set.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Branch {
    /// `alpha = beta`, i.e. `CA = CB`.
    Isosceles,
    /// `gamma` equals the given angle (radians).
    Gamma(f64),
    /// `alpha` equals the given angle (radians).
    Alpha(f64),
    /// `C, Q, O, P` concyclic for the inscribed rectangle: `gamma + angle QOP = 180deg`.
    CyclicRectangle,
}

impl Branch {
    pub fn name(&self) -> String {
        match self {
            Branch::Isosceles => "alpha=beta".into(),
            Branch::Gamma(g) => format!("gamma={}", g.to_degrees().round()),
            Branch::Alpha(a) => format!("alpha={}", a.to_degrees().round()),
            Branch::CyclicRectangle => "gamma+QOP=180".into(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Scenario {
    pub kind: ScenarioKind,
    /// Height of the rectangle as a fraction of the altitude from `C`.
    pub height: f64,
    pub eps: f64,
}

impl Scenario {
    pub const DEFAULT_HEIGHT: f64 = 0.5;

    pub fn new(kind: ScenarioKind) -> Self {
        Scenario {
            kind,
            height: Self::DEFAULT_HEIGHT,
            eps: Float::DEFAULT_EPS,
        }
    }

    pub fn with_height(self, height: f64) -> Result<Self> {
        if !(height > 0.0 && height < 1.0) {
            return Err(ScenarioError::InvalidHeight(height));
        }
        Ok(Scenario { height, ..self })
    }

    pub fn name(&self) -> &'static str {
        self.kind.name()
    }

    /// Hypothesis residual on an arbitrary triangle.
    pub fn residual_on<S: Scalar>(&self, t: &Triangle<S>) -> Result<f64> {
        Ok(match self.kind {
            ScenarioKind::MedialCircumcenter => medial_circumcenter(t)?.residual(),
            ScenarioKind::IncenterSegments => incenter_segments(t)?.residual().to_f64(),
            ScenarioKind::SquareCenter => inscribed_square(t)?.residual()?,
            ScenarioKind::RectangleCenter => inscribed_rectangle(t, t.vertex(crate::geom::Vertex::A).x.lift(self.height))?.residual()?,
            ScenarioKind::Bisector30 => bisector_30(t)?.residual()?,
        })
    }

    pub fn residual(&self, p: ShapeParams) -> Result<f64> {
        self.residual_on(&p.triangle(self.eps)?)
    }

    pub fn trace(&self, p: ShapeParams) -> Result<ScenarioTrace> {
        let t = p.triangle(self.eps)?;
        let mut trace = ScenarioTrace::new(self.name(), p);
        for (label, v) in [("A", crate::geom::Vertex::A), ("B", crate::geom::Vertex::B), ("C", crate::geom::Vertex::C)] {
            trace.point(label, t.vertex(v));
        }
        match self.kind {
            ScenarioKind::MedialCircumcenter => medial_circumcenter(&t)?.record(&mut trace)?,
            ScenarioKind::IncenterSegments => incenter_segments(&t)?.record(&t, &mut trace)?,
            ScenarioKind::SquareCenter => inscribed_square(&t)?.record(&t, &mut trace)?,
            ScenarioKind::RectangleCenter => {
                inscribed_rectangle(&t, Float::new(self.height, self.eps))?.record(&t, &mut trace)?
            }
            ScenarioKind::Bisector30 => bisector_30(&t)?.record(&t, &mut trace)?,
        }
        for b in self.branches() {
            let d = self.branch_distance(&b, p);
            trace.flags.insert(b.name(), d <= FLAG_TOL);
        }
        Ok(trace)
    }

    /// Conclusion set, isosceles branch first when present.
    pub fn branches(&self) -> Vec<Branch> {
        let deg = |x: f64| x.to_radians();
        match self.kind {
            ScenarioKind::MedialCircumcenter | ScenarioKind::IncenterSegments => {
                vec![Branch::Isosceles, Branch::Gamma(deg(60.0))]
            }
            ScenarioKind::SquareCenter => vec![Branch::Isosceles, Branch::Gamma(deg(90.0))],
            ScenarioKind::RectangleCenter => vec![Branch::Isosceles, Branch::CyclicRectangle],
            ScenarioKind::Bisector30 => vec![Branch::Gamma(deg(60.0)), Branch::Alpha(deg(120.0))],
        }
    }

    /// Branches along which the hypothesis is known to hold, so a scan must
    /// find roots on each of them.
    pub fn proven_branches(&self) -> Vec<Branch> {
        match self.kind {
            ScenarioKind::SquareCenter | ScenarioKind::Bisector30 => self.branches(),
            _ => vec![Branch::Isosceles],
        }
    }

    /// Distance from `p` to a branch in the angle metric (radians).
    pub fn branch_distance(&self, branch: &Branch, p: ShapeParams) -> f64 {
        match branch {
            Branch::Isosceles => (p.alpha - p.beta).abs(),
            Branch::Gamma(g) => (p.gamma() - g).abs(),
            Branch::Alpha(a) => (p.alpha - a).abs(),
            Branch::CyclicRectangle => p
                .triangle(self.eps)
                .map_err(ScenarioError::from)
                .and_then(|t| inscribed_rectangle(&t, Float::new(self.height, self.eps)))
                .map(|r| {
                    let qop = constructions::angle_rad(&r.o, &r.q, &r.p);
                    (p.gamma() + qop - PI).abs()
                })
                .unwrap_or(f64::INFINITY),
        }
    }

    /// The branch a root belongs to, with its distance. Points within
    /// `delta` of `alpha = beta` go to the isosceles branch first.
    pub fn nearest_branch(&self, p: ShapeParams, delta: f64) -> (Branch, f64) {
        let branches = self.branches();
        let dist: Vec<f64> = branches.iter().map(|b| self.branch_distance(b, p)).collect();
        if let Some(i) = branches.iter().position(|b| *b == Branch::Isosceles) {
            if dist[i] <= delta {
                return (branches[i], dist[i]);
            }
        }
        let i = (0..branches.len())
            .min_by(|&i, &j| dist[i].total_cmp(&dist[j]))
            .expect("every scenario has a branch");
        (branches[i], dist[i])
    }

    /// Shapes where the construction is defined.
    pub fn default_region(&self) -> Region {
        match self.kind {
            ScenarioKind::SquareCenter | ScenarioKind::RectangleCenter => Region::right_base(),
            _ => Region::full(),
        }
    }
}

/// Labeled points and angles of one evaluated configuration.
#[derive(Clone, Debug, Serialize)]
pub struct ScenarioTrace {
    pub scenario: String,
    pub alpha_deg: f64,
    pub beta_deg: f64,
    pub gamma_deg: f64,
    pub points: BTreeMap<String, [f64; 2]>,
    pub angles_deg: BTreeMap<String, f64>,
    pub residual: f64,
    pub flags: BTreeMap<String, bool>,
}

impl ScenarioTrace {
    fn new(scenario: &str, p: ShapeParams) -> Self {
        let [alpha_deg, beta_deg, gamma_deg] = p.degrees();
        ScenarioTrace {
            scenario: scenario.to_string(),
            alpha_deg,
            beta_deg,
            gamma_deg,
            points: BTreeMap::new(),
            angles_deg: BTreeMap::new(),
            residual: f64::NAN,
            flags: BTreeMap::new(),
        }
    }

    pub(crate) fn point<S: Scalar>(&mut self, label: &str, p: &Point<S>) {
        self.points.insert(label.to_string(), p.to_f64());
    }

    pub(crate) fn angle(&mut self, label: &str, radians: f64) {
        self.angles_deg.insert(label.to_string(), radians.to_degrees());
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_round_trip() {
        for k in ScenarioKind::ALL {
            assert_eq!(k.name().parse::<ScenarioKind>().unwrap(), k);
        }
        let err = "no-such".parse::<ScenarioKind>().unwrap_err();
        assert!(err.to_string().contains("bisector-30"));
    }

    #[test]
    fn shape_validation() {
        assert!(ShapeParams::from_degrees(90.0, 90.0).is_err());
        assert!(ShapeParams::from_degrees(0.0, 30.0).is_err());
        assert!(ShapeParams::from_degrees(f64::NAN, 30.0).is_err());
        let p = ShapeParams::from_degrees(50.0, 60.0).unwrap();
        assert!((p.gamma().to_degrees() - 70.0).abs() < 1e-12);
        let t = p.triangle(1e-9).unwrap();
        assert!((t.angle_rad(crate::geom::Vertex::C) - p.gamma()).abs() < 1e-12);
    }

    #[test]
    fn isosceles_tie_break() {
        let s = Scenario::new(ScenarioKind::MedialCircumcenter);
        let p = ShapeParams::from_degrees(60.0, 60.0 + 1e-8).unwrap();
        let (b, d) = s.nearest_branch(p, 1e-6);
        assert_eq!(b, Branch::Isosceles);
        assert!(d < 1e-6);
        let q = ShapeParams::from_degrees(50.0, 70.0).unwrap();
        assert_eq!(s.nearest_branch(q, 1e-6).0, Branch::Gamma(60f64.to_radians()));
    }

    #[test]
    fn height_validation() {
        let s = Scenario::new(ScenarioKind::RectangleCenter);
        assert!(s.with_height(0.0).is_err());
        assert!(s.with_height(1.0).is_err());
        assert_eq!(s.with_height(0.3).unwrap().height, 0.3);
    }
}
