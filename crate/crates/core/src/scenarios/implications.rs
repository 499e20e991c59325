//! Sampled checks of the implications that are proven in the forward
//! direction: on the conclusion branch, the hypothesis holds.

use rand::Rng;

use super::{Scenario, ScenarioKind, ShapeParams};
use crate::exec::{map_indexed, sample_rng, Execution};
use crate::report::{Check, Outcome};

pub const FORWARD_TOL: f64 = 1e-9;
/// Minimum gap `|angle BB1A1 - 30deg|` (radians) off the conclusion set.
pub const SPOT_GAP: f64 = 1e-3;
/// Shapes `(alpha, beta)` in degrees with neither `gamma = 60` nor `alpha = 120`.
pub const SPOT_SHAPES: [(f64, f64); 6] = [(90.0, 45.0), (40.0, 40.0), (100.0, 30.0), (30.0, 100.0), (70.0, 80.0), (140.0, 20.0)];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Implication {
    RightAngleSquare,
    IsoscelesSquare,
    IsoscelesRectangles,
    Gamma60Bisector,
    Alpha120Bisector,
    IsoscelesMedial,
    IsoscelesIncenter,
}

impl Implication {
    pub const ALL: [Implication; 7] = [
        Implication::RightAngleSquare,
        Implication::IsoscelesSquare,
        Implication::IsoscelesRectangles,
        Implication::Gamma60Bisector,
        Implication::Alpha120Bisector,
        Implication::IsoscelesMedial,
        Implication::IsoscelesIncenter,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Implication::RightAngleSquare => "gamma=90 => square center on bisector",
            Implication::IsoscelesSquare => "CA=CB => square center on bisector",
            Implication::IsoscelesRectangles => "CA=CB => rectangle centers on bisector (10 heights)",
            Implication::Gamma60Bisector => "gamma=60 => angle BB1A1 = 30",
            Implication::Alpha120Bisector => "alpha=120 => angle BB1A1 = 30",
            Implication::IsoscelesMedial => "CA=CB => medial circumcenter on bisector",
            Implication::IsoscelesIncenter => "CA=CB => JA1 = JB1",
        }
    }

    pub fn kind(self) -> ScenarioKind {
        match self {
            Implication::RightAngleSquare | Implication::IsoscelesSquare => ScenarioKind::SquareCenter,
            Implication::IsoscelesRectangles => ScenarioKind::RectangleCenter,
            Implication::Gamma60Bisector | Implication::Alpha120Bisector => ScenarioKind::Bisector30,
            Implication::IsoscelesMedial => ScenarioKind::MedialCircumcenter,
            Implication::IsoscelesIncenter => ScenarioKind::IncenterSegments,
        }
    }

    pub fn for_scenario(kind: ScenarioKind) -> Vec<Implication> {
        Self::ALL.into_iter().filter(|i| i.kind() == kind).collect()
    }

    /// A shape on the hypothesis branch, away from degenerate corners.
    pub fn sample(self, rng: &mut impl Rng) -> ShapeParams {
        let mut deg = |lo: f64, hi: f64| rng.random_range(lo..hi);
        let (a, b) = match self {
            Implication::RightAngleSquare => {
                let a = deg(1.0, 89.0);
                (a, 90.0 - a)
            }
            Implication::Gamma60Bisector => {
                let a = deg(1.0, 119.0);
                (a, 120.0 - a)
            }
            Implication::Alpha120Bisector => (120.0, deg(1.0, 59.0)),
            _ => {
                let a = deg(1.0, 89.0);
                (a, a)
            }
        };
        ShapeParams::from_degrees(a, b).expect("sampled shape is valid")
    }

    pub fn heights(self) -> Vec<f64> {
        match self {
            Implication::IsoscelesRectangles => (1..=10).map(|k| k as f64 / 11.0).collect(),
            _ => vec![Scenario::DEFAULT_HEIGHT],
        }
    }

    /// Largest `|residual|` over the heights at one shape.
    pub fn residual(self, p: ShapeParams) -> Result<f64, super::ScenarioError> {
        let mut worst = 0.0f64;
        for h in self.heights() {
            let s = Scenario::new(self.kind()).with_height(h)?;
            worst = worst.max(s.residual(p)?.abs());
        }
        Ok(worst)
    }
}

pub fn forward_check(imp: Implication, samples: usize, seed: u64, exec: Execution) -> Check {
    let outcomes = map_indexed(exec, samples, |i| {
        let p = imp.sample(&mut sample_rng(seed, i as u64));
        let [a, b, _] = p.degrees();
        match imp.residual(p) {
            Ok(r) => Outcome::within(r, FORWARD_TOL, || format!("alpha={a:.6} beta={b:.6} residual={r:.3e}")),
            Err(e) => Outcome::fail(None, format!("alpha={a:.6} beta={b:.6}: {e}")),
        }
    });
    Check::from_outcomes(format!("forward: {}", imp.name()), outcomes)
}

/// `angle BB1A1` stays away from 30 degrees off the conclusion set.
pub fn contrapositive_spot_check() -> Check {
    let scenario = Scenario::new(ScenarioKind::Bisector30);
    let outcomes = SPOT_SHAPES.iter().map(|&(a, b)| {
        let p = ShapeParams::from_degrees(a, b).expect("valid spot shape");
        match scenario.trace(p) {
            Ok(tr) => {
                let gap = (tr.angles_deg["BB1A1"] - 30.0).to_radians().abs();
                if gap > SPOT_GAP {
                    Outcome::pass_exact()
                } else {
                    Outcome::fail(None, format!("alpha={a} beta={b}: gap {gap:.3e} rad"))
                }
            }
            Err(e) => Outcome::fail(None, format!("alpha={a} beta={b}: {e}")),
        }
    });
    Check::from_outcomes("contrapositive: off the conclusion set, angle BB1A1 != 30", outcomes)
}
