//! Level-set scan of a hypothesis residual over the shape space.
//!
//! The residual is sampled on a square grid in `(alpha, beta)`. Every grid
//! edge whose endpoints have strictly opposite signs is refined by
//! bisection; grid points where the residual is exactly zero are roots as
//! they stand. Each root is then measured against the scenario's
//! conclusion set.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use serde::Serialize;

use super::{Result, Scenario, ScenarioError, ShapeParams};
use crate::exec::{map_indexed, Execution};

/// Admissible shapes: closed angle ranges (radians), optionally minus a
/// band `|alpha - beta| < width` around the isosceles line.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Region {
    pub alpha: (f64, f64),
    pub beta: (f64, f64),
    pub gamma: (f64, f64),
    pub exclude_isosceles_band: Option<f64>,
}

impl Region {
    pub fn full() -> Self {
        Region {
            alpha: (0.0, PI),
            beta: (0.0, PI),
            gamma: (0.0, PI),
            exclude_isosceles_band: None,
        }
    }

    /// Both base angles at most 90 degrees.
    pub fn right_base() -> Self {
        Region {
            alpha: (0.0, PI / 2.0),
            beta: (0.0, PI / 2.0),
            ..Self::full()
        }
    }

    pub fn contains(&self, p: ShapeParams) -> bool {
        let inside = |x: f64, (lo, hi): (f64, f64)| x >= lo && x <= hi;
        inside(p.alpha, self.alpha)
            && inside(p.beta, self.beta)
            && inside(p.gamma(), self.gamma)
            && self
                .exclude_isosceles_band
                .is_none_or(|w| (p.alpha - p.beta).abs() >= w)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ScanConfig {
    /// Grid spacing in radians.
    pub grid_step: f64,
    /// Bisection stops once the bracket is this narrow and the residual at
    /// its midpoint is at most this large.
    pub refine_tol: f64,
    /// Containment tolerance in the angle metric (radians).
    pub delta: f64,
    pub region: Option<Region>,
    #[serde(skip)]
    pub exec: Execution,
}

impl ScanConfig {
    pub fn new(grid_step: f64) -> Self {
        ScanConfig {
            grid_step,
            refine_tol: 1e-12,
            delta: 1e-6,
            region: None,
            exec: Execution::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Root {
    pub params: ShapeParams,
    pub residual: f64,
    pub branch: String,
    /// Distance to the attributed branch.
    pub distance: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub scenario: String,
    pub grid_step: f64,
    pub refine_tol: f64,
    pub delta: f64,
    pub region: Region,
    pub grid_points: usize,
    /// Sorted by `(alpha, beta)`.
    pub roots: Vec<Root>,
    /// Roots farther than `delta` from every branch.
    pub violations: Vec<Root>,
    /// Sign changes that do not refine to a small residual.
    pub discontinuities: Vec<ShapeParams>,
    pub branch_counts: BTreeMap<String, usize>,
    pub containment: bool,
}

enum EdgeResult {
    Root(ShapeParams, f64),
    Jump(ShapeParams),
}

const MAX_BISECTIONS: usize = 200;

fn refine(
    scenario: &Scenario,
    from: (ShapeParams, f64),
    to: (ShapeParams, f64),
    tol: f64,
) -> EdgeResult {
    let (p0, f0) = from;
    let (p1, _) = to;
    let at = |s: f64| ShapeParams {
        alpha: p0.alpha + s * (p1.alpha - p0.alpha),
        beta: p0.beta + s * (p1.beta - p0.beta),
    };
    let len = (p1.alpha - p0.alpha).abs().max((p1.beta - p0.beta).abs());
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    let lo_positive = f0 > 0.0;
    let mut best = (at(0.5), f64::INFINITY);
    for _ in 0..MAX_BISECTIONS {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let p = at(mid);
        let f = match scenario.residual(p) {
            Ok(f) if f.is_finite() => f,
            _ => return EdgeResult::Jump(p),
        };
        best = (p, f);
        if f == 0.0 || ((hi - lo) * len <= tol && f.abs() <= tol) {
            break;
        }
        if (f > 0.0) == lo_positive {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    if best.1.abs() <= tol {
        EdgeResult::Root(best.0, best.1)
    } else {
        EdgeResult::Jump(best.0)
    }
}

pub fn level_set_scan(scenario: &Scenario, cfg: &ScanConfig) -> Result<ScanReport> {
    if !(cfg.grid_step > 0.0 && cfg.grid_step < PI / 2.0) {
        return Err(ScenarioError::InvalidScan("grid step must lie in (0, 90) degrees"));
    }
    if !(cfg.refine_tol > 0.0 && cfg.delta > 0.0) {
        return Err(ScenarioError::InvalidScan("tolerances must be positive"));
    }
    let region = cfg.region.unwrap_or_else(|| scenario.default_region());
    let h = cfg.grid_step;
    let n = (PI / h).floor() as usize;
    // Keep every angle at least half a step away from zero.
    let vertex = |i: usize, j: usize| -> Option<ShapeParams> {
        let (alpha, beta) = (i as f64 * h, j as f64 * h);
        if i == 0 || j == 0 || PI - alpha - beta < 0.5 * h {
            return None;
        }
        let p = ShapeParams { alpha, beta };
        region.contains(p).then_some(p)
    };
    let rows: Vec<Vec<Option<(ShapeParams, f64)>>> = map_indexed(cfg.exec, n + 1, |i| {
        (0..=n)
            .map(|j| {
                let p = vertex(i, j)?;
                scenario.residual(p).ok().filter(|f| f.is_finite()).map(|f| (p, f))
            })
            .collect()
    });
    let grid_points = rows.iter().flatten().filter(|v| v.is_some()).count();
    if grid_points == 0 {
        return Err(ScenarioError::EmptyRegion);
    }

    let per_row: Vec<Vec<EdgeResult>> = map_indexed(cfg.exec, n + 1, |i| {
        let mut out = Vec::new();
        for j in 0..=n {
            let Some(here) = rows[i][j] else { continue };
            if here.1 == 0.0 {
                out.push(EdgeResult::Root(here.0, 0.0));
                continue;
            }
            let right = rows.get(i + 1).and_then(|r| r[j]);
            let up = rows[i].get(j + 1).copied().flatten();
            for there in [right, up].into_iter().flatten() {
                if there.1 != 0.0 && (here.1 > 0.0) != (there.1 > 0.0) {
                    out.push(refine(scenario, here, there, cfg.refine_tol));
                }
            }
        }
        out
    });

    let mut roots = Vec::new();
    let mut discontinuities = Vec::new();
    for r in per_row.into_iter().flatten() {
        match r {
            EdgeResult::Root(params, residual) => {
                let (branch, distance) = scenario.nearest_branch(params, cfg.delta);
                roots.push(Root {
                    params,
                    residual,
                    branch: branch.name(),
                    distance,
                });
            }
            EdgeResult::Jump(p) => discontinuities.push(p),
        }
    }
    let key = |p: &ShapeParams| (p.alpha, p.beta);
    roots.sort_by(|a, b| {
        let (ka, kb) = (key(&a.params), key(&b.params));
        ka.0.total_cmp(&kb.0).then(ka.1.total_cmp(&kb.1))
    });
    discontinuities.sort_by(|a, b| a.alpha.total_cmp(&b.alpha).then(a.beta.total_cmp(&b.beta)));

    let mut branch_counts: BTreeMap<String, usize> = scenario.branches().iter().map(|b| (b.name(), 0)).collect();
    let mut violations = Vec::new();
    for r in &roots {
        if r.distance <= cfg.delta {
            *branch_counts.entry(r.branch.clone()).or_default() += 1;
        } else {
            violations.push(r.clone());
        }
    }
    Ok(ScanReport {
        scenario: scenario.name().to_string(),
        grid_step: h,
        refine_tol: cfg.refine_tol,
        delta: cfg.delta,
        region,
        grid_points,
        containment: violations.is_empty(),
        roots,
        violations,
        discontinuities,
        branch_counts,
    })
}

impl ScanReport {
    /// Whether every branch the hypothesis is known to hold on received a root.
    pub fn covers(&self, scenario: &Scenario) -> bool {
        scenario
            .proven_branches()
            .iter()
            .all(|b| self.branch_counts.get(&b.name()).is_some_and(|&n| n > 0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scenarios::ScenarioKind;

    fn coarse(kind: ScenarioKind) -> ScanReport {
        let mut cfg = ScanConfig::new(2f64.to_radians());
        cfg.exec = Execution::Sequential;
        level_set_scan(&Scenario::new(kind), &cfg).unwrap()
    }

    #[test]
    fn coarse_scans_are_contained() {
        for kind in ScenarioKind::ALL {
            let r = coarse(kind);
            assert!(r.containment, "{kind}: {:?}", r.violations.first());
            assert!(!r.roots.is_empty(), "{kind}");
            for root in &r.roots {
                assert!(root.residual.abs() <= r.refine_tol);
            }
        }
    }

    #[test]
    fn proven_branches_are_found() {
        for kind in [ScenarioKind::SquareCenter, ScenarioKind::Bisector30] {
            let s = Scenario::new(kind);
            let r = coarse(kind);
            assert!(r.covers(&s), "{kind}: {:?}", r.branch_counts);
        }
    }

    #[test]
    fn roots_are_sorted() {
        let r = coarse(ScenarioKind::MedialCircumcenter);
        for w in r.roots.windows(2) {
            let (a, b) = (&w[0].params, &w[1].params);
            assert!((a.alpha, a.beta) <= (b.alpha, b.beta));
        }
    }

    #[test]
    fn restricted_region_has_no_roots() {
        let d = |x: f64| x.to_radians();
        let mut cfg = ScanConfig::new(d(1.0));
        cfg.region = Some(Region {
            gamma: (d(61.0), d(179.0)),
            exclude_isosceles_band: Some(d(1.0)),
            ..Region::full()
        });
        let r = level_set_scan(&Scenario::new(ScenarioKind::MedialCircumcenter), &cfg).unwrap();
        assert!(r.grid_points > 0);
        assert!(r.roots.is_empty(), "{:?}", r.roots.first());
    }

    #[test]
    fn invalid_scans() {
        let s = Scenario::new(ScenarioKind::Bisector30);
        assert!(level_set_scan(&s, &ScanConfig::new(0.0)).is_err());
        let mut cfg = ScanConfig::new(0.1);
        cfg.region = Some(Region {
            alpha: (3.0, 3.1),
            beta: (3.0, 3.1),
            ..Region::full()
        });
        assert_eq!(level_set_scan(&s, &cfg).unwrap_err(), ScenarioError::EmptyRegion);
    }

    #[test]
    fn parallel_matches_sequential() {
        let s = Scenario::new(ScenarioKind::IncenterSegments);
        let mut cfg = ScanConfig::new(3f64.to_radians());
        cfg.exec = Execution::Sequential;
        let a = level_set_scan(&s, &cfg).unwrap();
        cfg.exec = Execution::Parallel;
        let b = level_set_scan(&s, &cfg).unwrap();
        assert_eq!(a.roots, b.roots);
    }
}
