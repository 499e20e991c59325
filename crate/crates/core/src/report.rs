//! Run reports: per-check results plus optional scan output, serialized as
//! JSON (numbers rounded to 12 significant digits) or markdown.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
pub const MAX_WITNESSES: usize = 5;
pub const SIGNIFICANT_DIGITS: usize = 12;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub samples: u64,
    pub worst_residual: Option<f64>,
    pub witnesses: Vec<String>,
}

/// One sample's contribution to a [`Check`].
#[derive(Clone, Debug)]
pub struct Outcome {
    pub ok: bool,
    pub residual: Option<f64>,
    pub witness: Option<String>,
}

impl Outcome {
    pub fn pass(residual: f64) -> Self {
        Outcome {
            ok: true,
            residual: Some(residual),
            witness: None,
        }
    }

    pub fn pass_exact() -> Self {
        Outcome {
            ok: true,
            residual: None,
            witness: None,
        }
    }

    pub fn fail(residual: Option<f64>, witness: impl Into<String>) -> Self {
        Outcome {
            ok: false,
            residual,
            witness: Some(witness.into()),
        }
    }

    /// Passes iff `residual <= tol`.
    pub fn within(residual: f64, tol: f64, witness: impl FnOnce() -> String) -> Self {
        if residual <= tol {
            Outcome::pass(residual)
        } else {
            Outcome::fail(Some(residual), witness())
        }
    }
}

impl Check {
    /// Folds outcomes in order; only the first few witnesses are kept.
    pub fn from_outcomes(name: impl Into<String>, outcomes: impl IntoIterator<Item = Outcome>) -> Check {
        let mut check = Check {
            name: name.into(),
            pass: true,
            samples: 0,
            worst_residual: None,
            witnesses: Vec::new(),
        };
        for o in outcomes {
            check.samples += 1;
            if let Some(r) = o.residual {
                let r = if r.is_nan() { f64::INFINITY } else { r };
                check.worst_residual = Some(check.worst_residual.map_or(r, |w: f64| w.max(r)));
                if r.is_infinite() {
                    check.pass = false;
                }
            }
            if !o.ok {
                check.pass = false;
            }
            if let Some(w) = o.witness {
                if check.witnesses.len() < MAX_WITNESSES {
                    check.witnesses.push(w);
                }
            }
        }
        if check.samples == 0 {
            check.pass = false;
            check.witnesses.push("no samples".into());
        }
        check
    }

    pub fn single(name: impl Into<String>, outcome: Outcome) -> Check {
        Check::from_outcomes(name, [outcome])
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RootRow {
    pub alpha_deg: f64,
    pub beta_deg: f64,
    pub gamma_deg: f64,
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Containment {
    pub scenario: String,
    pub verdict: bool,
    pub delta: f64,
    pub roots: usize,
    pub violations: usize,
    pub discontinuities: usize,
    /// Roots attributed to each branch of the conclusion set.
    pub branches: BTreeMap<String, usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub version: String,
    pub config: Value,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub containment: Option<Containment>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub roots: Option<Vec<RootRow>>,
    /// Command-specific output (SSA solutions, truth-table counts).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<Value>,
    pub wall_time_ms: u64,
}

impl Report {
    pub fn new(config: &impl Serialize) -> Report {
        Report {
            version: VERSION.to_string(),
            config: serde_json::to_value(config).expect("config serializes"),
            checks: Vec::new(),
            containment: None,
            roots: None,
            details: None,
            wall_time_ms: 0,
        }
    }

    pub fn passed(&self) -> bool {
        !self.checks.is_empty()
            && self.checks.iter().all(|c| c.pass)
            && self.containment.as_ref().is_none_or(|c| c.verdict)
    }

    pub fn to_value(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        round_numbers(&mut v);
        v
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_value()).expect("report serializes")
    }

    /// The JSON report without the wall-time field; identical configs give
    /// identical bodies.
    pub fn body_json(&self) -> String {
        let mut v = self.to_value();
        if let Value::Object(map) = &mut v {
            map.remove("wall_time_ms");
        }
        serde_json::to_string_pretty(&v).expect("report serializes")
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# planimetry report (v{})\n", self.version);
        let _ = writeln!(out, "Overall: **{}**\n", if self.passed() { "PASS" } else { "FAIL" });
        let _ = writeln!(out, "## Config\n\n```json\n{}\n```\n", serde_json::to_string_pretty(&self.config).unwrap_or_default());
        let _ = writeln!(out, "## Checks\n\n| check | result | samples | worst residual |\n|---|---|---|---|");
        for c in &self.checks {
            let worst = c.worst_residual.map_or("-".to_string(), |w| format!("{:.3e}", w));
            let _ = writeln!(out, "| {} | {} | {} | {} |", c.name, if c.pass { "pass" } else { "FAIL" }, c.samples, worst);
        }
        for c in self.checks.iter().filter(|c| !c.witnesses.is_empty()) {
            let _ = writeln!(out, "\n{}:", c.name);
            for w in &c.witnesses {
                let _ = writeln!(out, "- {w}");
            }
        }
        if let Some(cont) = &self.containment {
            let _ = writeln!(
                out,
                "\n## Containment\n\nscenario `{}`: {} ({} roots, {} violations, {} discontinuities, delta {:e})",
                cont.scenario,
                if cont.verdict { "contained" } else { "VIOLATED" },
                cont.roots,
                cont.violations,
                cont.discontinuities,
                cont.delta
            );
            for (branch, n) in &cont.branches {
                let _ = writeln!(out, "- {branch}: {n}");
            }
        }
        if let Some(roots) = &self.roots {
            const SHOWN: usize = 50;
            let _ = writeln!(out, "\n## Roots ({} total)\n\n| alpha | beta | gamma | residual |\n|---|---|---|---|", roots.len());
            for r in roots.iter().take(SHOWN) {
                let _ = writeln!(
                    out,
                    "| {:.9} | {:.9} | {:.9} | {:.3e} |",
                    r.alpha_deg, r.beta_deg, r.gamma_deg, r.residual
                );
            }
            if roots.len() > SHOWN {
                let _ = writeln!(out, "\n({} more in the JSON report)", roots.len() - SHOWN);
            }
        }
        if let Some(d) = &self.details {
            let _ = writeln!(out, "\n## Details\n\n```json\n{}\n```", serde_json::to_string_pretty(d).unwrap_or_default());
        }
        let _ = writeln!(out, "\nwall time: {} ms", self.wall_time_ms);
        out
    }
}

/// Rounds to [`SIGNIFICANT_DIGITS`] significant digits.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x).parse().unwrap_or(x)
}

fn round_numbers(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            if let Some(r) = n.as_f64().map(round_sig).and_then(serde_json::Number::from_f64) {
                *n = r;
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_numbers),
        Value::Object(map) => map.values_mut().for_each(round_numbers),
        _ => {}
    }
}
