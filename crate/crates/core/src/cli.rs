//! Command-line front end. Degrees appear only here; everything below works
//! in radians or cosines.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 for usage
//! or configuration errors.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::congruence::Correspondence;
use crate::exec::{Execution, RNG_ALGORITHM};
use crate::geom::{Backend, Cosine, Exact, Float, Point, Scalar, Triangle, Vertex};
use crate::logic::{self, parse_formula, verify_composition_equivalences, EquivalenceReport};
use crate::report::{round_sig, Check, Containment, Outcome, Report, RootRow};
use crate::scenarios::implications::{contrapositive_spot_check, forward_check, Implication};
use crate::scenarios::scan::{level_set_scan, Region, ScanConfig};
use crate::scenarios::{Scenario, ScenarioKind};
use crate::ssa::{classify_pair, solve_ssa, CriterionCase, DichotomyVerdict, SsaSpec, VerdictKind, SSA_MATCH};
use crate::suite::{run_suite, SuiteConfig};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "planimetry", version, about = "Checks the SSA dichotomy and related triangle problems")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Markdown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BackendArg {
    Exact,
    Float,
}

impl From<BackendArg> for Backend {
    fn from(b: BackendArg) -> Backend {
        match b {
            BackendArg::Exact => Backend::Exact,
            BackendArg::Float => Backend::Float,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Side {
    A,
    B,
}

fn positive_f64(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x > 0.0 && x.is_finite() => Ok(x),
        Ok(_) => Err("must be a positive finite number".into()),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug, Args)]
pub struct Common {
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub report: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long, global = true, value_enum, default_value_t = BackendArg::Float)]
    pub backend: BackendArg,
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
    /// Float tolerance; defaults to 1e-9. Ignored by the exact backend.
    #[arg(long, global = true, value_parser = positive_f64)]
    pub eps: Option<f64>,
    /// Samples per check (default 10000 for verify, 1000 for scenario checks).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub samples: Option<u64>,
    /// Run on one thread.
    #[arg(long, global = true)]
    pub sequential: bool,
}

impl Common {
    fn eps(&self) -> f64 {
        self.eps.unwrap_or(Float::DEFAULT_EPS)
    }

    fn exec(&self) -> Execution {
        if self.sequential {
            Execution::Sequential
        } else {
            Execution::default()
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve side-side-angle data and classify the solutions.
    Ssa(SsaArgs),
    /// Run the seeded dichotomy suite.
    Verify,
    /// Scan a scenario's hypothesis over the shape space.
    Scenario(ScenarioArgs),
    /// Check the composition equivalences, or one given equivalence.
    Logic(LogicArgs),
}

#[derive(Debug, Args)]
pub struct SsaArgs {
    /// Side length (a rational like 3/2 with the exact backend).
    #[arg(long)]
    pub a: String,
    #[arg(long)]
    pub b: String,
    #[arg(long, conflicts_with = "cos", required_unless_present = "cos")]
    pub angle_deg: Option<f64>,
    /// Cosine of the angle; with the exact backend its sine must be rational.
    #[arg(long)]
    pub cos: Option<String>,
    /// Side the angle is opposite to.
    #[arg(long, value_enum, conflicts_with = "included")]
    pub opposite: Option<Side>,
    /// The angle lies between the two sides.
    #[arg(long)]
    pub included: bool,
}

#[derive(Debug, Args)]
pub struct ScenarioArgs {
    pub name: String,
    #[arg(long, default_value_t = 0.25, value_parser = positive_f64)]
    pub grid_step_deg: f64,
    #[arg(long, default_value_t = 1e-12, value_parser = positive_f64)]
    pub refine_tol: f64,
    /// Containment tolerance in radians.
    #[arg(long, default_value_t = 1e-6, value_parser = positive_f64)]
    pub delta: f64,
    /// Rectangle height as a fraction of the altitude (rectangle-center only).
    #[arg(long)]
    pub height: Option<f64>,
    #[arg(long)]
    pub gamma_min_deg: Option<f64>,
    #[arg(long)]
    pub gamma_max_deg: Option<f64>,
    /// Drop shapes with |alpha - beta| below this many degrees.
    #[arg(long)]
    pub exclude_isosceles_deg: Option<f64>,
}

#[derive(Debug, Args)]
pub struct LogicArgs {
    #[arg(long, requires = "equiv")]
    pub formula: Option<String>,
    #[arg(long, requires = "formula")]
    pub equiv: Option<String>,
    #[arg(long, requires = "formula")]
    pub constraint: Option<String>,
}

/// A usage or configuration error (exit code 2).
#[derive(Debug)]
pub struct UsageError(pub String);

type CmdResult = Result<Report, UsageError>;

fn usage(msg: impl Into<String>) -> UsageError {
    UsageError(msg.into())
}

/// Parses `args`, runs the command, writes the report; returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
        }
    };
    if cli.common.backend == BackendArg::Exact && cli.common.eps.is_some() {
        eprintln!("warning: --eps is ignored by the exact backend");
    }
    let start = Instant::now();
    let result = match &cli.command {
        Command::Ssa(a) => cmd_ssa(&cli.common, a),
        Command::Verify => Ok(cmd_verify(&cli.common)),
        Command::Scenario(a) => cmd_scenario(&cli.common, a),
        Command::Logic(a) => cmd_logic(a),
    };
    let mut report = match result {
        Ok(r) => r,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            return EXIT_USAGE;
        }
    };
    report.wall_time_ms = start.elapsed().as_millis() as u64;
    let text = match cli.common.format {
        Format::Json => report.to_json(),
        Format::Markdown => report.to_markdown(),
    };
    match &cli.common.report {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text + "\n") {
                eprintln!("error: cannot write {}: {e}", path.display());
                return EXIT_USAGE;
            }
            print!("{}", summary(&report));
        }
        None => println!("{text}"),
    }
    if report.passed() {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn summary(report: &Report) -> String {
    let mut out = String::new();
    for c in &report.checks {
        let _ = writeln!(out, "{} {} ({} samples)", if c.pass { "PASS" } else { "FAIL" }, c.name, c.samples);
    }
    if let Some(c) = &report.containment {
        let _ = writeln!(
            out,
            "{} containment {} ({} roots, {} violations)",
            if c.verdict { "PASS" } else { "FAIL" },
            c.scenario,
            c.roots,
            c.violations
        );
    }
    out
}

fn cmd_verify(common: &Common) -> Report {
    let backend: Backend = common.backend.into();
    let cfg = SuiteConfig {
        samples: common.samples.unwrap_or(10_000) as usize,
        seed: common.seed,
        eps: common.eps(),
        exec: common.exec(),
    };
    let mut report = Report::new(&json!({
        "command": "verify",
        "backend": backend.to_string(),
        "seed": cfg.seed,
        "samples": cfg.samples,
        "eps": if backend == Backend::Float { Some(cfg.eps) } else { None },
        "rng": RNG_ALGORITHM,
    }));
    report.checks = run_suite(&cfg, backend);
    report
}

fn cmd_ssa(common: &Common, args: &SsaArgs) -> CmdResult {
    let backend: Backend = common.backend.into();
    let opposite = match (args.opposite, args.included) {
        (Some(side), false) => Some(side),
        (None, true) => None,
        _ => return Err(usage("give exactly one of --opposite a|b or --included")),
    };
    let config = json!({
        "command": "ssa",
        "backend": backend.to_string(),
        "a": args.a,
        "b": args.b,
        "angle_deg": args.angle_deg,
        "cos": args.cos,
        "opposite": opposite.map(|s| format!("{s:?}").to_lowercase()),
        "included": args.included,
        "eps": if backend == Backend::Float { Some(common.eps()) } else { None },
    });
    let details = match backend {
        Backend::Float => {
            let num = |s: &str| positive_f64(s).map_err(|e| usage(format!("side '{s}': {e}")));
            let (a, b) = (num(&args.a)?, num(&args.b)?);
            let eps = common.eps();
            let cos = match (args.angle_deg, &args.cos) {
                (Some(deg), _) if deg > 0.0 && deg < 180.0 => deg.to_radians().cos(),
                (Some(_), _) => return Err(usage("--angle-deg must lie strictly between 0 and 180")),
                (None, Some(c)) => c.parse::<f64>().map_err(|e| usage(format!("--cos: {e}")))?,
                (None, None) => unreachable!("clap requires an angle"),
            };
            let f = |x| Float::new(x, eps);
            ssa_details(f(a), f(b), f(cos), opposite)?
        }
        Backend::Exact => {
            let num = |s: &str| Exact::parse(s).ok_or_else(|| usage(format!("'{s}' is not a rational number")));
            let Some(cos) = &args.cos else {
                return Err(usage("the exact backend takes the angle as --cos with a rational sine"));
            };
            ssa_details(num(&args.a)?, num(&args.b)?, num(cos)?, opposite)?
        }
    };
    let (details, case, verdict) = details;
    let mut report = Report::new(&config);
    let n = details["solutions"].as_array().map_or(0, Vec::len);
    let consistent = n <= 1 || (n == 2 && case.is_ambiguous());
    report.checks.push(Check::single(
        "solution count agrees with the case analysis",
        if consistent {
            Outcome::pass_exact()
        } else {
            Outcome::fail(None, format!("{n} solutions in case {case:?}"))
        },
    ));
    if n == 2 {
        let ok = matches!(verdict, Some(VerdictKind::Supplementary | VerdictKind::Congruent));
        report.checks.push(Check::single(
            "two-solution pair is congruent or supplementary",
            if ok { Outcome::pass_exact() } else { Outcome::fail(None, details["verdict"].to_string()) },
        ));
    }
    report.details = Some(details);
    Ok(report)
}

fn triangle_json<S: Scalar>(t: &Triangle<S>) -> Value {
    let [a, b, c] = t.to_f64();
    json!({
        "vertices": { "A": a, "B": b, "C": c },
        "sides": {
            "a": t.side_sq(Vertex::A).to_f64().sqrt(),
            "b": t.side_sq(Vertex::B).to_f64().sqrt(),
            "c": t.side_sq(Vertex::C).to_f64().sqrt(),
        },
        "angles_deg": {
            "A": t.angle_rad(Vertex::A).to_degrees(),
            "B": t.angle_rad(Vertex::B).to_degrees(),
            "C": t.angle_rad(Vertex::C).to_degrees(),
        },
    })
}

fn cos_deg<S: Scalar>(c: &Cosine<S>) -> f64 {
    c.radians().to_degrees()
}

/// Solutions as JSON, the predicted case and the pair verdict kind.
fn ssa_details<S: Scalar>(a: S, b: S, cos: S, opposite: Option<Side>) -> Result<(Value, CriterionCase, Option<VerdictKind>), UsageError> {
    let Some(side) = opposite else {
        // Angle at C between CA = b and CB = a.
        let sin = (S::one() - cos.clone() * cos.clone())
            .sqrt()
            .ok_or_else(|| usage("the sine of the angle is not representable"))?;
        if sin.sign_within(0.0) != crate::geom::Sign::Positive {
            return Err(usage("angle must lie strictly between 0 and 180 degrees"));
        }
        let t = Triangle::new(Point::new(b, S::zero()), Point::new(a.clone() * cos, a * sin), Point::origin())
            .map_err(|e| usage(e.to_string()))?;
        let out = json!({
            "pose": "angle at C, CA along the x-axis",
            "case": CriterionCase::IncludedAngle,
            "solutions": [triangle_json(&t)],
        });
        return Ok((out, CriterionCase::IncludedAngle, None));
    };
    // The solver names the angle vertex A and the opposite side a.
    let (opp, adj) = match side {
        Side::A => (a, b),
        Side::B => (b, a),
    };
    let spec = SsaSpec::new(opp, adj, cos).map_err(|e| usage(e.to_string()))?;
    let sols = solve_ssa(&spec).map_err(|e| usage(e.to_string()))?;
    let mut out = json!({
        "pose": "angle at A, AC along the x-axis, B above",
        "given_side_opposite_angle": format!("{side:?}").to_lowercase(),
        "case": spec.case(),
        "solutions": sols.triangles().map(triangle_json).collect::<Vec<_>>(),
    });
    let mut kind = None;
    if let [s1, s2] = sols.solutions.as_slice() {
        let verdict = match classify_pair(&s1.triangle, &s2.triangle, &Correspondence::IDENTITY, SSA_MATCH) {
            Ok(DichotomyVerdict::Supplementary(c1, c2)) => {
                kind = Some(VerdictKind::Supplementary);
                json!({
                    "kind": "Supplementary",
                    "angles_deg": [cos_deg(&c1), cos_deg(&c2)],
                    "cos_sum": c1.value() + c2.value(),
                })
            }
            Ok(v) => {
                kind = Some(v.kind());
                json!({ "kind": v.kind() })
            }
            Err(e) => json!({ "kind": "DichotomyViolation", "message": e.to_string() }),
        };
        out["verdict"] = verdict;
    }
    Ok((out, spec.case(), kind))
}

fn scan_region(args: &ScenarioArgs, default: Region) -> Result<Option<Region>, UsageError> {
    if args.gamma_min_deg.is_none() && args.gamma_max_deg.is_none() && args.exclude_isosceles_deg.is_none() {
        return Ok(None);
    }
    let mut r = default;
    if let Some(g) = args.gamma_min_deg {
        r.gamma.0 = g.to_radians();
    }
    if let Some(g) = args.gamma_max_deg {
        r.gamma.1 = g.to_radians();
    }
    if let Some(w) = args.exclude_isosceles_deg {
        if !(w > 0.0) {
            return Err(usage("--exclude-isosceles-deg must be positive"));
        }
        r.exclude_isosceles_band = Some(w.to_radians());
    }
    if !(r.gamma.0 < r.gamma.1) {
        return Err(usage("gamma range is empty"));
    }
    Ok(Some(r))
}

fn cmd_scenario(common: &Common, args: &ScenarioArgs) -> CmdResult {
    let kind: ScenarioKind = args.name.parse().map_err(|e: crate::scenarios::ScenarioError| usage(e.to_string()))?;
    let mut scenario = Scenario::new(kind);
    if let Some(h) = args.height {
        if kind != ScenarioKind::RectangleCenter {
            return Err(usage("--height applies to rectangle-center only"));
        }
        scenario = scenario.with_height(h).map_err(|e| usage(e.to_string()))?;
    }
    let region = scan_region(args, scenario.default_region())?;
    let scan_cfg = ScanConfig {
        grid_step: args.grid_step_deg.to_radians(),
        refine_tol: args.refine_tol,
        delta: args.delta,
        region,
        exec: common.exec(),
    };
    let samples = common.samples.unwrap_or(1000) as usize;
    let scan = level_set_scan(&scenario, &scan_cfg).map_err(|e| usage(e.to_string()))?;
    let mut report = Report::new(&json!({
        "command": "scenario",
        "scenario": kind.name(),
        "height": scenario.height,
        "grid_step_deg": args.grid_step_deg,
        "refine_tol": args.refine_tol,
        "delta": args.delta,
        "region_deg": region_degrees(&scan.region),
        "seed": common.seed,
        "samples": samples,
        "rng": RNG_ALGORITHM,
    }));
    for imp in Implication::for_scenario(kind) {
        report.checks.push(forward_check(imp, samples, common.seed, common.exec()));
    }
    if kind == ScenarioKind::Bisector30 {
        report.checks.push(contrapositive_spot_check());
    }
    if region.is_none() && !scenario.proven_branches().is_empty() {
        let covered = scan.covers(&scenario);
        let name = format!("scan finds roots on every proven branch of {}", kind.name());
        let outcome = if covered {
            Outcome::pass_exact()
        } else {
            Outcome::fail(None, format!("branch counts {:?}", scan.branch_counts))
        };
        report.checks.push(Check::single(name, outcome));
    }
    report.containment = Some(Containment {
        scenario: kind.name().to_string(),
        verdict: scan.containment,
        delta: scan.delta,
        roots: scan.roots.len(),
        violations: scan.violations.len(),
        discontinuities: scan.discontinuities.len(),
        branches: scan.branch_counts.clone(),
    });
    let mut rows: Vec<RootRow> = scan
        .roots
        .iter()
        .map(|r| {
            let [alpha_deg, beta_deg, gamma_deg] = r.params.degrees();
            RootRow {
                alpha_deg,
                beta_deg,
                gamma_deg,
                residual: r.residual,
            }
        })
        .collect();
    // Order by the serialized (rounded) values so the JSON reads sorted.
    let key = |r: &RootRow| (round_sig(r.alpha_deg), round_sig(r.beta_deg));
    rows.sort_by(|x, y| {
        let (kx, ky) = (key(x), key(y));
        kx.0.total_cmp(&ky.0).then(kx.1.total_cmp(&ky.1))
    });
    report.roots = Some(rows);
    let deg = |p: &crate::scenarios::ShapeParams| p.degrees();
    report.details = Some(json!({
        "grid_points": scan.grid_points,
        "violations_deg": scan.violations.iter().map(|r| deg(&r.params)).collect::<Vec<_>>(),
        "discontinuities_deg": scan.discontinuities.iter().map(deg).collect::<Vec<_>>(),
    }));
    Ok(report)
}

fn region_degrees(r: &Region) -> Value {
    let d = |(lo, hi): (f64, f64)| [lo.to_degrees(), hi.to_degrees()];
    json!({
        "alpha": d(r.alpha),
        "beta": d(r.beta),
        "gamma": d(r.gamma),
        "exclude_isosceles_band": r.exclude_isosceles_band.map(f64::to_degrees),
    })
}

fn equivalence_check(r: &EquivalenceReport) -> Check {
    let mut name = format!("{}: {} <=> {}", r.name, r.lhs, r.rhs);
    if let Some(c) = &r.constraint {
        let _ = write!(name, " given {c}");
    }
    Check {
        name,
        pass: r.pass,
        samples: r.satisfying as u64,
        worst_residual: None,
        witnesses: r.witness.iter().cloned().collect(),
    }
}

fn cmd_logic(args: &LogicArgs) -> CmdResult {
    let reports = match (&args.formula, &args.equiv) {
        (Some(f), Some(g)) => {
            let parse = |s: &str| parse_formula(s).map_err(|e| usage(format!("'{s}': {e}")));
            let (l, r) = (parse(f)?, parse(g)?);
            let c = args.constraint.as_deref().map(parse).transpose()?;
            let e = logic::equivalent(&l, &r, c.as_ref()).map_err(|e| usage(e.to_string()))?;
            vec![EquivalenceReport {
                name: "given".into(),
                lhs: l.to_string(),
                rhs: r.to_string(),
                constraint: c.map(|c| c.to_string()),
                pass: e.equivalent,
                rows: e.rows,
                satisfying: e.satisfying,
                witness: e.witness.as_ref().map(logic::format_assignment),
            }]
        }
        _ => verify_composition_equivalences(),
    };
    let mut report = Report::new(&json!({
        "command": "logic",
        "formula": args.formula,
        "equiv": args.equiv,
        "constraint": args.constraint,
    }));
    report.checks = reports.iter().map(equivalence_check).collect();
    report.details = Some(serde_json::to_value(&reports).expect("reports serialize"));
    Ok(report)
}
