//! Command-line front end: argument and config-file resolution, dispatch,
//! CSV/JSON emission and the exit-code contract.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Display;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use crate::error::Error;
use crate::model_l2::{linear_grid, spectrum_flow};
use crate::potentials::{chi_hash, DoubleWellConfig, RadialPotential};
use crate::radial::RadialSolver;
use crate::scattering::{default_k_grid, default_k_max, levinson_check, phase_curve_with, CurveOptions};
use crate::transparency::{
    certify_non_transparency, default_k_step, default_r_step, scan_zeros_in_k, scan_zeros_in_r, suggest_r,
    CertifyOptions, Verdict, ZeroScan, MARGIN_THRESHOLD,
};
use crate::TOOL_VERSION;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL_VERDICT: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_RUNTIME: i32 = 3;

#[derive(Debug)]
pub enum CliError {
    Config(String),
    Runtime(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => EXIT_CONFIG,
            CliError::Runtime(_) => EXIT_RUNTIME,
        }
    }
}

impl Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Config(m) => write!(f, "configuration error: {m}"),
            CliError::Runtime(m) => write!(f, "runtime error: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParameter { .. } | Error::Parse(_) => CliError::Config(e.to_string()),
            other => CliError::Runtime(other.to_string()),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(
    name = "partialwave",
    version,
    about = "Partial-wave scattering and transparency tools"
)]
struct Cli {
    /// Flat `key = value` file; keys are long flag names. Flags take precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Continuous phase-shift branch on a descending k grid (CSV).
    PhaseShifts(PhaseArgs),
    /// Zeros of the normalized determinant in k or R (CSV).
    WronskianScan(ScanArgs),
    /// Non-transparency certificate for one two-well configuration.
    Certify(CertifyArgs),
    /// Radius maximizing the certificate margin over several couplings.
    SuggestR(SuggestArgs),
    /// Winding number against bound-state count.
    Levinson(LevinsonArgs),
    /// Eigenvalue trajectories of the rank-one model (CSV).
    ModelL2(ModelArgs),
}

#[derive(Debug, Args)]
struct PhaseArgs {
    #[arg(long)]
    l: Option<u32>,
    /// Space dimension [default: 3]
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    lambda: Option<f64>,
    /// `chi:R=<r>` or `step:depth=<d>,radius=<a>` [default: chi:R=1]
    #[arg(long)]
    well: Option<String>,
    /// [default: 0.001]
    #[arg(long)]
    kmin: Option<f64>,
    /// [default: from the well depth]
    #[arg(long)]
    kmax: Option<f64>,
    /// Linear points above k = 1 [default: 200]
    #[arg(long)]
    points: Option<usize>,
    /// Log points per decade below k = 1 [default: 30]
    #[arg(long)]
    per_decade: Option<usize>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ScanArgs {
    /// `k` or `R`
    #[arg(long)]
    var: Option<String>,
    #[arg(long)]
    l: Option<u32>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    lambda: Option<f64>,
    /// Well radius for a k scan [default: 1]
    #[arg(long = "R")]
    r: Option<f64>,
    /// Frequency for an R scan
    #[arg(long)]
    k: Option<f64>,
    /// `lo:hi` [default: 0.1:20 for k]
    #[arg(long)]
    range: Option<String>,
    #[arg(long)]
    step: Option<f64>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CertifyArgs {
    #[arg(long)]
    lambda: Option<f64>,
    #[arg(long = "R")]
    r: Option<f64>,
    /// [default: 3]
    #[arg(long)]
    x0_norm: Option<f64>,
    /// [default: 8]
    #[arg(long)]
    l_max: Option<u32>,
    /// [default: 8]
    #[arg(long)]
    lt_max: Option<u32>,
    /// [default: 0.1:20]
    #[arg(long)]
    k_range: Option<String>,
    #[arg(long)]
    step: Option<f64>,
    #[arg(long)]
    margin_threshold: Option<f64>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    emit_certificate: Option<PathBuf>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SuggestArgs {
    /// Comma-separated couplings [default: 20,50]
    #[arg(long)]
    lambdas: Option<String>,
    #[arg(long)]
    x0_norm: Option<f64>,
    /// `lo:hi` [default: 0.1 to 0.95·(x0_norm − 1)]
    #[arg(long)]
    r_range: Option<String>,
    /// [default: 21]
    #[arg(long)]
    r_points: Option<usize>,
    #[arg(long)]
    l_max: Option<u32>,
    #[arg(long)]
    lt_max: Option<u32>,
    #[arg(long)]
    k_range: Option<String>,
    #[arg(long)]
    step: Option<f64>,
    #[arg(long)]
    margin_threshold: Option<f64>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    emit_certificate: Option<PathBuf>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct LevinsonArgs {
    #[arg(long)]
    l: Option<u32>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    lambda: Option<f64>,
    #[arg(long)]
    well: Option<String>,
    #[arg(long)]
    kmin: Option<f64>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ModelArgs {
    /// [default: 2000]
    #[arg(long)]
    n_trunc: Option<usize>,
    /// [default: -1]
    #[arg(long, allow_hyphen_values = true)]
    kmin: Option<f64>,
    /// [default: 3]
    #[arg(long, allow_hyphen_values = true)]
    kmax: Option<f64>,
    /// [default: 400]
    #[arg(long)]
    points: Option<usize>,
    /// Emit only the lowest M eigenvalues plus the top one (0 = all) [default: 0]
    #[arg(long)]
    eigs: Option<usize>,
    #[arg(long)]
    output: Option<PathBuf>,
}

/// Flat key-value configuration with usage tracking.
#[derive(Debug, Default)]
struct Settings {
    values: BTreeMap<String, String>,
    used: Vec<String>,
}

impl Settings {
    fn load(path: Option<&Path>) -> CliResult<Self> {
        let Some(path) = path else {
            return Ok(Self::default());
        };
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read config file {}: {e}", path.display())))?;
        let mut values = BTreeMap::new();
        for (no, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| CliError::Config(format!("config line {}: expected key = value", no + 1)))?;
            let key = key.trim().replace('_', "-");
            if values.insert(key.clone(), value.trim().to_string()).is_some() {
                return Err(CliError::Config(format!("config key {key:?} given twice")));
            }
        }
        Ok(Self {
            values,
            used: Vec::new(),
        })
    }

    fn lookup<T: FromStr>(&mut self, key: &str, flag: Option<T>) -> CliResult<Option<T>>
    where
        T::Err: Display,
    {
        self.used.push(key.to_string());
        if flag.is_some() {
            return Ok(flag);
        }
        match self.values.get(key) {
            None => Ok(None),
            Some(raw) => raw
                .parse()
                .map(Some)
                .map_err(|e| CliError::Config(format!("config key {key:?}: cannot parse {raw:?}: {e}"))),
        }
    }

    fn get<T: FromStr>(&mut self, key: &str, flag: Option<T>, default: T) -> CliResult<T>
    where
        T::Err: Display,
    {
        Ok(self.lookup(key, flag)?.unwrap_or(default))
    }

    fn require<T: FromStr>(&mut self, key: &str, flag: Option<T>) -> CliResult<T>
    where
        T::Err: Display,
    {
        self.lookup(key, flag)?
            .ok_or_else(|| CliError::Config(format!("missing required parameter --{key}")))
    }

    fn finish(&self) -> CliResult<()> {
        let unknown: Vec<&String> = self.values.keys().filter(|k| !self.used.contains(k)).collect();
        if unknown.is_empty() {
            Ok(())
        } else {
            Err(CliError::Config(format!(
                "unknown config key(s) for this command: {unknown:?}"
            )))
        }
    }
}

fn parse_range(key: &str, text: &str) -> CliResult<(f64, f64)> {
    let bad = || CliError::Config(format!("--{key}: expected lo:hi, got {text:?}"));
    let (a, b) = text.split_once(':').ok_or_else(bad)?;
    let lo: f64 = a.trim().parse().map_err(|_| bad())?;
    let hi: f64 = b.trim().parse().map_err(|_| bad())?;
    if !(lo.is_finite() && hi.is_finite() && hi > lo) {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn parse_list(key: &str, text: &str) -> CliResult<Vec<f64>> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<f64>()
                .map_err(|_| CliError::Config(format!("--{key}: cannot parse {s:?}")))
        })
        .collect()
}

fn parse_well(text: &str) -> CliResult<RadialPotential> {
    text.parse()
        .map_err(|e: Error| CliError::Config(format!("--well {text:?}: {e}")))
}

fn positive(key: &str, v: f64) -> CliResult<f64> {
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(CliError::Config(format!("--{key} must be > 0, got {v}")))
    }
}

fn nonnegative(key: &str, v: f64) -> CliResult<f64> {
    if v >= 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(CliError::Config(format!("--{key} must be >= 0, got {v}")))
    }
}

fn check_dims(l: u32, n: u32) -> CliResult<()> {
    crate::specfun::BesselOrder::from_angular(l, n)?;
    Ok(())
}

/// A finished artifact: CSV or summary text plus an optional JSON record.
struct Emission {
    body: Vec<u8>,
    output: Option<PathBuf>,
    json: Option<(PathBuf, String)>,
    code: i32,
}

/// Shortest round-trip text; exponent form outside `[1e-4, 1e15)`.
fn num(v: f64) -> String {
    let a = v.abs();
    if a == 0.0 || (1e-4..1e15).contains(&a) || !a.is_finite() {
        v.to_string()
    } else {
        format!("{v:e}")
    }
}

fn metadata(lines: &[(&str, String)]) -> Vec<u8> {
    let mut out = Vec::new();
    writeln!(out, "# tool_version={TOOL_VERSION}").expect("vec write");
    writeln!(out, "# chi_hash={}", chi_hash()).expect("vec write");
    for (k, v) in lines {
        writeln!(out, "# {k}={v}").expect("vec write");
    }
    out
}

fn csv_body(header: &[&str], rows: Vec<Vec<String>>) -> CliResult<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).map_err(|e| CliError::Runtime(e.to_string()))?;
    for r in rows {
        w.write_record(&r).map_err(|e| CliError::Runtime(e.to_string()))?;
    }
    w.into_inner().map_err(|e| CliError::Runtime(e.to_string()))
}

fn cmd_phase_shifts(a: PhaseArgs, s: &mut Settings) -> CliResult<Emission> {
    let l = s.get("l", a.l, 0)?;
    let n = s.get("n", a.n, 3)?;
    let lambda = nonnegative("lambda", s.require("lambda", a.lambda)?)?;
    let well = parse_well(&s.get("well", a.well, "chi:R=1".to_string())?)?;
    let kmin = positive("kmin", s.get("kmin", a.kmin, 1e-3)?)?;
    let kmax = s
        .lookup("kmax", a.kmax)?
        .unwrap_or_else(|| default_k_max(lambda, &well));
    let points = s.get("points", a.points, 200)?;
    let per_decade = s.get("per-decade", a.per_decade, 30)?;
    let output = s.lookup("output", a.output)?;
    s.finish()?;
    check_dims(l, n)?;
    if !(kmax > kmin) {
        return Err(CliError::Config(format!("--kmax {kmax} must exceed --kmin {kmin}")));
    }
    let grid = default_k_grid(kmin, kmax, points, per_decade)?;
    let curve = phase_curve_with(
        &RadialSolver::default(),
        l,
        n,
        lambda,
        &well,
        &grid,
        &CurveOptions::default(),
    )?;
    let mut body = metadata(&[
        ("command", "phase-shifts".into()),
        ("l", l.to_string()),
        ("n", n.to_string()),
        ("lambda", num(lambda)),
        ("well", well.to_string()),
        ("kmin", num(kmin)),
        ("kmax", num(curve.points[0].k)),
    ]);
    let rows = curve
        .points
        .iter()
        .map(|p| vec![num(p.k), num(p.delta), num(p.s_eigenvalue.re), num(p.s_eigenvalue.im)])
        .collect();
    body.extend(csv_body(&["k", "delta", "s_re", "s_im"], rows)?);
    Ok(Emission {
        body,
        output,
        json: None,
        code: EXIT_OK,
    })
}

fn scan_rows(scan: &ZeroScan) -> Vec<Vec<String>> {
    let mut rows: Vec<(f64, Vec<String>)> = scan
        .zeros
        .iter()
        .map(|z| {
            (
                z.position,
                vec![
                    "zero".into(),
                    num(z.position),
                    num(z.bracket_lo),
                    num(z.bracket_hi),
                    num(z.value),
                ],
            )
        })
        .chain(scan.tangencies.iter().map(|t| {
            (
                t.position,
                vec![
                    "tangency".into(),
                    num(t.position),
                    String::new(),
                    String::new(),
                    num(t.value),
                ],
            )
        }))
        .collect();
    rows.sort_by(|a, b| a.0.total_cmp(&b.0));
    rows.into_iter().map(|r| r.1).collect()
}

fn cmd_wronskian_scan(a: ScanArgs, s: &mut Settings) -> CliResult<Emission> {
    let var = s.get("var", a.var, "k".to_string())?;
    let l = s.get("l", a.l, 0)?;
    let n = s.get("n", a.n, 3)?;
    let lambda = positive("lambda", s.require("lambda", a.lambda)?)?;
    let r = s.lookup("R", a.r)?;
    let k = s.lookup("k", a.k)?;
    let range = s.lookup("range", a.range)?;
    let step = s.lookup("step", a.step)?;
    let output = s.lookup("output", a.output)?;
    s.finish()?;
    check_dims(l, n)?;
    let solver = RadialSolver::default();
    let scan = match var.as_str() {
        "k" => {
            let r = positive("R", r.unwrap_or(1.0))?;
            let range = parse_range("range", range.as_deref().unwrap_or("0.1:20"))?;
            let step = positive("step", step.unwrap_or_else(|| default_k_step(r)))?;
            scan_zeros_in_k(&solver, l, n, lambda, r, range, step)?
        }
        "R" | "r" => {
            let k = positive("k", k.ok_or_else(|| CliError::Config("an R scan needs --k".into()))?)?;
            let text = range.ok_or_else(|| CliError::Config("an R scan needs --range".into()))?;
            let range = parse_range("range", &text)?;
            let step = positive("step", step.unwrap_or_else(|| default_r_step(k)))?;
            scan_zeros_in_r(&solver, l, n, lambda, k, range, step)?
        }
        other => return Err(CliError::Config(format!("--var must be k or R, got {other:?}"))),
    };
    let fixed_name = if var == "k" { "R" } else { "k" };
    let mut body = metadata(&[
        ("command", "wronskian-scan".into()),
        ("var", if var == "k" { "k".into() } else { "R".into() }),
        ("l", l.to_string()),
        ("n", n.to_string()),
        ("lambda", num(lambda)),
        (fixed_name, num(scan.fixed)),
        ("range", format!("{}:{}", num(scan.interval.0), num(scan.interval.1))),
        ("step", num(scan.grid_step)),
    ]);
    body.extend(csv_body(
        &["kind", "position", "bracket_lo", "bracket_hi", "value"],
        scan_rows(&scan),
    )?);
    Ok(Emission {
        body,
        output,
        json: None,
        code: EXIT_OK,
    })
}

fn certify_options(
    s: &mut Settings,
    n: Option<u32>,
    step: Option<f64>,
    threshold: Option<f64>,
) -> CliResult<CertifyOptions> {
    let n = s.get("n", n, 3)?;
    let step = s.lookup("step", step)?;
    if let Some(st) = step {
        positive("step", st)?;
    }
    let margin_threshold = positive(
        "margin-threshold",
        s.get("margin-threshold", threshold, MARGIN_THRESHOLD)?,
    )?;
    check_dims(0, n)?;
    Ok(CertifyOptions {
        n,
        grid_step: step,
        margin_threshold,
    })
}

fn verdict_code(v: Verdict) -> i32 {
    match v {
        Verdict::Pass => EXIT_OK,
        Verdict::Fail => EXIT_FAIL_VERDICT,
    }
}

fn fmt_margin(m: Option<f64>) -> String {
    m.map_or_else(|| "unbounded".to_string(), num)
}

fn to_json<T: serde::Serialize>(v: &T) -> CliResult<String> {
    serde_json::to_string_pretty(v)
        .map(|mut s| {
            s.push('\n');
            s
        })
        .map_err(|e| CliError::Runtime(e.to_string()))
}

fn cmd_certify(a: CertifyArgs, s: &mut Settings) -> CliResult<Emission> {
    let lambda = s.require("lambda", a.lambda)?;
    let r = s.require("R", a.r)?;
    let x0 = s.get("x0-norm", a.x0_norm, 3.0)?;
    let l_max = s.get("l-max", a.l_max, 8)?;
    let lt_max = s.get("lt-max", a.lt_max, 8)?;
    let k_range = parse_range("k-range", &s.get("k-range", a.k_range, "0.1:20".to_string())?)?;
    let opts = certify_options(s, a.n, a.step, a.margin_threshold)?;
    let emit = s.lookup("emit-certificate", a.emit_certificate)?;
    let output = s.lookup("output", a.output)?;
    s.finish()?;
    let config = DoubleWellConfig::new(r, x0, lambda)?;
    let cert = certify_non_transparency(&RadialSolver::default(), config, l_max, lt_max, k_range, &opts)?;
    let mut body = metadata(&[("command", "certify".into())]);
    let verdict = if cert.verdict == Verdict::Pass { "pass" } else { "fail" };
    writeln!(body, "verdict={verdict}").expect("vec write");
    writeln!(body, "margin={}", fmt_margin(cert.margin)).expect("vec write");
    writeln!(body, "unit_zero_count={}", cert.unit_zero_count).expect("vec write");
    writeln!(body, "reason={}", cert.reason).expect("vec write");
    let json = match emit {
        Some(p) => Some((p, to_json(&cert)?)),
        None => None,
    };
    Ok(Emission {
        body,
        output,
        json,
        code: verdict_code(cert.verdict),
    })
}

fn cmd_suggest_r(a: SuggestArgs, s: &mut Settings) -> CliResult<Emission> {
    let lambdas = parse_list("lambdas", &s.get("lambdas", a.lambdas, "20,50".to_string())?)?;
    let x0 = s.get("x0-norm", a.x0_norm, 3.0)?;
    let r_range = match s.lookup::<String>("r-range", a.r_range)? {
        Some(t) => parse_range("r-range", &t)?,
        None => (0.1, 0.95 * (x0 - 1.0)),
    };
    let r_points = s.get("r-points", a.r_points, 21)?;
    let l_max = s.get("l-max", a.l_max, 8)?;
    let lt_max = s.get("lt-max", a.lt_max, 8)?;
    let k_range = parse_range("k-range", &s.get("k-range", a.k_range, "0.1:20".to_string())?)?;
    let opts = certify_options(s, a.n, a.step, a.margin_threshold)?;
    let emit = s.lookup("emit-certificate", a.emit_certificate)?;
    let output = s.lookup("output", a.output)?;
    s.finish()?;
    let sug = suggest_r(
        &RadialSolver::default(),
        &lambdas,
        x0,
        r_range,
        l_max,
        lt_max,
        k_range,
        r_points,
        &opts,
    )?;
    let mut body = metadata(&[("command", "suggest-r".into())]);
    let verdict = if sug.verdict == Verdict::Pass { "pass" } else { "fail" };
    writeln!(body, "r_best={}", sug.r_best).expect("vec write");
    writeln!(body, "margin={}", fmt_margin(sug.margin)).expect("vec write");
    writeln!(body, "verdict={verdict}").expect("vec write");
    let json = match emit {
        Some(p) => Some((p, to_json(&sug)?)),
        None => None,
    };
    Ok(Emission {
        body,
        output,
        json,
        code: verdict_code(sug.verdict),
    })
}

fn cmd_levinson(a: LevinsonArgs, s: &mut Settings) -> CliResult<Emission> {
    let l = s.get("l", a.l, 0)?;
    let n = s.get("n", a.n, 3)?;
    let lambda = nonnegative("lambda", s.require("lambda", a.lambda)?)?;
    let well = parse_well(&s.get("well", a.well, "chi:R=1".to_string())?)?;
    let kmin = positive("kmin", s.get("kmin", a.kmin, 1e-3)?)?;
    let output = s.lookup("output", a.output)?;
    s.finish()?;
    check_dims(l, n)?;
    let rep = levinson_check(&RadialSolver::default(), l, n, lambda, &well, kmin)?;
    let mut body = metadata(&[("command", "levinson".into()), ("well", well.to_string())]);
    let row = vec![
        rep.l.to_string(),
        rep.n.to_string(),
        num(rep.lambda),
        num(rep.k_min),
        num(rep.k_max),
        num(rep.winding),
        rep.n_bound.to_string(),
        rep.half_bound.to_string(),
        num(rep.residual),
        rep.pass.to_string(),
    ];
    body.extend(csv_body(
        &[
            "l",
            "n",
            "lambda",
            "k_min",
            "k_max",
            "winding",
            "n_bound",
            "half_bound",
            "residual",
            "pass",
        ],
        vec![row],
    )?);
    let code = if rep.pass { EXIT_OK } else { EXIT_FAIL_VERDICT };
    Ok(Emission {
        body,
        output,
        json: None,
        code,
    })
}

fn cmd_model_l2(a: ModelArgs, s: &mut Settings) -> CliResult<Emission> {
    let n = s.get("n-trunc", a.n_trunc, 2000)?;
    let kmin = s.get("kmin", a.kmin, -1.0)?;
    let kmax = s.get("kmax", a.kmax, 3.0)?;
    let points = s.get("points", a.points, 400)?;
    let eigs = s.get("eigs", a.eigs, 0)?;
    let output = s.lookup("output", a.output)?;
    s.finish()?;
    if n < 2 {
        return Err(CliError::Config(format!("--n-trunc must be >= 2, got {n}")));
    }
    if !(kmin.is_finite() && kmax.is_finite() && kmax > kmin) || points < 2 {
        return Err(CliError::Config("need kmin < kmax and at least two points".into()));
    }
    let grid = linear_grid(kmin, kmax, points);
    let flow = spectrum_flow(n, &grid)?;
    let slope = flow.top_slope.map_or_else(|| "none".to_string(), |f| num(f.slope));
    let mut body = metadata(&[
        ("command", "model-l2".into()),
        ("n_trunc", n.to_string()),
        ("kmin", num(kmin)),
        ("kmax", num(kmax)),
        ("points", points.to_string()),
        ("top_slope", slope),
        ("norm_sq_partial", num(crate::model_l2::partial_norm_sq(n))),
        ("min_gap", num(flow.min_gap)),
    ]);
    let keep = |i: usize| eigs == 0 || i < eigs || i + 1 == n;
    let mut rows = Vec::new();
    for (k, ev) in flow.k_grid.iter().zip(&flow.trajectories) {
        for (i, v) in ev.iter().enumerate().filter(|(i, _)| keep(*i)) {
            rows.push(vec![num(*k), i.to_string(), num(*v)]);
        }
    }
    body.extend(csv_body(&["k", "index", "eigenvalue"], rows)?);
    Ok(Emission {
        body,
        output,
        json: None,
        code: EXIT_OK,
    })
}

fn write_file(path: &Path, bytes: &[u8]) -> CliResult<()> {
    std::fs::write(path, bytes).map_err(|e| CliError::Runtime(format!("cannot write {}: {e}", path.display())))
}

fn deliver(e: Emission) -> CliResult<i32> {
    if let Some((path, text)) = &e.json {
        write_file(path, text.as_bytes())?;
    }
    match &e.output {
        Some(path) => write_file(path, &e.body)?,
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(&e.body)
                .and_then(|_| out.flush())
                .map_err(|err| CliError::Runtime(format!("cannot write to stdout: {err}")))?;
        }
    }
    Ok(e.code)
}

fn dispatch(cli: Cli) -> CliResult<i32> {
    let mut s = Settings::load(cli.config.as_deref())?;
    let emission = match cli.command {
        Command::PhaseShifts(a) => cmd_phase_shifts(a, &mut s)?,
        Command::WronskianScan(a) => cmd_wronskian_scan(a, &mut s)?,
        Command::Certify(a) => cmd_certify(a, &mut s)?,
        Command::SuggestR(a) => cmd_suggest_r(a, &mut s)?,
        Command::Levinson(a) => cmd_levinson(a, &mut s)?,
        Command::ModelL2(a) => cmd_model_l2(a, &mut s)?,
    };
    deliver(emission)
}

/// Parses `args` (including the program name), runs the command and
/// returns the process exit code. Diagnostics go to stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("partialwave: {e}");
            e.exit_code()
        }
    }
}
