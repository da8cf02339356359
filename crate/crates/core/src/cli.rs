//! Command-line front end. Flags override values from an optional TOML
//! config file; exit status is 0 on success, 1 on a failed check and 2 on a
//! configuration error.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;
use serde_json::json;

use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::latticeop::LatticeFunction;
use crate::polynomials::{family_json, PolynomialFamily};
use crate::qcore::{format_rational, ParamSet, DEFAULT_TOL};
use crate::scattering::{s_hat_extended, sorting_permutation, write_phase_csv};
use crate::spectral::{
    conjugated_h_matrix, orthogonality_report, write_quadrature_csv, AlcovePoint, AlcoveQuadrature, Propagator,
    QuadSpec,
};
use crate::verify::{run_suite, Suite, SuiteOptions};

#[derive(Debug, Parser)]
#[command(name = "rsmorse", version, about = "Lattice Ruijsenaars-Schneider model with Morse term")]
pub struct Cli {
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args, Default)]
pub struct CommonArgs {
    /// TOML file with any of the flag names below as keys (dashes as underscores).
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[arg(long, global = true)]
    pub n: Option<usize>,
    #[arg(long, global = true)]
    pub q: Option<String>,
    #[arg(long, global = true)]
    pub t: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub that0: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub that1: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub that2: Option<String>,
    #[arg(long, global = true)]
    pub max_weight: Option<u32>,
    /// Truncation tolerance for infinite products.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Gauss-Legendre nodes per axis.
    #[arg(long, global = true)]
    pub quad_nodes: Option<usize>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Coefficient tables of P_λ for all |λ| ≤ max-weight.
    Poly,
    /// Run a verification suite: pieri, qdiff, commute, nonneg, limits or balance.
    Verify {
        suite: String,
        /// Restrict `commute` to the pair of levels "l,m".
        #[arg(long)]
        levels: Option<String>,
        /// Evaluation points per label for `pieri`.
        #[arg(long, default_value_t = 3)]
        points: usize,
    },
    /// Gram matrix of P_λ against the norms by quadrature.
    Ortho {
        /// Allow n ≥ 3 tensor grids.
        #[arg(long)]
        force: bool,
    },
    /// Scattering matrix at random alcove points.
    Scatter {
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Unitary evolution of δ_λ under the conjugated Hamiltonian.
    Evolve {
        #[arg(long, default_value_t = 1.0)]
        time: f64,
        #[arg(long, default_value_t = 12)]
        cutoff: u32,
        #[arg(long, default_value_t = 4)]
        steps: usize,
        /// Initial site, e.g. "1,0".
        #[arg(long)]
        lambda: Option<String>,
    },
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    n: Option<usize>,
    q: Option<String>,
    t: Option<String>,
    that0: Option<String>,
    that1: Option<String>,
    that2: Option<String>,
    max_weight: Option<u32>,
    tol: Option<f64>,
    quad_nodes: Option<usize>,
    seed: Option<u64>,
    out: Option<PathBuf>,
    format: Option<Format>,
}

/// Fully resolved and validated settings.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub n: usize,
    pub params: ParamSet,
    pub max_weight: u32,
    pub tol: f64,
    pub quad_nodes: Option<usize>,
    pub seed: u64,
    pub out: Option<PathBuf>,
    pub format: Format,
}

impl RunConfig {
    pub fn resolve(args: &CommonArgs) -> Result<Self> {
        let file: FileConfig = match &args.config {
            Some(path) => toml::from_str(&fs::read_to_string(path)?)
                .map_err(|e| Error::Parse(format!("config {}: {e}", path.display())))?,
            None => FileConfig::default(),
        };
        let pick = |flag: &Option<String>, file: &Option<String>, default: &str| {
            flag.clone().or_else(|| file.clone()).unwrap_or_else(|| default.to_string())
        };
        let q = pick(&args.q, &file.q, "1/3");
        let t = pick(&args.t, &file.t, "1/2");
        let that = [
            pick(&args.that0, &file.that0, "1/2"),
            pick(&args.that1, &file.that1, "1/3"),
            pick(&args.that2, &file.that2, "1/5"),
        ];
        let params = ParamSet::parse(&q, &t, [&that[0], &that[1], &that[2]])?;
        let n = args.n.or(file.n).unwrap_or(1);
        if n == 0 {
            return Err(Error::Domain { name: "n", value: "0".into(), reason: "need at least one particle" });
        }
        let tol = args.tol.or(file.tol).unwrap_or(DEFAULT_TOL);
        if !(tol > 0.0 && tol < 1.0) {
            return Err(Error::Domain { name: "tol", value: tol.to_string(), reason: "must lie in (0, 1)" });
        }
        Ok(Self {
            n,
            params,
            max_weight: args.max_weight.or(file.max_weight).unwrap_or(3),
            tol,
            quad_nodes: args.quad_nodes.or(file.quad_nodes),
            seed: args.seed.or(file.seed).unwrap_or(1),
            out: args.out.clone().or(file.out),
            format: args.format.or(file.format).unwrap_or_default(),
        })
    }

    fn emit(&self, text: &str) -> Result<()> {
        match &self.out {
            Some(path) => fs::write(path, text)?,
            None => io::stdout().write_all(text.as_bytes())?,
        }
        Ok(())
    }
}

fn is_config_error(e: &Error) -> bool {
    matches!(e, Error::Domain { .. } | Error::Parse(_) | Error::Degenerate(_) | Error::Io(_))
}

fn parse_partition(s: &str, n: usize) -> Result<Partition> {
    let parts: Vec<u32> = s
        .split(',')
        .map(|p| p.trim().parse::<u32>().map_err(|_| Error::Parse(format!("partition {s:?}"))))
        .collect::<Result<_>>()?;
    if parts.len() != n {
        return Err(Error::Parse(format!("partition {s:?} needs {n} parts")));
    }
    Partition::new(parts).map_err(|_| Error::Parse(format!("{s:?} is not a partition")))
}

fn json_text(v: &serde_json::Value) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

/// Runs a parsed command line and returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    let cfg = match RunConfig::resolve(&cli.common) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("configuration error: {e}");
            return 2;
        }
    };
    match dispatch(&cli.command, &cfg) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            if is_config_error(&e) {
                2
            } else {
                1
            }
        }
    }
}

/// Parses `std::env::args` and runs.
pub fn main_from_env() -> i32 {
    match Cli::try_parse() {
        Ok(cli) => run(cli),
        Err(e) => {
            let _ = e.print();
            if e.use_stderr() {
                2
            } else {
                0
            }
        }
    }
}

fn dispatch(cmd: &Command, cfg: &RunConfig) -> Result<bool> {
    match cmd {
        Command::Poly => cmd_poly(cfg),
        Command::Verify { suite, levels, points } => cmd_verify(cfg, suite, levels.as_deref(), *points),
        Command::Ortho { force } => cmd_ortho(cfg, *force),
        Command::Scatter { samples } => cmd_scatter(cfg, *samples),
        Command::Evolve { time, cutoff, steps, lambda } => cmd_evolve(cfg, *time, *cutoff, *steps, lambda.as_deref()),
    }
}

pub fn cmd_poly(cfg: &RunConfig) -> Result<bool> {
    let family = PolynomialFamily::with_seed(cfg.n, cfg.max_weight, &cfg.params, cfg.seed)?;
    let text = match cfg.format {
        Format::Json => json_text(&family_json(&family))?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["lambda", "mu", "value"])?;
            for p in family.iter() {
                for (mu, c) in p.polynomial().coeffs() {
                    w.write_record([p.label().to_string(), mu.to_string(), format_rational(c)])?;
                }
            }
            String::from_utf8_lossy(&w.into_inner().map_err(|e| Error::Io(e.into_error()))?).into_owned()
        }
    };
    cfg.emit(&text)?;
    Ok(true)
}

pub fn cmd_verify(cfg: &RunConfig, suite: &str, levels: Option<&str>, points: usize) -> Result<bool> {
    let suite: Suite = suite.parse()?;
    let levels = levels
        .map(|s| {
            let v: Vec<usize> = s.split(',').filter_map(|x| x.trim().parse().ok()).collect();
            match v.as_slice() {
                [l, m] => Ok((*l, *m)),
                _ => Err(Error::Parse(format!("levels {s:?}, expected \"l,m\""))),
            }
        })
        .transpose()?;
    let opts = SuiteOptions { n: cfg.n, max_weight: cfg.max_weight, seed: cfg.seed, levels, points };
    let report = run_suite(suite, &opts, &cfg.params)?;
    let text = match cfg.format {
        Format::Json => {
            let mut v = serde_json::to_value(&report)?;
            v["params"] = serde_json::to_value(cfg.params.record())?;
            v["all_passed"] = json!(report.all_passed());
            json_text(&v)?
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for c in &report.cases {
                w.serialize(c)?;
            }
            String::from_utf8_lossy(&w.into_inner().map_err(|e| Error::Io(e.into_error()))?).into_owned()
        }
    };
    cfg.emit(&text)?;
    Ok(report.all_passed())
}

/// Acceptance thresholds on the relative quadrature error.
fn ortho_threshold(n: usize) -> f64 {
    if n == 1 {
        1e-8
    } else {
        1e-6
    }
}

pub fn cmd_ortho(cfg: &RunConfig, force: bool) -> Result<bool> {
    let mut spec = QuadSpec::default_for(cfg.n);
    spec.allow_n3 = force;
    if let Some(k) = cfg.quad_nodes {
        spec.nodes = k;
    }
    let family = PolynomialFamily::with_seed(cfg.n, cfg.max_weight, &cfg.params, cfg.seed)?;
    let quad = AlcoveQuadrature::new(cfg.n, spec, &cfg.params.to_float(), cfg.tol)?;
    let labels: Vec<Partition> = family.iter().map(|p| p.label().clone()).collect();
    let rows = orthogonality_report(&family, &labels, &quad, cfg.tol)?;
    let worst = rows.iter().map(|r| r.rel_err).fold(0.0, f64::max);
    let threshold = ortho_threshold(cfg.n);
    let passed = worst <= threshold;
    if !passed {
        eprintln!("accuracy warning: max rel_err {worst:.3e} exceeds {threshold:.0e}");
    }
    let text = match cfg.format {
        Format::Csv => {
            let mut buf = Vec::new();
            write_quadrature_csv(&rows, &mut buf)?;
            String::from_utf8_lossy(&buf).into_owned()
        }
        Format::Json => json_text(&json!({
            "n": cfg.n,
            "params": cfg.params.record(),
            "nodes_per_axis": spec.nodes,
            "max_rel_err": worst,
            "threshold": threshold,
            "passed": passed,
            "rows": rows,
        }))?,
    };
    cfg.emit(&text)?;
    Ok(passed)
}

fn random_alcove_point<R: Rng>(rng: &mut R, n: usize) -> Vec<f64> {
    let mut xi: Vec<f64> = (0..n).map(|_| rng.gen_range(1e-3..std::f64::consts::PI - 1e-3)).collect();
    xi.sort_by(|a, b| b.total_cmp(a));
    xi
}

pub fn cmd_scatter(cfg: &RunConfig, samples: usize) -> Result<bool> {
    let fp = cfg.params.to_float();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let points: Vec<Vec<f64>> = (0..samples).map(|_| random_alcove_point(&mut rng, cfg.n)).collect();
    let mut worst: f64 = 0.0;
    let mut entries = Vec::new();
    for xi in &points {
        let s = s_hat_extended(xi, &fp, cfg.tol)?;
        let dev = (s.norm() - 1.0).abs();
        worst = worst.max(dev);
        let regular = AlcovePoint::new(xi.clone()).map(|p| sorting_permutation(&p).regular).unwrap_or(false);
        entries.push(json!({"xi": xi, "re": s.re, "im": s.im, "arg": s.arg(), "modulus_err": dev, "regular": regular}));
    }
    let passed = worst <= 1e-12;
    let text = match cfg.format {
        Format::Csv => {
            let mut buf = Vec::new();
            write_phase_csv(&points, &fp, cfg.tol, &mut buf)?;
            String::from_utf8_lossy(&buf).into_owned()
        }
        Format::Json => json_text(&json!({
            "n": cfg.n,
            "params": cfg.params.record(),
            "seed": cfg.seed,
            "max_modulus_err": worst,
            "passed": passed,
            "samples": entries,
        }))?,
    };
    cfg.emit(&text)?;
    Ok(passed)
}

pub fn cmd_evolve(cfg: &RunConfig, time: f64, cutoff: u32, steps: usize, lambda: Option<&str>) -> Result<bool> {
    let start = match lambda {
        Some(s) => parse_partition(s, cfg.n)?,
        None => Partition::zero(cfg.n),
    };
    let initial = LatticeFunction::from_entries(cfg.n, [(start, Complex64::new(1.0, 0.0))])?;
    let prop = Propagator::new(conjugated_h_matrix(1, cfg.n, cutoff, &cfg.params)?);
    let times: Vec<f64> = (0..=steps).map(|k| time * k as f64 / steps.max(1) as f64).collect();
    let series = prop.snapshots_json(&initial, &times)?;
    let unitary = series
        .as_array()
        .map(|a| a.iter().all(|s| (s["norm"].as_f64().unwrap_or(f64::NAN) - 1.0).abs() <= 1e-10))
        .unwrap_or(false);
    let text = match cfg.format {
        Format::Json => json_text(&json!({
            "n": cfg.n,
            "params": cfg.params.record(),
            "cutoff": cutoff,
            "series": series,
        }))?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["time", "lambda", "re", "im"])?;
            for &t in &times {
                let e = prop.evolve(&initial, t)?;
                for (lam, x) in e.state.iter() {
                    w.write_record([t.to_string(), lam.to_string(), x.re.to_string(), x.im.to_string()])?;
                }
            }
            String::from_utf8_lossy(&w.into_inner().map_err(|e| Error::Io(e.into_error()))?).into_owned()
        }
    };
    cfg.emit(&text)?;
    Ok(unitary)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("rsmorse").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn flags_after_subcommand() {
        let cli = parse(&["poly", "--n", "2", "--max-weight", "1"]);
        let cfg = RunConfig::resolve(&cli.common).unwrap();
        assert_eq!((cfg.n, cfg.max_weight), (2, 1));
    }

    #[test]
    fn config_file_and_override() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("run.toml");
        fs::write(&path, "n = 2\nq = \"1/4\"\nmax_weight = 2\n").unwrap();
        let p = path.to_str().unwrap();
        let cfg = RunConfig::resolve(&parse(&["--config", p, "--max-weight", "5", "poly"]).common).unwrap();
        assert_eq!((cfg.n, cfg.max_weight), (2, 5));
        assert_eq!(cfg.params.q(), &crate::qcore::rat(1, 4));
        fs::write(&path, "bogus = 1\n").unwrap();
        assert!(RunConfig::resolve(&parse(&["--config", p, "poly"]).common).is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(parse(&["--q", "3/2", "poly"])), 2);
        assert_eq!(run(parse(&["verify", "nosuch"])), 2);
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().join("r.json");
        let o = out.to_str().unwrap();
        assert_eq!(run(parse(&["verify", "nonneg", "--n", "2", "--max-weight", "3", "--out", o])), 0);
        let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
        assert_eq!(v["all_passed"], true);
    }

    #[test]
    fn poly_tables_are_deterministic() {
        let dir = tempfile::tempdir().unwrap();
        let a = dir.path().join("a.json");
        let b = dir.path().join("b.json");
        for path in [&a, &b] {
            let p = path.to_str().unwrap();
            assert_eq!(run(parse(&["poly", "--n", "2", "--max-weight", "3", "--seed", "9", "--out", p])), 0);
        }
        let text = fs::read_to_string(&a).unwrap();
        assert_eq!(text, fs::read_to_string(&b).unwrap());
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 6);
        let zero = dir.path().join("z.json");
        assert_eq!(run(parse(&["poly", "--n", "1", "--max-weight", "0", "--out", zero.to_str().unwrap()])), 0);
        let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&zero).unwrap()).unwrap();
        assert_eq!(v[0]["coeffs"][0]["value"], "1");
    }

    #[test]
    fn evolve_at_time_zero_echoes() {
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().join("e.json");
        let code = run(parse(&["evolve", "--time", "0", "--steps", "1", "--cutoff", "6", "--lambda", "2", "--out", out.to_str().unwrap()]));
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
        for site in v["series"][0]["state"].as_array().unwrap() {
            let target = if site["lambda"] == json!([2]) { 1.0 } else { 0.0 };
            assert!((site["re"].as_f64().unwrap() - target).abs() < 1e-12);
            assert!(site["im"].as_f64().unwrap().abs() < 1e-12);
        }
    }
}
