//! `opcalc` command-line front end.
//!
//! Exit status: 0 when every verdict passes, 1 when some verdict fails,
//! 2 on usage or input errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use opcalc::besov::{
    besov_norm_1_inf_1, besov_norm_plane_dyadic, plane_pieces, LpFilterBank, PlaneDyadicConfig,
};
use opcalc::experiments::{
    audit_trials, build_scaled_counterexample, identity_trials, lipschitz_scan, measure_growth, parse_exponent,
    records_to_csv, regime_probe, scaled_counterexample, IdentityKind, IdentityRecord, RunConfig, ScanFamily, ScanRecord,
};
use opcalc::funcalc::{apply_f_ab, apply_f_uv, Function2D, TrigPoly2};
use opcalc::matcore::{matrix_from_json, matrix_to_json, spectral_decompose, SpectralMeasureJson, SpectrumKind};
use opcalc::toi::{BoundTheorem, SchattenReport};

#[derive(Parser)]
#[command(name = "opcalc", version, about = "Functions of noncommuting operator pairs: experiments and checks")]
struct Cli {
    /// JSON run configuration; flags override its fields.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Directory receiving output files in addition to standard output.
    #[arg(long, global = true, value_name = "DIR")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Hermitian,
    Unitary,
}

impl From<Kind> for SpectrumKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Hermitian => SpectrumKind::Hermitian,
            Kind::Unitary => SpectrumKind::Unitary,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Spectral measure of a self-adjoint or unitary matrix.
    Decompose {
        #[arg(long, value_name = "FILE")]
        matrix: PathBuf,
        #[arg(long, value_enum, default_value = "hermitian")]
        kind: Kind,
    },
    /// f(A, B) for a trigonometric polynomial f.
    Apply {
        #[arg(long, value_name = "FILE")]
        f: PathBuf,
        #[arg(long, value_name = "FILE")]
        a: PathBuf,
        #[arg(long, value_name = "FILE")]
        b: PathBuf,
        #[arg(long, value_enum, default_value = "hermitian")]
        kind: Kind,
    },
    /// Random checks of a perturbation identity: 7.1, 12.1 or 10.2.
    Verify {
        #[arg(value_parser = parse_identity)]
        identity: IdentityKind,
        #[arg(long)]
        dims: Option<usize>,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, value_parser = parse_seed)]
        seed: Option<u64>,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Counterexample growth law, and the scaled family for each epsilon.
    Counterexample {
        #[arg(long = "N", value_delimiter = ',')]
        n: Option<Vec<usize>>,
        #[arg(long, value_delimiter = ',', value_parser = parse_p, allow_negative_numbers = true)]
        p: Option<Vec<f64>>,
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        epsilon: Option<Vec<f64>>,
    },
    /// Lipschitz-ratio scan over (N, p).
    Scan {
        #[arg(long, value_parser = parse_family, default_value = "counterexample")]
        family: ScanFamily,
        #[arg(long = "N", value_delimiter = ',')]
        n: Option<Vec<usize>>,
        #[arg(long, value_delimiter = ',', value_parser = parse_p, allow_negative_numbers = true)]
        p: Option<Vec<f64>>,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, value_parser = parse_seed)]
        seed: Option<u64>,
    },
    /// B¹_{∞,1} norm of a torus polynomial or of a scaled counterexample
    /// function on the plane.
    Besov {
        #[arg(long, value_name = "FILE", required_unless_present = "counterexample", conflicts_with = "counterexample")]
        trigpoly: Option<PathBuf>,
        /// Size N of the counterexample function.
        #[arg(long, value_name = "N")]
        counterexample: Option<usize>,
        /// Dyadic scale 2^{-m} applied to the counterexample function.
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        m: i32,
        /// Print the Bernstein upper bound instead of the grid value.
        #[arg(long)]
        upper: bool,
    },
    /// Randomised Schatten-bound audits, or the regime probe.
    Audit {
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long)]
        dims: Option<usize>,
        #[arg(long, value_parser = parse_seed)]
        seed: Option<u64>,
        #[arg(long, value_delimiter = ',', value_parser = parse_theorem)]
        theorem: Option<Vec<BoundTheorem>>,
        /// Run the dual first-kind probe on the counterexample family.
        #[arg(long)]
        probe: bool,
        #[arg(long = "N", value_delimiter = ',')]
        n: Option<Vec<usize>>,
    },
}

fn parse_p(s: &str) -> Result<f64, String> {
    parse_exponent(s).ok_or_else(|| format!("'{s}' is not a positive exponent or 'inf'"))
}

fn parse_seed(s: &str) -> Result<u64, String> {
    let t = s.trim();
    let parsed = match t.strip_prefix("0x").or_else(|| t.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => t.parse(),
    };
    parsed.map_err(|e| format!("'{s}': {e}"))
}

fn parse_identity(s: &str) -> Result<IdentityKind, String> {
    s.parse().map_err(|e: opcalc::Error| e.to_string())
}

fn parse_family(s: &str) -> Result<ScanFamily, String> {
    s.parse().map_err(|e: opcalc::Error| e.to_string())
}

fn parse_theorem(s: &str) -> Result<BoundTheorem, String> {
    BoundTheorem::ALL
        .into_iter()
        .find(|t| t.name() == s)
        .ok_or_else(|| format!("unknown bound '{s}'"))
}

/// Error carrying the exit status it maps to.
struct Failure {
    message: String,
}

fn usage(flag: &str, detail: impl std::fmt::Display) -> Failure {
    Failure { message: format!("{flag}: {detail}") }
}

fn read(flag: &str, path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(flag, format!("{}: {e}", path.display())))
}

fn nonempty<T: Clone>(flag: &str, v: Option<Vec<T>>, fallback: &[T]) -> Result<Vec<T>, Failure> {
    let v = v.unwrap_or_else(|| fallback.to_vec());
    if v.is_empty() {
        return Err(usage(flag, "list must not be empty"));
    }
    Ok(v)
}

fn emit(out: Option<&Path>, name: &str, content: &str) -> Result<(), Failure> {
    print!("{content}");
    if let Some(dir) = out {
        fs::create_dir_all(dir).map_err(|e| usage("--out", format!("{}: {e}", dir.display())))?;
        let path = dir.join(name);
        fs::write(&path, content).map_err(|e| usage("--out", format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn schatten_csv(reports: &[SchattenReport]) -> String {
    let mut s = String::from(SchattenReport::CSV_HEADER);
    s.push('\n');
    for r in reports {
        s.push_str(&r.csv_row());
        s.push('\n');
    }
    s
}

/// Runs the command; `Ok(true)` when every verdict passed.
fn run(cli: Cli) -> Result<bool, Failure> {
    let cfg = match &cli.config {
        Some(path) => RunConfig::from_json(&read("--config", path)?).map_err(|e| usage("--config", e))?,
        None => RunConfig::default(),
    };
    let out_dir = cli.out.clone().or_else(|| cfg.out_dir.clone());
    let out = out_dir.as_deref();

    match cli.command {
        Command::Decompose { matrix, kind } => {
            let m = matrix_from_json(&read("--matrix", &matrix)?).map_err(|e| usage("--matrix", e))?;
            let sm = spectral_decompose(&m, kind.into()).map_err(|e| usage("--matrix", e))?;
            let json = SpectralMeasureJson::from_measure(&sm).and_then(|j| j.to_json()).map_err(|e| usage("decompose", e))?;
            emit(out, "decompose.json", &(json + "\n"))?;
            Ok(true)
        }
        Command::Apply { f, a, b, kind } => {
            let p = TrigPoly2::from_json(&read("--f", &f)?).map_err(|e| usage("--f", e))?;
            let ma = matrix_from_json(&read("--a", &a)?).map_err(|e| usage("--a", e))?;
            let mb = matrix_from_json(&read("--b", &b)?).map_err(|e| usage("--b", e))?;
            let kind: SpectrumKind = kind.into();
            let ea = spectral_decompose(&ma, kind).map_err(|e| usage("--a", e))?;
            let eb = spectral_decompose(&mb, kind).map_err(|e| usage("--b", e))?;
            let func = Function2D::TrigPoly(p);
            let value = match kind {
                SpectrumKind::Hermitian => apply_f_ab(&func, &ea, &eb),
                SpectrumKind::Unitary => apply_f_uv(&func, &ea, &eb),
            }
            .map_err(|e| usage("--f", e))?;
            let json = matrix_to_json(&value).map_err(|e| usage("apply", e))?;
            emit(out, "apply.json", &(json + "\n"))?;
            Ok(true)
        }
        Command::Verify { identity, dims, trials, seed, tol } => {
            let dims = dims.unwrap_or(cfg.dims);
            if dims == 0 {
                return Err(usage("--dims", "must be positive"));
            }
            let tol = tol.unwrap_or(cfg.tolerance);
            let records = identity_trials(identity, trials.unwrap_or(cfg.trials), dims, seed.unwrap_or(cfg.seed))
                .map_err(|e| usage("verify", e))?;
            let mut csv = String::from(IdentityRecord::CSV_HEADER);
            csv.push('\n');
            for r in &records {
                csv.push_str(&r.csv_row(identity, tol));
                csv.push('\n');
            }
            emit(out, &format!("verify-{identity}.csv"), &csv)?;
            let worst = records.iter().map(IdentityRecord::max_residual).fold(0.0, f64::max);
            eprintln!("identity {identity}: {} trials, max residual {worst:.3e}, tolerance {tol:.1e}", records.len());
            Ok(records.iter().all(|r| r.verdict(tol).passed()))
        }
        Command::Counterexample { n, p, epsilon } => {
            let ns = nonempty("--N", n, &cfg.n_list)?;
            if ns.iter().any(|&n| n < 2) {
                return Err(usage("--N", "every N must be at least 2"));
            }
            let ps = nonempty("--p", p, &cfg.p_list)?;
            let mut records = measure_growth(&ns, &ps).map_err(|e| usage("counterexample", e))?;
            if let Some(eps) = epsilon {
                if eps.iter().any(|&e| !(e > 0.0)) {
                    return Err(usage("--epsilon", "scales must be positive"));
                }
                let plane = PlaneDyadicConfig::default();
                for &n in &ns {
                    for &e in &eps {
                        let rep = scaled_counterexample(n, e, &ps, Some(&plane)).map_err(|e| usage("--epsilon", e))?;
                        records.extend(rep.records());
                    }
                }
            }
            emit(out, "counterexample.csv", &records_to_csv(&records))?;
            Ok(!records.iter().any(ScanRecord::failed))
        }
        Command::Scan { family, n, p, trials, seed } => {
            let ns = nonempty("--N", n, &cfg.n_list)?;
            let ps = nonempty("--p", p, &cfg.p_list)?;
            if family == ScanFamily::Counterexample && ns.iter().any(|&n| n < 2) {
                return Err(usage("--N", "every N must be at least 2"));
            }
            if ns.contains(&0) {
                return Err(usage("--N", "dimensions must be positive"));
            }
            let records = lipschitz_scan(family, &ps, &ns, trials.unwrap_or(cfg.trials), seed.unwrap_or(cfg.seed))
                .map_err(|e| usage("scan", e))?;
            emit(out, &format!("scan-{family}.csv"), &records_to_csv(&records))?;
            Ok(!records.iter().any(ScanRecord::failed))
        }
        Command::Besov { trigpoly, counterexample, m, upper } => {
            let bank = LpFilterBank::default();
            let value = match (trigpoly, counterexample) {
                (Some(path), _) => {
                    let p = TrigPoly2::from_json(&read("--trigpoly", &path)?).map_err(|e| usage("--trigpoly", e))?;
                    let norm = besov_norm_1_inf_1(&p, &bank);
                    if upper {
                        norm.upper
                    } else {
                        norm.value
                    }
                }
                (None, Some(n)) => {
                    let inst = build_scaled_counterexample(n, 2f64.powi(-m)).map_err(|e| usage("--counterexample", e))?;
                    let fam = plane_pieces(&Function2D::BandLimited(inst.f), &bank, &PlaneDyadicConfig::default())
                        .map_err(|e| usage("--counterexample", e))?;
                    besov_norm_plane_dyadic(&fam, 0)
                }
                (None, None) => return Err(usage("--trigpoly", "missing input")),
            };
            emit(out, "besov.txt", &format!("{value}\n"))?;
            Ok(true)
        }
        Command::Audit { trials, dims, seed, theorem, probe, n } => {
            if probe {
                let ns = nonempty("--N", n, &cfg.n_list)?;
                if ns.iter().any(|&n| n < 2) {
                    return Err(usage("--N", "every N must be at least 2"));
                }
                let records: Vec<ScanRecord> = regime_probe(&ns)
                    .map_err(|e| usage("audit", e))?
                    .into_iter()
                    .map(|r| ScanRecord {
                        family: "regime-probe".into(),
                        n: r.n,
                        p: 1.0,
                        epsilon: 1.0,
                        measured: r.measured,
                        predicted: None,
                        bound: Some(r.bound),
                        verdict: None,
                    })
                    .collect();
                emit(out, "audit-probe.csv", &records_to_csv(&records))?;
                return Ok(true);
            }
            let theorems = nonempty("--theorem", theorem, &BoundTheorem::ALL)?;
            let dims = dims.unwrap_or(cfg.dims);
            if dims < 2 {
                return Err(usage("--dims", "must be at least 2"));
            }
            let reports = audit_trials(&theorems, trials.unwrap_or(cfg.trials), dims, seed.unwrap_or(cfg.seed))
                .map_err(|e| usage("audit", e))?;
            emit(out, "audit.csv", &schatten_csv(&reports))?;
            Ok(reports.iter().all(|r| r.verdict.passed()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(2)
        }
    }
}
