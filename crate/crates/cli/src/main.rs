use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use blobtensor::report::{
    self, sweep, Adjointness, AdjointnessSummary, Checked, Duality, Grid, Localize, Relations, Report, Restrict,
};
use blobtensor::BlobError;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

#[derive(Parser, Debug)]
#[command(name = "blobtensor", version, about = "Exact checks for the tensor-space blob algebra action")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Hecke, blob and tensor-operator relations on every basis word.
    VerifyRelations(Opts),
    /// Adjointness of the localization on M_n(lambda) and its dual.
    Adjointness(Opts),
    /// eM_n(lambda) against M_{n-2}(lambda).
    Localize(Opts),
    /// Restriction sequence, central element and splitting.
    Restrict(Opts),
    /// Multiplicity triangle of the eigenvalue lambda2 of X up to --n.
    Triangle(Opts),
    /// Two-column Specht modules against M_n(lambda).
    Duality(Opts),
    /// M_2(0) against the printed matrices.
    Smallcase(Opts),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Backend {
    Generic,
    Cyclotomic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct Opts {
    /// Tensor length, `k` or an inclusive range `a..b`.
    #[arg(long)]
    n: Option<String>,
    /// Weight, an integer or `all`.
    #[arg(long, default_value = "all", allow_hyphen_values = true)]
    lambda: String,
    /// Root orders, comma separated; 0 is generic q.
    #[arg(long, value_delimiter = ',')]
    l: Vec<u32>,
    /// Values of m, comma separated; default is every valid residue.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    m: Vec<i64>,
    #[arg(long, value_enum)]
    backend: Option<Backend>,
    /// Output file; stdout if absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Blob(#[from] BlobError),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

fn parse_n(s: &str) -> Result<Vec<usize>, CliError> {
    let bad = || CliError::Config(format!("--n expects k or a..b, got {s:?}"));
    if let Some((a, b)) = s.split_once("..") {
        let a: usize = a.trim().parse().map_err(|_| bad())?;
        let b: usize = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
        Ok((a..=b).collect())
    } else {
        Ok(vec![s.trim().parse().map_err(|_| bad())?])
    }
}

impl Opts {
    fn grid(&self, default_n: &str) -> Result<Grid, CliError> {
        let ns = parse_n(self.n.as_deref().unwrap_or(default_n))?;
        let lambdas = match self.lambda.trim() {
            "all" => None,
            s => Some(vec![s
                .parse::<i64>()
                .map_err(|_| CliError::Config(format!("--lambda expects an integer or all, got {s:?}")))?]),
        };
        if let Some(&[lambda]) = lambdas.as_deref() {
            let fits = |n: &usize| lambda.unsigned_abs() <= *n as u64 && (*n as i64 + lambda) % 2 == 0;
            if !ns.iter().any(fits) {
                return Err(CliError::Config(format!("lambda {lambda} is not a weight for any n in {ns:?}")));
            }
        }
        let ls = match (self.backend, self.l.is_empty()) {
            (None, true) | (Some(Backend::Generic), true) => vec![0],
            (Some(Backend::Cyclotomic), true) => vec![3, 5, 7],
            (None, false) => self.l.clone(),
            (Some(Backend::Generic), false) => {
                if self.l.iter().any(|&l| l != 0) {
                    return Err(CliError::Config("--backend generic only takes --l 0".into()));
                }
                self.l.clone()
            }
            (Some(Backend::Cyclotomic), false) => {
                if self.l.contains(&0) {
                    return Err(CliError::Config("--backend cyclotomic needs --l > 0".into()));
                }
                self.l.clone()
            }
        };
        Ok(Grid {
            ls,
            ms: self.m.clone(),
            ns,
            lambdas,
        })
    }
}

/// Serialized output plus whether every check passed.
struct Output {
    json: serde_json::Value,
    csv: String,
    passed: bool,
}

fn csv_string(header: &[&str], rows: Vec<Vec<String>>) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(&r)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn b(x: bool) -> String {
    x.to_string()
}

fn opt(x: Option<bool>) -> String {
    x.map_or(String::new(), |v| v.to_string())
}

fn log_skips<T>(rep: &Report<T>) {
    for s in &rep.skipped {
        log::warn!("skipped l={} m={}: {}", s.l, s.m, s.reason);
    }
}

fn envelope<T: Serialize + Checked>(command: &str, rep: &Report<T>, extra: Option<serde_json::Value>) -> serde_json::Value {
    let mut v = serde_json::json!({
        "command": command,
        "passed": rep.passed(),
        "records": rep.records,
        "skipped": rep.skipped,
    });
    if let Some(e) = extra {
        v["summary"] = e;
    }
    v
}

fn run(cmd: &Command) -> Result<Output, CliError> {
    Ok(match cmd {
        Command::VerifyRelations(o) => {
            let rep = sweep(&o.grid("2..5")?, &Relations)?;
            log_skips(&rep);
            let rows = rep
                .records
                .iter()
                .map(|r| {
                    vec![
                        r.n.to_string(),
                        r.l.to_string(),
                        r.m.to_string(),
                        r.checks.to_string(),
                        b(r.passed),
                        r.failures.first().map_or(String::new(), |f| f.relation.clone()),
                    ]
                })
                .collect();
            Output {
                csv: csv_string(&["n", "l", "m", "checks", "passed", "first_failure"], rows)?,
                passed: rep.passed(),
                json: envelope("verify-relations", &rep, None),
            }
        }
        Command::Localize(o) => {
            let rep = sweep(&o.grid("3..6")?, &Localize)?;
            log_skips(&rep);
            let rows = rep
                .records
                .iter()
                .map(|r| {
                    vec![
                        r.n.to_string(),
                        r.l.to_string(),
                        r.m.to_string(),
                        r.lambda.to_string(),
                        r.e_dim.to_string(),
                        r.expected_dim.to_string(),
                        opt(r.injective),
                        opt(r.onto_e_m),
                        b(r.non_intertwining.is_empty()),
                        b(r.passed()),
                    ]
                })
                .collect();
            Output {
                csv: csv_string(
                    &["n", "l", "m", "lambda", "e_dim", "expected_dim", "injective", "onto_e_m", "intertwines", "passed"],
                    rows,
                )?,
                passed: rep.passed(),
                json: envelope("localize", &rep, None),
            }
        }
        Command::Adjointness(o) => {
            let rep = sweep(&o.grid("3..6")?, &Adjointness)?;
            log_skips(&rep);
            let summary = AdjointnessSummary::new(&rep.records);
            let consistent = rep.records.is_empty() || summary.dual_answer.is_some();
            if !consistent {
                log::warn!("dual verdicts follow neither n1 = m nor n1 != m across the grid");
            }
            let rows = rep
                .records
                .iter()
                .map(|r| {
                    let v = &r.verdict;
                    let d = &r.dual;
                    vec![
                        v.n.to_string(),
                        v.l.to_string(),
                        v.m.to_string(),
                        v.lambda.to_string(),
                        v.n1.to_string(),
                        v.n2.to_string(),
                        v.dim.to_string(),
                        v.codim.to_string(),
                        b(v.surjective),
                        b(v.closure_surjective),
                        b(v.injective),
                        b(v.special_nonzero),
                        b(v.predicted_iso),
                        b(v.agree),
                        b(d.surjective),
                        b(d.injective),
                        b(d.n1_congruent_m),
                        b(d.n1_congruent_neg_m),
                        b(r.passed()),
                    ]
                })
                .collect();
            Output {
                csv: csv_string(
                    &[
                        "n",
                        "l",
                        "m",
                        "lambda",
                        "n1",
                        "n2",
                        "dim",
                        "codim",
                        "surjective",
                        "closure_surjective",
                        "injective",
                        "special_nonzero",
                        "n2_not_congruent_m",
                        "agree",
                        "dual_surjective",
                        "dual_injective",
                        "dual_n1_congruent_m",
                        "dual_n1_congruent_neg_m",
                        "passed",
                    ],
                    rows,
                )?,
                passed: rep.passed() && consistent,
                json: {
                    let mut v = envelope("adjointness", &rep, Some(serde_json::to_value(&summary)?));
                    v["passed"] = (rep.passed() && consistent).into();
                    v
                },
            }
        }
        Command::Restrict(o) => {
            let rep = sweep(&o.grid("3..6")?, &Restrict)?;
            log_skips(&rep);
            let rows = rep
                .records
                .iter()
                .map(|r| {
                    let s = &r.splitting;
                    vec![
                        r.n.to_string(),
                        r.l.to_string(),
                        r.m.to_string(),
                        r.lambda.to_string(),
                        b(r.sub_invariant),
                        b(r.sub_intertwines),
                        b(r.quotient_intertwines),
                        b(r.central.central),
                        b(r.central.matches),
                        b(s.wall),
                        serde_json::to_value(s.split).map_or(String::new(), |v| v.to_string().trim_matches('"').to_string()),
                        s.eigdims.0.to_string(),
                        s.eigdims.1.to_string(),
                        b(r.passed()),
                    ]
                })
                .collect();
            Output {
                csv: csv_string(
                    &[
                        "n",
                        "l",
                        "m",
                        "lambda",
                        "sub_invariant",
                        "sub_intertwines",
                        "quotient_intertwines",
                        "z_central",
                        "z_scalar_matches",
                        "wall",
                        "split",
                        "eigdim_sub",
                        "eigdim_quotient",
                        "passed",
                    ],
                    rows,
                )?,
                passed: rep.passed(),
                json: envelope("restrict", &rep, None),
            }
        }
        Command::Duality(o) => {
            let rep = sweep(&o.grid("1..6")?, &Duality)?;
            log_skips(&rep);
            let rows = rep
                .records
                .iter()
                .map(|r| {
                    let d = &r.report;
                    vec![
                        r.n.to_string(),
                        d.l.to_string(),
                        d.m.to_string(),
                        r.lambda.to_string(),
                        d.n1.to_string(),
                        d.n2.to_string(),
                        b(d.phi_bijective),
                        b(d.non_intertwining.is_empty()),
                        b(d.x_quadratic),
                        b(d.tableau_eigen.iter().all(|&x| x)),
                        b(r.row_word_eigen),
                        b(d.relations.passed()),
                        b(r.passed()),
                    ]
                })
                .collect();
            Output {
                csv: csv_string(
                    &[
                        "n",
                        "l",
                        "m",
                        "lambda",
                        "n1",
                        "n2",
                        "phi_bijective",
                        "intertwines",
                        "x_quadratic",
                        "tableau_eigen",
                        "row_word_eigen",
                        "relations",
                        "passed",
                    ],
                    rows,
                )?,
                passed: rep.passed(),
                json: envelope("duality", &rep, None),
            }
        }
        Command::Triangle(o) => {
            let grid = o.grid("4")?;
            let n_max = grid.ns.iter().copied().max().unwrap_or(0);
            let rep = report::triangle(&grid, n_max)?;
            log_skips(&rep);
            let mut csv = String::new();
            for (i, r) in rep.records.iter().enumerate() {
                if rep.records.len() > 1 {
                    if i > 0 {
                        csv.push('\n');
                    }
                    csv.push_str(&format!("# l={} m={}\n", r.l, r.m));
                }
                csv.push_str(&r.table.to_csv());
            }
            Output {
                csv,
                passed: rep.passed(),
                json: envelope("triangle", &rep, None),
            }
        }
        Command::Smallcase(o) => {
            let rep = report::smallcase(&o.grid("2")?)?;
            log_skips(&rep);
            let rows = rep
                .records
                .iter()
                .map(|r| {
                    let s = &r.report;
                    vec![
                        s.l.to_string(),
                        s.m.to_string(),
                        b(s.u1_matches),
                        b(s.u0_matches),
                        b(s.x_matches),
                        s.coefficient.clone(),
                        b(s.coefficient_matches),
                        b(s.coefficient_nonzero),
                        b(r.passed()),
                    ]
                })
                .collect();
            Output {
                csv: csv_string(
                    &[
                        "l",
                        "m",
                        "u1_matches",
                        "u0_matches",
                        "x_matches",
                        "coefficient",
                        "coefficient_matches",
                        "coefficient_nonzero",
                        "passed",
                    ],
                    rows,
                )?,
                passed: rep.passed(),
                json: envelope("smallcase", &rep, None),
            }
        }
    })
}

fn opts(cmd: &Command) -> &Opts {
    match cmd {
        Command::VerifyRelations(o)
        | Command::Adjointness(o)
        | Command::Localize(o)
        | Command::Restrict(o)
        | Command::Triangle(o)
        | Command::Duality(o)
        | Command::Smallcase(o) => o,
    }
}

fn emit(o: &Opts, out: &Output) -> Result<(), CliError> {
    let text = match o.format {
        Format::Json => serde_json::to_string_pretty(&out.json)? + "\n",
        Format::Csv => out.csv.clone(),
    };
    match &o.out {
        Some(p) => fs::write(p, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info"))
        .format_timestamp(None)
        .init();
    let cli = Cli::parse();
    let o = opts(&cli.command);
    let result = run(&cli.command).and_then(|out| emit(o, &out).map(|_| out.passed));
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            log::error!("verification failures recorded in the report");
            ExitCode::from(1)
        }
        Err(e) => {
            log::error!("{e}");
            ExitCode::from(2)
        }
    }
}
