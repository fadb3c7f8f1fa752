//! Command-line front end: family files in, check reports out.

pub mod commands;
pub mod json;
pub mod report;
pub mod verify;

use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use frobenius_masa::decide::DecisionConfig;

use json::FamilyFile;
use report::{Record, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "fmasa", version, about = "Exact checks on commuting matrix algebras and their semidirect products")]
pub struct Cli {
    /// Seed for every randomized fallback.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Largest matrix given to the symbolic determinant.
    #[arg(long = "budget-dim", global = true, default_value_t = 8)]
    pub budget_dim: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimension and basis of the unital algebra the generators span.
    Closure { file: String },
    /// Commuting generators, unital algebra, MASA.
    Check { file: String },
    /// Open-orbit witness or a zero-polynomial certificate.
    Orbit { file: String },
    /// Structure constants of B ⋉ Q^n and the Jacobi verdict.
    Build { file: String },
    /// Frobenius functional search and the left-symmetric product identities.
    Frobenius { file: String },
    /// Class label for K[M], otherwise the invariant bundle.
    Classify { file: String },
    /// Derivation dimension, directly and via the normalizer.
    Derive { file: String },
    /// Print the family file of a corpus entry.
    Corpus { name: String, params: Vec<usize> },
    /// Self-check of every corpus entry.
    Suite,
    /// Recheck a JSON report against the family file it came from.
    Verify { report: String, file: Option<String> },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Closure { .. } => "closure",
            Command::Check { .. } => "check",
            Command::Orbit { .. } => "orbit",
            Command::Build { .. } => "build",
            Command::Frobenius { .. } => "frobenius",
            Command::Classify { .. } => "classify",
            Command::Derive { .. } => "derive",
            Command::Corpus { .. } => "corpus",
            Command::Suite => "suite",
            Command::Verify { .. } => "verify",
        }
    }
}

/// Records of a file or suite command. Errors are input errors.
pub fn records_for(command: &str, family: Option<&FamilyFile>, cfg: &DecisionConfig) -> frobenius_masa::Result<Vec<Record>> {
    use frobenius_masa::Error;
    let need = || family.ok_or_else(|| Error::Inapplicable(format!("{command} needs a family file")));
    match command {
        "closure" => commands::closure_cmd(need()?),
        "check" => commands::check_cmd(need()?),
        "orbit" => commands::orbit_cmd(need()?, cfg),
        "build" => commands::build_cmd(need()?),
        "frobenius" => commands::frobenius_cmd(need()?, cfg),
        "classify" => commands::classify_cmd(need()?),
        "derive" => commands::derive_cmd(need()?),
        "suite" => commands::suite_cmd(cfg),
        other => Err(Error::Inapplicable(format!("unknown command {other}"))),
    }
}

fn read_input(path: &str, stdin: &mut dyn Read) -> Result<String, String> {
    let mut text = String::new();
    if path == "-" {
        stdin.read_to_string(&mut text).map_err(|e| format!("stdin: {e}"))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
    }
    Ok(text)
}

fn load_family(path: &str, stdin: &mut dyn Read) -> Result<FamilyFile, String> {
    let text = read_input(path, stdin)?;
    FamilyFile::parse(&text).map_err(|e| format!("{path}: {e}"))
}

/// Runs one invocation. `args` includes the program name.
pub fn run(args: &[String], stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() { write!(stderr, "{e}") } else { write!(stdout, "{e}") };
            return code;
        }
    };
    let cfg = DecisionConfig { budget_dim: cli.budget_dim, seed: cli.seed, ..DecisionConfig::default() };
    match execute(&cli, &cfg, stdin, stdout) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
    }
}

fn execute(cli: &Cli, cfg: &DecisionConfig, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<i32, String> {
    let name = cli.command.name();
    let report = match &cli.command {
        Command::Corpus { name, params } => {
            let file = commands::corpus_cmd(name, params).map_err(|e| e.to_string())?;
            let text = serde_json::to_string_pretty(&file).expect("family file serializes");
            writeln!(stdout, "{text}").map_err(|e| e.to_string())?;
            return Ok(0);
        }
        Command::Verify { report, file } => {
            let text = read_input(report, stdin)?;
            let parsed: Report = serde_json::from_str(&text).map_err(|e| format!("{report}: {e}"))?;
            let family = match file {
                Some(p) => Some(load_family(p, stdin)?),
                None => None,
            };
            let verdicts = verify::reverify(&parsed, family.as_ref(), cfg).map_err(|e| e.to_string())?;
            let records = parsed
                .records
                .iter()
                .zip(verdicts)
                .map(|(r, v)| {
                    let mut r = r.clone();
                    if r.verdict != v {
                        r.certificate = report::Certificate::Message { text: format!("recorded {}, recomputed {}", r.verdict.as_str(), v.as_str()) };
                        r.verdict = report::Verdict::Fail;
                    }
                    r
                })
                .collect();
            Report { command: "verify".into(), seed: cfg.seed, records }
        }
        Command::Suite => {
            let records = records_for(name, None, cfg).map_err(|e| e.to_string())?;
            Report { command: name.into(), seed: cfg.seed, records }
        }
        Command::Closure { file }
        | Command::Check { file }
        | Command::Orbit { file }
        | Command::Build { file }
        | Command::Frobenius { file }
        | Command::Classify { file }
        | Command::Derive { file } => {
            let family = load_family(file, stdin)?;
            let records = match records_for(name, Some(&family), cfg) {
                Ok(r) => r,
                Err(e) if e.is_inapplicable() => vec![Record::new(
                    name,
                    report::Verdict::Inapplicable,
                    "precondition",
                    report::Certificate::Message { text: e.to_string() },
                )],
                Err(e) => return Err(e.to_string()),
            };
            Report { command: name.into(), seed: cfg.seed, records }
        }
    };
    let out = match cli.format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
    };
    stdout.write_all(out.as_bytes()).map_err(|e| e.to_string())?;
    Ok(report.exit_code())
}
