//! The `hexcactus` command-line front end.
//!
//! Every invocation writes a single JSON record to stdout:
//! `{"command", "inputs", "status", "results" | "error"}`. With
//! `--format csv` the results are written as CSV instead, and `graph` also
//! accepts `--format dot`. Exit codes: 0 success, 1 usage error, 2
//! computation error.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::asymptotics::asymptotic_report;
use crate::count::{count, Engine, IndexKind};
use crate::error::Error;
use crate::expectation::{expect_states, gf_closed_form, special_case_gf, ProbabilityTriple, RationalGF};
use crate::graph::{build_aux, build_chain, to_dot, AttachmentSequence, AttachmentType, AuxVariant};
use crate::random_model::monte_carlo;
use crate::verify::run_checks;

#[derive(Parser, Debug)]
#[command(name = "hexcactus", version, about = "Exact indices of random hexagonal cactus chains")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Dot,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    Hosoya,
    Ms,
}

impl From<KindArg> for IndexKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Hosoya => IndexKind::Hosoya,
            KindArg::Ms => IndexKind::MerrifieldSimmons,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CaseArg {
    Ortho,
    Meta,
    Para,
}

impl From<CaseArg> for AttachmentType {
    fn from(c: CaseArg) -> Self {
        match c {
            CaseArg::Ortho => AttachmentType::Ortho,
            CaseArg::Meta => AttachmentType::Meta,
            CaseArg::Para => AttachmentType::Para,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum EngineArg {
    Chain,
    Brute,
    Recursive,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Self {
        match e {
            EngineArg::Chain => Engine::Chain,
            EngineArg::Brute => Engine::Brute,
            EngineArg::Recursive => Engine::Recursive,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum AuxArg {
    Prime,
    Tilde,
    Hat,
}

impl From<AuxArg> for AuxVariant {
    fn from(a: AuxArg) -> Self {
        match a {
            AuxArg::Prime => AuxVariant::Prime,
            AuxArg::Tilde => AuxVariant::Tilde,
            AuxArg::Hat => AuxVariant::Hat,
        }
    }
}

#[derive(Args, Debug)]
struct KindOpt {
    /// Which index to compute.
    #[arg(long, value_enum)]
    kind: KindArg,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expected index (and optionally the pendant-path families) for n = 0..=N.
    Expect {
        #[command(flatten)]
        kind: KindOpt,
        #[arg(long)]
        n: usize,
        /// Probabilities a,b,c as exact rationals, e.g. 1/3,1/3,1/3.
        #[arg(long)]
        probs: String,
        #[arg(long)]
        aux: bool,
    },
    /// Coefficients of the closed-form generating function.
    Series {
        #[command(flatten)]
        kind: KindOpt,
        #[arg(long)]
        terms: usize,
        #[arg(long)]
        probs: Option<String>,
        /// Use the published pure ortho/meta/para form instead.
        #[arg(long, value_enum)]
        dosmal: Option<CaseArg>,
    },
    /// Numerator and denominator of the closed-form generating function.
    Gf {
        #[command(flatten)]
        kind: KindOpt,
        #[arg(long)]
        probs: String,
    },
    /// Exact index of one chain.
    Count {
        #[command(flatten)]
        kind: KindOpt,
        /// Attachment choices over {o, m, p}; length must be max(n - 2, 0).
        #[arg(long, allow_hyphen_values = true)]
        seq: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = EngineArg::Chain)]
        engine: EngineArg,
    },
    /// Export a chain or an auxiliary graph.
    Graph {
        #[arg(long)]
        seq: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        aux: Option<AuxArg>,
        /// Attachment distance of the pendant path: o, m or p.
        #[arg(long)]
        pendant: Option<String>,
    },
    /// Monte Carlo estimate of the expected index.
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        probs: String,
        #[arg(long)]
        trials: u64,
        /// Decimal or 0x-prefixed hexadecimal.
        #[arg(long)]
        seed: String,
        #[command(flatten)]
        kind: KindOpt,
    },
    /// Exact value against the dominant-pole and printed asymptotics.
    Asymptotic {
        #[command(flatten)]
        kind: KindOpt,
        #[arg(long)]
        probs: String,
        #[arg(long)]
        n: usize,
    },
    /// Run the internal cross-check suite.
    Verify,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Expect { .. } => "expect",
            Command::Series { .. } => "series",
            Command::Gf { .. } => "gf",
            Command::Count { .. } => "count",
            Command::Graph { .. } => "graph",
            Command::Sample { .. } => "sample",
            Command::Asymptotic { .. } => "asymptotic",
            Command::Verify => "verify",
        }
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_usage() {
            Failure::Usage(e.to_string())
        } else {
            Failure::Compute(e.to_string())
        }
    }
}

/// Payload of a successful command.
enum Output {
    Record { results: Value, csv: Vec<Vec<String>> },
    Text(String),
}

fn parse_seed(text: &str) -> Result<u64, Failure> {
    let t = text.trim();
    let parsed = match t.strip_prefix("0x").or_else(|| t.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => t.parse(),
    };
    parsed.map_err(|_| Failure::Usage(format!("seed {text:?} is not a decimal or 0x-hex 64-bit integer")))
}

fn gf_json(gf: &RationalGF) -> Value {
    json!({ "numerator": gf.numerator(), "denominator": gf.denominator() })
}

fn strings<T: ToString>(items: impl IntoIterator<Item = T>) -> Vec<String> {
    items.into_iter().map(|v| v.to_string()).collect()
}

fn inputs_of(command: &Command) -> Value {
    match command {
        Command::Expect { kind, n, probs, aux } => {
            json!({ "kind": IndexKind::from(kind.kind), "n": n, "probs": probs, "aux": aux })
        }
        Command::Series { kind, terms, probs, dosmal } => json!({
            "kind": IndexKind::from(kind.kind),
            "terms": terms,
            "probs": probs,
            "dosmal": dosmal.map(|c| AttachmentType::from(c).name()),
        }),
        Command::Gf { kind, probs } => json!({ "kind": IndexKind::from(kind.kind), "probs": probs }),
        Command::Count { kind, seq, n, engine } => json!({
            "kind": IndexKind::from(kind.kind),
            "seq": seq,
            "n": n,
            "engine": Engine::from(*engine).name(),
        }),
        Command::Graph { seq, n, aux, pendant } => json!({
            "seq": seq,
            "n": n,
            "aux": aux.map(|a| AuxVariant::from(a).name()),
            "pendant": pendant,
        }),
        Command::Sample { n, probs, trials, seed, kind } => json!({
            "n": n,
            "probs": probs,
            "trials": trials,
            "seed": seed,
            "kind": IndexKind::from(kind.kind),
        }),
        Command::Asymptotic { kind, probs, n } => {
            json!({ "kind": IndexKind::from(kind.kind), "probs": probs, "n": n })
        }
        Command::Verify => json!({}),
    }
}

fn execute(command: &Command, format: Format) -> Result<Output, Failure> {
    if format == Format::Dot && !matches!(command, Command::Graph { .. }) {
        return Err(Failure::Usage("--format dot is only available for the graph command".into()));
    }
    match command {
        Command::Expect { kind, n, probs, aux } => {
            let p = ProbabilityTriple::parse(probs)?;
            let states = expect_states(*n, &p, kind.kind.into());
            let mut results = json!({ "base": strings(states.iter().map(|s| &s.base)) });
            let mut header = strings(["n", "base"]);
            if *aux {
                results["prime"] = json!(strings(states.iter().map(|s| &s.prime)));
                results["tilde"] = json!(strings(states.iter().map(|s| &s.tilde)));
                results["hat"] = json!(strings(states.iter().map(|s| &s.hat)));
                header.extend(strings(["prime", "tilde", "hat"]));
            }
            let mut csv = vec![header];
            for s in &states {
                let mut row = vec![s.n.to_string(), s.base.to_string()];
                if *aux {
                    row.extend([s.prime.to_string(), s.tilde.to_string(), s.hat.to_string()]);
                }
                csv.push(row);
            }
            Ok(Output::Record { results, csv })
        }
        Command::Series { kind, terms, probs, dosmal } => {
            let gf = match (dosmal, probs) {
                (Some(case), _) => special_case_gf((*case).into(), kind.kind.into()),
                (None, Some(probs)) => gf_closed_form(&ProbabilityTriple::parse(probs)?, kind.kind.into()),
                (None, None) => return Err(Failure::Usage("series needs --probs or --dosmal".into())),
            };
            let coefficients = gf.series(*terms);
            let mut csv = vec![strings(["n", "coefficient"])];
            csv.extend(coefficients.iter().enumerate().map(|(i, c)| vec![i.to_string(), c.to_string()]));
            let mut results = gf_json(&gf);
            results["coefficients"] = json!(strings(&coefficients));
            Ok(Output::Record { results, csv })
        }
        Command::Gf { kind, probs } => {
            let gf = gf_closed_form(&ProbabilityTriple::parse(probs)?, kind.kind.into());
            let len = gf.numerator().len().max(gf.denominator().len());
            let mut csv = vec![strings(["power", "numerator", "denominator"])];
            for i in 0..len {
                let at = |v: &[crate::expectation::ExactRational]| v.get(i).map(ToString::to_string).unwrap_or_else(|| "0".into());
                csv.push(vec![i.to_string(), at(gf.numerator()), at(gf.denominator())]);
            }
            Ok(Output::Record { results: gf_json(&gf), csv })
        }
        Command::Count { kind, seq, n, engine } => {
            let seq = AttachmentSequence::parse(*n, seq)?;
            let value = count(&seq, kind.kind.into(), (*engine).into())?;
            let g = build_chain(&seq);
            let results = json!({
                "value": value,
                "vertices": g.vertex_count(),
                "edges": g.edge_count(),
            });
            let csv = vec![
                strings(["kind", "n", "seq", "engine", "value"]),
                vec![
                    IndexKind::from(kind.kind).to_string(),
                    n.to_string(),
                    seq.to_string(),
                    Engine::from(*engine).name().to_string(),
                    value.to_string(),
                ],
            ];
            Ok(Output::Record { results, csv })
        }
        Command::Graph { seq, n, aux, pendant } => {
            let seq = AttachmentSequence::parse(*n, seq)?;
            let g = match (aux, pendant) {
                (None, None) => build_chain(&seq),
                (Some(variant), Some(pendant)) => {
                    let mut chars = pendant.chars();
                    let t = match (chars.next().and_then(AttachmentType::from_symbol), chars.next()) {
                        (Some(t), None) => t,
                        _ => return Err(Failure::Usage(format!("--pendant {pendant:?} must be one of o, m, p"))),
                    };
                    build_aux(&seq, t, (*variant).into())
                }
                _ => return Err(Failure::Usage("--aux and --pendant must be given together".into())),
            };
            let dot = to_dot(&g);
            if format == Format::Dot {
                return Ok(Output::Text(dot));
            }
            let mut csv = vec![strings(["u", "v"])];
            csv.extend(g.edges().iter().map(|(u, v)| vec![u.to_string(), v.to_string()]));
            let results = json!({
                "vertices": g.vertex_count(),
                "edges": g.edge_count(),
                "cut_vertices": g.cut_vertices(),
                "dot": dot,
            });
            Ok(Output::Record { results, csv })
        }
        Command::Sample { n, probs, trials, seed, kind } => {
            let p = ProbabilityTriple::parse(probs)?;
            let seed = parse_seed(seed)?;
            if *trials == 0 {
                return Err(Failure::Usage("--trials must be at least 1".into()));
            }
            let est = monte_carlo(*n, &p, *trials, seed, kind.kind.into())?;
            let results = serde_json::to_value(&est).expect("estimate serializes");
            let csv = csv_from_object(&results);
            Ok(Output::Record { results, csv })
        }
        Command::Asymptotic { kind, probs, n } => {
            let p = ProbabilityTriple::parse(probs)?;
            let report = asymptotic_report(*n, &p, kind.kind.into())?;
            let results = serde_json::to_value(&report).expect("report serializes");
            let csv = csv_from_object(&results);
            Ok(Output::Record { results, csv })
        }
        Command::Verify => {
            let checks = run_checks();
            let passed = checks.iter().all(|c| c.passed);
            let mut csv = vec![strings(["check", "passed", "detail"])];
            csv.extend(checks.iter().map(|c| vec![c.name.clone(), c.passed.to_string(), c.detail.clone()]));
            let results = json!({ "passed": passed, "checks": checks });
            if passed {
                Ok(Output::Record { results, csv })
            } else {
                Err(Failure::Compute(format!(
                    "{} check(s) failed: {}",
                    checks.iter().filter(|c| !c.passed).count(),
                    serde_json::to_string(&results).expect("checks serialize")
                )))
            }
        }
    }
}

fn csv_from_object(value: &Value) -> Vec<Vec<String>> {
    let Some(map) = value.as_object() else {
        return Vec::new();
    };
    let cell = |v: &Value| match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    vec![map.keys().cloned().collect(), map.values().map(cell).collect()]
}

fn csv_field(field: &str) -> String {
    if field.contains([',', '"', '\n']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

fn write_csv(out: &mut dyn Write, rows: &[Vec<String>]) -> std::io::Result<()> {
    for row in rows {
        let line: Vec<String> = row.iter().map(|f| csv_field(f)).collect();
        writeln!(out, "{}", line.join(","))?;
    }
    Ok(())
}

fn error_record(command: &str, inputs: Value, message: &str) -> Value {
    json!({
        "command": command,
        "inputs": inputs,
        "status": "error",
        "error": message,
    })
}

/// Parses `args` (including the program name) and runs the command, writing
/// to the given streams. Returns the process exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let _ = write!(err, "{e}");
            let command = args.get(1).and_then(|a| a.to_str()).unwrap_or("").to_string();
            let message = e.kind().to_string();
            let record = error_record(&command, json!({}), &message);
            let _ = writeln!(out, "{record}");
            return 1;
        }
    };
    let inputs = inputs_of(&cli.command);
    let name = cli.command.name();
    match execute(&cli.command, cli.format) {
        Ok(Output::Text(text)) => {
            let _ = write!(out, "{text}");
            0
        }
        Ok(Output::Record { results, csv }) => {
            if cli.format == Format::Csv {
                let _ = write_csv(out, &csv);
            } else {
                let record = json!({
                    "command": name,
                    "inputs": inputs,
                    "status": "ok",
                    "results": results,
                });
                let _ = writeln!(out, "{record}");
            }
            0
        }
        Err(failure) => {
            let (code, message) = match failure {
                Failure::Usage(m) => (1, m),
                Failure::Compute(m) => (2, m),
            };
            let _ = writeln!(err, "error: {message}");
            let _ = writeln!(out, "{}", error_record(name, inputs, &message));
            code
        }
    }
}

/// Runs against the process's stdout and stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}
