use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

/// Prints to stdout, ignoring a closed pipe.
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout().lock(), $($t)*);
    }};
}

use clap::{Parser, Subcommand, ValueEnum};
use qbundle::dga::check_d_squared;
use qbundle::freealg::{check_local_confluence, default_overlap_bound, irreducible_words, parse_element, parse_presentation, specialize, word_string, NCPoly, Presentation};
use qbundle::hopf::file::load_hopf;
use qbundle::monopole::{verify_monopole, ScenarioConfig};
use qbundle::report::{Record, Report, SCHEMA_VERSION};
use qbundle::scalars::{Assignment, Param};
use qbundle::{Error, Scalar};

#[derive(Parser)]
#[command(name = "qbundle", version, about = "Symbolic verification of quantum principal bundles")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    report: Format,
    /// Largest word length used for sampled checks.
    #[arg(long, default_value_t = 4, global = true)]
    degree_bound: usize,
    /// Parameter values, `symbolic` or `k=v,…` with rational values.
    #[arg(long, global = true)]
    params: Option<String>,
    /// Bound on rewriting steps per normal form.
    #[arg(long, global = true)]
    max_steps: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite.
    Verify {
        #[command(subcommand)]
        target: Target,
    },
    /// List the normal-form words of a given degree.
    Basis {
        file: PathBuf,
        #[arg(long)]
        degree: u32,
    },
    /// Print the normal form of an expression.
    Nf {
        file: PathBuf,
        #[arg(long)]
        expr: String,
    },
}

#[derive(Subcommand)]
enum Target {
    /// The built-in q-monopole scenario.
    Monopole {
        /// Winding number of the transition functions.
        #[arg(long, default_value_t = 1)]
        n: u32,
    },
    /// Confluence and d² = 0 for a presentation file.
    Presentation { file: PathBuf },
    /// Confluence and the Hopf axioms for a Hopf algebra file.
    Hopf { file: PathBuf },
}

/// Usage and configuration problems, reported with exit code 2.
struct ConfigError(String);

impl From<Error> for ConfigError {
    fn from(e: Error) -> ConfigError {
        ConfigError(e.to_string())
    }
}

fn parse_params(s: Option<&str>) -> Result<Assignment, ConfigError> {
    let mut out = Assignment::new();
    let Some(s) = s.map(str::trim).filter(|s| !s.is_empty() && *s != "symbolic") else {
        return Ok(out);
    };
    for item in s.split(',') {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| ConfigError(format!("expected `name=value` in --params, found `{item}`")))?;
        let value = Scalar::parse(v.trim())
            .ok()
            .and_then(|c| c.as_rational())
            .ok_or_else(|| ConfigError(format!("value of `{}` is not a rational number", k.trim())))?;
        out.insert(Param::named(k.trim()), value);
    }
    Ok(out)
}

fn read(path: &Path) -> Result<(String, String), ConfigError> {
    let text = std::fs::read_to_string(path).map_err(|e| ConfigError(format!("{}: {e}", path.display())))?;
    let name = path.file_stem().and_then(|s| s.to_str()).unwrap_or("input").to_string();
    Ok((name, text))
}

fn load(path: &Path, values: &Assignment, max_steps: Option<usize>) -> Result<(Presentation, Assignment), ConfigError> {
    let (name, text) = read(path)?;
    let f = parse_presentation(&name, &text, values).map_err(|e| ConfigError(format!("{}: {e}", path.display())))?;
    let mut p = f.presentation;
    if let Some(n) = max_steps {
        p.set_max_steps(n);
    }
    Ok((p, f.values))
}

fn confluence_record(p: &Presentation) -> Result<Record, Error> {
    let name = format!("confluence: {}", p.name());
    let anchor = "every overlap ambiguity resolves";
    if p.is_relator_only() {
        return Ok(Record::skipped(name, anchor, "relator-only presentation; no rewriting system"));
    }
    let rep = check_local_confluence(p, default_overlap_bound(p))?;
    let r = if rep.is_confluent() {
        Record::pass(name, anchor)
    } else {
        Record::fail(name, anchor, rep.summary(p))
    };
    Ok(r.note(format!("{} critical pairs", rep.checked)))
}

fn verify_presentation(cli: &Cli, file: &Path, values: &Assignment) -> Result<Report, ConfigError> {
    let (p, _) = load(file, values, cli.max_steps)?;
    let mut rep = Report::new(format!("presentation {}", p.name()));
    rep.setting("degree_bound", cli.degree_bound);
    rep.push(confluence_record(&p)?);
    if p.generators().iter().any(|g| g.degree > 0) && rep.passed() {
        let samples: Vec<NCPoly> = irreducible_words(&p, None, cli.degree_bound).into_iter().map(NCPoly::word).collect();
        let d2 = check_d_squared(&p, &samples)?;
        let res = d2.failures.first().map(|(e, dd)| format!("d²({e}) = {dd}"));
        rep.push(Record::check("d² = 0", "d(d(e)) = 0", res).note(format!("{} elements", d2.checked)));
    }
    Ok(rep)
}

fn verify_hopf(cli: &Cli, file: &Path, values: &Assignment) -> Result<Report, ConfigError> {
    let (name, text) = read(file)?;
    let mut rep = Report::new(format!("hopf {name}"));
    rep.setting("degree_bound", cli.degree_bound);
    let h = match load_hopf(&name, &text, values) {
        Ok(h) => h,
        Err(Error::Validation(msg)) | Err(Error::NotConfluent(msg)) => {
            rep.push(Record::fail("Hopf algebra construction", "structure maps satisfy the Hopf axioms", msg));
            return Ok(rep);
        }
        Err(e) => return Err(ConfigError(format!("{}: {e}", file.display()))),
    };
    rep.push(confluence_record(h.presentation())?);
    let samples: Vec<NCPoly> = irreducible_words(h.presentation(), None, cli.degree_bound).into_iter().map(NCPoly::word).collect();
    rep.extend(h.check_axioms(&samples)?);
    Ok(rep)
}

fn emit(cli: &Cli, rep: &Report, started: Instant) -> ExitCode {
    match cli.report {
        Format::Text => out!("{rep}"),
        Format::Json => {
            let v = serde_json::json!({
                "schema_version": SCHEMA_VERSION,
                "report": rep,
                "timing": { "elapsed_ms": started.elapsed().as_millis() as u64 },
            });
            out!("{}", serde_json::to_string_pretty(&v).expect("report serializes"));
        }
    }
    if rep.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: &Cli) -> Result<ExitCode, ConfigError> {
    let started = Instant::now();
    let values = parse_params(cli.params.as_deref())?;
    match &cli.command {
        Command::Verify { target } => {
            let rep = match target {
                Target::Monopole { n } => {
                    let mut cfg = ScenarioConfig {
                        values,
                        n: *n,
                        ..ScenarioConfig::default()
                    };
                    if let Some(m) = cli.max_steps {
                        cfg.max_steps = m;
                    }
                    cfg.validate()?;
                    verify_monopole(cfg, cli.degree_bound)
                }
                Target::Presentation { file } => verify_presentation(cli, file, &values)?,
                Target::Hopf { file } => verify_hopf(cli, file, &values)?,
            };
            Ok(emit(cli, &rep, started))
        }
        Command::Basis { file, degree } => {
            let (p, _) = load(file, &values, cli.max_steps)?;
            let words: Vec<String> = irreducible_words(&p, Some(*degree), cli.degree_bound)
                .iter()
                .map(|w| if w.is_empty() { "1".to_string() } else { word_string(w) })
                .collect();
            match cli.report {
                Format::Text => words.iter().for_each(|w| out!("{w}")),
                Format::Json => {
                    let v = serde_json::json!({
                        "schema_version": SCHEMA_VERSION,
                        "presentation": p.name(),
                        "degree": degree,
                        "length_bound": cli.degree_bound,
                        "basis": words,
                    });
                    out!("{}", serde_json::to_string_pretty(&v).expect("basis serializes"));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Nf { file, expr } => {
            let (p, vals) = load(file, &values, cli.max_steps)?;
            let e = parse_element(expr, &p).and_then(|e| specialize(&e, &vals))?;
            let nf = p.normal_form(&e)?;
            match cli.report {
                Format::Text => out!("{nf}"),
                Format::Json => {
                    let v = serde_json::json!({
                        "schema_version": SCHEMA_VERSION,
                        "presentation": p.name(),
                        "input": expr,
                        "normal_form": nf.to_string(),
                    });
                    out!("{}", serde_json::to_string_pretty(&v).expect("normal form serializes"));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(ConfigError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
