//! Command-line front end. `main.rs` only forwards to [`run`].

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::machines::{MachineTrace, ObserverEncoder, SyndromeFormer};
use crate::oracle::{Oracle, OracleCaps};
use crate::report::analyze;
use crate::spec_file::{CodeSpecFile, InputsFile, LoadedCode, WordFile};
use crate::verify::{self, VerifyConfig};

#[derive(Debug, Parser)]
#[command(
    name = "abelcodes",
    version,
    about = "Duality and dynamics of group codes over Z_M"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// State space, indices, granule table and output chains.
    Analyze {
        file: PathBuf,
        /// State cut: past [0, k) against future [k, N). Defaults to N/2.
        #[arg(long)]
        cut: Option<usize>,
        /// Interior margin for the indices; defaults to the file's margin.
        #[arg(long)]
        margin: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Write the dual code as an explicit code-spec file.
    Dual {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Encode an input sequence with the observer-based encoder.
    Encode {
        file: PathBuf,
        #[command(flatten)]
        source: InputSource,
    },
    /// Syndrome sequence of a word and a membership verdict.
    Syndrome {
        file: PathBuf,
        #[arg(long)]
        word: PathBuf,
    },
    /// Randomized duality theorem suite.
    VerifyDuality {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value = "2,3,4")]
        modulus_set: String,
        #[arg(long, default_value_t = 6)]
        max_axis: usize,
        #[arg(long, default_value_t = 2)]
        max_width: usize,
        /// Where to write the failure artifact if any theorem fails.
        #[arg(long, default_value = "verify-failures.json")]
        artifact: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// A brute-force value by enumeration, for cross-checking.
    Oracle {
        file: PathBuf,
        /// order | dual-order | state:K | controller-granule:K:J |
        /// observer-granule:K:J | input-group:K | syndrome-kernel
        #[arg(long)]
        quantity: String,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct InputSource {
    #[arg(long)]
    inputs: Option<PathBuf>,
    #[arg(long)]
    random: Option<u64>,
}

/// Process exit code for an error: 2 parse, 3 cap exceeded, 4 internal, 1 otherwise.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => 2,
        Error::OrderExceedsCap { .. } => 3,
        Error::InternalInconsistency(_) => 4,
        _ => 1,
    }
}

#[derive(Serialize)]
struct EncodeOutput<'a> {
    codeword: Vec<Vec<u64>>,
    trace: &'a MachineTrace,
}

#[derive(Serialize)]
struct SyndromeOutput<'a> {
    member: bool,
    syndromes: &'a [Vec<u64>],
    trace: &'a MachineTrace,
}

fn load(file: &Path) -> Result<LoadedCode> {
    CodeSpecFile::read(file)?.load()
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("outputs always serialize")
}

fn parse_usize(s: &str, what: &str) -> Result<usize> {
    s.parse()
        .map_err(|_| Error::Parse(format!("bad {what} `{s}` in quantity")))
}

fn oracle_quantity(loaded: &LoadedCode, q: &str) -> Result<String> {
    let c = &loaded.code;
    let oracle = Oracle::new(c, OracleCaps::default())?;
    let parts: Vec<&str> = q.split(':').collect();
    Ok(match parts.as_slice() {
        ["order"] => oracle.order().to_string(),
        ["dual-order"] => oracle.dual()?.len().to_string(),
        ["state", k] => {
            let k = parse_usize(k, "time")?;
            format!(
                "{} (count {})",
                oracle.state_invariants(k)?,
                oracle.state_count(k)?
            )
        }
        ["controller-granule", k, j] => oracle
            .controller_granule(parse_usize(k, "time")?, parse_usize(j, "level")?)?
            .to_string(),
        ["observer-granule", k, j] => oracle
            .observer_granule(parse_usize(k, "time")?, parse_usize(j, "level")?)?
            .to_string(),
        ["input-group", k] => oracle
            .input_group_order(parse_usize(k, "time")?)?
            .to_string(),
        ["syndrome-kernel"] => {
            let sf = SyndromeFormer::new(c)?;
            oracle.kernel_of(|w| sf.is_member(w))?.len().to_string()
        }
        _ => return Err(Error::Parse(format!("unknown quantity `{q}`"))),
    })
}

/// Runs one command, writing its output to `out`.
pub fn execute(cli: Cli, out: &mut dyn Write) -> Result<()> {
    let text = match cli.command {
        Command::Analyze {
            file,
            cut,
            margin,
            json: as_json,
        } => {
            let loaded = load(&file)?;
            let n = loaded.code.axis_len();
            let report = analyze(
                &loaded.code,
                cut.unwrap_or(n / 2),
                margin.unwrap_or(loaded.margin),
                loaded.name.clone(),
            )?;
            if as_json {
                report.to_json() + "\n"
            } else {
                report.render_text()
            }
        }
        Command::Dual { file, out: path } => {
            let loaded = load(&file)?;
            let name = loaded.name.as_ref().map(|n| format!("{n}_dual"));
            let toml = CodeSpecFile::explicit_from_code(&loaded.code.dual(), name, None).to_toml();
            match path {
                Some(p) => {
                    std::fs::write(&p, &toml)
                        .map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?;
                    format!("wrote {}\n", p.display())
                }
                None => toml,
            }
        }
        Command::Encode { file, source } => {
            let loaded = load(&file)?;
            let enc = ObserverEncoder::new(&loaded.code)?;
            let inputs = match (source.inputs, source.random) {
                (Some(p), _) => InputsFile::read(&p)?.reduced(loaded.code.modulus()),
                (None, Some(seed)) => enc.random_inputs(&mut ChaCha8Rng::seed_from_u64(seed)),
                (None, None) => unreachable!("clap requires one input source"),
            };
            let (word, trace) = enc.encode(&inputs)?;
            json(&EncodeOutput {
                codeword: loaded.code.layout().split(&word),
                trace: &trace,
            }) + "\n"
        }
        Command::Syndrome { file, word } => {
            let loaded = load(&file)?;
            let w = WordFile::read(&word)?.reduced(loaded.code.modulus());
            let sf = SyndromeFormer::new(&loaded.code)?;
            let (syndromes, trace) = sf.form_syndromes(&w)?;
            let member = syndromes.iter().flatten().all(|&x| x == 0);
            let body = json(&SyndromeOutput {
                member,
                syndromes: &syndromes,
                trace: &trace,
            });
            format!("{body}\n{}\n", if member { "MEMBER" } else { "NOT MEMBER" })
        }
        Command::VerifyDuality {
            seed,
            trials,
            modulus_set,
            max_axis,
            max_width,
            artifact,
            json: as_json,
        } => {
            let moduli = modulus_set
                .split(',')
                .map(|s| s.trim().parse::<u64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| Error::Parse(format!("--modulus-set: {e}")))?;
            let cfg = VerifyConfig {
                seed,
                trials,
                moduli,
                max_axis,
                max_width,
            };
            let report = verify::run(&cfg)?;
            let mut text = if as_json {
                json(&report) + "\n"
            } else {
                report.render_text()
            };
            if !report.passed() {
                std::fs::write(&artifact, json(&report.failures))
                    .map_err(|e| Error::Parse(format!("{}: {e}", artifact.display())))?;
                text.push_str(&format!("failure artifact: {}\n", artifact.display()));
                out.write_all(text.as_bytes()).ok();
                return Err(Error::InternalInconsistency(format!(
                    "{} theorem check(s) failed",
                    report.failures.len()
                )));
            }
            text
        }
        Command::Oracle { file, quantity } => {
            let loaded = load(&file)?;
            oracle_quantity(&loaded, &quantity)? + "\n"
        }
    };
    out.write_all(text.as_bytes())
        .map_err(|e| Error::Parse(format!("writing output: {e}")))
}

/// Parses arguments and runs; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match execute(cli, &mut lock) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
