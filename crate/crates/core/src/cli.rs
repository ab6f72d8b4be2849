//! Command-line frontend.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::ambient::AmbientModel;
use crate::bg::full_report;
use crate::descriptor::{generators, parse_document, AmbientDescriptor, AmbientKind};
use crate::output::{self, OutputRecord};
use crate::search::{self, Mode, SearchConfig};
use crate::verify::run_fixtures;
use crate::{Error, VERSION};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "logbg",
    version,
    about = "Log Chern classes and Bogomolov-Gieseker equality cases"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate pairs described in a JSON document (file or stdin).
    Report(ReportArgs),
    /// Search arrangements on P^n or hypersurfaces for equality cases.
    Enumerate(EnumerateArgs),
    /// Run the built-in fixture suite.
    VerifyPaper(VerifyArgs),
    /// Decide nefness of a divisor class.
    Nef(NefArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Records,
}

#[derive(Debug, Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ReportArgs {
    /// Input document; reads stdin when absent or `-`.
    input: Option<PathBuf>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    Pn,
    Hypersurface,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    N,
    N1,
    Either,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Range {
    lo: u32,
    hi: u32,
}

fn parse_range(s: &str) -> Result<Range, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<u32>()
            .map_err(|_| format!("`{s}` is not a range like 2..30"))
    };
    match s.split_once("..") {
        Some((lo, hi)) => Ok(Range {
            lo: num(lo)?,
            hi: num(hi.strip_prefix('=').unwrap_or(hi))?,
        }),
        None => {
            let v = num(s)?;
            Ok(Range { lo: v, hi: v })
        }
    }
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    #[arg(long, value_enum, default_value_t = FamilyArg::Pn)]
    family: FamilyArg,
    #[arg(long, value_enum, default_value_t = ModeArg::Either)]
    mode: ModeArg,
    /// Keep only pairs with -(K+D) nef (default).
    #[arg(long, overrides_with = "no_nef")]
    nef: bool,
    /// Drop the nef filter.
    #[arg(long)]
    no_nef: bool,
    /// Dimension range A..B (inclusive).
    #[arg(long, value_parser = parse_range)]
    n: Option<Range>,
    /// Hypersurface degree range A..B (inclusive, hypersurface family only).
    #[arg(long, value_parser = parse_range)]
    q: Option<Range>,
    /// Cap on the total degree of the boundary.
    #[arg(long)]
    s_max: Option<u32>,
    /// Keep D = 0 and, on P^n, D = H.
    #[arg(long)]
    include_trivial: bool,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Count cases for both families under the default bounds.
    #[arg(long, conflicts_with_all = ["n", "q", "s_max", "include_trivial", "no_nef"])]
    remark_claims: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct NefArgs {
    #[arg(long, value_enum)]
    ambient: AmbientArg,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    q: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
    /// Divisor class, e.g. `H=4` or `C0=1,f=2`.
    #[arg(long)]
    class: String,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum AmbientArg {
    ProjectiveSpace,
    Hypersurface,
    Hirzebruch,
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn emit(output: &OutputArgs, text: &str, stdout: &mut dyn Write) -> Result<(), Failure> {
    match &output.out {
        Some(path) => fs::write(path, text)
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| usage(format!("cannot write output: {e}"))),
    }
}

fn records_text(records: &[OutputRecord]) -> String {
    records.iter().map(|r| r.to_line() + "\n").collect()
}

fn cmd_report(
    args: &ReportArgs,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
) -> Result<i32, Failure> {
    let text = match &args.input {
        Some(path) if path.as_os_str() != "-" => fs::read_to_string(path)
            .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?,
        _ => {
            let mut buf = String::new();
            stdin
                .read_to_string(&mut buf)
                .map_err(|e| usage(format!("cannot read stdin: {e}")))?;
            buf
        }
    };
    let pairs = parse_document(&text)?;
    let mut records = Vec::with_capacity(pairs.len());
    let mut table = String::new();
    for (i, (descriptor, pair)) in pairs.into_iter().enumerate() {
        let report = full_report(&pair, None)?;
        table.push_str(&output::report_table(i, &pair, &report));
        records.push(OutputRecord::Report {
            tool_version: VERSION.into(),
            input: descriptor,
            divisors: output::divisor_descriptions(&pair),
            report,
        });
    }
    let text = match args.output.format {
        Format::Table => table,
        Format::Records => records_text(&records),
    };
    emit(&args.output, &text, stdout)?;
    Ok(EXIT_OK)
}

fn search_config(args: &EnumerateArgs) -> Result<SearchConfig, Failure> {
    let (pn_default, hyp_default) = search::remark_default_bounds();
    let mut config = match args.family {
        FamilyArg::Pn => {
            if args.q.is_some() {
                return Err(usage("--q only applies to --family hypersurface"));
            }
            pn_default
        }
        FamilyArg::Hypersurface => {
            let mut c = hyp_default;
            if let Some(q) = args.q {
                if q.lo < 2 {
                    return Err(usage("hypersurface degrees start at q = 2"));
                }
                c.q_min = q.lo;
                c.q_max = q.hi;
            }
            c
        }
    };
    if let Some(n) = args.n {
        config.n_min = n.lo;
        config.n_max = n.hi;
    }
    config.mode = match args.mode {
        ModeArg::N => Mode::EqualityN,
        ModeArg::N1 => Mode::EqualityNPlus1,
        ModeArg::Either => Mode::Either,
    };
    config.require_nef = !args.no_nef;
    config.exclude_trivial = !args.include_trivial;
    config.s_max = args.s_max;
    config.workers = args.workers;
    config.validate()?;
    Ok(config)
}

fn cmd_enumerate(args: &EnumerateArgs, stdout: &mut dyn Write) -> Result<i32, Failure> {
    if args.remark_claims {
        let (pn, hyp) = search::remark_default_bounds();
        let counts = search::count_remark_claims(
            &pn.with_workers(args.workers),
            &hyp.with_workers(args.workers),
        )?;
        let text = match args.output.format {
            Format::Table => {
                let mut t = String::new();
                for outcome in [&counts.pn, &counts.hypersurface] {
                    t.push_str(&output::cases_table(&outcome.cases));
                    t.push('\n');
                }
                t + &output::remark_table(&counts)
            }
            Format::Records => {
                let mut records = Vec::new();
                for outcome in [&counts.pn, &counts.hypersurface] {
                    let bounds = &outcome.regimes.last().expect("one regime").bounds;
                    records.extend(outcome.cases.iter().map(|c| OutputRecord::Case {
                        tool_version: VERSION.into(),
                        bounds: bounds.clone(),
                        case: c.clone(),
                    }));
                }
                records.push(OutputRecord::RemarkClaims {
                    tool_version: VERSION.into(),
                    counts: counts.clone(),
                });
                records_text(&records)
            }
        };
        emit(&args.output, &text, stdout)?;
        let met = counts.pn.met_by.is_some() && counts.hypersurface.met_by.is_some();
        return Ok(if met { EXIT_OK } else { EXIT_VERIFY_FAILED });
    }

    let config = search_config(args)?;
    let cases = search::enumerate(&config)?;
    let text = match args.output.format {
        Format::Table => format!(
            "{}count: {}  bounds: {}\n",
            output::cases_table(&cases),
            cases.len(),
            output::bounds_text(&config)
        ),
        Format::Records => {
            let mut records: Vec<OutputRecord> = cases
                .iter()
                .map(|c| OutputRecord::Case {
                    tool_version: VERSION.into(),
                    bounds: config.clone(),
                    case: c.clone(),
                })
                .collect();
            records.push(OutputRecord::Summary {
                tool_version: VERSION.into(),
                bounds: config.clone(),
                count: cases.len(),
            });
            records_text(&records)
        }
    };
    emit(&args.output, &text, stdout)?;
    Ok(EXIT_OK)
}

fn cmd_verify(args: &VerifyArgs, stdout: &mut dyn Write) -> Result<i32, Failure> {
    if args.workers == 0 {
        return Err(usage("--workers must be positive"));
    }
    let results = run_fixtures(args.workers);
    let text = match args.output.format {
        Format::Table => output::fixtures_table(&results),
        Format::Records => records_text(
            &results
                .iter()
                .map(|r| OutputRecord::Fixture {
                    tool_version: VERSION.into(),
                    fixture: r.clone(),
                })
                .collect::<Vec<_>>(),
        ),
    };
    emit(&args.output, &text, stdout)?;
    let failed: Vec<&str> = results
        .iter()
        .filter(|r| !r.passed)
        .map(|r| r.name.as_str())
        .collect();
    if failed.is_empty() {
        Ok(EXIT_OK)
    } else {
        Err(Failure {
            code: EXIT_VERIFY_FAILED,
            message: format!("failing fixtures: {}", failed.join("; ")),
        })
    }
}

fn cmd_nef(args: &NefArgs, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let ambient = AmbientDescriptor {
        kind: match args.ambient {
            AmbientArg::ProjectiveSpace => AmbientKind::ProjectiveSpace,
            AmbientArg::Hypersurface => AmbientKind::Hypersurface,
            AmbientArg::Hirzebruch => AmbientKind::Hirzebruch,
        },
        n: args.n,
        q: args.q,
        m: args.m,
    };
    let model: AmbientModel = ambient.to_model("")?;
    let names = generators(&model);
    let mut coeffs = vec![0i64; names.len()];
    for term in args
        .class
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
    {
        let (name, value) = term
            .split_once('=')
            .ok_or_else(|| usage(format!("--class term `{term}` is not GEN=INT")))?;
        let idx = names
            .iter()
            .position(|g| *g == name.trim())
            .ok_or_else(|| {
                usage(format!(
                    "--class: unknown generator `{name}` on {model}, expected one of {names:?}"
                ))
            })?;
        coeffs[idx] = value
            .trim()
            .parse()
            .map_err(|_| usage(format!("--class: `{value}` is not an integer")))?;
    }
    let class = model.divisor(&coeffs)?;
    let nef = model.is_nef(&class)?;
    let text = match args.output.format {
        Format::Table => format!(
            "{model}: {} is {}nef\n",
            output::describe_divisor(&class),
            if nef { "" } else { "not " }
        ),
        Format::Records => {
            OutputRecord::Nef {
                tool_version: VERSION.into(),
                model,
                class,
                nef,
            }
            .to_line()
                + "\n"
        }
    };
    emit(&args.output, &text, stdout)?;
    Ok(EXIT_OK)
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(rendered.as_bytes())
            } else {
                stdout.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Report(args) => cmd_report(args, stdin, stdout),
        Command::Enumerate(args) => cmd_enumerate(args, stdout),
        Command::VerifyPaper(args) => cmd_verify(args, stdout),
        Command::Nef(args) => cmd_nef(args, stdout),
    };
    match result {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(stderr, "error: {}", failure.message);
            failure.code
        }
    }
}
