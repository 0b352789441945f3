use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use monideal::normality::{closure_of_power_with, first_failure_witness_with, is_normal_with};
use monideal::newton::integral_closure_with;
use monideal::verify::{
    lemma_report, sweep_lemma_dim2_with, sweep_theorem_dim3_with, theorem_report, verify_paper, write_csv,
    CheckReport, SweepFamily, VerifyConfig, DEFAULT_SEED, SEED_ENV_VAR,
};
use monideal::{
    format_ideal, format_monomial, parse_ideal, Exec, IdealFile, MonomialIdeal, NormalityReport, Variables,
};

#[derive(Parser, Debug)]
#[command(name = "monideal", version, about = "Integral closure and normality of monomial ideals")]
struct Cli {
    /// Run every data-parallel loop on the calling thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the integral closure.
    Closure(IdealArgs),
    /// Decide whether the ideal equals its integral closure.
    IsClosed(IdealArgs),
    /// Check normality up to the certifying power bound.
    IsNormal {
        #[command(flatten)]
        ideal: IdealArgs,
        /// Check powers 1..=N instead of the default bound.
        #[arg(long)]
        max_power: Option<u32>,
    },
    /// Print the integral closure of the n-th power.
    PowerClosure {
        #[command(flatten)]
        ideal: IdealArgs,
        #[arg(short = 'n', long = "power")]
        n: u32,
    },
    /// Print mu, colength, v, rsop_count and m-primariness.
    Invariants(IdealArgs),
    /// Least monomial in the closure of I^n but not in I^n.
    Witness {
        #[command(flatten)]
        ideal: IdealArgs,
        #[arg(short = 'n', long = "power")]
        n: u32,
    },
    /// Sweep one of the (a, b, c) monomial families.
    Sweep {
        #[command(subcommand)]
        family: SweepCommand,
    },
    /// Run the worked examples, both sweeps and all corpus checks.
    VerifyPaper {
        #[arg(long, env = SEED_ENV_VAR, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum SweepCommand {
    /// J = (x^2, x*z^a, z^c).
    LemmaDim2 {
        #[arg(long, default_value_t = 8)]
        a_max: u32,
        #[arg(long, default_value_t = 16)]
        c_max: u32,
        #[command(flatten)]
        out: SweepOutput,
    },
    /// I = (x^2, x*y, y^2, z^c, x*z^a, y*z^b).
    ThmDim3 {
        #[arg(long, default_value_t = 12)]
        c_max: u32,
        #[command(flatten)]
        out: SweepOutput,
    },
}

#[derive(Args, Debug)]
struct SweepOutput {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct IdealArgs {
    /// Comma-separated variable names, e.g. x,y,z.
    #[arg(long, requires = "ideal", conflicts_with = "file")]
    vars: Option<String>,
    /// Inline generators, e.g. "x^7, y^3, z^2".
    #[arg(long, requires = "vars", conflicts_with = "file")]
    ideal: Option<String>,
    /// JSON file {"vars": [...], "generators": [[...], ...]}.
    #[arg(long, required_unless_present = "ideal")]
    file: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Csv,
}

/// Failure modes mapped to exit codes.
enum Failure {
    Usage(String),
    Assertion,
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type CliResult = Result<(), Failure>;

fn load(args: &IdealArgs) -> Result<(MonomialIdeal, Variables), Failure> {
    if args.format == Format::Csv {
        return Err(Failure::Usage("csv output is only available for sweeps".into()));
    }
    if let Some(path) = &args.file {
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
        return IdealFile::from_json(&text).map_err(|e| Failure::Usage(e.to_string()));
    }
    let vars = Variables::parse(args.vars.as_deref().unwrap_or_default()).map_err(|e| Failure::Usage(e.to_string()))?;
    let ideal = parse_ideal(args.ideal.as_deref().unwrap_or_default(), &vars)
        .map_err(|e| Failure::Usage(e.to_string()))?;
    Ok((ideal, vars))
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> CliResult {
    serde_json::to_writer_pretty(&mut *out, value).map_err(io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

fn emit_ideal(out: &mut dyn Write, ideal: &MonomialIdeal, vars: &Variables, format: Format) -> CliResult {
    match format {
        Format::Json => emit_json(out, &IdealFile::from_ideal(ideal, vars)),
        _ => {
            writeln!(out, "{}", format_ideal(ideal, vars))?;
            Ok(())
        }
    }
}

fn emit_report(out: &mut dyn Write, report: &NormalityReport, vars: &Variables, format: Format) -> CliResult {
    if format == Format::Json {
        let failure = report.first_failure.as_ref().map(|f| {
            json!({ "power": f.power, "witness": format_monomial(&f.witness, vars), "exponents": f.witness })
        });
        return emit_json(
            out,
            &json!({
                "ideal": IdealFile::from_ideal(&report.ideal, vars),
                "checked_powers": report.checked_powers,
                "verdict": report.verdict,
                "first_failure": failure,
                "bound_used": report.bound_used,
                "bound_source": report.bound_source,
                "degenerate": report.degenerate,
            }),
        );
    }
    writeln!(out, "ideal: {}", format_ideal(&report.ideal, vars))?;
    writeln!(out, "verdict: {}", report.verdict)?;
    writeln!(out, "bound_used: {}", report.bound_used)?;
    writeln!(out, "bound_source: {}", serde_json::to_value(report.bound_source).unwrap().as_str().unwrap_or(""))?;
    for c in &report.checked_powers {
        writeln!(out, "power {}: {}", c.n, if c.is_closed { "closed" } else { "not closed" })?;
    }
    if let Some(f) = &report.first_failure {
        writeln!(out, "first_failure: power {} witness {}", f.power, format_monomial(&f.witness, vars))?;
    }
    if let Some(d) = report.degenerate {
        writeln!(out, "convention: {}", serde_json::to_value(d).unwrap().as_str().unwrap_or(""))?;
    }
    Ok(())
}

fn open_output(path: &Option<PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(io::BufWriter::new(fs::File::create(p)?)),
        None => Box::new(io::stdout().lock()),
    })
}

fn print_checks(out: &mut dyn Write, reports: &[CheckReport], format: Format) -> CliResult {
    match format {
        Format::Json => emit_json(out, &reports)?,
        _ => {
            for r in reports {
                writeln!(out, "{}", r.summary_line())?;
                for f in &r.failures {
                    writeln!(out, "    input: {}\n    expected: {}\n    got: {}", f.input, f.expected, f.got)?;
                }
            }
        }
    }
    if reports.iter().all(|r| r.passes) {
        Ok(())
    } else {
        Err(Failure::Assertion)
    }
}

fn run(cli: Cli) -> CliResult {
    let exec = if cli.sequential { Exec::Sequential } else { Exec::default() };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Closure(args) => {
            let (ideal, vars) = load(&args)?;
            emit_ideal(&mut out, &integral_closure_with(&ideal, exec), &vars, args.format)
        }
        Command::IsClosed(args) => {
            let (ideal, vars) = load(&args)?;
            let witness = first_failure_witness_with(&ideal, 1, exec);
            let shown = witness.as_ref().map(|w| format_monomial(w, &vars));
            if args.format == Format::Json {
                emit_json(&mut out, &json!({ "is_closed": witness.is_none(), "witness": shown }))
            } else {
                match shown {
                    None => writeln!(out, "true")?,
                    Some(w) => writeln!(out, "false (witness: {w})")?,
                }
                Ok(())
            }
        }
        Command::IsNormal { ideal: args, max_power } => {
            if max_power == Some(0) {
                return Err(Failure::Usage("--max-power must be positive".into()));
            }
            let (ideal, vars) = load(&args)?;
            emit_report(&mut out, &is_normal_with(&ideal, max_power, exec), &vars, args.format)
        }
        Command::PowerClosure { ideal: args, n } => {
            let (ideal, vars) = load(&args)?;
            emit_ideal(&mut out, &closure_of_power_with(&ideal, n, exec), &vars, args.format)
        }
        Command::Invariants(args) => {
            let (ideal, vars) = load(&args)?;
            let colength = ideal.colength();
            if args.format == Format::Json {
                emit_json(
                    &mut out,
                    &json!({
                        "ideal": IdealFile::from_ideal(&ideal, &vars),
                        "mu": ideal.mu(),
                        "colength": colength,
                        "v": ideal.v_quotient(),
                        "rsop_count": ideal.rsop_count(),
                        "m_primary": ideal.is_m_primary(),
                    }),
                )
            } else {
                writeln!(out, "mu={}", ideal.mu())?;
                writeln!(out, "colength={colength}")?;
                writeln!(out, "v={}", ideal.v_quotient())?;
                writeln!(out, "rsop_count={}", ideal.rsop_count())?;
                writeln!(out, "m-primary={}", ideal.is_m_primary())?;
                Ok(())
            }
        }
        Command::Witness { ideal: args, n } => {
            if n == 0 {
                return Err(Failure::Usage("-n must be positive".into()));
            }
            let (ideal, vars) = load(&args)?;
            let shown = first_failure_witness_with(&ideal, n, exec).map(|w| format_monomial(&w, &vars));
            if args.format == Format::Json {
                emit_json(&mut out, &json!({ "power": n, "witness": shown }))
            } else {
                writeln!(out, "{}", shown.as_deref().unwrap_or("none"))?;
                Ok(())
            }
        }
        Command::Sweep { family } => {
            drop(out);
            let (records, report, family, out_args) = match family {
                SweepCommand::LemmaDim2 { a_max, c_max, out } => {
                    if a_max < 1 || c_max < 2 {
                        return Err(Failure::Usage("need --a-max >= 1 and --c-max >= 2".into()));
                    }
                    let recs = sweep_lemma_dim2_with(a_max, c_max, exec);
                    let rep = lemma_report(a_max, c_max, &recs);
                    (recs, rep, SweepFamily::LemmaDim2, out)
                }
                SweepCommand::ThmDim3 { c_max, out } => {
                    if c_max < 2 {
                        return Err(Failure::Usage("need --c-max >= 2".into()));
                    }
                    let recs = sweep_theorem_dim3_with(c_max, exec);
                    let rep = theorem_report(c_max, &recs);
                    (recs, rep, SweepFamily::TheoremDim3, out)
                }
            };
            let mut sink = open_output(&out_args.output)?;
            match out_args.format {
                Format::Csv => write_csv(&records, family, &mut sink).map_err(|e| Failure::Io(e.into()))?,
                Format::Json => emit_json(&mut sink, &json!({ "records": records, "report": report }))?,
                Format::Text => writeln!(sink, "{} ({} cells)", report.summary_line(), records.len())?,
            }
            sink.flush()?;
            if !report.passes {
                for f in &report.failures {
                    eprintln!("violation {}: expected {}, got {}", f.input, f.expected, f.got);
                }
                return Err(Failure::Assertion);
            }
            Ok(())
        }
        Command::VerifyPaper { seed, trials, format, output } => {
            drop(out);
            if format == Format::Csv {
                return Err(Failure::Usage("verify-paper supports text or json".into()));
            }
            let config = VerifyConfig { seed, trials, exec, ..VerifyConfig::default() };
            let reports = verify_paper(&config);
            let mut sink = open_output(&output)?;
            let res = print_checks(&mut sink, &reports, format);
            sink.flush()?;
            res
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Assertion) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
