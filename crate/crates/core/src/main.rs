use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use doublepoint::report::{
    self, castelnuovo_report, class_report, plucker_report, ramified_report, verify_report,
    ClassReport, CountReport, VerifyReport,
};
use doublepoint::{Error, Result};

/// Exact calculator for the double-point divisor class on the moduli space
/// of pointed curves (genus 3s, nets of degree 2s + 2), with the complete
/// chain of cohomological intermediates and consistency checks.
#[derive(Parser)]
#[command(name = "doublepoint", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the divisor class at parameter s (genus 3s, degree 2s + 2)
    Class(ClassArgs),
    /// Run the consistency-check suite; exits 1 if any check fails
    Verify(VerifyArgs),
    /// Evaluate the enumerative counting formulas
    Count {
        #[command(subcommand)]
        kind: CountKind,
    },
}

#[derive(Args)]
struct ClassArgs {
    /// Family parameter; the genus is 3s
    #[arg(long)]
    s: u32,
    /// Emit the report as JSON
    #[arg(long)]
    json: bool,
    /// Include every symbolic intermediate in canonical text form
    #[arg(long = "show-steps")]
    show_steps: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Check a single parameter value
    #[arg(long, conflicts_with = "all_up_to")]
    s: Option<u32>,
    /// Check every parameter from 1 up to this bound (default 10)
    #[arg(long = "all-up-to")]
    all_up_to: Option<u32>,
    /// Emit the report as JSON
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum CountKind {
    /// Castelnuovo count of series of type (r, d) on a general genus-g curve
    Castelnuovo(GrdArgs),
    /// Count with a prescribed ramification sequence at a general point
    Ramified(RamifiedArgs),
    /// Pluecker count of double points of a degree-d plane model of genus g
    Plucker(GdArgs),
}

#[derive(Args)]
struct GrdArgs {
    #[arg(long)]
    g: i64,
    #[arg(long)]
    r: i64,
    #[arg(long)]
    d: i64,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct RamifiedArgs {
    #[arg(long)]
    g: i64,
    #[arg(long)]
    r: i64,
    #[arg(long)]
    d: i64,
    /// Comma-separated ramification sequence alpha_0,...,alpha_r
    #[arg(long, value_delimiter = ',', required = true)]
    alpha: Vec<i64>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct GdArgs {
    #[arg(long)]
    g: i64,
    #[arg(long)]
    d: i64,
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            if matches!(e, Error::InvalidInput(_)) {
                eprintln!("usage: see `doublepoint --help`");
            }
            ExitCode::from(report::exit_code(&e))
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Class(args) => {
            let report = class_report(args.s, args.show_steps)?;
            if args.json {
                emit(&to_json(&report)?);
            } else {
                emit(&render_class(&report));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => {
            let s_values: Vec<u32> = match (args.s, args.all_up_to) {
                (Some(s), None) => vec![s],
                (None, Some(k)) => (1..=k).collect(),
                (None, None) => (1..=10).collect(),
                (Some(_), Some(_)) => unreachable!("clap rejects the conflict"),
            };
            if s_values.is_empty() {
                return Err(Error::InvalidInput(
                    "verification range is empty".to_string(),
                ));
            }
            let report = verify_report(&s_values)?;
            if args.json {
                emit(&to_json(&report)?);
            } else {
                emit(&render_verify(&report));
            }
            Ok(ExitCode::from(report::verify_exit_code(
                report.outputs.all_pass,
            )))
        }
        Command::Count { kind } => {
            let (report, json) = match kind {
                CountKind::Castelnuovo(a) => (castelnuovo_report(a.g, a.r, a.d)?, a.json),
                CountKind::Ramified(a) => (ramified_report(a.g, a.r, a.d, a.alpha)?, a.json),
                CountKind::Plucker(a) => (plucker_report(a.g, a.d)?, a.json),
            };
            for w in &report.warnings {
                eprintln!("warning: {w}");
            }
            if json {
                emit(&to_json(&report)?);
            } else {
                emit(&render_count(&report));
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String> {
    report::to_json(value)
}

/// Write a block of text to stdout, tolerating a closed pipe.
fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{}", text.trim_end_matches('\n'));
    let _ = out.flush();
}

fn render_class(report: &ClassReport) -> String {
    use std::fmt::Write;
    let o = &report.outputs;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "double-point divisor class at s = {} (genus {}, degree {})",
        report.inputs.s,
        o.genus,
        2 * i64::from(report.inputs.s) + 2
    );
    let _ = writeln!(out, "  lambda   {}", o.lambda);
    let _ = writeln!(out, "  psi      {}", o.psi);
    for (i, delta) in o.delta.iter().enumerate() {
        match delta {
            Some(v) => {
                let _ = writeln!(out, "  delta_{i}  {v}");
            }
            None => {
                let _ = writeln!(
                    out,
                    "  delta_{i}  unknown (interior coefficient, determined only at genus 6)"
                );
            }
        }
    }
    if let Some(steps) = &report.steps {
        let _ = writeln!(out, "steps:");
        let _ = writeln!(out, "  ch(M)      = {}", steps.ch_m);
        let _ = writeln!(out, "  c1(M)      = {}", steps.c1_m);
        let _ = writeln!(out, "  c2(M)      = {}", steps.c2_m);
        let _ = writeln!(out, "  c3(M)      = {}", steps.c3_m);
        let _ = writeln!(out, "  e1         = {}", steps.e1);
        let _ = writeln!(out, "  e2         = {}", steps.e2);
        let _ = writeln!(out, "  e3         = {}", steps.e3);
        let _ = writeln!(out, "  [Y]        = {}", steps.y_bracket);
        let _ = writeln!(out, "  deg [Y]    = {}", steps.y_degree);
        let _ = writeln!(out, "  tail count = {}", steps.elliptic_tail);
        let _ = writeln!(out, "  xi         = {}", steps.xi);
        let _ = writeln!(out, "  N          = {}", steps.series_count);
    }
    let passed = report.checks.iter().filter(|c| c.pass).count();
    let _ = writeln!(out, "checks: {passed}/{} passed", report.checks.len());
    out
}

fn render_verify(report: &VerifyReport) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    for check in &report.checks {
        if check.pass {
            let _ = writeln!(out, "ok   {}", check.name);
        } else {
            let _ = writeln!(
                out,
                "FAIL {}: expected {}, got {}",
                check.name, check.expected, check.actual
            );
        }
    }
    let failed = report.checks.iter().filter(|c| !c.pass).count();
    if failed == 0 {
        let _ = writeln!(out, "all {} checks passed", report.checks.len());
    } else {
        let _ = writeln!(out, "{failed} of {} checks FAILED", report.checks.len());
    }
    out
}

fn render_count(report: &CountReport) -> String {
    let i = &report.inputs;
    match i.kind.as_str() {
        "castelnuovo" => format!(
            "castelnuovo(g={}, r={}, d={}) = {}",
            i.g,
            i.r.unwrap(),
            i.d,
            report.outputs.value
        ),
        "ramified" => format!(
            "ramified(g={}, r={}, d={}, alpha={:?}) = {}",
            i.g,
            i.r.unwrap(),
            i.d,
            i.alpha.as_ref().unwrap(),
            report.outputs.value
        ),
        _ => format!(
            "plucker_double_points(g={}, d={}) = {}",
            i.g, i.d, report.outputs.value
        ),
    }
}
