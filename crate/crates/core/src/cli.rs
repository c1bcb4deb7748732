//! Command-line front end: `check`, `eval` and `apply`.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::dsl::{parse, EvalOptions, Evaluator, ZChoice};
use crate::error::Error;
use crate::report::SuiteReport;
use crate::suites::{self, SuiteParams, SUITES};
use crate::yangian::ShiftConvention;

/// Every checked identity holds, or the evaluation succeeded.
pub const EXIT_OK: i32 = 0;
/// At least one identity failed.
pub const EXIT_FAIL: i32 = 1;
/// Bad flags, unknown suite, or malformed expression.
pub const EXIT_USAGE: i32 = 2;
/// The engine hit an error it could not attribute to the input.
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "cherednik", version, about = "Verify operator identities and evaluate expressions exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run a named identity suite, or `all`.
    Check(CheckArgs),
    /// Evaluate an expression to its normal form.
    Eval(EvalArgs),
    /// Apply an operator expression to a polynomial.
    Apply(ApplyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Shift {
    Barred,
    Unbarred,
}

impl From<Shift> for ShiftConvention {
    fn from(s: Shift) -> Self {
        match s {
            Shift::Barred => ShiftConvention::Barred,
            Shift::Unbarred => ShiftConvention::Unbarred,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ZArg {
    Symbolic,
    Zero,
}

#[derive(Args, Debug)]
struct CheckArgs {
    /// Suite name.
    #[arg(value_parser = suite_name)]
    suite: String,
    #[arg(long = "N", default_value_t = 2)]
    n: usize,
    #[arg(long = "l", default_value_t = 1)]
    l: usize,
    /// Truncation order of generating series.
    #[arg(long, default_value_t = 8)]
    order: usize,
    /// Degree bound for polynomial arguments and generator indices.
    #[arg(long = "max-degree", default_value_t = 4)]
    max_degree: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads; defaults to the number of cores.
    #[arg(long, env = "CHEREDNIK_JOBS")]
    jobs: Option<usize>,
    #[arg(long, value_enum, default_value_t = Shift::Barred)]
    shift: Shift,
    /// Report zero wall time for every item, making output byte-reproducible.
    #[arg(long)]
    no_timings: bool,
}

#[derive(Args, Debug)]
struct ContextArgs {
    #[arg(long = "N", default_value_t = 2)]
    n: usize,
    #[arg(long = "l", default_value_t = 1)]
    l: usize,
    /// Whether `z_1..z_l` stay symbolic or are set to zero.
    #[arg(long, value_enum, default_value_t = ZArg::Symbolic)]
    z: ZArg,
    #[arg(long, value_enum, default_value_t = Shift::Barred)]
    shift: Shift,
    #[arg(long, default_value_t = 8)]
    order: usize,
}

impl ContextArgs {
    fn options(&self) -> EvalOptions {
        EvalOptions {
            n: self.n,
            l: self.l,
            z: match self.z {
                ZArg::Symbolic => ZChoice::Symbolic,
                ZArg::Zero => ZChoice::Zero,
            },
            shift: self.shift.into(),
            order: self.order,
        }
    }
}

#[derive(Args, Debug)]
struct EvalArgs {
    expr: String,
    #[command(flatten)]
    ctx: ContextArgs,
}

#[derive(Args, Debug)]
struct ApplyArgs {
    expr: String,
    /// Polynomial in `w[i]` and the parameters.
    #[arg(long)]
    to: String,
    #[command(flatten)]
    ctx: ContextArgs,
}

fn suite_name(s: &str) -> Result<String, String> {
    if s == "all" || SUITES.contains(&s) {
        Ok(s.to_string())
    } else {
        Err(format!("expected one of {}, all", SUITES.join(", ")))
    }
}

/// Input errors map to the usage code; anything else is internal.
fn error_code(e: &Error) -> i32 {
    match e {
        Error::Syntax { .. } | Error::InvalidArgument(_) | Error::IndexOutOfRange(_) | Error::BoundExceeded(_) => EXIT_USAGE,
        _ => EXIT_INTERNAL,
    }
}

/// Parses `args` (including the program name) and runs the command, returning the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Check(a) => check(&a, out),
        Command::Eval(a) => Evaluator::new(a.ctx.options())
            .and_then(|ev| ev.eval(&parse(&a.expr)?))
            .map(|v| {
                let _ = writeln!(out, "{v}");
                EXIT_OK
            }),
        Command::Apply(a) => Evaluator::new(a.ctx.options())
            .and_then(|ev| {
                let op = ev.eval(&parse(&a.expr)?)?;
                let poly = ev.poly(&parse(&a.to)?)?;
                Ok(op.apply(&poly))
            })
            .map(|v| {
                let _ = writeln!(out, "{v}");
                EXIT_OK
            }),
    };
    result.unwrap_or_else(|e| {
        let _ = writeln!(err, "error: {e}");
        error_code(&e)
    })
}

fn check(a: &CheckArgs, out: &mut dyn Write) -> crate::Result<i32> {
    let params = SuiteParams {
        n: a.n,
        l: a.l,
        order: a.order,
        max_degree: a.max_degree,
        shift: a.shift.into(),
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = a.jobs {
        pool = pool.num_threads(j.max(1));
    }
    let pool = pool.build().map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
    let reports = pool.install(|| suites::run(&a.suite, &params, !a.no_timings))?;
    let text = match a.format {
        Format::Text => reports.iter().map(|r| r.render_text()).collect::<String>(),
        Format::Json => {
            let json = if a.suite == "all" { serde_json::to_string_pretty(&reports) } else { serde_json::to_string_pretty(&reports[0]) };
            json.map_err(|e| Error::InvalidArgument(format!("serializing report: {e}")))? + "\n"
        }
    };
    let _ = out.write_all(text.as_bytes());
    Ok(verdict(&reports))
}

fn verdict(reports: &[SuiteReport]) -> i32 {
    if reports.iter().all(|r| r.passed()) {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::{run_checks, Check, Outcome, SuiteContext};

    #[test]
    fn exit_codes_are_distinct() {
        let ctx = SuiteContext { n: 1, l: 0, order: 0 };
        let pass = run_checks("demo", ctx, &[Check::new("ok", "demo", || Ok(Outcome::Pass))], false);
        let fail = run_checks("demo", ctx, &[Check::new("bad", "demo", || Ok(Outcome::Fail("1".into())))], false);
        assert_eq!(verdict(std::slice::from_ref(&pass)), EXIT_OK);
        assert_eq!(verdict(&[pass, fail]), EXIT_FAIL);
        assert_eq!(error_code(&Error::Syntax { line: 1, col: 1, message: String::new() }), EXIT_USAGE);
        assert_eq!(error_code(&Error::NotDivisible("x".into())), EXIT_INTERNAL);
        let codes = [EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL];
        assert!(codes.iter().enumerate().all(|(i, a)| codes[i + 1..].iter().all(|b| a != b)));
    }
}
