//! `mzv` — exact zeta values at non-positive integers, nested-sum
//! reduction, Bernoulli/Fourier machinery, and verification suites.
//!
//! Exit codes: 0 success (and all-pass for `verify`), 1 verification
//! failure, 2 usage error, 3 domain or pole error.

mod parse;
mod render;
mod verify;

use clap::{ArgGroup, Args, Parser, Subcommand};
use mzv_core::bernoulli::{bernoulli_bar, bernoulli_bar_poly, bernoulli_number, bernoulli_poly};
use mzv_core::exact::RationalPoly;
use mzv_core::fourier::{
    bernoulli_fourier_convergence, bernoulli_fourier_partial, hurwitz_fourier_partial,
    parseval_exact_negint, parseval_lhs_num, parseval_rhs, prop2_convergence, prop2_lhs,
    prop2_rhs_truncated, ConvergenceRow, FourierTruncation,
};
use mzv_core::numerics::{bernoulli_function, hurwitz_zeta_num, Complex64, EulerMaclaurinParams};
use mzv_core::zetasym::{
    hurwitz_neg_poly, hurwitz_neg_poly_shifted, mzv_eval_exact, mzv_eval_numeric, mzv_reduce,
    zeta_neg, MZVSpec,
};
use mzv_core::EvalError;
use num_traits::ToPrimitive;
use render::{format_complex, format_rational, CombinationJson, PolyJson};
use serde_json::json;

const FOURIER_CUTOFF_ENV: &str = "MZV_DEFAULT_CUTOFF";
const DEFAULT_FOURIER_CUTOFF: usize = 10_000;
const DEFAULT_LATTICE_CUTOFF: usize = 2_000;

#[derive(Parser)]
#[command(
    name = "mzv",
    version,
    about = "Exact zeta values at non-positive integers and their verification suites"
)]
struct Cli {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Bernoulli numbers and polynomials.
    Bernoulli {
        #[command(subcommand)]
        which: BernoulliCmd,
    },
    /// Riemann zeta at non-positive integers, exact.
    Zeta {
        #[command(subcommand)]
        which: ZetaCmd,
    },
    /// Hurwitz zeta at non-positive integers as an exact polynomial.
    Hurwitz {
        #[command(subcommand)]
        which: HurwitzCmd,
    },
    /// Reduce a nested zeta sum to shifted Riemann zeta terms.
    Reduce(ReduceArgs),
    /// Evaluate a nested zeta sum at a first argument.
    Eval(EvalArgs),
    /// The interpolating function s*zeta(s+1, alpha).
    Bfunc(BfuncArgs),
    /// Fourier partial sums of periodic Bernoulli/Hurwitz functions.
    Fourier {
        #[command(subcommand)]
        which: FourierCmd,
    },
    /// Mean of a product of Bernoulli polynomials, two routes.
    Prop2 {
        #[command(subcommand)]
        which: Prop2Cmd,
    },
    /// Parseval product-integral identity.
    Parseval(ParsevalArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Subcommand)]
enum BernoulliCmd {
    /// Print B_n (or the shifted number with --bar).
    Num {
        n: usize,
        /// Use the value at 1 instead of 0.
        #[arg(long)]
        bar: bool,
    },
    /// Print the degree-m polynomial (shifted by one with --bar).
    Poly {
        m: usize,
        #[arg(long)]
        bar: bool,
    },
}

#[derive(Subcommand)]
enum ZetaCmd {
    /// Print the exact value of zeta(-m).
    Neg { m: usize },
}

#[derive(Subcommand)]
enum HurwitzCmd {
    /// Print zeta(-m, a) as a polynomial in a (zeta(-m, a+1) with --shifted).
    Poly {
        m: usize,
        #[arg(long)]
        shifted: bool,
    },
}

#[derive(Args)]
struct ReduceArgs {
    /// Trailing arguments m2,m3,... (omit for the plain zeta function).
    #[arg(short = 'm', long = "args", value_delimiter = ',')]
    trailing: Vec<usize>,
}

#[derive(Args)]
#[command(group(ArgGroup::new("point").required(true).args(["m1", "s1"])))]
struct EvalArgs {
    /// Trailing arguments m2,m3,... (omit for the plain zeta function).
    #[arg(short = 'm', long = "args", value_delimiter = ',')]
    trailing: Vec<usize>,
    /// Evaluate exactly at s1 = -m1.
    #[arg(long)]
    m1: Option<usize>,
    /// Evaluate numerically at a complex s1 ("a", "a+bi", "a-bi").
    #[arg(long, value_parser = parse_complex_flag, allow_hyphen_values = true)]
    s1: Option<Complex64>,
}

#[derive(Args)]
struct BfuncArgs {
    /// Complex s ("a", "a+bi", "a-bi").
    #[arg(long, value_parser = parse_complex_flag, allow_hyphen_values = true)]
    s: Complex64,
    #[arg(long)]
    alpha: f64,
    /// Override the summation head length.
    #[arg(long)]
    head_terms: Option<usize>,
    /// Override the number of tail corrections.
    #[arg(long)]
    correction_order: Option<usize>,
}

#[derive(Subcommand)]
enum FourierCmd {
    /// Truncated Fourier series at a point, with its exact reference.
    #[command(group(ArgGroup::new("series").required(true).args(["index", "s"])))]
    Partial(FourierPartialArgs),
}

#[derive(Args)]
struct FourierPartialArgs {
    /// Bernoulli-series index m (series of B_m).
    #[arg(short = 'm', long)]
    index: Option<usize>,
    /// Hurwitz-series exponent s with Re s < 1.
    #[arg(long, value_parser = parse_complex_flag, allow_hyphen_values = true)]
    s: Option<Complex64>,
    #[arg(long)]
    alpha: f64,
    /// Truncation cutoff (default 10^4, or MZV_DEFAULT_CUTOFF).
    #[arg(short = 'N', long)]
    cutoff: Option<usize>,
    /// Emit CSV convergence rows at these cutoffs instead of one value.
    #[arg(long, value_delimiter = ',')]
    sweep: Option<Vec<usize>>,
}

#[derive(Subcommand)]
enum Prop2Cmd {
    /// Exact nested coefficient sum (equals the product-mean integral).
    Lhs(Prop2ListArgs),
    /// Truncated lattice sum converging to the same value.
    Rhs(Prop2RhsArgs),
}

#[derive(Args)]
struct Prop2ListArgs {
    /// Factor indices m1,m2,... (the product has factors B_{mi+1}).
    #[arg(short = 'm', long = "args", value_delimiter = ',', required = true)]
    m_list: Vec<usize>,
}

#[derive(Args)]
struct Prop2RhsArgs {
    /// Factor indices m1,m2,... (the product has factors B_{mi+1}).
    #[arg(short = 'm', long = "args", value_delimiter = ',', required = true)]
    m_list: Vec<usize>,
    /// Lattice cutoff per coordinate.
    #[arg(short = 'N', long, default_value_t = DEFAULT_LATTICE_CUTOFF)]
    cutoff: usize,
    /// Emit CSV convergence rows at these cutoffs instead of one value.
    #[arg(long, value_delimiter = ',')]
    sweep: Option<Vec<usize>>,
}

#[derive(Args)]
#[command(group(ArgGroup::new("mode").required(true).args(["s1", "exact"])))]
struct ParsevalArgs {
    /// First exponent (numeric mode).
    #[arg(long, value_parser = parse_complex_flag, allow_hyphen_values = true, requires = "s2")]
    s1: Option<Complex64>,
    /// Second exponent (numeric mode).
    #[arg(long, value_parser = parse_complex_flag, allow_hyphen_values = true)]
    s2: Option<Complex64>,
    /// Exact mode at s1 = -a, s2 = -b.
    #[arg(long, requires = "a", requires = "b")]
    exact: bool,
    #[arg(short)]
    a: Option<usize>,
    #[arg(short)]
    b: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: verify::Suite,
    /// Upper index bound for suites that range over m.
    #[arg(long)]
    max_m: Option<usize>,
}

fn parse_complex_flag(text: &str) -> Result<Complex64, String> {
    parse::parse_complex(text)
}

enum CliError {
    Usage(String),
    Eval(EvalError),
}

impl From<EvalError> for CliError {
    fn from(e: EvalError) -> Self {
        CliError::Eval(e)
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
        Err(CliError::Eval(err)) => {
            eprintln!("error: {err}");
            std::process::exit(3);
        }
    }
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let json = cli.json;
    match cli.command {
        Command::Bernoulli { which } => match which {
            BernoulliCmd::Num { n, bar } => {
                let value = if bar { bernoulli_bar(n) } else { bernoulli_number(n) };
                print_rational(json, &value);
            }
            BernoulliCmd::Poly { m, bar } => {
                let poly = if bar { bernoulli_bar_poly(m) } else { bernoulli_poly(m) };
                print_poly(json, &poly);
            }
        },
        Command::Zeta { which } => match which {
            ZetaCmd::Neg { m } => print_rational(json, &zeta_neg(m)),
        },
        Command::Hurwitz { which } => match which {
            HurwitzCmd::Poly { m, shifted } => {
                let poly = if shifted {
                    hurwitz_neg_poly_shifted(m)
                } else {
                    hurwitz_neg_poly(m)
                };
                print_poly(json, &poly);
            }
        },
        Command::Reduce(args) => {
            let combination = mzv_reduce(&MZVSpec::new(args.trailing));
            if json {
                emit_json(&CombinationJson::from_combination(&combination));
            } else {
                println!("{combination}");
            }
        }
        Command::Eval(args) => {
            let spec = MZVSpec::new(args.trailing);
            if let Some(m1) = args.m1 {
                print_rational(json, &mzv_eval_exact(&spec, m1));
            } else {
                let value = mzv_eval_numeric(&spec, args.s1.unwrap())?;
                print_complex(json, value);
            }
        }
        Command::Bfunc(args) => {
            let params = em_params(args.head_terms, args.correction_order, args.s)?;
            let value = bernoulli_function(args.s, args.alpha, &params)?;
            print_complex(json, value);
        }
        Command::Fourier { which } => match which {
            FourierCmd::Partial(args) => return fourier_partial(json, args),
        },
        Command::Prop2 { which } => match which {
            Prop2Cmd::Lhs(args) => print_rational(json, &prop2_lhs(&args.m_list)?),
            Prop2Cmd::Rhs(args) => {
                if let Some(sweep) = args.sweep {
                    print_csv(&prop2_convergence(&args.m_list, &sweep)?);
                } else {
                    let trunc = FourierTruncation::new(args.cutoff)?;
                    let value = prop2_rhs_truncated(&args.m_list, &trunc)?;
                    let reference = prop2_lhs(&args.m_list)?;
                    let error = (value - reference.to_f64().unwrap()).abs();
                    if json {
                        emit_json(&json!({
                            "cutoff": args.cutoff,
                            "value": value,
                            "reference": format_rational(&reference),
                            "abs_error": error,
                        }));
                    } else {
                        println!("cutoff = {}", args.cutoff);
                        println!("value = {value}");
                        println!("reference = {}", format_rational(&reference));
                        println!("abs_error = {error:e}");
                    }
                }
            }
        },
        Command::Parseval(args) => {
            if args.exact {
                let (lhs, rhs) = parseval_exact_negint(args.a.unwrap(), args.b.unwrap());
                if json {
                    emit_json(&json!({
                        "lhs": format_rational(&lhs),
                        "rhs": format_rational(&rhs),
                    }));
                } else {
                    println!("lhs = {}", format_rational(&lhs));
                    println!("rhs = {}", format_rational(&rhs));
                }
            } else {
                let (s1, s2) = (args.s1.unwrap(), args.s2.unwrap());
                let params = EulerMaclaurinParams::default();
                let lhs = parseval_lhs_num(s1, s2, &params)?;
                let rhs = parseval_rhs(s1, s2, &params)?;
                let error = (lhs - rhs).norm();
                if json {
                    emit_json(&json!({
                        "lhs": format_complex(lhs),
                        "rhs": format_complex(rhs),
                        "abs_error": error,
                    }));
                } else {
                    println!("lhs = {}", format_complex(lhs));
                    println!("rhs = {}", format_complex(rhs));
                    println!("abs_error = {error:e}");
                }
            }
        }
        Command::Verify(args) => {
            let report = verify::run_suite(args.suite, args.max_m);
            if json {
                emit_json(&report);
            } else {
                print!("{}", report.render_table());
            }
            return Ok(report.exit_code());
        }
    }
    Ok(0)
}

fn fourier_partial(json: bool, args: FourierPartialArgs) -> Result<i32, CliError> {
    if let Some(sweep) = args.sweep {
        let rows = match (args.index, args.s) {
            (Some(m), None) => bernoulli_fourier_convergence(m, args.alpha, &sweep)?,
            (None, Some(s)) => {
                let params = EulerMaclaurinParams::for_argument(s);
                let reference = hurwitz_zeta_num(s, args.alpha, &params)?.re;
                sweep
                    .iter()
                    .map(|&n| {
                        let trunc = FourierTruncation::new(n)?;
                        let approximation = hurwitz_fourier_partial(s, args.alpha, &trunc)?.re;
                        Ok(ConvergenceRow {
                            cutoff: n,
                            approximation,
                            reference,
                            abs_error: (approximation - reference).abs(),
                        })
                    })
                    .collect::<Result<Vec<_>, EvalError>>()?
            }
            _ => unreachable!("clap group enforces exactly one series"),
        };
        print_csv(&rows);
        return Ok(0);
    }

    let cutoff = match args.cutoff {
        Some(n) => n,
        None => default_fourier_cutoff()?,
    };
    let trunc = FourierTruncation::new(cutoff)?;
    match (args.index, args.s) {
        (Some(m), None) => {
            let value = bernoulli_fourier_partial(m, args.alpha, &trunc)?;
            if json {
                emit_json(&json!({ "cutoff": cutoff, "value": value }));
            } else {
                println!("cutoff = {cutoff}");
                println!("value = {value}");
            }
        }
        (None, Some(s)) => {
            let value = hurwitz_fourier_partial(s, args.alpha, &trunc)?;
            if json {
                emit_json(&json!({ "cutoff": cutoff, "value": format_complex(value) }));
            } else {
                println!("cutoff = {cutoff}");
                println!("value = {}", format_complex(value));
            }
        }
        _ => unreachable!("clap group enforces exactly one series"),
    }
    Ok(0)
}

fn default_fourier_cutoff() -> Result<usize, CliError> {
    match std::env::var(FOURIER_CUTOFF_ENV) {
        Err(_) => Ok(DEFAULT_FOURIER_CUTOFF),
        Ok(text) => text.parse().map_err(|_| {
            CliError::Usage(format!(
                "{FOURIER_CUTOFF_ENV} = `{text}` is not a positive integer"
            ))
        }),
    }
}

fn em_params(
    head_terms: Option<usize>,
    correction_order: Option<usize>,
    s: Complex64,
) -> Result<EulerMaclaurinParams, CliError> {
    let defaults = EulerMaclaurinParams::for_argument(s);
    Ok(EulerMaclaurinParams::new(
        head_terms.unwrap_or_else(|| defaults.head_terms()),
        correction_order.unwrap_or_else(|| defaults.correction_order()),
    )?)
}

fn print_rational(json: bool, value: &mzv_core::BigRational) {
    if json {
        emit_json(&json!({ "value": format_rational(value) }));
    } else {
        println!("{}", format_rational(value));
    }
}

fn print_complex(json: bool, value: Complex64) {
    if json {
        emit_json(&json!({ "value": format_complex(value) }));
    } else {
        println!("{}", format_complex(value));
    }
}

fn print_poly(json: bool, poly: &RationalPoly) {
    if json {
        emit_json(&PolyJson::from_poly(poly));
    } else {
        println!("{poly}");
    }
}

fn print_csv(rows: &[ConvergenceRow]) {
    println!("cutoff,approximation,reference,abs_error");
    for row in rows {
        println!(
            "{},{},{},{}",
            row.cutoff, row.approximation, row.reference, row.abs_error
        );
    }
}

fn emit_json<T: serde::Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("serializable"));
}
