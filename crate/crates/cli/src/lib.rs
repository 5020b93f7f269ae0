//! `riordan` command line: conversions between `g(x)` and its A- and
//! B-sequences, partition expansions of `g(x)^m`, generalized binomial
//! series and Pascal-like tables.
//!
//! Exit status is 0 on success, 1 on a usage error and 2 when the
//! requested mathematics fails (for example `b-from-g` on a series that is
//! not a pseudo-involution).

pub mod input;
pub mod output;

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand};

use riordan::expansion::{expand_a, expand_b, gbs, gbs_symbolic, gpt, sym_coeff, ExpansionTable};
use riordan::factorization::{b_from_factorization, factorize};
use riordan::sequences::{
    a_from_g, b_from_g, composition_array, g_from_a, g_from_b, verify_a_recurrence,
    verify_b_recurrence, ASequence, BSequence, Coefficients,
};
use riordan::{is_pseudo_involution, Error, MuPoly, Rational, RiordanArray, Series};

use input::{Input, Power, DEFAULT_ORDER};
use output::Format;

#[derive(Debug, Parser)]
#[command(name = "riordan", version, about = "Exact Riordan-array calculus")]
pub struct Cli {
    #[command(subcommand)]
    pub verb: Verb,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct OrderArg {
    /// Truncation order N (coefficients 0..=N).
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub order: Option<u64>,
}

impl OrderArg {
    fn get(&self) -> Option<usize> {
        self.order.map(|n| n as usize)
    }

    fn or_default(&self) -> usize {
        self.get().unwrap_or(DEFAULT_ORDER)
    }
}

#[derive(Debug, Subcommand)]
pub enum Verb {
    /// g(x) (or g^power) from a B-sequence.
    GFromB {
        #[arg(long, allow_hyphen_values = true)]
        b: Input,
        #[command(flatten)]
        order: OrderArg,
        #[arg(long, allow_hyphen_values = true)]
        power: Option<Power>,
    },
    /// g(x) (or g^power) from an A-sequence.
    GFromA {
        #[arg(long, allow_hyphen_values = true)]
        a: Input,
        #[command(flatten)]
        order: OrderArg,
        #[arg(long, allow_hyphen_values = true)]
        power: Option<Power>,
    },
    /// B-sequence of a pseudo-involution (1, x g).
    BFromG {
        #[arg(long, allow_hyphen_values = true)]
        g: Input,
        #[command(flatten)]
        order: OrderArg,
    },
    /// A-sequence of (1, x g).
    AFromG {
        #[arg(long, allow_hyphen_values = true)]
        g: Input,
        #[command(flatten)]
        order: OrderArg,
    },
    /// Partition expansion of [x^n] g^m.
    Expand {
        #[arg(
            long,
            conflicts_with = "a",
            required_unless_present = "a",
            allow_hyphen_values = true
        )]
        b: Option<Input>,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<Input>,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, default_value = "m", allow_hyphen_values = true)]
        power: Power,
    },
    /// Whether (1, x g) is a pseudo-involution.
    CheckPseudo {
        #[arg(long, allow_hyphen_values = true)]
        g: Input,
        #[command(flatten)]
        order: OrderArg,
    },
    /// Square-root factorization of a pseudo-involution.
    Factorize {
        #[arg(long, allow_hyphen_values = true)]
        g: Input,
        #[command(flatten)]
        order: OrderArg,
    },
    /// Generalized binomial series B_r(x)^m.
    Gbs {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        r: u64,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        m: Power,
        #[command(flatten)]
        order: OrderArg,
    },
    /// Generalized Pascal table (m, n)_r for m = 1..=rows.
    Gpt {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        r: u64,
        #[arg(long, default_value_t = 5)]
        rows: usize,
        #[arg(long, default_value_t = 5)]
        cols: usize,
    },
    /// Rows 0..rows of the Riordan array (f, x g).
    Matrix {
        #[arg(long, allow_hyphen_values = true)]
        f: Option<Input>,
        #[arg(long, allow_hyphen_values = true)]
        g: Input,
        #[arg(long, default_value_t = 5)]
        rows: usize,
    },
    /// Consistency checks for a B- or A-sequence.
    Verify {
        #[arg(
            long,
            conflicts_with = "a",
            required_unless_present = "a",
            allow_hyphen_values = true
        )]
        b: Option<Input>,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<Input>,
        #[command(flatten)]
        order: OrderArg,
    },
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Math(Error),
    /// A check ran and failed; the report still goes to stdout.
    Failed(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Math(e)
    }
}

/// What a run printed and how it exited.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: u8,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (program name first) and executes the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    status: 1,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    status: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match execute(&cli) {
        Ok(stdout) => Outcome {
            status: 0,
            stdout,
            stderr: String::new(),
        },
        Err(CliError::Usage(msg)) => Outcome {
            status: 1,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(CliError::Math(e)) => Outcome {
            status: 2,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
        Err(CliError::Failed(report)) => Outcome {
            status: 2,
            stdout: report,
            stderr: "error: verification failed\n".into(),
        },
    }
}

fn power_series(g: &Series, power: Option<Power>, format: Format) -> Result<String, CliError> {
    Ok(match power {
        None => output::series(g.coeffs(), format),
        Some(Power::Int(e)) => output::series(g.pow_int(e)?.coeffs(), format),
        Some(Power::Symbolic) => output::symbolic_series(&g.pow_symbolic()?, format),
    })
}

fn execute(cli: &Cli) -> Result<String, CliError> {
    let format = cli.format;
    match &cli.verb {
        Verb::GFromB { b, order, power } => {
            let b = BSequence(b.coefficients(order.get())?);
            power_series(&g_from_b(&b, order.or_default())?, *power, format)
        }
        Verb::GFromA { a, order, power } => {
            let a = ASequence(a.coefficients(order.get())?);
            power_series(&g_from_a(&a, order.or_default())?, *power, format)
        }
        Verb::BFromG { g, order } => {
            let b = b_from_g(&g.series(order.get())?)?;
            Ok(output::series(b.values(), format))
        }
        Verb::AFromG { g, order } => {
            let a = a_from_g(&g.series(order.get())?)?;
            Ok(output::series(a.values(), format))
        }
        Verb::Expand { b, a, n, power } => {
            expand(b.as_ref(), a.as_ref(), *n as usize, *power, format)
        }
        Verb::CheckPseudo { g, order } => {
            let verdict = is_pseudo_involution(&g.series(order.get())?)?;
            Ok(format!("{verdict}\n"))
        }
        Verb::Factorize { g, order } => {
            let g = g.series(order.get())?;
            let factors = factorize(&g)?;
            let b = b_from_factorization(&factors)?;
            Ok(output::labelled(
                &[
                    ("sqrt_g", factors.sqrt_g.coeffs().to_vec()),
                    ("h", factors.h.coeffs().to_vec()),
                    ("s", factors.s.coeffs().to_vec()),
                    ("b", b.values().to_vec()),
                ],
                format,
            ))
        }
        Verb::Gbs { r, m, order } => {
            let (r, order) = (*r as usize, order.or_default());
            Ok(match m {
                Power::Int(m) => output::series(gbs(r, *m, order)?.coeffs(), format),
                Power::Symbolic => output::symbolic_series(&gbs_symbolic(r, order)?, format),
            })
        }
        Verb::Gpt { r, rows, cols } => {
            let table = gpt(*r as usize, *rows, *cols)?;
            Ok(output::table(&table.rows()[1..], format))
        }
        Verb::Matrix { f, g, rows } => {
            if *rows == 0 {
                return Err(CliError::Usage("--rows must be at least 1".into()));
            }
            let order = Some(rows - 1);
            let g = g.series(order)?;
            let f = match f {
                Some(f) => f.series(order)?,
                None => Series::one(g.order() + 1),
            };
            let array = RiordanArray::generalized(f, g);
            let shown = (*rows).min(array.order() + 1);
            let table = (0..shown)
                .map(|n| array.row(n))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(output::table(&table, format))
        }
        Verb::Verify { b, a, order } => {
            let order = order.or_default();
            let results = match (b, a) {
                (Some(b), _) => verify_b(&BSequence(b.coefficients(Some(order))?), order)?,
                (None, Some(a)) => verify_a(&ASequence(a.coefficients(Some(order))?), order)?,
                (None, None) => unreachable!("clap requires one of --b, --a"),
            };
            let text = output::checks(&results, format);
            if results.iter().all(|(_, ok)| *ok) {
                Ok(text)
            } else {
                Err(CliError::Failed(text))
            }
        }
    }
}

fn expand(
    b: Option<&Input>,
    a: Option<&Input>,
    n: usize,
    power: Power,
    format: Format,
) -> Result<String, CliError> {
    let (input, table): (&Input, ExpansionTable) = match (b, a) {
        (Some(b), _) => (b, expand_b(n)?),
        (None, Some(a)) => (a, expand_a(n)?),
        (None, None) => unreachable!("clap requires one of --b, --a"),
    };
    match input {
        Input::Letters(letter) => {
            if *letter
                != table
                    .letters
                    .symbol()
                    .chars()
                    .next()
                    .expect("nonempty symbol")
            {
                return Err(CliError::Usage(format!(
                    "letters {letter}_i do not match the sequence flag"
                )));
            }
            Ok(output::expansion(&table, power, format))
        }
        _ => {
            let values: Coefficients = input.coefficients(Some(n))?;
            let total: MuPoly = table.sum(&values)?;
            Ok(match power {
                Power::Symbolic => output::poly(&total, format),
                Power::Int(m) => output::scalar(&total.eval_int(m), format),
            })
        }
    }
}

/// Every requested coefficient agrees with the first `len` entries of `known`.
fn prefix_matches(got: &Coefficients, known: &Coefficients) -> bool {
    let top = got.values().len();
    (0..top).all(|i| match known.get(i) {
        Some(v) => Some(v) == got.get(i),
        None => true,
    })
}

fn expansions_agree(
    table_for: impl Fn(usize) -> Result<ExpansionTable, Error>,
    values: &Coefficients,
    g: &Series,
) -> Result<bool, Error> {
    for n in 1..=g.order() {
        if table_for(n)?.sum(values)? != sym_coeff(g, n)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn verify_b(b: &BSequence, order: usize) -> Result<Vec<(&'static str, bool)>, CliError> {
    let g = g_from_b(b, order)?;
    let pseudo = is_pseudo_involution(&g)?;
    let recovered = b_from_g(&g)?;
    let factored = b_from_factorization(&factorize(&g)?)?;
    Ok(vec![
        ("pseudo-involution", pseudo),
        ("b-from-g round trip", prefix_matches(&recovered, b)),
        ("factorization", factored == recovered),
        (
            "b recurrence",
            verify_b_recurrence(&composition_array(&g)?, b)?,
        ),
        ("b-expansion", expansions_agree(expand_b, b, &g)?),
    ])
}

fn verify_a(a: &ASequence, order: usize) -> Result<Vec<(&'static str, bool)>, CliError> {
    if a.get(0) != Some(Rational::from_integer(1.into())) {
        return Err(CliError::Math(Error::ConstantNotOne));
    }
    let g = g_from_a(a, order)?;
    let recovered = a_from_g(&g)?;
    Ok(vec![
        ("a-from-g round trip", prefix_matches(&recovered, a)),
        (
            "a recurrence",
            verify_a_recurrence(&composition_array(&g)?, a)?,
        ),
        ("a-expansion", expansions_agree(expand_a, a, &g)?),
    ])
}
