//! Parsing of coefficient lists, builtin names and powers.

use std::fmt;
use std::str::FromStr;

use riordan::named::named_series;
use riordan::rational::parse;
use riordan::sequences::Coefficients;
use riordan::{Rational, Series};

use crate::CliError;

/// Order used for builtin series when `--order` is absent.
pub const DEFAULT_ORDER: usize = 10;

/// A coefficient argument: an explicit list, a builtin name, or symbolic
/// letters such as `b0,b1`.
#[derive(Clone, Debug, PartialEq)]
pub enum Input {
    Values(Vec<Rational>),
    Named(String),
    Letters(char),
}

impl FromStr for Input {
    type Err = String;

    fn from_str(text: &str) -> Result<Self, String> {
        let text = text.trim();
        if named_series(text, 0).is_some() {
            return match named_series(text, 0) {
                Some(Ok(_)) => Ok(Input::Named(text.to_string())),
                _ => Err(format!("invalid builtin series '{text}'")),
            };
        }
        let items: Vec<&str> = text.split(',').map(str::trim).collect();
        if let Some(letter) = letters(&items) {
            return Ok(Input::Letters(letter));
        }
        items
            .iter()
            .map(|item| parse(item).ok_or_else(|| format!("malformed rational '{item}'")))
            .collect::<Result<Vec<_>, _>>()
            .map(Input::Values)
    }
}

/// `b0,b1,...` or `a1,a2,...`: every item is the same letter with an index.
fn letters(items: &[&str]) -> Option<char> {
    let first = items.first()?.chars().next()?;
    if first != 'a' && first != 'b' {
        return None;
    }
    let all = items.iter().all(|item| {
        let mut chars = item.chars();
        chars.next() == Some(first) && {
            let digits = chars.as_str();
            !digits.is_empty() && digits.chars().all(|c| c.is_ascii_digit())
        }
    });
    all.then_some(first)
}

impl Input {
    /// The input as a series. Explicit lists are known through their last
    /// entry, truncated to `order` when one is given.
    pub fn series(&self, order: Option<usize>) -> Result<Series, CliError> {
        match self {
            Input::Values(values) => {
                if values.is_empty() {
                    return Err(CliError::Usage("empty coefficient list".into()));
                }
                let series = Series::new(values.clone());
                Ok(match order {
                    Some(n) => series.truncate(n),
                    None => series,
                })
            }
            Input::Named(name) => {
                let order = order.unwrap_or(DEFAULT_ORDER);
                named_series(name, order)
                    .expect("validated while parsing")
                    .map_err(CliError::Math)
            }
            Input::Letters(_) => Err(CliError::Usage(
                "symbolic letters need the expand verb".into(),
            )),
        }
    }

    /// The input as a sequence of letters. Lists are exact (zero past the
    /// end); builtin names are known only through `order`.
    pub fn coefficients(&self, order: Option<usize>) -> Result<Coefficients, CliError> {
        match self {
            Input::Values(values) => Ok(Coefficients::exact(values.clone())),
            Input::Named(_) => Ok(Coefficients::truncated(self.series(order)?.into_coeffs())),
            Input::Letters(_) => Err(CliError::Usage(
                "symbolic letters need the expand verb".into(),
            )),
        }
    }
}

/// `--power`: an integer or the symbol `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Power {
    Int(i64),
    Symbolic,
}

impl FromStr for Power {
    type Err = String;

    fn from_str(text: &str) -> Result<Self, String> {
        match text.trim() {
            "m" => Ok(Power::Symbolic),
            other => other
                .parse()
                .map(Power::Int)
                .map_err(|_| format!("power must be an integer or 'm', got '{other}'")),
        }
    }
}

impl fmt::Display for Power {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Power::Int(e) => write!(f, "{e}"),
            Power::Symbolic => f.write_str("m"),
        }
    }
}
