//! Plain, JSON and CSV renderings. Every renderer ends with a newline.

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use riordan::expansion::{ExpansionTable, ExpansionTerm};
use riordan::{MuPoly, Rational, Series};

use crate::input::Power;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

/// JSON form of a series or sequence; rationals are `p/q` strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub order: usize,
    pub coefficients: Vec<String>,
}

impl SeriesJson {
    pub fn new(values: &[Rational]) -> Self {
        SeriesJson {
            order: values.len().saturating_sub(1),
            coefficients: strings(values),
        }
    }

    pub fn to_series(&self) -> Option<Series> {
        let values = self
            .coefficients
            .iter()
            .map(|c| riordan::rational::parse(c))
            .collect::<Option<Vec<_>>>()?;
        (values.len() == self.order + 1).then(|| Series::new(values))
    }
}

/// Series with polynomial coefficients, each a dense list constant term first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolicSeriesJson {
    pub order: usize,
    pub coefficients: Vec<Vec<String>>,
}

/// One partition of an expansion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionRow {
    pub exponents: Vec<u32>,
    pub n: usize,
    pub k: usize,
    pub q: usize,
    pub coefficient_poly: Vec<String>,
    /// Informational factored form.
    pub coefficient: String,
    /// The coefficient at an integer power, when one was requested.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub rows: Vec<Vec<String>>,
}

pub fn strings(values: &[Rational]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

fn json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string(value).expect("plain data serializes");
    text.push('\n');
    text
}

pub fn series(values: &[Rational], format: Format) -> String {
    match format {
        Format::Plain => format!("{}\n", strings(values).join(", ")),
        Format::Json => json(&SeriesJson::new(values)),
        Format::Csv => format!("{}\n", strings(values).join(",")),
    }
}

pub fn symbolic_series(s: &Series<MuPoly>, format: Format) -> String {
    match format {
        Format::Plain => s
            .coeffs()
            .iter()
            .enumerate()
            .map(|(n, c)| format!("[x^{n}] {c}\n"))
            .collect(),
        Format::Json => json(&SymbolicSeriesJson {
            order: s.order(),
            coefficients: s.coeffs().iter().map(|c| strings(c.coeffs())).collect(),
        }),
        Format::Csv => s
            .coeffs()
            .iter()
            .map(|c| format!("{}\n", dense(c).join(",")))
            .collect(),
    }
}

/// Dense coefficient list; the zero polynomial is `[0]`.
fn dense(p: &MuPoly) -> Vec<String> {
    if p.coeffs().is_empty() {
        vec!["0".to_string()]
    } else {
        strings(p.coeffs())
    }
}

pub fn poly(p: &MuPoly, format: Format) -> String {
    match format {
        Format::Plain => format!("{p}\n"),
        Format::Json => json(&dense(p)),
        Format::Csv => format!("{}\n", dense(p).join(",")),
    }
}

pub fn scalar(value: &Rational, format: Format) -> String {
    match format {
        Format::Json => json(&value.to_string()),
        _ => format!("{value}\n"),
    }
}

pub fn expansion_rows(table: &ExpansionTable, power: Power) -> Vec<ExpansionRow> {
    table
        .terms
        .iter()
        .map(|term: &ExpansionTerm| {
            let p = term.polynomial();
            ExpansionRow {
                exponents: term.exponents.clone(),
                n: term.n,
                k: term.k,
                q: term.q,
                coefficient_poly: dense(&p),
                coefficient: term.coefficient.to_string(),
                value: match power {
                    Power::Int(m) => Some(p.eval_int(m).to_string()),
                    Power::Symbolic => None,
                },
            }
        })
        .collect()
}

pub fn expansion(table: &ExpansionTable, power: Power, format: Format) -> String {
    let rows = expansion_rows(table, power);
    match format {
        Format::Json => json(&rows),
        Format::Plain => table
            .terms
            .iter()
            .zip(&rows)
            .map(|(term, row)| {
                let shown = row.value.as_ref().unwrap_or(&row.coefficient);
                format!(
                    "{} : {}  [k={}, q={}]\n",
                    term.monomial(table.letters),
                    shown,
                    row.k,
                    row.q
                )
            })
            .collect(),
        Format::Csv => rows
            .iter()
            .map(|row| {
                let exponents: Vec<String> =
                    row.exponents.iter().map(ToString::to_string).collect();
                let mut fields = vec![
                    exponents.join(";"),
                    row.n.to_string(),
                    row.k.to_string(),
                    row.q.to_string(),
                    row.coefficient_poly.join(";"),
                ];
                fields.extend(row.value.clone());
                format!("{}\n", fields.join(","))
            })
            .collect(),
    }
}

pub fn table(rows: &[Vec<Rational>], format: Format) -> String {
    match format {
        Format::Plain => rows
            .iter()
            .map(|r| format!("{}\n", strings(r).join(" ")))
            .collect(),
        Format::Json => json(&TableJson {
            rows: rows.iter().map(|r| strings(r)).collect(),
        }),
        Format::Csv => rows
            .iter()
            .map(|r| format!("{}\n", strings(r).join(",")))
            .collect(),
    }
}

/// Several labelled series, e.g. the factors of a pseudo-involution.
pub fn labelled(items: &[(&str, Vec<Rational>)], format: Format) -> String {
    match format {
        Format::Plain => items
            .iter()
            .map(|(label, values)| format!("{label}: {}\n", strings(values).join(", ")))
            .collect(),
        Format::Json => {
            let map: serde_json::Map<String, serde_json::Value> = items
                .iter()
                .map(|(label, values)| {
                    let value = serde_json::to_value(SeriesJson::new(values)).expect("plain data");
                    (label.to_string(), value)
                })
                .collect();
            json(&map)
        }
        Format::Csv => items
            .iter()
            .map(|(label, values)| format!("{label},{}\n", strings(values).join(",")))
            .collect(),
    }
}

/// `name: pass|fail` lines of a verification run.
pub fn checks(results: &[(&str, bool)], format: Format) -> String {
    let word = |ok: bool| if ok { "pass" } else { "fail" };
    match format {
        Format::Plain => results
            .iter()
            .map(|(name, ok)| format!("{name}: {}\n", word(*ok)))
            .collect(),
        Format::Json => {
            let map: serde_json::Map<String, serde_json::Value> = results
                .iter()
                .map(|(name, ok)| (name.to_string(), (*ok).into()))
                .collect();
            json(&map)
        }
        Format::Csv => results
            .iter()
            .map(|(name, ok)| format!("{name},{}\n", word(*ok)))
            .collect(),
    }
}
