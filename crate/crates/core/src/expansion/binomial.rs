//! Generalized binomial series `B_r(x)`, the solution of `B = 1 + x B^r`,
//! and the generalized Pascal tables `(m, n)_r = [x^n] B_r(x)^m`.

use num_traits::{One, Zero};

use super::cancelled_falling;
use crate::error::{Error, Result};
use crate::poly::MuPoly;
use crate::rational::{factorial, Rational};
use crate::series::Series;

/// `[x^n] B_r(x)^m = m/(m + r n) C(m + r n, n)` as a polynomial in `m`,
/// i.e. `m (m+rn-1)(m+rn-2)...(m+rn-n+1) / n!`.
fn coefficient_poly(r: usize, n: usize) -> MuPoly {
    cancelled_falling(r * n, n, factorial(n as u64).recip()).expand()
}

/// `[x^n] B_r(x)^m` for an integer `m` (negative powers included).
pub fn gbs_coefficient(r: usize, m: i64, n: usize) -> Result<Rational> {
    if r == 0 {
        return Err(Error::InvalidParameter);
    }
    Ok(coefficient_poly(r, n).eval_int(m))
}

/// `B_r(x)^m` through `x^order`.
pub fn gbs(r: usize, m: i64, order: usize) -> Result<Series> {
    if r == 0 {
        return Err(Error::InvalidParameter);
    }
    Ok(Series::from_fn(order, |n| {
        coefficient_poly(r, n).eval_int(m)
    }))
}

/// `B_r(x)^m` with symbolic `m`.
pub fn gbs_symbolic(r: usize, order: usize) -> Result<Series<MuPoly>> {
    if r == 0 {
        return Err(Error::InvalidParameter);
    }
    Ok(Series::from_fn(order, |n| coefficient_poly(r, n)))
}

/// Rows `m = 0..=rows`, columns `n = 0..cols` of `(m, n)_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PascalTable {
    pub r: usize,
    rows: Vec<Vec<Rational>>,
}

impl PascalTable {
    pub fn get(&self, m: usize, n: usize) -> Option<&Rational> {
        self.rows.get(m).and_then(|row| row.get(n))
    }

    /// Row `m`: `(m, 0)_r, (m, 1)_r, ...`.
    pub fn row(&self, m: usize) -> Option<&[Rational]> {
        self.rows.get(m).map(Vec::as_slice)
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }
}

/// Fills the table with `(m,n)_r = (m-1,n)_r + (m+r-1,n-1)_r`,
/// `(m,0)_r = 1` and `(0,n)_r = 0` for `n > 0`.
///
/// Column `n` reads `r - 1` rows past the ones it fills in column `n - 1`,
/// so the leftmost columns are computed further down than requested.
pub fn gpt(r: usize, rows: usize, cols: usize) -> Result<PascalTable> {
    if r == 0 {
        return Err(Error::InvalidParameter);
    }
    if cols == 0 {
        return Ok(PascalTable {
            r,
            rows: vec![Vec::new(); rows + 1],
        });
    }
    let depth = |n: usize| rows + (cols - 1 - n) * (r - 1);
    let mut columns: Vec<Vec<Rational>> = Vec::with_capacity(cols);
    columns.push(vec![Rational::one(); depth(0) + 1]);
    for n in 1..cols {
        let prev = &columns[n - 1];
        let mut col = vec![Rational::zero(); depth(n) + 1];
        for m in 1..col.len() {
            col[m] = &col[m - 1] + &prev[m + r - 1];
        }
        columns.push(col);
    }
    let table = (0..=rows)
        .map(|m| columns.iter().map(|col| col[m].clone()).collect())
        .collect();
    Ok(PascalTable { r, rows: table })
}
