//! Riordan arrays `(f(x), x g(x))`.
//!
//! Column `m` of the array has generating function `f(x) (x g(x))^m`.
//! Columns are computed on first access and cached.

use std::sync::OnceLock;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::MuPoly;
use crate::rational::Rational;
use crate::series::Series;

#[derive(Clone, Debug)]
pub struct RiordanArray {
    f: Series,
    g: Series,
    columns: Vec<OnceLock<Vec<Rational>>>,
}

impl RiordanArray {
    /// Group element `(f, x g)` with `f_0 != 0` and `g_0 != 0`.
    pub fn new(f: Series, g: Series) -> Result<Self> {
        if f.constant().is_zero() {
            return Err(Error::InvalidArray("f(0) must be nonzero"));
        }
        if g.constant().is_zero() {
            return Err(Error::InvalidArray("g(0) must be nonzero"));
        }
        Ok(Self::build(f, g))
    }

    /// Array `(f, x g)` with no restriction on `g_0`. Such arrays still act
    /// on series and have well-defined entries, but are not invertible.
    pub fn generalized(f: Series, g: Series) -> Self {
        Self::build(f, g)
    }

    /// Array written in the `(f(x), G(x))` convention with `G_0 = 0` and
    /// `G_1 != 0`; stored as `(f, x (G/x))`.
    pub fn from_raw(f: Series, big_g: Series) -> Result<Self> {
        if !big_g.constant().is_zero() {
            return Err(Error::InvalidArray("G(0) must be zero"));
        }
        let g = big_g
            .shift_down(1)
            .map_err(|_| Error::InvalidArray("G must have order >= 1"))?;
        Self::new(f, g)
    }

    /// The identity `(1, x)` at the given order.
    pub fn identity(order: usize) -> Self {
        Self::build(Series::one(order), Series::one(order))
    }

    fn build(f: Series, g: Series) -> Self {
        let order = f.order().min(g.order() + 1);
        let f = f.truncate(order);
        let g = g.truncate(order.saturating_sub(1));
        let columns = (0..=order).map(|_| OnceLock::new()).collect();
        RiordanArray { f, g, columns }
    }

    pub fn f(&self) -> &Series {
        &self.f
    }

    pub fn g(&self) -> &Series {
        &self.g
    }

    /// Rows and columns `0..=order` are known.
    pub fn order(&self) -> usize {
        self.columns.len() - 1
    }

    /// `x g(x)`, known through `x^{order}`.
    pub fn xg(&self) -> Series {
        self.g.shift_up(1).truncate(self.order())
    }

    pub fn is_proper(&self) -> bool {
        !self.f.constant().is_zero() && !self.g.constant().is_zero()
    }

    fn column(&self, m: usize) -> &[Rational] {
        self.columns[m].get_or_init(|| {
            let order = self.order();
            if m == 0 {
                return self.f.coeffs().to_vec();
            }
            let prev = Series::new(self.column(m - 1).to_vec());
            // f (xg)^m = x * (f (xg)^{m-1} * g)
            prev.mul(&self.g).shift_up(1).truncate(order).into_coeffs()
        })
    }

    /// `d_{n,m} = [x^n] f(x) (x g(x))^m`.
    pub fn entry(&self, n: usize, m: usize) -> Result<Rational> {
        let order = self.order();
        for index in [n, m] {
            if index > order {
                return Err(Error::BeyondOrder { index, order });
            }
        }
        if m > n {
            return Ok(Rational::zero());
        }
        Ok(self.column(m)[n].clone())
    }

    /// Row `n` as a list `d_{n,0}, ..., d_{n,n}`.
    pub fn row(&self, n: usize) -> Result<Vec<Rational>> {
        (0..=n).map(|m| self.entry(n, m)).collect()
    }

    /// Column `m` as a series known through `x^{order}`.
    pub fn column_series(&self, m: usize) -> Result<Series> {
        if m > self.order() {
            return Err(Error::BeyondOrder {
                index: m,
                order: self.order(),
            });
        }
        Ok(Series::new(self.column(m).to_vec()))
    }

    /// Row polynomial `sum_m d_{n,m} m^k` in the symbolic variable.
    pub fn row_poly(&self, n: usize) -> Result<MuPoly> {
        Ok(MuPoly::new(self.row(n)?))
    }

    /// Product `(f1, x g1) (f2, x g2) = (f1 f2(x g1), x g1 g2(x g1))`.
    pub fn multiply(&self, rhs: &RiordanArray) -> Result<RiordanArray> {
        let u = self.xg();
        let f = self.f.mul(&rhs.f.compose(&u)?);
        let g = self.g.mul(&rhs.g.compose(&u)?);
        Ok(Self::build(f, g))
    }

    /// Group inverse: `(1 / f(v), v / x)` where `v` reverts `x g`.
    pub fn inverse(&self) -> Result<RiordanArray> {
        if !self.is_proper() {
            return Err(Error::InvalidArray("only group elements are invertible"));
        }
        let v = self.g.shift_up(1).reversion()?;
        let f = self.f.compose(&v)?.mul_inverse()?;
        let g = v.shift_down(1)?;
        Ok(Self::build(f, g))
    }

    /// Action on a series: `f(x) a(x g(x))`.
    pub fn apply(&self, a: &Series) -> Result<Series> {
        Ok(self.f.mul(&a.compose(&self.xg())?))
    }
}

/// Entrywise comparison of the defining pair up to the common order.
impl PartialEq for RiordanArray {
    fn eq(&self, other: &Self) -> bool {
        let order = self.order().min(other.order());
        self.f.truncate(order) == other.f.truncate(order)
            && self.xg().truncate(order) == other.xg().truncate(order)
    }
}

/// True when `(1, x g)` is a pseudo-involution: the compositional inverse of
/// `x g(x)` is `x g(-x)`. Requires `g_0 = 1`.
pub fn is_pseudo_involution(g: &Series) -> Result<bool> {
    if !g.constant().is_one() {
        return Err(Error::Unsupported);
    }
    let xg = g.shift_up(1);
    Ok(xg.reversion()? == g.subst_neg().shift_up(1))
}
