//! A- and B-sequences of Riordan arrays.
//!
//! For a group element `(1, x g)` the A-sequence satisfies `g = A(x g)`; for a
//! pseudo-involution the B-sequence satisfies `g = 1 + x g B(x^2 g)`.

use std::ops::Deref;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::riordan::{is_pseudo_involution, RiordanArray};
use crate::series::Series;

/// A coefficient list that is either an exact polynomial or known only
/// through index `bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coefficients {
    values: Vec<Rational>,
    bound: Option<usize>,
}

impl Coefficients {
    /// Finite sequence: every coefficient past the list is zero.
    pub fn exact(values: Vec<Rational>) -> Self {
        Coefficients {
            values,
            bound: None,
        }
    }

    /// Sequence known through `values.len() - 1` only. An empty list is
    /// the exact zero sequence.
    pub fn truncated(values: Vec<Rational>) -> Self {
        Coefficients {
            bound: values.len().checked_sub(1),
            values,
        }
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// Highest trusted index, `None` for exact sequences.
    pub fn bound(&self) -> Option<usize> {
        self.bound
    }

    pub fn is_exact(&self) -> bool {
        self.bound.is_none()
    }

    /// Coefficient `i`, or `None` past the known bound.
    pub fn get(&self, i: usize) -> Option<Rational> {
        match self.values.get(i) {
            Some(v) => Some(v.clone()),
            None if self.is_exact() => Some(Rational::zero()),
            None => None,
        }
    }

    /// Generating function as a series of order `min(order, bound)`.
    pub fn to_series(&self, order: usize) -> Series {
        let order = self.bound.map_or(order, |b| b.min(order));
        Series::from_poly(self.values.clone(), order)
    }
}

/// Coefficients `a_0, a_1, ...` of `A(x)` with `g(x) = A(x g(x))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ASequence(pub Coefficients);

/// Coefficients `b_0, b_1, ...` of `B(x)` with `g(x) = 1 + x g(x) B(x^2 g(x))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BSequence(pub Coefficients);

impl ASequence {
    pub fn exact(values: Vec<Rational>) -> Self {
        ASequence(Coefficients::exact(values))
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Self::exact(values.iter().map(|&v| crate::rational::int(v)).collect())
    }
}

impl BSequence {
    pub fn exact(values: Vec<Rational>) -> Self {
        BSequence(Coefficients::exact(values))
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Self::exact(values.iter().map(|&v| crate::rational::int(v)).collect())
    }

    /// Highest order of `g` this sequence determines: `b_i` first enters at
    /// `x^{2i+1}`.
    pub fn max_order(&self) -> Option<usize> {
        self.0.bound().map(|b| 2 * b + 2)
    }
}

impl Deref for ASequence {
    type Target = Coefficients;
    fn deref(&self) -> &Coefficients {
        &self.0
    }
}

impl Deref for BSequence {
    type Target = Coefficients;
    fn deref(&self) -> &Coefficients {
        &self.0
    }
}

/// `A = g o (x g)^{<-1>}`, known through the order of `g`.
pub fn a_from_g(g: &Series) -> Result<ASequence> {
    if g.constant().is_zero() {
        return Err(Error::NotInvertible);
    }
    let v = g.shift_up(1).reversion()?;
    let a = g.compose(&v)?;
    Ok(ASequence(Coefficients::truncated(a.into_coeffs())))
}

/// The unique `g` with `g = A(x g)`, by iterating `g <- A(x g)` from `g = a_0`.
pub fn g_from_a(a: &ASequence, order: usize) -> Result<Series> {
    Ok(g_from_a_iterates(a, order)?
        .pop()
        .expect("at least the seed"))
}

/// Every iterate of the fixed point; iterate `k` is exact through `x^k`.
pub fn g_from_a_iterates(a: &ASequence, order: usize) -> Result<Vec<Series>> {
    let a_series = a.to_series(order);
    if a_series.constant().is_zero() {
        return Err(Error::NotInvertible);
    }
    let order = a_series.order();
    let mut g = Series::from_poly(vec![a_series.constant().clone()], order);
    let mut iterates = vec![g.clone()];
    for _ in 0..order {
        g = a_series.compose(&g.shift_up(1).truncate(order))?;
        iterates.push(g.clone());
    }
    Ok(iterates)
}

/// B-sequence of the pseudo-involution `(1, x g)`, known through index
/// `floor((N - 1) / 2)` for `g` of order `N`.
///
/// Solves `w = B(u)` with `w = (g - 1)/(x g)` and `u = x^2 g` one even
/// coefficient at a time; the odd residual must vanish.
pub fn b_from_g(g: &Series) -> Result<BSequence> {
    if !is_pseudo_involution(g)? {
        return Err(Error::NotPseudoInvolution);
    }
    let order = g.order();
    if order == 0 {
        return Err(Error::BeyondOrder { index: 1, order });
    }
    let g_minus_one = g.sub(&Series::one(order));
    let mut residual = g_minus_one.shift_down(1)?.mul(&g.mul_inverse()?);
    let top = residual.order();
    let u = g.shift_up(2).truncate(top);
    let mut power = Series::one(top);
    let mut b = Vec::with_capacity(top / 2 + 1);
    for i in 0..=top / 2 {
        // u^i starts with x^{2i} g_0^i = x^{2i}
        let bi = residual.coeff(2 * i)?.clone();
        residual = residual.sub(&power.scale(&bi));
        b.push(bi);
        power = power.mul(&u);
    }
    if !residual.is_zero() {
        return Err(Error::NotPseudoInvolution);
    }
    Ok(BSequence(Coefficients::truncated(b)))
}

/// The unique `g` with `g = 1 + x g B(x^2 g)`, by iterating from `g = 1`.
pub fn g_from_b(b: &BSequence, order: usize) -> Result<Series> {
    Ok(g_from_b_iterates(b, order)?
        .pop()
        .expect("at least the seed"))
}

/// Every iterate of the fixed point; iterate `k` is exact through `x^k`.
pub fn g_from_b_iterates(b: &BSequence, order: usize) -> Result<Vec<Series>> {
    let order = b.max_order().map_or(order, |m| m.min(order));
    let b_series = b.to_series(order);
    let one = Series::one(order);
    let mut g = one.clone();
    let mut iterates = vec![g.clone()];
    for _ in 0..order {
        let inner = b_series.compose(&g.shift_up(2).truncate(order))?;
        g = one.add(&g.mul(&inner).shift_up(1).truncate(order));
        iterates.push(g.clone());
    }
    Ok(iterates)
}

/// Checks `d_{n+1,m+1} = sum_i a_i d_{n,m+i}` wherever the needed `a_i` are known.
pub fn verify_a_recurrence(array: &RiordanArray, a: &ASequence) -> Result<bool> {
    let order = array.order();
    for n in 0..order {
        for m in 0..=n {
            let Some(rhs) = (0..=n - m)
                .map(|i| a.get(i).map(|ai| (ai, i)))
                .collect::<Option<Vec<_>>>()
            else {
                continue;
            };
            let mut sum = Rational::zero();
            for (ai, i) in rhs {
                sum += ai * array.entry(n, m + i)?;
            }
            if array.entry(n + 1, m + 1)? != sum {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Checks `d_{n+1,m} = d_{n,m-1} + sum_i b_i d_{n-i,m+i}`.
///
/// Column `-1` has generating function `f(x) / (x g(x))`, so the `m = 0`
/// boundary reads `d_{n,-1} = [x^{n+1}] f/g`; this vanishes for the Pascal
/// array but not for `(1, x g)`.
pub fn verify_b_recurrence(array: &RiordanArray, b: &BSequence) -> Result<bool> {
    let order = array.order();
    let boundary = if array.g().constant().is_zero() {
        None
    } else {
        Some(array.f().mul(&array.g().mul_inverse()?))
    };
    for n in 0..order {
        for m in 0..=n + 1 {
            let previous = if m > 0 {
                array.entry(n, m - 1)?
            } else {
                match boundary.as_ref().and_then(|s| s.coeff(n + 1).ok()) {
                    Some(v) => v.clone(),
                    None => continue,
                }
            };
            // entries with m + i > n - i vanish
            let last = if m <= n { Some((n - m) / 2) } else { None };
            let mut sum = previous;
            let mut known = true;
            for i in last.into_iter().flat_map(|l| 0..=l) {
                match b.get(i) {
                    Some(bi) => sum += bi * array.entry(n - i, m + i)?,
                    None => {
                        known = false;
                        break;
                    }
                }
            }
            if known && array.entry(n + 1, m)? != sum {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `(1, x g)` as a Riordan array.
pub fn composition_array(g: &Series) -> Result<RiordanArray> {
    RiordanArray::new(Series::one(g.order() + 1), g.clone())
}
