//! Truncated formal power series over an exact coefficient ring.
//!
//! A [`Series`] stores `c_0, ..., c_N` where `N` is the truncation order:
//! the coefficients beyond `N` are unknown. Every operation returns the
//! tightest order it can prove, and reading past the order is an error.

mod compose;
mod elementary;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::MuPoly;
use crate::rational::Rational;

/// Coefficient ring of a series: exact rationals or polynomials in `m`.
pub trait Coefficient:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    fn from_rational(r: Rational) -> Self;
    fn scale(&self, c: &Rational) -> Self;
    /// Multiplicative inverse when it exists in the ring.
    fn inverse(&self) -> Option<Self>;
}

impl Coefficient for Rational {
    fn from_rational(r: Rational) -> Self {
        r
    }
    fn scale(&self, c: &Rational) -> Self {
        self * c
    }
    fn inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
}

impl Coefficient for MuPoly {
    fn from_rational(r: Rational) -> Self {
        MuPoly::constant(r)
    }
    fn scale(&self, c: &Rational) -> Self {
        MuPoly::scale(self, c)
    }
    fn inverse(&self) -> Option<Self> {
        match self.coeffs() {
            [c] => Some(MuPoly::constant(c.recip())),
            _ => None,
        }
    }
}

/// Truncated power series `c_0 + c_1 x + ... + c_N x^N + O(x^{N+1})`.
///
/// Equality compares coefficients up to the smaller of the two orders.
#[derive(Clone, Debug)]
pub struct Series<C = Rational> {
    coeffs: Vec<C>,
}

impl<C: Coefficient> Series<C> {
    /// Series known through `x^{len-1}`. An empty vector gives `O(x)`-free zero
    /// at order 0.
    pub fn new(mut coeffs: Vec<C>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(C::zero());
        }
        Series { coeffs }
    }

    /// A polynomial viewed as a series of the given order (zero-padded or
    /// truncated).
    pub fn from_poly(mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.resize(order + 1, C::zero());
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_poly(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::from_poly(vec![C::one()], order)
    }

    /// The series `x` itself.
    pub fn x(order: usize) -> Self {
        Self::from_poly(vec![C::zero(), C::one()], order)
    }

    /// Builds `sum f(n) x^n` for `n <= order`.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> C) -> Self {
        Series {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// `[x^n]`, or an error past the truncation order.
    pub fn coeff(&self, n: usize) -> Result<&C> {
        self.coeffs.get(n).ok_or(Error::BeyondOrder {
            index: n,
            order: self.order(),
        })
    }

    pub fn constant(&self) -> &C {
        &self.coeffs[0]
    }

    /// Drops coefficients past `order`. Never raises the order.
    pub fn truncate(&self, order: usize) -> Self {
        let keep = order.min(self.order()) + 1;
        Series {
            coeffs: self.coeffs[..keep].to_vec(),
        }
    }

    /// Index of the first known nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    /// True when both series agree up to the smaller order.
    pub fn agrees_with(&self, other: &Self) -> bool {
        let order = self.order().min(other.order());
        self.coeffs[..=order] == other.coeffs[..=order]
    }

    pub fn map<D: Coefficient>(&self, f: impl FnMut(&C) -> D) -> Series<D> {
        Series {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(|a| a.scale(c))
    }

    /// Multiplication by a ring element.
    pub fn scale_by(&self, c: &C) -> Self {
        self.map(|a| a.clone() * c.clone())
    }

    /// `x^k * a(x)`; the order rises by `k`.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = vec![C::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Series { coeffs }
    }

    /// `a(x) / x^k`; requires `c_0 = ... = c_{k-1} = 0` and `k <= order`.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if k > self.order() {
            return Err(Error::BeyondOrder {
                index: k,
                order: self.order(),
            });
        }
        if self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(Error::NonzeroConstant);
        }
        Ok(Series {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// `a(-x)`.
    pub fn subst_neg(&self) -> Self {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| if n % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        }
    }

    /// Formal derivative; the order drops by one (order 0 stays a zero series).
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        Series {
            coeffs: self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c.scale(&Rational::from_integer((i as i64 + 1).into())))
                .collect(),
        }
    }

    /// Antiderivative with zero constant term; the order rises by one.
    pub fn integral(&self) -> Self {
        let mut coeffs = vec![C::zero()];
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c.scale(&Rational::new(1.into(), (i as i64 + 1).into()))),
        );
        Series { coeffs }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&C, &C) -> C) -> Self {
        let order = self.order().min(other.order());
        Series {
            coeffs: (0..=order)
                .map(|n| f(&self.coeffs[n], &other.coeffs[n]))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a.clone() + b.clone())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a.clone() - b.clone())
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![C::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(order + 1 - i).enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Series { coeffs }
    }
}

impl Series<Rational> {
    /// Series with integer coefficients.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Series::new(coeffs.iter().map(|&c| crate::rational::int(c)).collect())
    }

    /// Embeds rational coefficients as constant polynomials.
    pub fn lift(&self) -> Series<MuPoly> {
        self.map(|c| MuPoly::constant(c.clone()))
    }
}

impl Series<MuPoly> {
    /// Evaluates every coefficient at `m = at`.
    pub fn eval(&self, at: &Rational) -> Series<Rational> {
        self.map(|p| p.eval(at))
    }
}

impl<C: Coefficient> PartialEq for Series<C> {
    fn eq(&self, other: &Self) -> bool {
        self.agrees_with(other)
    }
}

impl<C: Coefficient> Add for &Series<C> {
    type Output = Series<C>;
    fn add(self, rhs: Self) -> Series<C> {
        Series::add(self, rhs)
    }
}

impl<C: Coefficient> Sub for &Series<C> {
    type Output = Series<C>;
    fn sub(self, rhs: Self) -> Series<C> {
        Series::sub(self, rhs)
    }
}

impl<C: Coefficient> Mul for &Series<C> {
    type Output = Series<C>;
    fn mul(self, rhs: Self) -> Series<C> {
        Series::mul(self, rhs)
    }
}

impl<C: Coefficient> Neg for &Series<C> {
    type Output = Series<C>;
    fn neg(self) -> Series<C> {
        self.map(|c| -c.clone())
    }
}

/// Comma separated coefficients followed by the truncation marker, e.g.
/// `1, 1, 2 + O(x^3)`.
impl<C: Coefficient> fmt::Display for Series<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}
