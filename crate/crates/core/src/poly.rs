//! Polynomials in a single symbolic indeterminate `m` with exact rational
//! coefficients.
//!
//! `MuPoly` carries symbolic powers: `[x^n] g(x)^m` is a polynomial in `m`
//! of degree at most `n`, and so are the partition coefficients of the
//! expansions.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{int, Rational};

/// Dense polynomial, constant term first. The leading coefficient is nonzero
/// unless the polynomial is zero (stored as an empty vector).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct MuPoly {
    coeffs: Vec<Rational>,
}

impl MuPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        MuPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate `m` itself.
    pub fn mu() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    /// `m + shift`.
    pub fn linear(shift: Rational) -> Self {
        Self::new(vec![shift, Rational::one()])
    }

    /// `(m + c_1)(m + c_2)...`; the empty product is one.
    pub fn product_of_shifts<I: IntoIterator<Item = i64>>(shifts: I) -> Self {
        shifts
            .into_iter()
            .fold(Self::one(), |acc, c| acc * Self::linear(int(c)))
    }

    /// Falling factorial `m(m-1)...(m-q+1)`.
    pub fn falling(q: usize) -> Self {
        Self::product_of_shifts((0..q as i64).map(|j| -j))
    }

    /// `C(m + shift, k)` as a polynomial in `m`.
    pub fn binomial(shift: i64, k: usize) -> Self {
        Self::product_of_shifts((0..k as i64).map(|j| shift - j))
            .scale(&(Rational::one() / crate::rational::factorial(k as u64)))
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MuPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Horner evaluation.
    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * at + c)
    }

    pub fn eval_int(&self, at: i64) -> Rational {
        self.eval(&int(at))
    }

    /// Substitutes another polynomial for `m`.
    pub fn compose(&self, inner: &MuPoly) -> MuPoly {
        self.coeffs.iter().rev().fold(MuPoly::zero(), |acc, c| {
            acc * inner.clone() + MuPoly::constant(c.clone())
        })
    }

    /// `p(m + c)`.
    pub fn shift_arg(&self, c: &Rational) -> MuPoly {
        self.compose(&MuPoly::linear(c.clone()))
    }

    /// `p(c * m)`.
    pub fn scale_arg(&self, c: &Rational) -> MuPoly {
        let mut power = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &power);
            power *= c;
        }
        MuPoly::new(out)
    }

    /// Exact division by `m + c`; fails when the remainder `p(-c)` is nonzero.
    pub fn div_linear(&self, c: &Rational) -> Result<MuPoly> {
        if self.is_zero() {
            return Ok(MuPoly::zero());
        }
        // synthetic division by the root -c
        let root = -c.clone();
        let mut quotient = vec![Rational::zero(); self.coeffs.len() - 1];
        let mut carry = Rational::zero();
        for i in (0..self.coeffs.len()).rev() {
            let value = &self.coeffs[i] + &carry * &root;
            if i == 0 {
                if !value.is_zero() {
                    return Err(Error::NotDivisible);
                }
            } else {
                quotient[i - 1] = value.clone();
            }
            carry = value;
        }
        Ok(MuPoly::new(quotient))
    }

    /// Newton interpolation through `(x_i, y_i)` with distinct nodes.
    pub fn interpolate(points: &[(Rational, Rational)]) -> MuPoly {
        let n = points.len();
        let mut table: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
        for level in 1..n {
            for i in (level..n).rev() {
                let dx = &points[i].0 - &points[i - level].0;
                table[i] = (&table[i] - &table[i - 1]) / dx;
            }
        }
        let mut acc = MuPoly::zero();
        for i in (0..n).rev() {
            acc = acc * MuPoly::linear(-points[i].0.clone()) + MuPoly::constant(table[i].clone());
        }
        acc
    }
}

impl Zero for MuPoly {
    fn zero() -> Self {
        MuPoly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for MuPoly {
    fn one() -> Self {
        MuPoly {
            coeffs: vec![Rational::one()],
        }
    }
}

impl Add for MuPoly {
    type Output = MuPoly;
    fn add(self, rhs: MuPoly) -> MuPoly {
        &self + &rhs
    }
}

impl Add for &MuPoly {
    type Output = MuPoly;
    fn add(self, rhs: &MuPoly) -> MuPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        MuPoly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for MuPoly {
    type Output = MuPoly;
    fn sub(self, rhs: MuPoly) -> MuPoly {
        &self - &rhs
    }
}

impl Sub for &MuPoly {
    type Output = MuPoly;
    fn sub(self, rhs: &MuPoly) -> MuPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        MuPoly::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for MuPoly {
    type Output = MuPoly;
    fn mul(self, rhs: MuPoly) -> MuPoly {
        &self * &rhs
    }
}

impl Mul for &MuPoly {
    type Output = MuPoly;
    fn mul(self, rhs: &MuPoly) -> MuPoly {
        if self.is_zero() || rhs.is_zero() {
            return MuPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        MuPoly::new(out)
    }
}

impl Neg for MuPoly {
    type Output = MuPoly;
    fn neg(self) -> MuPoly {
        MuPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

/// Expanded form in the variable `m`, highest degree first, e.g.
/// `1/2*m^2 + 3/2*m`.
impl fmt::Display for MuPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let unit = magnitude.is_one();
            match i {
                0 => write!(f, "{magnitude}")?,
                _ => {
                    if !unit {
                        write!(f, "{magnitude}*")?;
                    }
                    if i == 1 {
                        write!(f, "m")?;
                    } else {
                        write!(f, "m^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// A polynomial kept as `scale * (m + c_1)(m + c_2)...` with integer shifts.
///
/// Every partition coefficient of the expansions factors this way, which
/// gives readable output such as `m(m+3)/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredPoly {
    pub scale: Rational,
    pub shifts: Vec<i64>,
}

impl FactoredPoly {
    pub fn expand(&self) -> MuPoly {
        MuPoly::product_of_shifts(self.shifts.iter().copied()).scale(&self.scale)
    }
}

impl fmt::Display for FactoredPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.scale.is_zero() {
            return write!(f, "0");
        }
        let numer = self.scale.numer();
        let denom = self.scale.denom();
        if self.shifts.is_empty() {
            return write!(f, "{}", self.scale);
        }
        if numer == &(-num_bigint::BigInt::one()) {
            write!(f, "-")?;
        } else if !numer.is_one() {
            write!(f, "{numer}")?;
        }
        for (i, c) in self.shifts.iter().enumerate() {
            match c.cmp(&0) {
                std::cmp::Ordering::Equal if i == 0 => write!(f, "m")?,
                std::cmp::Ordering::Equal => write!(f, "(m)")?,
                std::cmp::Ordering::Greater => write!(f, "(m+{c})")?,
                std::cmp::Ordering::Less => write!(f, "(m{c})")?,
            }
        }
        if !denom.is_one() {
            write!(f, "/{denom}")?;
        }
        Ok(())
    }
}
