//! Square-root factorization of pseudo-involutions.
//!
//! A pseudo-involution `(1, x g)` splits as `(1, x sqrt(g)) (1, x h)` where
//! `h(-x) h(x) = 1`. The odd part `s = (h - 1/h) / 2` carries the
//! B-sequence: `x B(x^2) = 2 s(x)`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{ratio, Rational};
use crate::riordan::is_pseudo_involution;
use crate::sequences::{BSequence, Coefficients};
use crate::series::Series;

#[derive(Clone, Debug, PartialEq)]
pub struct Factorization {
    pub sqrt_g: Series,
    pub h: Series,
    pub s: Series,
}

impl Factorization {
    /// `x sqrt(g) * h(x sqrt(g))`, which reproduces `x g(x)`.
    pub fn recompose(&self) -> Result<Series> {
        let u = self.sqrt_g.shift_up(1);
        Ok(u.mul(&self.h.compose(&u)?))
    }

    /// `h(-x) h(x) = 1`, `s` odd, and `h = s + sqrt(s^2 + 1)`.
    pub fn invariants_hold(&self) -> Result<bool> {
        let order = self.h.order();
        let one = Series::one(order);
        let unit = self.h.subst_neg().mul(&self.h) == one;
        let odd = self.s.add(&self.s.subst_neg()).is_zero();
        let rebuilt = self.s.add(&self.s.mul(&self.s).add(&one).sqrt1()?);
        Ok(unit && odd && rebuilt == self.h)
    }
}

/// Factors the pseudo-involution `(1, x g)`.
pub fn factorize(g: &Series) -> Result<Factorization> {
    if !is_pseudo_involution(g)? {
        return Err(Error::NotPseudoInvolution);
    }
    let sqrt_g = g.sqrt1()?;
    let v = sqrt_g.shift_up(1).reversion()?;
    let h = sqrt_g.compose(&v)?;
    let s = h.sub(&h.mul_inverse()?).scale(&ratio(1, 2));
    Ok(Factorization { sqrt_g, h, s })
}

/// `b_n = 2 s_{2n+1}`; every even coefficient of `s` must vanish.
pub fn b_from_factorization(factors: &Factorization) -> Result<BSequence> {
    let two = Rational::from_integer(2.into());
    let mut b = Vec::new();
    for (i, c) in factors.s.coeffs().iter().enumerate() {
        if i % 2 == 0 {
            if !c.is_zero() {
                return Err(Error::EvenCoefficient(i));
            }
        } else {
            b.push(c * &two);
        }
    }
    Ok(BSequence(Coefficients::truncated(b)))
}
