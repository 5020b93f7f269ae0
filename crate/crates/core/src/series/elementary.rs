use super::{Coefficient, Series};
use crate::error::{Error, Result};
use crate::poly::MuPoly;
use crate::rational::{int, Rational};

impl<C: Coefficient> Series<C> {
    /// `1 / a(x)`; needs an invertible constant term.
    pub fn mul_inverse(&self) -> Result<Series<C>> {
        let c0_inv = self.constant().inverse().ok_or(Error::NotInvertible)?;
        let order = self.order();
        let mut out: Vec<C> = Vec::with_capacity(order + 1);
        out.push(c0_inv.clone());
        for n in 1..=order {
            let mut acc = C::zero();
            for i in 1..=n {
                acc = acc + self.coeffs[i].clone() * out[n - i].clone();
            }
            out.push(-(acc * c0_inv.clone()));
        }
        Ok(Series::new(out))
    }

    /// Square root with constant term one; needs `a_0 = 1`.
    pub fn sqrt1(&self) -> Result<Series<C>> {
        if !self.constant().is_one() {
            return Err(Error::ConstantNotOne);
        }
        let half = Rational::new(1.into(), 2.into());
        let mut out: Vec<C> = vec![C::one()];
        for n in 1..=self.order() {
            let mut cross = C::zero();
            for i in 1..n {
                cross = cross + out[i].clone() * out[n - i].clone();
            }
            out.push((self.coeffs[n].clone() - cross).scale(&half));
        }
        Ok(Series::new(out))
    }

    /// `ln a(x)` for `a_0 = 1`, via `(ln a)' = a' / a`.
    pub fn log1(&self) -> Result<Series<C>> {
        if !self.constant().is_one() {
            return Err(Error::ConstantNotOne);
        }
        let order = self.order();
        let mut out = vec![C::zero(); order + 1];
        // n l_n = n a_n - sum_{k=1}^{n-1} k l_k a_{n-k}
        for n in 1..=order {
            let mut acc = self.coeffs[n].scale(&int(n as i64));
            for (k, l) in out.iter().enumerate().take(n).skip(1) {
                acc = acc - l.scale(&int(k as i64)) * self.coeffs[n - k].clone();
            }
            out[n] = acc.scale(&Rational::new(1.into(), (n as i64).into()));
        }
        Ok(Series::new(out))
    }

    /// `exp a(x)` for `a_0 = 0`, via `e' = a' e`.
    pub fn exp0(&self) -> Result<Series<C>> {
        if !self.constant().is_zero() {
            return Err(Error::NonzeroConstant);
        }
        let order = self.order();
        let mut out: Vec<C> = vec![C::one()];
        for n in 1..=order {
            let mut acc = C::zero();
            for k in 1..=n {
                acc = acc + self.coeffs[k].scale(&int(k as i64)) * out[n - k].clone();
            }
            out.push(acc.scale(&Rational::new(1.into(), (n as i64).into())));
        }
        Ok(Series::new(out))
    }

    /// Integer power. Negative exponents need an invertible constant term.
    pub fn pow_int(&self, e: i64) -> Result<Series<C>> {
        let base = if e < 0 {
            self.mul_inverse()?
        } else {
            self.clone()
        };
        let mut exp = e.unsigned_abs();
        let mut acc = Series::one(self.order());
        let mut square = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&square);
            }
            exp >>= 1;
            if exp > 0 {
                square = square.mul(&square);
            }
        }
        Ok(acc)
    }
}

impl Series<Rational> {
    /// `a(x)^m` with symbolic `m`, as `exp(m ln a)`; needs `a_0 = 1`.
    ///
    /// Coefficient `n` is a polynomial in `m` of degree at most `n`.
    pub fn pow_symbolic(&self) -> Result<Series<MuPoly>> {
        let log = self.log1()?;
        log.lift().scale_by(&MuPoly::mu()).exp0()
    }

    /// `a(x)^e` for a rational exponent, as `exp(e ln a)`; needs `a_0 = 1`.
    pub fn pow_rational(&self, e: &Rational) -> Result<Series<Rational>> {
        self.log1()?.scale(e).exp0()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use num_traits::One;

    #[test]
    fn inverse_examples() {
        let one_minus_x = Series::from_poly(vec![int(1), int(-1)], 6);
        assert_eq!(
            one_minus_x.mul_inverse().unwrap(),
            Series::from_ints(&[1; 7])
        );
        assert_eq!(
            Series::<Rational>::one(4).mul_inverse().unwrap(),
            Series::one(4)
        );
        let fib = Series::from_poly(vec![int(1), int(-1), int(-1)], 7);
        assert_eq!(
            fib.mul_inverse().unwrap(),
            Series::from_ints(&[1, 1, 2, 3, 5, 8, 13, 21])
        );
        assert_eq!(
            Series::from_ints(&[0, 1]).mul_inverse(),
            Err(Error::NotInvertible)
        );
        let symbolic = Series::new(vec![MuPoly::mu(), MuPoly::one()]);
        assert_eq!(symbolic.mul_inverse().unwrap_err(), Error::NotInvertible);
    }

    #[test]
    fn square_root_examples() {
        let one_minus_x = Series::from_poly(vec![int(1), int(-1)], 3);
        assert_eq!(
            one_minus_x.sqrt1().unwrap(),
            Series::new(vec![int(1), ratio(-1, 2), ratio(-1, 8), ratio(-1, 16)])
        );
        assert_eq!(
            Series::from_ints(&[1; 4]).sqrt1().unwrap(),
            Series::new(vec![int(1), ratio(1, 2), ratio(3, 8), ratio(5, 16)])
        );
        assert_eq!(Series::<Rational>::one(3).sqrt1().unwrap(), Series::one(3));
        assert_eq!(
            Series::from_ints(&[4, 1]).sqrt1(),
            Err(Error::ConstantNotOne)
        );
    }

    #[test]
    fn log_and_exp_examples() {
        let geo = Series::from_ints(&[1; 5]);
        assert_eq!(
            geo.log1().unwrap(),
            Series::new(vec![int(0), int(1), ratio(1, 2), ratio(1, 3), ratio(1, 4)])
        );
        assert_eq!(Series::<Rational>::zero(4).exp0().unwrap(), Series::one(4));
        assert_eq!(
            Series::<Rational>::x(4).exp0().unwrap(),
            Series::new(vec![int(1), int(1), ratio(1, 2), ratio(1, 6), ratio(1, 24)])
        );
        assert_eq!(Series::<Rational>::x(3).log1(), Err(Error::ConstantNotOne));
        assert_eq!(
            Series::<Rational>::one(3).exp0(),
            Err(Error::NonzeroConstant)
        );
    }

    #[test]
    fn integer_powers() {
        let geo = Series::from_ints(&[1; 6]);
        assert_eq!(geo.pow_int(0).unwrap(), Series::one(5));
        let one_plus_x = Series::from_poly(vec![int(1), int(1)], 5);
        assert_eq!(
            one_plus_x.pow_int(-1).unwrap(),
            Series::from_ints(&[1, -1, 1, -1, 1, -1])
        );
        assert_eq!(
            one_plus_x.pow_int(3).unwrap(),
            Series::from_ints(&[1, 3, 3, 1, 0, 0])
        );
        assert_eq!(
            Series::from_ints(&[0, 1]).pow_int(-2),
            Err(Error::NotInvertible)
        );
    }

    #[test]
    fn symbolic_power_of_geometric() {
        let geo = Series::from_ints(&[1; 5]);
        let p = geo.pow_symbolic().unwrap();
        assert_eq!(p.coeffs()[2], MuPoly::binomial(1, 2));
        for k in -3..=5 {
            assert_eq!(p.eval(&int(k)), geo.pow_int(k).unwrap());
        }
    }

    #[test]
    fn rational_power_matches_square_root() {
        let a = Series::from_ints(&[1, 3, -1, 2, 0, 5]);
        assert_eq!(a.pow_rational(&ratio(1, 2)).unwrap(), a.sqrt1().unwrap());
    }
}
