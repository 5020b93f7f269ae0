use super::{Coefficient, Series};
use crate::error::{Error, Result};

impl<C: Coefficient> Series<C> {
    /// `a(u(x))` for `u_0 = 0`.
    ///
    /// With `v` the valuation of `u`, the result is known through
    /// `min(order u, v * (order a + 1) - 1)`.
    pub fn compose(&self, inner: &Series<C>) -> Result<Series<C>> {
        if !inner.constant().is_zero() {
            return Err(Error::NonzeroConstant);
        }
        let valuation = inner.valuation().unwrap_or(inner.order() + 1);
        let order = inner.order().min(valuation * (self.order() + 1) - 1);
        let inner = inner.truncate(order);
        // Horner on the terms of `a` that can reach x^order
        let top = self.order().min(order / valuation);
        let mut acc = Series::from_poly(vec![self.coeffs[top].clone()], order);
        for k in (0..top).rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] = acc.coeffs[0].clone() + self.coeffs[k].clone();
        }
        Ok(acc)
    }

    /// Compositional inverse `v` with `u(v(x)) = x = v(u(x))`.
    ///
    /// Coefficient `n` of `v` is fixed by back-substitution from the ones
    /// below it.
    pub fn reversion(&self) -> Result<Series<C>> {
        if !self.constant().is_zero() {
            return Err(Error::NonzeroConstant);
        }
        let order = self.order();
        if order == 0 {
            return Ok(Series::zero(0));
        }
        let lead_inv = self.coeffs[1].inverse().ok_or(Error::ZeroLinear)?;
        let mut inv = Series::zero(order);
        inv.coeffs[1] = lead_inv.clone();
        for n in 2..=order {
            let partial = self.compose(&inv.truncate(n))?;
            let residual = partial.coeffs[n].clone();
            inv.coeffs[n] = -(residual * lead_inv.clone());
        }
        Ok(inv)
    }
}

#[cfg(test)]
mod tests {
    use crate::error::Error;
    use crate::rational::{int, Rational};
    use crate::series::Series;

    fn geometric(order: usize) -> Series {
        Series::from_fn(order, |_| int(1))
    }

    #[test]
    fn polynomial_substitution() {
        let a = Series::from_poly(vec![int(1), int(1)], 6);
        let u = Series::from_poly(vec![int(0), int(0), int(1)], 6);
        assert_eq!(
            a.compose(&u).unwrap(),
            Series::from_poly(vec![int(1), int(0), int(1)], 6)
        );
    }

    #[test]
    fn identity_substitution() {
        let a = Series::from_ints(&[3, 1, 4, 1, 5]);
        assert_eq!(a.compose(&Series::<Rational>::x(4)).unwrap(), a);
    }

    #[test]
    fn geometric_of_shifted_geometric() {
        // 1/(1-x) o x/(1-x) = (1-x)/(1-2x)
        let u = geometric(8).shift_up(1).truncate(8);
        let got = geometric(8).compose(&u).unwrap();
        assert_eq!(
            got.coeffs(),
            Series::from_ints(&[1, 1, 2, 4, 8, 16, 32, 64, 128]).coeffs()
        );
    }

    #[test]
    fn nonzero_constant_is_rejected() {
        let a = Series::from_ints(&[1, 1]);
        assert_eq!(
            a.compose(&Series::from_ints(&[1, 1])),
            Err(Error::NonzeroConstant)
        );
        assert_eq!(a.reversion(), Err(Error::NonzeroConstant));
        assert_eq!(
            Series::from_ints(&[0, 0, 1]).reversion(),
            Err(Error::ZeroLinear)
        );
    }

    #[test]
    fn order_follows_valuation() {
        let a = Series::from_ints(&[1, 1, 1]);
        let u = Series::from_poly(vec![int(0), int(0), int(1)], 10);
        // a_3 enters at x^6
        assert_eq!(a.compose(&u).unwrap().order(), 5);
    }

    #[test]
    fn reversion_examples() {
        // x/(1-x) -> x/(1+x)
        let u = geometric(7).shift_up(1).truncate(7);
        let v = u.reversion().unwrap();
        assert_eq!(
            v.coeffs(),
            Series::from_ints(&[0, 1, -1, 1, -1, 1, -1, 1]).coeffs()
        );
        assert_eq!(
            Series::<Rational>::x(5).reversion().unwrap(),
            Series::<Rational>::x(5)
        );
        // x - x^2 -> Catalan shift
        let w = Series::from_poly(vec![int(0), int(1), int(-1)], 6);
        assert_eq!(
            w.reversion().unwrap(),
            Series::from_ints(&[0, 1, 1, 2, 5, 14, 42])
        );
    }

    #[test]
    fn reversion_with_rational_linear_term() {
        let u = Series::new(vec![
            int(0),
            Rational::new(2.into(), 3.into()),
            int(5),
            int(-1),
        ]);
        let v = u.reversion().unwrap();
        assert_eq!(u.compose(&v).unwrap(), Series::<Rational>::x(3));
        assert_eq!(v.compose(&u).unwrap(), Series::<Rational>::x(3));
    }
}
