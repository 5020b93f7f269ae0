//! Partition-indexed expansions of `[x^n] g(x)^m`.
//!
//! For a pseudo-involution with B-sequence `b` the coefficient of
//! `b_0^{m_0} ... b_p^{m_p}` is `m (m+k)_q / ((m+k) m_0! ... m_p!)` summed over
//! the partitions of `n` into odd parts. For any `g` with A-sequence `a`
//! (`a_0 = 1`) the coefficient of `a_1^{m_1} ... a_n^{m_n}` is
//! `m (m+n)_q / ((m+n) m_1! ... m_n!)` summed over all partitions of `n`.
//!
//! Coefficients are kept as polynomials in the symbolic power `m`; the
//! `(m+k)` factor is cancelled inside the falling factorial, so no symbolic
//! division happens.

mod binomial;
mod identities;

pub use binomial::{gbs, gbs_coefficient, gbs_symbolic, gpt, PascalTable};
pub use identities::{
    a_expansion_sum, binomial_type_checks, example5_check, example6_check, falling_factorial_sum,
    h_expansion_check, half_power_identity, lagrange_check, log_power_sum, p_q,
};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partitions::{all_partitions, odd_partitions, OddPartition, Partition};
use crate::poly::{FactoredPoly, MuPoly};
use crate::rational::{factorial, int, Rational};
use crate::sequences::{ASequence, BSequence, Coefficients};
use crate::series::Series;

/// `1 / (m_0! m_1! ...)`.
fn multinomial_scale(exponents: &[u32]) -> Rational {
    let denom = exponents
        .iter()
        .fold(Rational::one(), |acc, &m| acc * factorial(m as u64));
    denom.recip()
}

/// `m (m + shift - 1)(m + shift - 2) ... (m + shift - q + 1) * scale`.
fn cancelled_falling(shift: usize, q: usize, scale: Rational) -> FactoredPoly {
    if q == 0 {
        return FactoredPoly {
            scale,
            shifts: Vec::new(),
        };
    }
    let shift = shift as i64;
    let mut shifts = vec![0];
    shifts.extend((1..q as i64).map(|j| shift - j));
    FactoredPoly { scale, shifts }
}

/// `(m | b_0^{m_0} ... b_p^{m_p})` in factored form.
pub fn b_coeff_factored(pt: &OddPartition) -> FactoredPoly {
    cancelled_falling(pt.k(), pt.q(), multinomial_scale(pt.exponents()))
}

/// `(m | b_0^{m_0} ... b_p^{m_p}) = m (m+k-1)! / (m_0! ... m_p! (m+k-q)!)`.
pub fn b_coeff(pt: &OddPartition) -> MuPoly {
    b_coeff_factored(pt).expand()
}

/// Single-letter coefficient `(m | b_r^{m_r}) = m/(m + r m_r) C(m + r m_r + m_r - 1, m_r)`,
/// evaluated through the binomial and an exact division.
pub fn b_coeff_single(r: usize, m_r: usize) -> MuPoly {
    if m_r == 0 {
        return MuPoly::one();
    }
    let shift = (r * m_r) as i64;
    let binom = MuPoly::binomial(shift + m_r as i64 - 1, m_r);
    (binom * MuPoly::mu())
        .div_linear(&int(shift))
        .expect("m + r m_r divides m C(m + r m_r + m_r - 1, m_r)")
}

/// Two-letter coefficient
/// `m/(m+k-m_r-m_s) C(m+k-1, m_r) C(m+k-1-m_r, m_s)` with
/// `k = m_r (r+1) + m_s (s+1)`.
pub fn b_coeff_pair(r: usize, m_r: usize, s: usize, m_s: usize) -> Result<MuPoly> {
    if r == s {
        return Err(Error::InvalidParameter);
    }
    let k = (m_r * (r + 1) + m_s * (s + 1)) as i64;
    let (m_r, m_s) = (m_r as i64, m_s as i64);
    let product = MuPoly::mu()
        * MuPoly::binomial(k - 1, m_r as usize)
        * MuPoly::binomial(k - 1 - m_r, m_s as usize);
    product.div_linear(&int(k - m_r - m_s))
}

/// `(m | a_1^{m_1} ... a_n^{m_n})` in factored form.
pub fn a_coeff_factored(pt: &Partition) -> FactoredPoly {
    cancelled_falling(pt.n(), pt.q(), multinomial_scale(pt.exponents()))
}

/// `(m | a_1^{m_1} ... a_n^{m_n}) = m (m+n-1)! / (m_1! ... m_n! (m+n-q)!)`.
pub fn a_coeff(pt: &Partition) -> MuPoly {
    a_coeff_factored(pt).expand()
}

/// Single-letter A coefficient `m/(m + r m_r) C(m + r m_r, m_r)`.
pub fn a_coeff_single(r: usize, m_r: usize) -> MuPoly {
    if m_r == 0 {
        return MuPoly::one();
    }
    let shift = (r * m_r) as i64;
    (MuPoly::binomial(shift, m_r) * MuPoly::mu())
        .div_linear(&int(shift))
        .expect("m + r m_r divides m C(m + r m_r, m_r)")
}

/// Which sequence the letters of an expansion come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Letters {
    /// `b_0, b_1, ...` over partitions into odd parts.
    B,
    /// `a_1, a_2, ...` over all partitions.
    A,
}

impl Letters {
    pub fn symbol(self) -> &'static str {
        match self {
            Letters::B => "b",
            Letters::A => "a",
        }
    }
}

/// One partition of an expansion and its coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionTerm {
    /// `(m_0, ..., m_p)` for B, `(m_1, ..., m_n)` for A.
    pub exponents: Vec<u32>,
    pub n: usize,
    /// `sum m_i (i+1)` for B; for A the shift is `n` itself.
    pub k: usize,
    pub q: usize,
    pub coefficient: FactoredPoly,
}

impl ExpansionTerm {
    pub fn polynomial(&self) -> MuPoly {
        self.coefficient.expand()
    }

    /// Index of the sequence entry each exponent refers to.
    fn letter_index(&self, letters: Letters, position: usize) -> usize {
        match letters {
            Letters::B => position,
            Letters::A => position + 1,
        }
    }

    pub fn monomial(&self, letters: Letters) -> String {
        let factors: Vec<String> = self
            .exponents
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(pos, &m)| {
                let i = self.letter_index(letters, pos);
                match m {
                    1 => format!("{}{i}", letters.symbol()),
                    _ => format!("{}{i}^{m}", letters.symbol()),
                }
            })
            .collect();
        factors.join("*")
    }

    /// Value of the monomial for concrete letters.
    pub fn monomial_value(&self, letters: Letters, values: &Coefficients) -> Result<Rational> {
        let mut acc = Rational::one();
        for (pos, &m) in self.exponents.iter().enumerate() {
            if m == 0 {
                continue;
            }
            let i = self.letter_index(letters, pos);
            let v = values.get(i).ok_or(Error::BeyondOrder {
                index: i,
                order: values.bound().unwrap_or(0),
            })?;
            acc *= num_traits::pow(v, m as usize);
        }
        Ok(acc)
    }
}

/// All terms of the expansion of `[x^n] g^m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionTable {
    pub letters: Letters,
    pub n: usize,
    pub terms: Vec<ExpansionTerm>,
}

impl ExpansionTable {
    /// `sum coefficient * monomial` as a polynomial in `m`.
    pub fn sum(&self, values: &Coefficients) -> Result<MuPoly> {
        if self.letters == Letters::A && values.get(0) != Some(Rational::one()) {
            return Err(Error::ConstantNotOne);
        }
        let mut acc = MuPoly::zero();
        for term in &self.terms {
            let value = term.monomial_value(self.letters, values)?;
            if !value.is_zero() {
                acc = acc + term.polynomial().scale(&value);
            }
        }
        Ok(acc)
    }

    pub fn sum_b(&self, b: &BSequence) -> Result<MuPoly> {
        self.sum(b)
    }

    pub fn sum_a(&self, a: &ASequence) -> Result<MuPoly> {
        self.sum(a)
    }
}

/// B-expansion of `g_n^{(m)}`: one term per partition of `n` into odd parts.
pub fn expand_b(n: usize) -> Result<ExpansionTable> {
    let terms = odd_partitions(n)?
        .into_iter()
        .map(|pt| ExpansionTerm {
            n,
            k: pt.k(),
            q: pt.q(),
            coefficient: b_coeff_factored(&pt),
            exponents: pt.exponents().to_vec(),
        })
        .collect();
    Ok(ExpansionTable {
        letters: Letters::B,
        n,
        terms,
    })
}

/// A-expansion of `g_n^{(m)}`: one term per partition of `n`.
pub fn expand_a(n: usize) -> Result<ExpansionTable> {
    let terms = all_partitions(n)?
        .into_iter()
        .map(|pt| ExpansionTerm {
            n,
            k: n,
            q: pt.q(),
            coefficient: a_coeff_factored(&pt),
            exponents: pt.exponents().to_vec(),
        })
        .collect();
    Ok(ExpansionTable {
        letters: Letters::A,
        n,
        terms,
    })
}

/// `g^m` through `x^order` from the B-expansion, with every power of `b_0`
/// absorbed into `1/(1 - b_0 x)^{m+k}`:
/// `g^m = (1 - b_0 x)^{-m} + sum (m | b_1^{m_1}...) b_1^{m_1}... x^n (1 - b_0 x)^{-(m+k)}`.
pub fn expand_b_regrouped(b: &BSequence, m: i64, order: usize) -> Result<Series> {
    let order = b.max_order().map_or(order, |o| o.min(order));
    let b0 = b.get(0).ok_or(Error::BeyondOrder { index: 0, order: 0 })?;
    let base = Series::from_poly(vec![Rational::one(), -b0], order);
    let mut total = base.pow_int(-m)?;
    for n in 3..=order {
        for pt in odd_partitions(n)? {
            if pt.multiplicity(0) > 0 {
                continue;
            }
            let term = ExpansionTerm {
                n,
                k: pt.k(),
                q: pt.q(),
                coefficient: b_coeff_factored(&pt),
                exponents: pt.exponents().to_vec(),
            };
            let weight = term.monomial_value(Letters::B, b)? * term.polynomial().eval_int(m);
            if weight.is_zero() {
                continue;
            }
            let denominator = base.pow_int(-(m + pt.k() as i64))?;
            total = total.add(&denominator.shift_up(n).truncate(order).scale(&weight));
        }
    }
    Ok(total)
}

/// `[x^n] a(x)^m` as a polynomial in `m`; needs `a_0 = 1`.
pub fn sym_coeff(a: &Series, n: usize) -> Result<MuPoly> {
    if !a.constant().is_one() {
        return Err(Error::ConstantNotOne);
    }
    if n > a.order() {
        return Err(Error::BeyondOrder {
            index: n,
            order: a.order(),
        });
    }
    Ok(a.truncate(n).pow_symbolic()?.coeff(n)?.clone())
}
