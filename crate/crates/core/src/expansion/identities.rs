//! Exact polynomial identities tying the expansions to binomial sequences,
//! Lagrange inversion, the factor `h` of a pseudo-involution, and the
//! Riordan-array form of two-letter sequences.

use num_traits::{One, Zero};

use super::{cancelled_falling, expand_a, gbs};
use crate::error::{Error, Result};
use crate::factorization::factorize;
use crate::partitions::{all_partitions, odd_partitions, OddPartition, Partition};
use crate::poly::MuPoly;
use crate::rational::{factorial, int, ratio, Rational};
use crate::riordan::RiordanArray;
use crate::sequences::{a_from_g, g_from_a, g_from_b, ASequence, BSequence};
use crate::series::Series;

use super::sym_coeff;

/// `p_q(m) = m (m+q-2)(m+q-4)...(m-q+2)`, the binomial sequence of
/// `x + sqrt(x^2 + 1)`; `p_0 = 1`.
pub fn p_q(q: usize) -> MuPoly {
    if q == 0 {
        return MuPoly::one();
    }
    let q = q as i64;
    MuPoly::mu() * MuPoly::product_of_shifts((1..q).map(|i| q - 2 * i))
}

/// `prod letters_i^{m_i} / prod m_i!` over a partition, letters indexed from 1.
fn weight(pt: &Partition, letters: &Series) -> Result<Rational> {
    let mut acc = Rational::one();
    for (j, &m) in pt.exponents().iter().enumerate() {
        if m > 0 {
            let letter = letters.coeff(j + 1)?;
            acc *= num_traits::pow(letter.clone(), m as usize) / factorial(m as u64);
        }
    }
    Ok(acc)
}

/// `prod (b_i / 2)^{m_i} / prod m_i!` over a partition into odd parts.
fn half_weight(pt: &OddPartition, b: &BSequence) -> Result<Rational> {
    let mut acc = Rational::one();
    for (i, &m) in pt.exponents().iter().enumerate() {
        if m > 0 {
            let bi = b.get(i).ok_or(Error::BeyondOrder {
                index: i,
                order: b.bound().unwrap_or(0),
            })?;
            acc *= num_traits::pow(bi * ratio(1, 2), m as usize) / factorial(m as u64);
        }
    }
    Ok(acc)
}

/// `sum (m)_q / (m_1!...m_n!) g_1^{m_1}...g_n^{m_n}` over partitions of `n`.
pub fn falling_factorial_sum(g: &Series, n: usize) -> Result<MuPoly> {
    let mut acc = MuPoly::zero();
    for pt in all_partitions(n)? {
        acc = acc + MuPoly::falling(pt.q()).scale(&weight(&pt, g)?);
    }
    Ok(acc)
}

/// `sum m^q / (m_1!...m_n!) l_1^{m_1}...l_n^{m_n}` with `l_i = [x^i] ln g`.
pub fn log_power_sum(g: &Series, n: usize) -> Result<MuPoly> {
    let l = g.log1()?;
    let mut acc = MuPoly::zero();
    for pt in all_partitions(n)? {
        let mut monomial = vec![Rational::zero(); pt.q() + 1];
        monomial[pt.q()] = Rational::one();
        acc = acc + MuPoly::new(monomial).scale(&weight(&pt, &l)?);
    }
    Ok(acc)
}

/// The A-expansion of `[x^n] g^m` evaluated on the A-sequence of `g`.
pub fn a_expansion_sum(g: &Series, n: usize) -> Result<MuPoly> {
    let a = a_from_g(g)?;
    expand_a(n)?.sum_a(&a)
}

/// Both binomial-type expansions of `[x^n] g^m` and the A-expansion agree
/// with the symbolic power. Needs `g_0 = 1` and `n >= 1`.
pub fn binomial_type_checks(g: &Series, n: usize) -> Result<bool> {
    let target = sym_coeff(g, n)?;
    Ok(falling_factorial_sum(g, n)? == target
        && log_power_sum(g, n)? == target
        && a_expansion_sum(g, n)? == target)
}

/// `l_n(m) = m l~_n(m + n) / (m + n)` where `l_n(m) = [x^n] g^m` and
/// `l~_n(m) = [x^n] A^m`. The division must be exact.
pub fn lagrange_check(g: &Series, n: usize) -> Result<bool> {
    let l = sym_coeff(g, n)?;
    let a = a_from_g(g)?.to_series(g.order());
    let shifted = sym_coeff(&a, n)?.shift_arg(&int(n as i64));
    match shifted.div_linear(&int(n as i64)) {
        Ok(quotient) => Ok(MuPoly::mu() * quotient == l),
        Err(Error::NotDivisible) => Ok(false),
        Err(e) => Err(e),
    }
}

/// `2m/(2m+n) p_q(2m+n) = 2^q m (m+k)_q / (m+k)` for one partition, with
/// the left side reduced by exact division.
pub fn half_power_identity(pt: &OddPartition) -> bool {
    half_power_coeff(pt).is_ok_and(|lhs| {
        let two_q = num_traits::pow(int(2), pt.q());
        lhs.scale_arg(&int(2)) == cancelled_falling(pt.k(), pt.q(), two_q).expand()
    })
}

/// `m p_q(m + n) / (m + n)`.
fn half_power_coeff(pt: &OddPartition) -> Result<MuPoly> {
    let n = int(pt.n() as i64);
    (MuPoly::mu() * p_q(pt.q()).shift_arg(&n)).div_linear(&n)
}

/// For `g = g_from_b(b)` and `h` its square-root factor:
/// `[x^n] h^m = sum p_q(m) / (m_0!...m_p!) 2^{-q} b^pt`, and
/// `[x^n] g^{m/2} = sum m p_q(m+n)/(m+n) / (m_0!...m_p!) 2^{-q} b^pt`,
/// plus the per-partition identity linking the latter to the B-expansion.
pub fn h_expansion_check(b: &BSequence, n: usize) -> Result<bool> {
    let g = g_from_b(b, n + 1)?;
    if g.order() < n {
        return Err(Error::BeyondOrder {
            index: n,
            order: g.order(),
        });
    }
    let h = factorize(&g)?.h;
    let h_power = sym_coeff(&h, n)?;
    let half_power = sym_coeff(&g, n)?.scale_arg(&ratio(1, 2));
    let mut h_sum = MuPoly::zero();
    let mut half_sum = MuPoly::zero();
    for pt in odd_partitions(n)? {
        if !half_power_identity(&pt) {
            return Ok(false);
        }
        let w = half_weight(&pt, b)?;
        h_sum = h_sum + p_q(pt.q()).scale(&w);
        half_sum = half_sum + half_power_coeff(&pt)?.scale(&w);
    }
    Ok(h_sum == h_power && half_sum == half_power)
}

/// `(1/(1-cx)^m, c_r x^d/(1-cx)^e)` applied to `B_s(x)^m`.
fn two_letter_array(
    c: &Rational,
    cr: &Rational,
    d: usize,
    e: i64,
    s: usize,
    m: i64,
    order: usize,
) -> Result<Series> {
    let base = Series::from_poly(vec![Rational::one(), -c.clone()], order);
    let f = base.pow_int(-m)?;
    // g = G / x
    let g = base.pow_int(-e)?.scale(cr).shift_up(d - 1).truncate(order);
    RiordanArray::generalized(f, g).apply(&gbs(s, m, order)?)
}

/// `B = b_0 + b_r x^r`:
/// `g^m = (1/(1-b_0 x)^m, b_r x^{2r+1}/(1-b_0 x)^{r+1}) B_{r+1}(x)^m`.
pub fn example5_check(
    b0: &Rational,
    br: &Rational,
    r: usize,
    m: i64,
    order: usize,
) -> Result<bool> {
    if r == 0 {
        return Err(Error::InvalidParameter);
    }
    let lhs = two_letter_array(b0, br, 2 * r + 1, r as i64 + 1, r + 1, m, order)?;
    let mut values = vec![Rational::zero(); r + 1];
    values[0] = b0.clone();
    values[r] = br.clone();
    let rhs = g_from_b(&BSequence::exact(values), order)?.pow_int(m)?;
    Ok(lhs == rhs)
}

/// `A = 1 + a_1 x + a_r x^r`:
/// `g^m = (1/(1-a_1 x)^m, a_r x^r/(1-a_1 x)^r) B_r(x)^m`.
pub fn example6_check(
    a1: &Rational,
    ar: &Rational,
    r: usize,
    m: i64,
    order: usize,
) -> Result<bool> {
    if r < 2 {
        return Err(Error::InvalidParameter);
    }
    let lhs = two_letter_array(a1, ar, r, r as i64, r, m, order)?;
    let mut values = vec![Rational::zero(); r + 1];
    values[0] = Rational::one();
    values[1] = a1.clone();
    values[r] = ar.clone();
    let rhs = g_from_a(&ASequence::exact(values), order)?.pow_int(m)?;
    Ok(lhs == rhs)
}
