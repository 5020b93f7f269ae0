//! Independent oracles and random inputs shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashMap;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use riordan::rational::{binomial, factorial, int, ratio};
use riordan::sequences::{ASequence, BSequence};
use riordan::{Rational, Series};

/// Small rationals keep the exact arithmetic cheap.
pub fn pool() -> [Rational; 6] {
    [int(-2), int(-1), int(0), int(1), int(2), ratio(1, 2)]
}

pub fn pick(rng: &mut ChaCha8Rng) -> Rational {
    let pool = pool();
    pool[rng.gen_range(0..pool.len())].clone()
}

/// B-sequence of length `1..=max_len` drawn from the pool.
pub fn random_b(rng: &mut ChaCha8Rng, max_len: usize) -> BSequence {
    let len = rng.gen_range(1..=max_len);
    BSequence::exact((0..len).map(|_| pick(rng)).collect())
}

/// A-sequence `1, a_1, ..., a_len` drawn from the pool.
pub fn random_a(rng: &mut ChaCha8Rng, max_len: usize) -> ASequence {
    let len = rng.gen_range(1..=max_len);
    let mut values = vec![int(1)];
    values.extend((0..len).map(|_| pick(rng)));
    ASequence::exact(values)
}

/// `g^m` by repeated multiplication (and one inversion for `m < 0`).
pub fn naive_pow(g: &Series, m: i64) -> Series {
    let base = if m < 0 { naive_inverse(g) } else { g.clone() };
    let mut acc = Series::one(g.order());
    for _ in 0..m.unsigned_abs() {
        acc = acc.mul(&base);
    }
    acc
}

/// `1/g` by solving `g * v = 1` term by term.
pub fn naive_inverse(g: &Series) -> Series {
    let c = g.coeffs();
    let mut v: Vec<Rational> = Vec::with_capacity(c.len());
    for n in 0..c.len() {
        let mut acc = if n == 0 { int(1) } else { int(0) };
        for k in 1..=n {
            acc -= &c[k] * &v[n - k];
        }
        v.push(acc / &c[0]);
    }
    Series::new(v)
}

/// `a(u(x))` by summing `a_k u^k` directly.
pub fn naive_compose(a: &Series, u: &Series) -> Series {
    let order = u.order();
    let mut acc = Series::zero(order);
    let mut power = Series::one(order);
    for c in a.coeffs() {
        acc = acc.add(&power.scale(c));
        power = power.mul(u);
    }
    acc
}

/// `g_n^{(m)}` by the layered recursion
/// `g_n^{(m)} = sum_r b_r sum_{i=r+1}^{m+r} g_{n-1-2r}^{(i)}`, `g_0^{(m)} = 1`.
pub struct LayeredRecursion<'a> {
    b: &'a BSequence,
    memo: HashMap<(usize, usize), Rational>,
}

impl<'a> LayeredRecursion<'a> {
    pub fn new(b: &'a BSequence) -> Self {
        LayeredRecursion {
            b,
            memo: HashMap::new(),
        }
    }

    pub fn coeff(&mut self, n: usize, m: usize) -> Rational {
        if n == 0 {
            return int(1);
        }
        if let Some(v) = self.memo.get(&(n, m)) {
            return v.clone();
        }
        let mut acc = int(0);
        let mut r = 0;
        while 2 * r < n {
            let br = self.b.get(r).expect("exact sequence");
            if br != int(0) {
                let mut inner = int(0);
                for i in r + 1..=m + r {
                    inner += self.coeff(n - 1 - 2 * r, i);
                }
                acc += br * inner;
            }
            r += 1;
        }
        self.memo.insert((n, m), acc.clone());
        acc
    }
}

/// `[x^n] B_r(x)^m = m/(m+rn) C(m+rn, n)` straight from the definition.
pub fn gbs_oracle(r: i64, m: i64, n: usize) -> Rational {
    if n == 0 {
        return int(1);
    }
    let top = m + r * n as i64;
    ratio(m, top) * binomial(top, n as u64)
}

/// `sum_n c(n) x^n / n!` through `x^order`.
pub fn egf(order: usize, c: impl Fn(i64) -> Rational) -> Series {
    Series::from_fn(order, |n| c(n as i64) / factorial(n as u64))
}

/// `p^e` for a rational base and a possibly negative integer exponent.
pub fn rpow(p: &Rational, e: i64) -> Rational {
    if e >= 0 {
        num_traits::pow(p.clone(), e as usize)
    } else {
        num_traits::pow(p.recip(), e.unsigned_abs() as usize)
    }
}

/// `1/(1 - c x)^e` from the binomial series.
pub fn geometric_power(c: &Rational, e: i64, order: usize) -> Series {
    Series::from_fn(order, |n| {
        binomial(e + n as i64 - 1, n as u64) * num_traits::pow(c.clone(), n)
    })
}
