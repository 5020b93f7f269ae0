//! Integer partitions as exponent vectors.
//!
//! An [`OddPartition`] of `n` stores `(m_0, ..., m_p)` with
//! `n = sum m_i (2i + 1)` and `p = floor((n - 1) / 2)`; it indexes the
//! monomial `b_0^{m_0} ... b_p^{m_p}`. A [`Partition`] of `n` stores
//! `(m_1, ..., m_n)` with `n = sum i m_i` and indexes `a_1^{m_1} ... a_n^{m_n}`.
//!
//! Enumeration is in descending lexicographic order of the exponent vector,
//! so the highest power of the smallest letter comes first and the largest
//! letter comes last.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OddPartition {
    exponents: Vec<u32>,
}

impl OddPartition {
    /// From `(m_0, m_1, ...)`; trailing zeros are normalized away.
    pub fn new(exponents: Vec<u32>) -> Self {
        let mut pt = OddPartition { exponents };
        pt.normalize();
        pt
    }

    fn normalize(&mut self) {
        let n = self.n();
        let len = if n == 0 { 0 } else { (n - 1) / 2 + 1 };
        self.exponents.resize(len, 0);
    }

    /// `(m_0, ..., m_p)` with `p = floor((n - 1) / 2)`.
    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Multiplicity of part `2i + 1`.
    pub fn multiplicity(&self, i: usize) -> u32 {
        self.exponents.get(i).copied().unwrap_or(0)
    }

    pub fn n(&self) -> usize {
        self.exponents
            .iter()
            .enumerate()
            .map(|(i, &m)| m as usize * (2 * i + 1))
            .sum()
    }

    /// `k = sum m_i (i + 1)`.
    pub fn k(&self) -> usize {
        self.exponents
            .iter()
            .enumerate()
            .map(|(i, &m)| m as usize * (i + 1))
            .sum()
    }

    /// Number of parts.
    pub fn q(&self) -> usize {
        self.exponents.iter().map(|&m| m as usize).sum()
    }

    /// The partition with one part `2r + 1` removed, if there is one.
    pub fn without(&self, r: usize) -> Option<OddPartition> {
        if self.multiplicity(r) == 0 {
            return None;
        }
        let mut exponents = self.exponents.clone();
        exponents[r] -= 1;
        Some(OddPartition::new(exponents))
    }

    /// Monomial text such as `b0^3*b1`.
    pub fn monomial(&self, letter: &str) -> String {
        monomial_text(
            letter,
            self.exponents.iter().enumerate().map(|(i, &m)| (i, m)),
        )
    }
}

impl fmt::Display for OddPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.monomial("b"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    exponents: Vec<u32>,
}

impl Partition {
    /// From `(m_1, m_2, ...)`; the vector is resized to length `n`.
    pub fn new(exponents: Vec<u32>) -> Self {
        let mut pt = Partition { exponents };
        let n = pt.n();
        pt.exponents.resize(n, 0);
        pt
    }

    /// `(m_1, ..., m_n)`.
    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Multiplicity of part `i >= 1`.
    pub fn multiplicity(&self, i: usize) -> u32 {
        i.checked_sub(1)
            .and_then(|j| self.exponents.get(j))
            .copied()
            .unwrap_or(0)
    }

    pub fn n(&self) -> usize {
        self.exponents
            .iter()
            .enumerate()
            .map(|(j, &m)| m as usize * (j + 1))
            .sum()
    }

    pub fn q(&self) -> usize {
        self.exponents.iter().map(|&m| m as usize).sum()
    }

    pub fn monomial(&self, letter: &str) -> String {
        monomial_text(
            letter,
            self.exponents.iter().enumerate().map(|(j, &m)| (j + 1, m)),
        )
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.monomial("a"))
    }
}

fn monomial_text(letter: &str, powers: impl Iterator<Item = (usize, u32)>) -> String {
    let factors: Vec<String> = powers
        .filter(|&(_, m)| m > 0)
        .map(|(i, m)| match m {
            1 => format!("{letter}{i}"),
            _ => format!("{letter}{i}^{m}"),
        })
        .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

/// All partitions of `n >= 1` into odd parts.
pub fn odd_partitions(n: usize) -> Result<Vec<OddPartition>> {
    if n == 0 {
        return Err(Error::EmptyPartition);
    }
    let parts: Vec<usize> = (0..=(n - 1) / 2).map(|i| 2 * i + 1).collect();
    Ok(enumerate(n, &parts)
        .into_iter()
        .map(|exponents| OddPartition { exponents })
        .collect())
}

/// All partitions of `n >= 1`.
pub fn all_partitions(n: usize) -> Result<Vec<Partition>> {
    if n == 0 {
        return Err(Error::EmptyPartition);
    }
    let parts: Vec<usize> = (1..=n).collect();
    Ok(enumerate(n, &parts)
        .into_iter()
        .map(|exponents| Partition { exponents })
        .collect())
}

/// Exponent vectors over `parts` summing to `n`, descending lexicographic.
fn enumerate(n: usize, parts: &[usize]) -> Vec<Vec<u32>> {
    fn go(
        i: usize,
        remaining: usize,
        parts: &[usize],
        current: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if i == parts.len() {
            if remaining == 0 {
                out.push(current.clone());
            }
            return;
        }
        for m in (0..=remaining / parts[i]).rev() {
            current[i] = m as u32;
            go(i + 1, remaining - m * parts[i], parts, current, out);
        }
        current[i] = 0;
    }
    let mut out = Vec::new();
    go(0, n, parts, &mut vec![0; parts.len()], &mut out);
    out
}
