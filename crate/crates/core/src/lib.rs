//! Exact Riordan-group calculus.
//!
//! Truncated power series over exact rationals ([`Series`]), polynomials in a
//! symbolic exponent `m` ([`MuPoly`]), Riordan arrays ([`RiordanArray`]),
//! conversions between `g(x)` and its A- and B-sequences, the square-root
//! factorization of pseudo-involutions, and the partition-indexed expansions
//! of `[x^n] g(x)^m`.

pub mod error;
pub mod expansion;
pub mod factorization;
pub mod named;
pub mod partitions;
pub mod poly;
pub mod rational;
pub mod riordan;
pub mod sequences;
pub mod series;

pub use error::{Error, Result};
pub use expansion::{ExpansionTable, ExpansionTerm, Letters};
pub use partitions::{OddPartition, Partition};
pub use poly::{FactoredPoly, MuPoly};
pub use rational::Rational;
pub use riordan::{is_pseudo_involution, RiordanArray};
pub use series::{Coefficient, Series};
