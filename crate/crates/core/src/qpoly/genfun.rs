//! Generating functions of plane-partition statistics, by enumeration.

use num_bigint::BigInt;
use num_traits::Zero;

use super::IntPolynomial;
use crate::error::{Error, Result};
use crate::plane::{enumerate, enumerate_symmetric, PlanePartition};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SetSpec {
    /// All of `PP^m(a × b)`.
    Box { a: usize, b: usize, m: u32 },
    /// The transpose-symmetric part of `PP^m(n × n)`.
    Symmetric { n: usize, m: u32 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Statistic {
    /// `|π|`, the sum of all entries.
    Size,
    /// `|π|′`, the sum over `i ≤ j`. Square boxes only.
    UpperSize,
}

/// `Σ q^{stat(π)}` over the set.
pub fn size_genfun(set: SetSpec, stat: Statistic) -> Result<IntPolynomial> {
    let elements: Box<dyn Iterator<Item = PlanePartition>> = match set {
        SetSpec::Box { a, b, m } => {
            if stat == Statistic::UpperSize && a != b {
                return Err(Error::NotSquare { a, b });
            }
            Box::new(enumerate(a, b, m)?)
        }
        SetSpec::Symmetric { n, m } => Box::new(enumerate_symmetric(n, m)?.into_iter()),
    };
    let mut coeffs: Vec<BigInt> = Vec::new();
    for pi in elements {
        let s = match stat {
            Statistic::Size => pi.size(),
            Statistic::UpperSize => pi.upper_size()?,
        } as usize;
        if coeffs.len() <= s {
            coeffs.resize(s + 1, BigInt::zero());
        }
        coeffs[s] += 1;
    }
    Ok(IntPolynomial::new(coeffs))
}
