use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::IntPolynomial;
use crate::error::{Error, Result};

/// The `d`-th cyclotomic polynomial, by dividing `q^d - 1` by `Φ_e` for every proper divisor `e`.
pub fn cyclotomic_polynomial(d: u32) -> IntPolynomial {
    assert!(d >= 1, "cyclotomic order must be positive");
    let mut p = IntPolynomial::monomial(1, d as usize) - IntPolynomial::constant(1);
    for e in (1..d).filter(|e| d % e == 0) {
        let (quot, rem) = p.div_rem_monic(&cyclotomic_polynomial(e));
        debug_assert!(rem.is_zero());
        p = quot;
    }
    p
}

/// An element of `Z[ζ_d]`, stored as its unique residue modulo `Φ_d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclotomicElement {
    order: u32,
    residue: IntPolynomial,
}

impl CyclotomicElement {
    pub fn reduce(p: &IntPolynomial, order: u32) -> Self {
        let (_, residue) = p.div_rem_monic(&cyclotomic_polynomial(order));
        CyclotomicElement { order, residue }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn residue(&self) -> &IntPolynomial {
        &self.residue
    }

    /// The value as an integer, if the residue is constant.
    pub fn as_integer(&self) -> Result<BigInt> {
        if self.residue.is_constant() {
            Ok(self.residue.coeff(0))
        } else {
            Err(Error::NotRational { order: self.order, residue: self.to_string() })
        }
    }
}

impl fmt::Display for CyclotomicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.residue.to_string().replace('q', "z");
        write!(f, "{s} (z of order {})", self.order)
    }
}

/// `p(ζ^k)` for `ζ` a primitive `d`-th root of unity. Negative `k` is allowed.
pub fn evaluate_at_root(p: &IntPolynomial, d: u32, k: i64) -> CyclotomicElement {
    assert!(d >= 1, "root order must be positive");
    let k = k.rem_euclid(d as i64) as usize;
    // fold exponents mod d first so the long division stays short
    let mut folded = vec![BigInt::zero(); d as usize];
    for (e, c) in p.coeffs().iter().enumerate() {
        folded[(e * k) % d as usize] += c;
    }
    CyclotomicElement::reduce(&IntPolynomial::new(folded), d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::symmac_formula;

    fn totient(n: u32) -> u32 {
        (1..=n).filter(|k| num_integer::gcd(*k, n) == 1).count() as u32
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_polynomial(1), IntPolynomial::from_i64s(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), IntPolynomial::from_i64s(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(4), IntPolynomial::from_i64s(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), IntPolynomial::from_i64s(&[1, -1, 1]));
    }

    #[test]
    fn degrees_and_product_identity() {
        for d in 1..=30u32 {
            assert_eq!(cyclotomic_polynomial(d).degree(), Some(totient(d) as usize));
            // q^d - 1 is the product over all divisors
            let prod = (1..=d)
                .filter(|e| d % e == 0)
                .fold(IntPolynomial::constant(1), |acc, e| &acc * &cyclotomic_polynomial(e));
            assert_eq!(prod, IntPolynomial::monomial(1, d as usize) - IntPolynomial::constant(1));
        }
    }

    #[test]
    fn twelfth_by_division_oracle() {
        let mut p = IntPolynomial::monomial(1, 12) - IntPolynomial::constant(1);
        for e in [1, 2, 3, 4, 6] {
            let (q, r) = p.div_rem_monic(&cyclotomic_polynomial(e));
            assert!(r.is_zero());
            p = q;
        }
        assert_eq!(p, cyclotomic_polynomial(12));
        assert_eq!(p.degree(), Some(4));
    }

    #[test]
    fn one_plus_q_at_minus_one() {
        let p = IntPolynomial::from_i64s(&[1, 1]);
        assert_eq!(evaluate_at_root(&p, 2, 1).as_integer().unwrap(), BigInt::from(0));
    }

    #[test]
    fn symmac_evaluations() {
        let p = symmac_formula(2, 1).expand().unwrap();
        let vals: Vec<BigInt> = (0..4).map(|k| evaluate_at_root(&p, 4, k).as_integer().unwrap()).collect();
        assert_eq!(vals, [4, 2, 0, 2].map(BigInt::from));
    }

    #[test]
    fn non_rational_is_reported() {
        let q = IntPolynomial::monomial(1, 1);
        let err = evaluate_at_root(&q, 4, 1).as_integer().unwrap_err();
        assert!(matches!(err, Error::NotRational { order: 4, .. }));
    }

    #[test]
    fn zero_power_is_value_at_one() {
        let p = IntPolynomial::from_i64s(&[3, -1, 4, 1, -5]);
        for d in 1..8 {
            assert_eq!(evaluate_at_root(&p, d, 0).as_integer().unwrap(), p.value_at_one());
        }
    }
}
