use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::IntPolynomial;
use crate::error::{Error, Result};

/// `∏ (1 - q^e) / ∏ (1 - q^f)` kept as exponent multisets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductFormula {
    #[serde(rename = "num")]
    numerator: Vec<u32>,
    #[serde(rename = "den")]
    denominator: Vec<u32>,
}

impl ProductFormula {
    pub fn new(mut numerator: Vec<u32>, mut denominator: Vec<u32>) -> Result<Self> {
        if numerator.contains(&0) || denominator.contains(&0) {
            return Err(Error::Precondition("factor exponents must be positive".into()));
        }
        numerator.sort_unstable();
        denominator.sort_unstable();
        Ok(ProductFormula { numerator, denominator })
    }

    fn from_pairs(pairs: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let (num, den): (Vec<u32>, Vec<u32>) = pairs.into_iter().unzip();
        Self::new(num, den).expect("constructors only produce positive exponents")
    }

    pub fn numerator(&self) -> &[u32] {
        &self.numerator
    }

    pub fn denominator(&self) -> &[u32] {
        &self.denominator
    }

    /// Multiply out the numerator, then divide exactly by each denominator factor.
    pub fn expand(&self) -> Result<IntPolynomial> {
        let mut p = IntPolynomial::one();
        for &e in &self.numerator {
            p = &p * &IntPolynomial::one_minus_q_pow(e);
        }
        for &e in &self.denominator {
            p = p.div_one_minus_q_pow(e)?;
        }
        Ok(p)
    }

    /// Value at `q = 1`, i.e. `∏ e / ∏ f`, without expanding.
    pub fn value_at_one(&self) -> Result<BigInt> {
        let num: BigInt = self.numerator.iter().map(|&e| BigInt::from(e)).product();
        let den: BigInt = self.denominator.iter().map(|&e| BigInt::from(e)).product();
        if self.numerator.len() != self.denominator.len() {
            return Err(Error::Precondition("value at q = 1 needs as many numerator as denominator factors".into()));
        }
        if &num % &den != BigInt::from(0) {
            return Err(Error::NonPolynomialRatio { exponent: 1 });
        }
        Ok(num / den)
    }
}

/// Boxed plane partitions in an `a × b × m` box.
pub fn mac_formula(a: u32, b: u32, m: u32) -> ProductFormula {
    ProductFormula::from_pairs((1..=a).flat_map(|i| (1..=b).map(move |j| (i + j + m - 1, i + j - 1))))
}

/// Transpose-symmetric plane partitions in an `n × n × m` box, counted by `|π|`.
pub fn symmac_formula(n: u32, m: u32) -> ProductFormula {
    let pairs = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (2 * (i + j + m - 1), 2 * (i + j - 1))))
        .chain((1..=n).map(|i| (2 * i + m - 1, 2 * i - 1)));
    ProductFormula::from_pairs(pairs)
}

/// Transpose-symmetric plane partitions counted by the upper-triangle size `|π|'`.
pub fn symmac_prime_formula(n: u32, m: u32) -> ProductFormula {
    ProductFormula::from_pairs((1..=n).flat_map(|i| (i..=n).map(move |j| (i + j + m - 1, i + j - 1))))
}

/// Gaussian binomial `[n choose a]_q`.
pub fn q_binomial(n: u32, a: u32) -> ProductFormula {
    assert!(a <= n, "q_binomial needs a <= n");
    ProductFormula::from_pairs((1..=a).map(|i| (n + 1 - i, i)))
}

/// Target for rowmotion on the wide triangle with `n` rows.
pub fn wide_formula(n: u32, m: u32) -> ProductFormula {
    ProductFormula::from_pairs((1..=n).flat_map(|i| (i..=n).map(move |j| (i + j + 2 * m, i + j))))
}

/// Target for rowmotion on the corner triangle of rank `n`.
pub fn corner_formula(n: u32, m: u32) -> ProductFormula {
    ProductFormula::from_pairs((1..=n).flat_map(|i| (1..=n).map(move |j| (2 * (i + j + m - 1), 2 * (i + j - 1)))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn smallest_mac() {
        let f = mac_formula(1, 1, 1);
        assert_eq!(f.numerator(), &[2]);
        assert_eq!(f.denominator(), &[1]);
        assert_eq!(f.expand().unwrap(), IntPolynomial::from_i64s(&[1, 1]));
    }

    #[test]
    fn symmac_two_one() {
        let p = symmac_formula(2, 1).expand().unwrap();
        assert_eq!(p, IntPolynomial::from_i64s(&[1, 1, 0, 1, 1]));
    }

    #[test]
    fn symmac_prime_height_one_is_product_of_binomials() {
        for n in 1..=4u32 {
            let expect = (1..=n).fold(IntPolynomial::one(), |acc, i| {
                &acc * &(IntPolynomial::one() + IntPolynomial::monomial(1, i as usize))
            });
            assert_eq!(symmac_prime_formula(n, 1).expand().unwrap(), expect);
        }
    }

    #[test]
    fn mac_two_two_one_is_gaussian_binomial() {
        // brute force: 2-subsets of {1..4} weighted by sum minus 3
        let mut coeffs = [0i64; 5];
        for x in 1..=4 {
            for y in x + 1..=4 {
                coeffs[x + y - 3] += 1;
            }
        }
        let p = mac_formula(2, 2, 1).expand().unwrap();
        assert_eq!(p, IntPolynomial::from_i64s(&coeffs));
        assert_eq!(p, q_binomial(4, 2).expand().unwrap());
    }

    #[test]
    fn q_binomial_counts() {
        for n in 0..=8u32 {
            for a in 0..=n {
                let p = q_binomial(n, a).expand().unwrap();
                assert_eq!(p.value_at_one(), BigInt::from(binom(n as u64, a as u64)));
            }
        }
    }

    #[test]
    fn all_constructors_expand_exactly() {
        for x in 0..=4 {
            for y in 0..=4 {
                for m in 0..=4 {
                    let f = mac_formula(x, y, m);
                    let p = f.expand().unwrap();
                    assert_eq!(p.value_at_one(), f.value_at_one().unwrap());
                }
                symmac_formula(x, y).expand().unwrap();
                symmac_prime_formula(x, y).expand().unwrap();
                wide_formula(x, y).expand().unwrap();
                corner_formula(x, y).expand().unwrap();
            }
        }
    }

    #[test]
    fn serializes_as_num_den() {
        let s = serde_json::to_string(&mac_formula(1, 1, 1)).unwrap();
        assert_eq!(s, r#"{"num":[2],"den":[1]}"#);
    }
}
