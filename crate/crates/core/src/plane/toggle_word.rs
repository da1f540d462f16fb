use std::fmt;

use serde::{Deserialize, Serialize};

use super::PlanePartition;
use crate::error::{Error, Result};

/// A named toggle composite on an `a × b` array.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Toggle {
    /// `τ_{i,j}`
    Cell(usize, usize),
    /// `F_k`: all cells with `j − i = k`
    File(isize),
    /// `R_k`: all cells with `i + j − 1 = k`
    Rank(usize),
    /// `P_k`: row `k`, left to right
    PosFiber(usize),
    /// `N_k`: column `k`, top to bottom
    NegFiber(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ToggleFactor {
    pub toggle: Toggle,
    pub inverse: bool,
}

impl ToggleFactor {
    fn check(&self, a: usize, b: usize) -> Result<()> {
        let ok = match self.toggle {
            Toggle::Cell(i, j) => (1..=a).contains(&i) && (1..=b).contains(&j),
            Toggle::File(k) => (-(a as isize) + 1..=b as isize - 1).contains(&k),
            Toggle::Rank(k) => (1..a + b).contains(&k),
            Toggle::PosFiber(k) => (1..=a).contains(&k),
            Toggle::NegFiber(k) => (1..=b).contains(&k),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::OutOfBounds(format!("{self} on a {a}x{b} array")))
        }
    }

    fn apply_mut(&self, pi: &mut PlanePartition) {
        match self.toggle {
            Toggle::Cell(i, j) => pi.tog(i - 1, j - 1),
            Toggle::File(k) => pi.file_mut(k),
            Toggle::Rank(k) => pi.rank_mut(k),
            Toggle::PosFiber(k) => pi.pos_fiber_mut(k, self.inverse),
            Toggle::NegFiber(k) => pi.neg_fiber_mut(k, self.inverse),
        }
    }
}

impl fmt::Display for ToggleFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.toggle {
            Toggle::Cell(i, j) => write!(f, "t[{i},{j}]")?,
            Toggle::File(k) => write!(f, "F[{k}]")?,
            Toggle::Rank(k) => write!(f, "R[{k}]")?,
            Toggle::PosFiber(k) => write!(f, "P[{k}]")?,
            Toggle::NegFiber(k) => write!(f, "N[{k}]")?,
        }
        if self.inverse {
            write!(f, "^-1")?;
        }
        Ok(())
    }
}

/// A product of toggles written left to right; the rightmost factor acts first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToggleWord {
    factors: Vec<ToggleFactor>,
}

fn fwd(toggle: Toggle) -> ToggleFactor {
    ToggleFactor { toggle, inverse: false }
}

fn inv(toggle: Toggle) -> ToggleFactor {
    ToggleFactor { toggle, inverse: true }
}

impl ToggleWord {
    pub fn new(factors: Vec<ToggleFactor>) -> Self {
        ToggleWord { factors }
    }

    pub fn single(toggle: Toggle) -> Self {
        ToggleWord { factors: vec![fwd(toggle)] }
    }

    pub fn factors(&self) -> &[ToggleFactor] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// `self · other`
    pub fn then_after(&self, other: &ToggleWord) -> ToggleWord {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        ToggleWord { factors }
    }

    /// Reverse the factors and invert each one.
    pub fn inverse(&self) -> ToggleWord {
        let factors =
            self.factors.iter().rev().map(|f| ToggleFactor { toggle: f.toggle, inverse: !f.inverse }).collect();
        ToggleWord { factors }
    }

    /// Count of single-cell toggles after full expansion.
    pub fn expanded_len(&self, a: usize, b: usize) -> usize {
        self.factors
            .iter()
            .map(|f| match f.toggle {
                Toggle::Cell(..) => 1,
                Toggle::File(k) => (0..a).filter(|&i| (0..b as isize).contains(&(i as isize + k))).count(),
                Toggle::Rank(k) => (0..a).filter(|&i| k > i && k - 1 - i < b).count(),
                Toggle::PosFiber(_) => b,
                Toggle::NegFiber(_) => a,
            })
            .sum()
    }

    pub fn validate(&self, a: usize, b: usize) -> Result<()> {
        self.factors.iter().try_for_each(|f| f.check(a, b))
    }

    pub fn apply(&self, pi: &PlanePartition) -> Result<PlanePartition> {
        self.validate(pi.a(), pi.b())?;
        let mut out = pi.clone();
        for f in self.factors.iter().rev() {
            f.apply_mut(&mut out);
        }
        Ok(out)
    }

    /// `F_{b−1} ⋯ F_{−a+1}`
    pub fn promotion(a: usize, b: usize) -> Self {
        ToggleWord::new((-(a as isize) + 1..b as isize).rev().map(|k| fwd(Toggle::File(k))).collect())
    }

    /// `R_{a+b−1} ⋯ R_1`
    pub fn rowmotion(a: usize, b: usize) -> Self {
        ToggleWord::new((1..a + b).rev().map(|k| fwd(Toggle::Rank(k))).collect())
    }

    /// `P_1 ⋯ P_a`
    pub fn promotion_by_rows(a: usize) -> Self {
        ToggleWord::new((1..=a).map(|k| fwd(Toggle::PosFiber(k))).collect())
    }

    /// `N_b⁻¹ ⋯ N_1⁻¹`
    pub fn promotion_by_columns(b: usize) -> Self {
        ToggleWord::new((1..=b).rev().map(|k| inv(Toggle::NegFiber(k))).collect())
    }

    /// `P_a ⋯ P_1`
    pub fn rowmotion_by_rows(a: usize) -> Self {
        ToggleWord::new((1..=a).rev().map(|k| fwd(Toggle::PosFiber(k))).collect())
    }

    /// `N_b ⋯ N_1`
    pub fn rowmotion_by_columns(b: usize) -> Self {
        ToggleWord::new((1..=b).rev().map(|k| fwd(Toggle::NegFiber(k))).collect())
    }

    /// `D = (P_a⁻¹)(P_{a−1}⁻¹ P_a⁻¹) ⋯ (P_1⁻¹ ⋯ P_a⁻¹)`
    pub fn conjugator(a: usize) -> Self {
        let mut factors = Vec::new();
        for g in (1..=a).rev() {
            for h in g..=a {
                factors.push(inv(Toggle::PosFiber(h)));
            }
        }
        ToggleWord::new(factors)
    }

    /// `(F_{−a+1})(F_{−a+2} F_{−a+1}) ⋯ (F_{b−1} ⋯ F_{−a+1})`
    pub fn complement_by_files(a: usize, b: usize) -> Self {
        let mut factors = Vec::new();
        for t in 1..a + b {
            for s in (1..=t).rev() {
                factors.push(fwd(Toggle::File(s as isize - a as isize)));
            }
        }
        ToggleWord::new(factors)
    }

    /// `(R_1)(R_2 R_1) ⋯ (R_{a+b−1} ⋯ R_1)`
    pub fn complement_by_ranks(a: usize, b: usize) -> Self {
        let mut factors = Vec::new();
        for t in 1..a + b {
            for s in (1..=t).rev() {
                factors.push(fwd(Toggle::Rank(s)));
            }
        }
        ToggleWord::new(factors)
    }

    /// `(N_1 ⋯ N_{b−1}) ⋯ (N_1 N_2)(N_1)`, which equals `Co · D`.
    pub fn complement_conjugator(b: usize) -> Self {
        let mut factors = Vec::new();
        for t in (1..b).rev() {
            for s in 1..=t {
                factors.push(fwd(Toggle::NegFiber(s)));
            }
        }
        ToggleWord::new(factors)
    }
}

impl fmt::Display for ToggleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "id");
        }
        let parts: Vec<String> = self.factors.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join("·"))
    }
}
