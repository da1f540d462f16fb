//! Partitions, semistandard tableaux and Gelfand-Tsetlin patterns.

mod bender_knuth;
mod bijection;
mod subset;

pub use bijection::{gt_to_ssyt, lattice_path_subset, pp_to_gt, pp_to_ssyt, ssyt_to_gt, ssyt_to_pp, threshold_layers};
pub use subset::SubsetI;

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Trailing zeros are dropped.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidTableau(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(parts))
    }

    /// `m^a`
    pub fn rectangle(m: u32, a: usize) -> Self {
        if m == 0 {
            Partition(Vec::new())
        } else {
            Partition(vec![m; a])
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u64 {
        self.0.iter().map(|&p| p as u64).sum()
    }

    /// `κ(λ) = Σ (i − 1) λ_i`
    pub fn kappa(&self) -> u64 {
        self.0.iter().enumerate().map(|(i, &p)| i as u64 * p as u64).sum()
    }

    pub fn is_rectangle(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }
}

/// Semistandard tableau with entries in `1..=k`; rows weakly increase, columns strictly.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "SsytRepr", into = "SsytRepr")]
pub struct Ssyt {
    k: u32,
    rows: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct SsytRepr {
    shape: Vec<u32>,
    k: u32,
    rows: Vec<Vec<u32>>,
}

impl From<Ssyt> for SsytRepr {
    fn from(t: Ssyt) -> Self {
        SsytRepr { shape: t.shape().0, k: t.k, rows: t.rows }
    }
}

impl TryFrom<SsytRepr> for Ssyt {
    type Error = Error;
    fn try_from(r: SsytRepr) -> Result<Self> {
        let t = Ssyt::new(r.k, r.rows)?;
        if t.shape().parts() != Partition::new(r.shape)?.parts() {
            return Err(Error::InvalidTableau("shape does not match rows".into()));
        }
        Ok(t)
    }
}

impl Ssyt {
    pub fn new(k: u32, mut rows: Vec<Vec<u32>>) -> Result<Self> {
        while rows.last().is_some_and(Vec::is_empty) {
            rows.pop();
        }
        let t = Ssyt { k, rows };
        t.validate()?;
        Ok(t)
    }

    pub(crate) fn from_rows_unchecked(k: u32, rows: Vec<Vec<u32>>) -> Self {
        Ssyt { k, rows }
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidTableau(msg));
        for (r, row) in self.rows.iter().enumerate() {
            if row.is_empty() {
                return bad(format!("row {} is empty", r + 1));
            }
            if r > 0 && row.len() > self.rows[r - 1].len() {
                return bad("row lengths must weakly decrease".into());
            }
            if row.iter().any(|&v| v == 0 || v > self.k) {
                return bad(format!("entries must lie in 1..={}", self.k));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return bad(format!("row {} is not weakly increasing", r + 1));
            }
            if r > 0 && row.iter().zip(&self.rows[r - 1]).any(|(lo, hi)| lo <= hi) {
                return bad(format!("column strictness fails in row {}", r + 1));
            }
        }
        Ok(())
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition(self.rows.iter().map(|r| r.len() as u32).collect())
    }

    /// Entries of column `c` (0-based), top to bottom.
    pub fn column(&self, c: usize) -> Vec<u32> {
        self.rows.iter().take_while(|r| r.len() > c).map(|r| r[c]).collect()
    }

    pub fn columns(&self) -> Vec<Vec<u32>> {
        let width = self.rows.first().map_or(0, Vec::len);
        (0..width).map(|c| self.column(c)).collect()
    }

    /// `wt(T)_i`, the number of `i`s, for `i = 1..=k`.
    pub fn weight(&self) -> Vec<u32> {
        let mut w = vec![0; self.k as usize];
        for &v in self.rows.iter().flatten() {
            w[v as usize - 1] += 1;
        }
        w
    }

    /// Rotate by 180° and replace `v` by `k + 1 − v`. Rectangular shapes only.
    pub fn rotate_complement(&self) -> Result<Ssyt> {
        if !self.shape().is_rectangle() {
            return Err(Error::InvalidTableau("T⁺ needs a rectangular shape".into()));
        }
        let rows = self.rows.iter().rev().map(|r| r.iter().rev().map(|&v| self.k + 1 - v).collect()).collect();
        Ssyt::new(self.k, rows)
    }

    /// Flip entries `v ↦ k + 1 − v`, then complement each column in `1..=k`.
    /// Needs shape `m^n` with `k = 2n`.
    pub fn dagger(&self) -> Result<Ssyt> {
        let shape = self.shape();
        let n = self.k as usize / 2;
        if !shape.is_rectangle() || self.k % 2 != 0 || (!shape.is_empty() && shape.len() != n) {
            return Err(Error::InvalidTableau("T† needs shape m^n with k = 2n".into()));
        }
        let cols: Vec<Vec<u32>> = self
            .columns()
            .into_iter()
            .map(|col| {
                let flipped: Vec<u32> = col.iter().map(|&v| self.k + 1 - v).collect();
                (1..=self.k).filter(|v| !flipped.contains(v)).collect()
            })
            .collect();
        let rows = (0..if cols.is_empty() { 0 } else { n }).map(|r| cols.iter().map(|c| c[r]).collect()).collect();
        Ssyt::new(self.k, rows)
    }

    pub fn from_columns(k: u32, cols: &[Vec<u32>]) -> Result<Ssyt> {
        let height = cols.iter().map(Vec::len).max().unwrap_or(0);
        let rows = (0..height).map(|r| cols.iter().take_while(|c| c.len() > r).map(|c| c[r]).collect()).collect();
        Ssyt::new(k, rows)
    }
}

impl fmt::Display for Ssyt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| format!("[{}]", r.iter().map(u32::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

/// Triangular array `(π_{i,j})_{1 ≤ i ≤ j ≤ k}`, weakly decreasing in rows and columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GtRepr", into = "GtRepr")]
pub struct GtPattern {
    k: usize,
    /// `rows[i-1][j-i] = π_{i,j}`
    rows: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct GtRepr {
    k: usize,
    rows: Vec<Vec<u32>>,
}

impl From<GtPattern> for GtRepr {
    fn from(g: GtPattern) -> Self {
        GtRepr { k: g.k, rows: g.rows }
    }
}

impl TryFrom<GtRepr> for GtPattern {
    type Error = Error;
    fn try_from(r: GtRepr) -> Result<Self> {
        GtPattern::new(r.rows).and_then(|g| {
            if g.k == r.k {
                Ok(g)
            } else {
                Err(Error::InvalidPattern("length does not match rows".into()))
            }
        })
    }
}

impl GtPattern {
    /// `rows[i]` must have `k − i` entries.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let k = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != k - i {
                return Err(Error::InvalidPattern(format!("row {} should have {} entries", i + 1, k - i)));
            }
        }
        let g = GtPattern { k, rows };
        for i in 1..=k {
            for j in i..=k {
                let v = g.get(i, j);
                if (j < k && v < g.get(i, j + 1)) || (i < j && v < g.get(i + 1, j)) {
                    return Err(Error::InvalidPattern(format!("not weakly decreasing at ({i},{j})")));
                }
            }
        }
        Ok(g)
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<u32>>) -> Self {
        GtPattern { k: rows.len(), rows }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// `π_{i,j}`, 1-based, `i ≤ j`.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.rows[i - 1][j - i]
    }

    pub(crate) fn get_mut(&mut self, i: usize, j: usize) -> &mut u32 {
        &mut self.rows[i - 1][j - i]
    }

    /// The main diagonal.
    pub fn shape(&self) -> Partition {
        Partition::new((1..=self.k).map(|i| self.get(i, i)).collect()).expect("diagonal of a valid pattern")
    }

    /// Piecewise-linear toggle at `(i, j)` with `i < j`; missing neighbours are ignored.
    pub fn toggle(&mut self, i: usize, j: usize) {
        assert!(i < j && j <= self.k, "GT toggles act on 1 <= i < j <= k");
        let mut hi = self.get(i, j - 1);
        if i > 1 {
            hi = hi.min(self.get(i - 1, j));
        }
        let mut lo = self.get(i + 1, j);
        if j < self.k {
            lo = lo.max(self.get(i, j + 1));
        }
        let v = self.get_mut(i, j);
        *v = hi + lo - *v;
    }

    /// `F_l`: all toggles with `j − i = l`, `1 ≤ l ≤ k − 1`.
    pub fn file_toggle(&mut self, l: usize) {
        for i in 1..=self.k - l {
            self.toggle(i, i + l);
        }
    }
}

/// All tableaux of the given shape with entries in `1..=k`, in row-reading lexicographic order.
pub fn enumerate_ssyt(shape: &Partition, k: u32) -> Vec<Ssyt> {
    let mut out = Vec::new();
    let mut rows: Vec<Vec<u32>> = shape.parts().iter().map(|&p| vec![0; p as usize]).collect();
    fill(shape, k, 0, 0, &mut rows, &mut |rows| out.push(Ssyt::from_rows_unchecked(k, rows.to_vec())));
    out
}

fn fill(shape: &Partition, k: u32, r: usize, c: usize, rows: &mut Vec<Vec<u32>>, f: &mut dyn FnMut(&[Vec<u32>])) {
    if r == shape.len() {
        f(rows);
        return;
    }
    if c == shape.part(r) as usize {
        fill(shape, k, r + 1, 0, rows, f);
        return;
    }
    let left = if c > 0 { rows[r][c - 1] } else { 1 };
    let above = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
    let lo = left.max(above);
    // the column still needs room for the cells below
    let below = (r + 1..shape.len()).take_while(|&s| shape.part(s) as usize > c).count() as u32;
    if k < below {
        return;
    }
    for v in lo..=k - below {
        rows[r][c] = v;
        fill(shape, k, r, c + 1, rows, f);
    }
}

/// `s_λ(x_1, …, x_k)` as `Σ_T ∏ x_i^{wt(T)_i}` over `SSYT(λ, k)`.
pub fn schur_eval<R>(shape: &Partition, k: u32, values: &[R]) -> R
where
    R: Clone + Zero + One + Add<Output = R> + Mul<Output = R> + From<BigInt>,
{
    assert_eq!(values.len(), k as usize, "need one value per letter");
    let mut weights: HashMap<Vec<u32>, u64> = HashMap::new();
    for t in enumerate_ssyt(shape, k) {
        *weights.entry(t.weight()).or_default() += 1;
    }
    let mut keys: Vec<_> = weights.into_iter().collect();
    keys.sort();
    let mut total = R::zero();
    for (w, count) in keys {
        let mut term = R::from(BigInt::from(count));
        for (x, &e) in values.iter().zip(&w) {
            for _ in 0..e {
                term = term * x.clone();
            }
        }
        total = total + term;
    }
    total
}
