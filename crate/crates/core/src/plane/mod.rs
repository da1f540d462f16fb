//! Plane partitions in an `a × b × m` box and the toggle dynamics on them.

mod enumerate;
mod group_word;
mod toggle_word;

pub use enumerate::{enumerate, enumerate_symmetric, first_rows, BoxSearch, PlanePartitionIter};
pub use group_word::{apply_word, operator_order, Generator, GroupWord};
pub use toggle_word::{Toggle, ToggleFactor, ToggleWord};

use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported height bound. Entries are stored as bytes.
pub const MAX_HEIGHT: u32 = u8::MAX as u32 / 2;
/// Largest supported side length.
pub const MAX_SIDE: usize = 64;

/// An `a × b` array, weakly decreasing along rows and columns, entries in `0..=m`.
///
/// Public indices are 1-based `(i, j)` with `i` the row.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanePartition {
    a: usize,
    b: usize,
    m: u8,
    entries: Vec<u8>,
}

pub(crate) fn check_box(a: usize, b: usize, m: u32) -> Result<()> {
    if a == 0 || b == 0 || a > MAX_SIDE || b > MAX_SIDE {
        return Err(Error::Range(format!("sides must lie in 1..={MAX_SIDE}, got {a}x{b}")));
    }
    if m > MAX_HEIGHT {
        return Err(Error::Range(format!("height bound must be at most {MAX_HEIGHT}, got {m}")));
    }
    Ok(())
}

impl PlanePartition {
    pub fn new(a: usize, b: usize, m: u32, rows: &[Vec<u32>]) -> Result<Self> {
        check_box(a, b, m)?;
        if rows.len() != a || rows.iter().any(|r| r.len() != b) {
            return Err(Error::InvalidPlanePartition(format!("rows do not form a {a}x{b} array")));
        }
        let mut entries = Vec::with_capacity(a * b);
        for row in rows {
            for &v in row {
                if v > m {
                    return Err(Error::InvalidPlanePartition(format!("entry {v} exceeds m = {m}")));
                }
                entries.push(v as u8);
            }
        }
        let pi = PlanePartition { a, b, m: m as u8, entries };
        if !pi.is_valid() {
            return Err(Error::InvalidPlanePartition(format!("{rows:?} is not weakly decreasing")));
        }
        Ok(pi)
    }

    pub fn zero(a: usize, b: usize, m: u32) -> Result<Self> {
        check_box(a, b, m)?;
        Ok(PlanePartition { a, b, m: m as u8, entries: vec![0; a * b] })
    }

    pub(crate) fn from_raw(a: usize, b: usize, m: u8, entries: Vec<u8>) -> Self {
        debug_assert_eq!(entries.len(), a * b);
        PlanePartition { a, b, m, entries }
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn m(&self) -> u32 {
        self.m as u32
    }

    pub fn is_square(&self) -> bool {
        self.a == self.b
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    /// Entry at 1-based `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        assert!((1..=self.a).contains(&i) && (1..=self.b).contains(&j), "({i},{j}) out of range");
        self.entries[(i - 1) * self.b + j - 1] as u32
    }

    /// Entry with the boundary convention: `m` above and left of the box, `0` below and right.
    pub fn get_extended(&self, i: isize, j: isize) -> u32 {
        if i < 1 || j < 1 {
            self.m as u32
        } else if i as usize > self.a || j as usize > self.b {
            0
        } else {
            self.get(i as usize, j as usize)
        }
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.entries.chunks(self.b).map(|r| r.iter().map(|&v| v as u32).collect()).collect()
    }

    pub fn is_valid(&self) -> bool {
        let (a, b) = (self.a, self.b);
        (0..a).all(|i| {
            (0..b).all(|j| {
                let v = self.entries[i * b + j];
                v <= self.m
                    && (j + 1 == b || v >= self.entries[i * b + j + 1])
                    && (i + 1 == a || v >= self.entries[(i + 1) * b + j])
            })
        })
    }

    /// `|π|`
    pub fn size(&self) -> u64 {
        self.entries.iter().map(|&v| v as u64).sum()
    }

    /// `|π|'`, the sum over `i ≤ j`.
    pub fn upper_size(&self) -> Result<u64> {
        self.require_square()?;
        let n = self.a;
        Ok((0..n).flat_map(|i| (i..n).map(move |j| (i, j))).map(|(i, j)| self.entries[i * n + j] as u64).sum())
    }

    /// Number of plane partitions in the box, from the product formula at `q = 1`.
    pub fn box_count(a: usize, b: usize, m: u32) -> BigUint {
        let f = crate::qpoly::mac_formula(a as u32, b as u32, m);
        f.value_at_one().expect("integral").to_biguint().expect("nonnegative")
    }

    fn require_square(&self) -> Result<()> {
        if self.a == self.b {
            Ok(())
        } else {
            Err(Error::NotSquare { a: self.a, b: self.b })
        }
    }

    fn check_cell(&self, i: usize, j: usize) -> Result<()> {
        if (1..=self.a).contains(&i) && (1..=self.b).contains(&j) {
            Ok(())
        } else {
            Err(Error::OutOfBounds(format!("cell ({i},{j}) in a {}x{} array", self.a, self.b)))
        }
    }

    // ---- in-place primitives, 0-based ----

    #[inline]
    pub(crate) fn tog(&mut self, i: usize, j: usize) {
        let b = self.b;
        let e = &mut self.entries;
        let up = if i == 0 { self.m } else { e[(i - 1) * b + j] };
        let left = if j == 0 { self.m } else { e[i * b + j - 1] };
        let down = if i + 1 == self.a { 0 } else { e[(i + 1) * b + j] };
        let right = if j + 1 == b { 0 } else { e[i * b + j + 1] };
        let idx = i * b + j;
        e[idx] = up.min(left) + down.max(right) - e[idx];
    }

    /// `F_k`, cells with `j − i = k`.
    pub(crate) fn file_mut(&mut self, k: isize) {
        for i in 0..self.a {
            let j = i as isize + k;
            if (0..self.b as isize).contains(&j) {
                self.tog(i, j as usize);
            }
        }
    }

    /// `R_k`, cells with `i + j − 1 = k` (1-based).
    pub(crate) fn rank_mut(&mut self, k: usize) {
        let s = k - 1; // 0-based i + j
        for i in 0..self.a.min(s + 1) {
            let j = s - i;
            if j < self.b {
                self.tog(i, j);
            }
        }
    }

    pub(crate) fn pos_fiber_mut(&mut self, k: usize, inverse: bool) {
        if inverse {
            for j in (0..self.b).rev() {
                self.tog(k - 1, j);
            }
        } else {
            for j in 0..self.b {
                self.tog(k - 1, j);
            }
        }
    }

    pub(crate) fn neg_fiber_mut(&mut self, k: usize, inverse: bool) {
        if inverse {
            for i in (0..self.a).rev() {
                self.tog(i, k - 1);
            }
        } else {
            for i in 0..self.a {
                self.tog(i, k - 1);
            }
        }
    }

    pub(crate) fn promote_mut(&mut self) {
        for k in -(self.a as isize) + 1..self.b as isize {
            self.file_mut(k);
        }
    }

    pub(crate) fn promote_inverse_mut(&mut self) {
        for k in (-(self.a as isize) + 1..self.b as isize).rev() {
            self.file_mut(k);
        }
    }

    pub(crate) fn rowmote_mut(&mut self) {
        for k in 1..self.a + self.b {
            self.rank_mut(k);
        }
    }

    pub(crate) fn rowmote_inverse_mut(&mut self) {
        for k in (1..self.a + self.b).rev() {
            self.rank_mut(k);
        }
    }

    // ---- public operators ----

    /// `τ_{i,j}`
    pub fn toggle(&self, i: usize, j: usize) -> Result<Self> {
        self.check_cell(i, j)?;
        let mut out = self.clone();
        out.tog(i - 1, j - 1);
        Ok(out)
    }

    /// `F_k` for `−a+1 ≤ k ≤ b−1`.
    pub fn file_toggle(&self, k: isize) -> Result<Self> {
        ToggleWord::single(Toggle::File(k)).apply(self)
    }

    /// `R_k` for `1 ≤ k ≤ a+b−1`.
    pub fn rank_toggle(&self, k: usize) -> Result<Self> {
        ToggleWord::single(Toggle::Rank(k)).apply(self)
    }

    /// `P_k = τ_{k,b} ⋯ τ_{k,1}`.
    pub fn pos_fiber(&self, k: usize) -> Result<Self> {
        ToggleWord::single(Toggle::PosFiber(k)).apply(self)
    }

    pub fn pos_fiber_inverse(&self, k: usize) -> Result<Self> {
        ToggleWord::single(Toggle::PosFiber(k)).inverse().apply(self)
    }

    /// `N_k = τ_{a,k} ⋯ τ_{1,k}`.
    pub fn neg_fiber(&self, k: usize) -> Result<Self> {
        ToggleWord::single(Toggle::NegFiber(k)).apply(self)
    }

    pub fn neg_fiber_inverse(&self, k: usize) -> Result<Self> {
        ToggleWord::single(Toggle::NegFiber(k)).inverse().apply(self)
    }

    pub fn promotion(&self) -> Self {
        let mut out = self.clone();
        out.promote_mut();
        out
    }

    pub fn promotion_inverse(&self) -> Self {
        let mut out = self.clone();
        out.promote_inverse_mut();
        out
    }

    pub fn rowmotion(&self) -> Self {
        let mut out = self.clone();
        out.rowmote_mut();
        out
    }

    pub fn rowmotion_inverse(&self) -> Self {
        let mut out = self.clone();
        out.rowmote_inverse_mut();
        out
    }

    pub fn rowmotion_pow(&self, k: usize) -> Self {
        let mut out = self.clone();
        for _ in 0..k {
            out.rowmote_mut();
        }
        out
    }

    /// The conjugator `D` with `D · Row · D⁻¹ = Pro`.
    pub fn conjugator(&self) -> Self {
        ToggleWord::conjugator(self.a).apply(self).expect("conjugator word is in range by construction")
    }

    pub fn conjugator_inverse(&self) -> Self {
        ToggleWord::conjugator(self.a).inverse().apply(self).expect("conjugator word is in range by construction")
    }

    /// `Co(π)_{i,j} = m − π_{a+1−i, b+1−j}`
    pub fn complement(&self) -> Self {
        let entries = self.entries.iter().rev().map(|&v| self.m - v).collect();
        PlanePartition { a: self.a, b: self.b, m: self.m, entries }
    }

    /// `Tr(π)_{i,j} = π_{j,i}`
    pub fn transpose(&self) -> Result<Self> {
        self.require_square()?;
        let n = self.a;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.entries[i * n + j];
            }
        }
        Ok(PlanePartition { a: self.a, b: self.b, m: self.m, entries })
    }

    pub fn is_symmetric(&self) -> bool {
        self.a == self.b
            && (0..self.a).all(|i| (0..i).all(|j| self.entries[i * self.a + j] == self.entries[j * self.a + i]))
    }
}

impl fmt::Debug for PlanePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PP^{}{:?}", self.m, self.rows())
    }
}

impl fmt::Display for PlanePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.rows().iter().map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")).collect();
        write!(f, "{}", rows.join(" / "))
    }
}

#[derive(Serialize, Deserialize)]
struct PlaneRepr {
    a: usize,
    b: usize,
    m: u32,
    rows: Vec<Vec<u32>>,
}

impl Serialize for PlanePartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PlaneRepr { a: self.a, b: self.b, m: self.m as u32, rows: self.rows() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for PlanePartition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = PlaneRepr::deserialize(d)?;
        PlanePartition::new(r.a, r.b, r.m, &r.rows).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests;
