//! Finite posets, bounded P-partitions and piecewise-linear rowmotion.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coordinates for the named families, dense indices otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementId {
    Cell(u32, u32),
    Index(u32),
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementId::Cell(i, j) => write!(f, "({i},{j})"),
            ElementId::Index(k) => write!(f, "{k}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum PosetKind {
    Rectangle { a: u32, b: u32 },
    TallTriangle { n: u32 },
    WideTriangle { n: u32 },
    CornerTriangle { n: u32 },
    Custom,
}

/// A finite poset given by its cover relations.
///
/// Elements are addressed by dense `usize` handles `0..len()`.
#[derive(Clone, Debug)]
pub struct Poset {
    kind: PosetKind,
    ids: Vec<ElementId>,
    lookup: HashMap<ElementId, usize>,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
    extension: Vec<usize>,
}

impl Poset {
    /// Builds a poset from `(lower, upper)` cover pairs.
    pub fn new(kind: PosetKind, ids: Vec<ElementId>, covers: &[(ElementId, ElementId)]) -> Result<Self> {
        let mut lookup = HashMap::with_capacity(ids.len());
        for (idx, id) in ids.iter().enumerate() {
            if lookup.insert(*id, idx).is_some() {
                return Err(Error::InvalidPoset(format!("duplicate element {id}")));
            }
        }
        let n = ids.len();
        let mut upper = vec![Vec::new(); n];
        let mut lower = vec![Vec::new(); n];
        let mut seen = BTreeSet::new();
        for (lo, hi) in covers {
            let l = *lookup.get(lo).ok_or_else(|| Error::InvalidPoset(format!("unknown element {lo}")))?;
            let h = *lookup.get(hi).ok_or_else(|| Error::InvalidPoset(format!("unknown element {hi}")))?;
            if l == h || !seen.insert((l, h)) {
                return Err(Error::InvalidPoset(format!("bad cover {lo} < {hi}")));
            }
            upper[l].push(h);
            lower[h].push(l);
        }
        let extension =
            kahn(n, &upper, &lower, false).ok_or_else(|| Error::InvalidPoset("cover relation has a cycle".into()))?;

        let poset = Poset { kind, ids, lookup, upper, lower, extension };
        for (l, ups) in poset.upper.iter().enumerate() {
            for &h in ups {
                if poset.reachable_avoiding_cover(l, h) {
                    return Err(Error::InvalidPoset(format!(
                        "cover {} < {} is implied by transitivity",
                        poset.ids[l], poset.ids[h]
                    )));
                }
            }
        }
        Ok(poset)
    }

    /// Poset on `0..n` with integer ids.
    pub fn custom(n: usize, covers: &[(usize, usize)]) -> Result<Self> {
        let ids = (0..n as u32).map(ElementId::Index).collect();
        let covers: Vec<_> =
            covers.iter().map(|&(l, h)| (ElementId::Index(l as u32), ElementId::Index(h as u32))).collect();
        Self::new(PosetKind::Custom, ids, &covers)
    }

    fn reachable_avoiding_cover(&self, from: usize, to: usize) -> bool {
        let mut stack: Vec<usize> = self.upper[from].iter().copied().filter(|&x| x != to).collect();
        let mut seen = vec![false; self.len()];
        while let Some(x) = stack.pop() {
            if x == to {
                return true;
            }
            if std::mem::replace(&mut seen[x], true) {
                continue;
            }
            stack.extend(self.upper[x].iter().copied());
        }
        false
    }

    /// The `a × b` rectangle with `(a,b)` minimal and `(1,1)` maximal.
    pub fn rectangle(a: u32, b: u32) -> Self {
        let mut ids = Vec::new();
        let mut covers = Vec::new();
        for i in 1..=a {
            for j in 1..=b {
                ids.push(ElementId::Cell(i, j));
                if i > 1 {
                    covers.push((ElementId::Cell(i, j), ElementId::Cell(i - 1, j)));
                }
                if j > 1 {
                    covers.push((ElementId::Cell(i, j), ElementId::Cell(i, j - 1)));
                }
            }
        }
        Self::new(PosetKind::Rectangle { a, b }, ids, &covers).expect("rectangle is a valid poset")
    }

    /// Shifted staircase on pairs `1 ≤ i ≤ j ≤ n`, with `(1,1)` maximal.
    pub fn tall_triangle(n: u32) -> Self {
        let mut ids = Vec::new();
        let mut covers = Vec::new();
        for i in 1..=n {
            for j in i..=n {
                ids.push(ElementId::Cell(i, j));
                if i < j {
                    covers.push((ElementId::Cell(i + 1, j), ElementId::Cell(i, j)));
                }
                if j < n {
                    covers.push((ElementId::Cell(i, j + 1), ElementId::Cell(i, j)));
                }
            }
        }
        Self::new(PosetKind::TallTriangle { n }, ids, &covers).expect("triangle is a valid poset")
    }

    /// Staircase on pairs with `i + j ≤ n + 1`, with `(1,1)` maximal.
    pub fn wide_triangle(n: u32) -> Self {
        let mut ids = Vec::new();
        let mut covers = Vec::new();
        for i in 1..=n {
            for j in 1..=n + 1 - i {
                ids.push(ElementId::Cell(i, j));
                if i + j <= n {
                    covers.push((ElementId::Cell(i + 1, j), ElementId::Cell(i, j)));
                    covers.push((ElementId::Cell(i, j + 1), ElementId::Cell(i, j)));
                }
            }
        }
        Self::new(PosetKind::WideTriangle { n }, ids, &covers).expect("triangle is a valid poset")
    }

    /// Pairs `i ≤ j` with `i + j ≤ 2n`: the wide triangle of size `2n − 1` folded along
    /// its axis of symmetry.
    pub fn corner_triangle(n: u32) -> Self {
        let mut ids = Vec::new();
        let mut covers = Vec::new();
        for i in 1..=n {
            for j in i..=2 * n - i {
                ids.push(ElementId::Cell(i, j));
                if i + j < 2 * n {
                    covers.push((ElementId::Cell(i, j + 1), ElementId::Cell(i, j)));
                    if i < j {
                        covers.push((ElementId::Cell(i + 1, j), ElementId::Cell(i, j)));
                    }
                }
            }
        }
        Self::new(PosetKind::CornerTriangle { n }, ids, &covers).expect("triangle is a valid poset")
    }

    pub fn kind(&self) -> PosetKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn ids(&self) -> &[ElementId] {
        &self.ids
    }

    pub fn id(&self, p: usize) -> ElementId {
        self.ids[p]
    }

    pub fn index_of(&self, id: ElementId) -> Option<usize> {
        self.lookup.get(&id).copied()
    }

    pub fn upper_covers(&self, p: usize) -> &[usize] {
        &self.upper[p]
    }

    pub fn lower_covers(&self, p: usize) -> &[usize] {
        &self.lower[p]
    }

    pub fn covers(&self) -> Vec<(ElementId, ElementId)> {
        let mut out = Vec::new();
        for (l, ups) in self.upper.iter().enumerate() {
            for &h in ups {
                out.push((self.ids[l], self.ids[h]));
            }
        }
        out
    }

    pub fn cover_count(&self) -> usize {
        self.upper.iter().map(Vec::len).sum()
    }

    /// The stored linear extension, minimal elements first.
    pub fn linear_extension(&self) -> &[usize] {
        &self.extension
    }

    /// A second linear extension, preferring the largest available handle at each step.
    pub fn alternate_linear_extension(&self) -> Vec<usize> {
        kahn(self.len(), &self.upper, &self.lower, true).expect("acyclic by construction")
    }

    pub fn is_linear_extension(&self, order: &[usize]) -> bool {
        if order.len() != self.len() {
            return false;
        }
        let mut pos = vec![usize::MAX; self.len()];
        for (k, &p) in order.iter().enumerate() {
            if p >= self.len() || pos[p] != usize::MAX {
                return false;
            }
            pos[p] = k;
        }
        self.upper.iter().enumerate().all(|(l, ups)| ups.iter().all(|&h| pos[l] < pos[h]))
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&p| self.lower[p].is_empty()).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&p| self.upper[p].is_empty()).collect()
    }

    pub fn is_ppartition(&self, pi: &PPartition) -> bool {
        pi.values.len() == self.len()
            && pi.values.iter().all(|&v| v <= pi.height)
            && self.upper.iter().enumerate().all(|(l, ups)| ups.iter().all(|&h| pi.values[l] <= pi.values[h]))
    }

    pub fn validate(&self, pi: &PPartition) -> Result<()> {
        if self.is_ppartition(pi) {
            Ok(())
        } else {
            Err(Error::InvalidPPartition(format!("{:?} on {:?}", pi.values, self.kind)))
        }
    }

    /// In-place toggle at handle `p`.
    pub fn toggle_in_place(&self, values: &mut [u32], height: u32, p: usize) {
        let hi = self.upper[p].iter().map(|&q| values[q]).min().unwrap_or(height);
        let lo = self.lower[p].iter().map(|&q| values[q]).max().unwrap_or(0);
        values[p] = hi + lo - values[p];
    }

    pub fn toggle_at(&self, pi: &PPartition, p: usize) -> Result<PPartition> {
        if p >= self.len() {
            return Err(Error::OutOfBounds(format!("element handle {p}")));
        }
        let mut out = pi.clone();
        self.toggle_in_place(&mut out.values, out.height, p);
        Ok(out)
    }

    /// Toggles along `order` read right to left, so its last element goes first.
    pub fn rowmotion_along(&self, pi: &PPartition, order: &[usize]) -> PPartition {
        let mut out = pi.clone();
        for &p in order.iter().rev() {
            self.toggle_in_place(&mut out.values, out.height, p);
        }
        out
    }

    pub fn rowmotion(&self, pi: &PPartition) -> PPartition {
        self.rowmotion_along(pi, &self.extension)
    }

    pub fn rowmotion_inverse(&self, pi: &PPartition) -> PPartition {
        let mut out = pi.clone();
        for &p in &self.extension {
            self.toggle_in_place(&mut out.values, out.height, p);
        }
        out
    }

    /// Least `e ≥ 1` with `Row^e(pi) = pi`.
    pub fn rowmotion_period(&self, pi: &PPartition) -> u64 {
        let mut cur = self.rowmotion(pi);
        let mut e = 1;
        while cur != *pi {
            cur = self.rowmotion(&cur);
            e += 1;
        }
        e
    }

    /// All P-partitions of height `m`, lexicographic along the stored extension.
    pub fn ppartitions(&self, m: u32) -> PPartitionIter<'_> {
        PPartitionIter::new(self, m)
    }

    pub fn count_ppartitions(&self, m: u32) -> u64 {
        self.ppartitions(m).count() as u64
    }

    pub fn to_document(&self) -> PosetDocument {
        PosetDocument { name: self.kind, elements: self.ids.clone(), covers: self.covers() }
    }

    pub fn from_document(doc: &PosetDocument) -> Result<Self> {
        Self::new(doc.name, doc.elements.clone(), &doc.covers)
    }
}

fn kahn(n: usize, upper: &[Vec<usize>], lower: &[Vec<usize>], prefer_max: bool) -> Option<Vec<usize>> {
    let mut indeg: Vec<usize> = lower.iter().map(Vec::len).collect();
    let mut ready: BTreeSet<usize> = (0..n).filter(|&p| indeg[p] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(p) = if prefer_max { ready.pop_last() } else { ready.pop_first() } {
        order.push(p);
        for &h in &upper[p] {
            indeg[h] -= 1;
            if indeg[h] == 0 {
                ready.insert(h);
            }
        }
    }
    (order.len() == n).then_some(order)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetDocument {
    pub name: PosetKind,
    pub elements: Vec<ElementId>,
    pub covers: Vec<(ElementId, ElementId)>,
}

/// Order-preserving labeling by `0..=height`; `values[p]` belongs to handle `p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PPartition {
    pub height: u32,
    pub values: Vec<u32>,
}

impl PPartition {
    pub fn new(height: u32, values: Vec<u32>) -> Self {
        PPartition { height, values }
    }

    pub fn zero(poset: &Poset, height: u32) -> Self {
        PPartition { height, values: vec![0; poset.len()] }
    }

    pub fn value(&self, p: usize) -> u32 {
        self.values[p]
    }
}

/// Odometer over P-partitions.
///
/// The successor increments the last position along the extension that is below `height`
/// and resets every later position to the max of its lower covers.
pub struct PPartitionIter<'p> {
    poset: &'p Poset,
    height: u32,
    current: Option<Vec<u32>>,
}

impl<'p> PPartitionIter<'p> {
    fn new(poset: &'p Poset, height: u32) -> Self {
        let mut values = vec![0; poset.len()];
        let mut it = PPartitionIter { poset, height, current: None };
        it.reset_from(&mut values, 0);
        it.current = Some(values);
        it
    }

    fn reset_from(&self, values: &mut [u32], start: usize) {
        for &p in &self.poset.extension[start..] {
            values[p] = self.poset.lower[p].iter().map(|&q| values[q]).max().unwrap_or(0);
        }
    }
}

impl Iterator for PPartitionIter<'_> {
    type Item = PPartition;

    fn next(&mut self) -> Option<PPartition> {
        let mut values = self.current.take()?;
        let out = PPartition { height: self.height, values: values.clone() };
        let ext = &self.poset.extension;
        if let Some(pos) = (0..ext.len()).rev().find(|&k| values[ext[k]] < self.height) {
            values[ext[pos]] += 1;
            self.reset_from(&mut values, pos + 1);
            self.current = Some(values);
        }
        Some(out)
    }
}
