use rayon::prelude::*;

use super::{check_box, PlanePartition};
use crate::error::{Error, Result};

/// Every plane partition in the box, lexicographic in row-major order.
pub fn enumerate(a: usize, b: usize, m: u32) -> Result<PlanePartitionIter> {
    PlanePartitionIter::new(a, b, m, None)
}

/// All weakly decreasing rows of length `b` with entries in `0..=m`, ascending.
pub fn first_rows(b: usize, m: u32) -> Result<Vec<Vec<u8>>> {
    Ok(enumerate(1, b, m)?.map(|p| p.entries).collect())
}

/// Odometer over a box, optionally with the first row held fixed.
///
/// The successor increments the last cell that is below the min of its upper and left
/// neighbours and zeroes every later cell.
pub struct PlanePartitionIter {
    current: Option<PlanePartition>,
    frozen: usize,
}

impl PlanePartitionIter {
    fn new(a: usize, b: usize, m: u32, first_row: Option<&[u8]>) -> Result<Self> {
        check_box(a, b, m)?;
        let mut pi = PlanePartition::from_raw(a, b, m as u8, vec![0; a * b]);
        let mut frozen = 0;
        if let Some(row) = first_row {
            if row.len() != b || row.windows(2).any(|w| w[0] < w[1]) || row.iter().any(|&v| v as u32 > m) {
                return Err(Error::InvalidPlanePartition(format!("bad first row {row:?}")));
            }
            pi.entries[..b].copy_from_slice(row);
            frozen = b;
        }
        Ok(PlanePartitionIter { current: Some(pi), frozen })
    }

    pub fn with_first_row(a: usize, b: usize, m: u32, row: &[u8]) -> Result<Self> {
        Self::new(a, b, m, Some(row))
    }
}

impl Iterator for PlanePartitionIter {
    type Item = PlanePartition;

    fn next(&mut self) -> Option<PlanePartition> {
        let cur = self.current.as_ref()?;
        let out = cur.clone();
        let (b, m) = (cur.b, cur.m);
        let e = &cur.entries;
        let bump = (self.frozen..e.len()).rev().find(|&idx| {
            let up = if idx < b { m } else { e[idx - b] };
            let left = if idx % b == 0 { m } else { e[idx - 1] };
            e[idx] < up.min(left)
        });
        match bump {
            Some(idx) => {
                let cur = self.current.as_mut().expect("checked above");
                cur.entries[idx] += 1;
                cur.entries[idx + 1..].fill(0);
            }
            None => self.current = None,
        }
        Some(out)
    }
}

/// Depth-first search over a box with optional symmetry and pinned cells.
#[derive(Clone, Debug)]
pub struct BoxSearch {
    a: usize,
    b: usize,
    m: u8,
    symmetric: bool,
    pinned: Vec<Option<u8>>,
}

impl BoxSearch {
    pub fn new(a: usize, b: usize, m: u32) -> Result<Self> {
        check_box(a, b, m)?;
        Ok(BoxSearch { a, b, m: m as u8, symmetric: false, pinned: vec![None; a * b] })
    }

    /// Only arrays equal to their transpose.
    pub fn symmetric(n: usize, m: u32) -> Result<Self> {
        let mut s = Self::new(n, n, m)?;
        s.symmetric = true;
        Ok(s)
    }

    /// Require entry `v` at 1-based `(i, j)`.
    pub fn pin(mut self, i: usize, j: usize, v: u32) -> Result<Self> {
        if !(1..=self.a).contains(&i) || !(1..=self.b).contains(&j) {
            return Err(Error::OutOfBounds(format!("pin at ({i},{j})")));
        }
        if v > self.m as u32 {
            return Err(Error::Range(format!("pinned value {v} exceeds m")));
        }
        self.pinned[(i - 1) * self.b + j - 1] = Some(v as u8);
        if self.symmetric {
            self.pinned[(j - 1) * self.b + i - 1] = Some(v as u8);
        }
        Ok(self)
    }

    /// Lower bound at each cell implied by pins weakly south-east of it.
    fn lower_bounds(&self) -> Vec<u8> {
        let (a, b) = (self.a, self.b);
        let mut lo = vec![0u8; a * b];
        for i in (0..a).rev() {
            for j in (0..b).rev() {
                let mut v = self.pinned[i * b + j].unwrap_or(0);
                if i + 1 < a {
                    v = v.max(lo[(i + 1) * b + j]);
                }
                if j + 1 < b {
                    v = v.max(lo[i * b + j + 1]);
                }
                lo[i * b + j] = v;
            }
        }
        lo
    }

    fn dfs(&self, lo: &[u8], idx: usize, stop: usize, pi: &mut PlanePartition, f: &mut dyn FnMut(&PlanePartition)) {
        if idx == stop {
            f(pi);
            return;
        }
        let b = self.b;
        let (i, j) = (idx / b, idx % b);
        let up = if i == 0 { self.m } else { pi.entries[idx - b] };
        let left = if j == 0 { self.m } else { pi.entries[idx - 1] };
        let hi = up.min(left);
        let forced = if self.symmetric && i > j { Some(pi.entries[j * b + i]) } else { self.pinned[idx] };
        match forced {
            Some(v) => {
                if v >= lo[idx] && v <= hi {
                    pi.entries[idx] = v;
                    self.dfs(lo, idx + 1, stop, pi, f);
                }
            }
            None => {
                for v in lo[idx]..=hi {
                    pi.entries[idx] = v;
                    self.dfs(lo, idx + 1, stop, pi, f);
                }
            }
        }
        pi.entries[idx] = 0;
    }

    pub fn for_each(&self, mut f: impl FnMut(&PlanePartition)) {
        let lo = self.lower_bounds();
        let mut pi = PlanePartition::from_raw(self.a, self.b, self.m, vec![0; self.a * self.b]);
        self.dfs(&lo, 0, self.a * self.b, &mut pi, &mut f);
    }

    pub fn collect(&self) -> Vec<PlanePartition> {
        let mut out = Vec::new();
        self.for_each(|p| out.push(p.clone()));
        out
    }

    pub fn count(&self) -> u64 {
        let mut n = 0;
        self.for_each(|_| n += 1);
        n
    }

    /// Parallel map over all matches, sharded by first row; output is in canonical order.
    pub fn par_map<T: Send>(&self, f: impl Fn(&PlanePartition) -> T + Sync) -> Vec<T> {
        let lo = self.lower_bounds();
        let mut prefixes = Vec::new();
        let mut seed = PlanePartition::from_raw(self.a, self.b, self.m, vec![0; self.a * self.b]);
        self.dfs(&lo, 0, self.b, &mut seed, &mut |p| prefixes.push(p.clone()));
        prefixes
            .into_par_iter()
            .flat_map_iter(|mut p| {
                let mut local = Vec::new();
                self.dfs(&lo, self.b, self.a * self.b, &mut p, &mut |q| local.push(f(q)));
                local
            })
            .collect()
    }

    /// Parallel filtered map; output is in canonical order.
    pub fn par_filter_map<T: Send>(&self, f: impl Fn(&PlanePartition) -> Option<T> + Sync) -> Vec<T> {
        let lo = self.lower_bounds();
        let mut prefixes = Vec::new();
        let mut seed = PlanePartition::from_raw(self.a, self.b, self.m, vec![0; self.a * self.b]);
        self.dfs(&lo, 0, self.b, &mut seed, &mut |p| prefixes.push(p.clone()));
        prefixes
            .into_par_iter()
            .flat_map_iter(|mut p| {
                let mut local = Vec::new();
                self.dfs(&lo, self.b, self.a * self.b, &mut p, &mut |q| local.extend(f(q)));
                local
            })
            .collect()
    }
}

/// Transpose-symmetric plane partitions in an `n × n × m` box.
pub fn enumerate_symmetric(n: usize, m: u32) -> Result<Vec<PlanePartition>> {
    Ok(BoxSearch::symmetric(n, m)?.collect())
}
