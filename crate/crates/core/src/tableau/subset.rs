use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A subset of `{1, …, n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SubsetI {
    n: u32,
    members: BTreeSet<u32>,
}

impl SubsetI {
    pub fn new(n: u32, members: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for x in members {
            if !(1..=n).contains(&x) || !set.insert(x) {
                return Err(Error::Precondition(format!("{x} is repeated or outside 1..={n}")));
            }
        }
        Ok(SubsetI { n, members: set })
    }

    pub fn ground(&self) -> u32 {
        self.n
    }

    pub fn members(&self) -> Vec<u32> {
        self.members.iter().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    fn map(&self, f: impl Fn(u32) -> u32) -> Self {
        SubsetI { n: self.n, members: self.members.iter().map(|&x| f(x)).collect() }
    }

    /// `c`: `i ↦ i + 1`, with `n ↦ 1`.
    pub fn rotate(&self) -> Self {
        self.map(|x| x % self.n + 1)
    }

    /// `w₀`: `i ↦ n + 1 − i`.
    pub fn reverse(&self) -> Self {
        self.map(|x| self.n + 1 - x)
    }

    /// `−I`
    pub fn complement(&self) -> Self {
        SubsetI { n: self.n, members: (1..=self.n).filter(|x| !self.members.contains(x)).collect() }
    }

    /// `c̃(I) = c(I) Δ {1}`
    pub fn twisted_rotate(&self) -> Self {
        let mut out = self.rotate();
        if !out.members.remove(&1) {
            out.members.insert(1);
        }
        out
    }

    /// All `a`-element subsets of `{1..n}`, lexicographic.
    pub fn all_of_size(n: u32, a: usize) -> Vec<SubsetI> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn go(n: u32, a: usize, next: u32, cur: &mut Vec<u32>, out: &mut Vec<SubsetI>) {
            if cur.len() == a {
                out.push(SubsetI { n, members: cur.iter().copied().collect() });
                return;
            }
            for x in next..=n {
                cur.push(x);
                go(n, a, x + 1, cur, out);
                cur.pop();
            }
        }
        go(n, a, 1, &mut cur, &mut out);
        out
    }

    pub fn all(n: u32) -> Vec<SubsetI> {
        (0..=n as usize).flat_map(|a| Self::all_of_size(n, a)).collect()
    }
}

impl fmt::Display for SubsetI {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.members.iter().map(u32::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}
