//! Fixed points, orbits and cyclic-sieving checks.

mod conjecture;
mod cy;
mod embed;
mod identities;
mod report;
mod suite;

pub use conjecture::{verify_conjecture, Conjecture, ConjectureReport, ConjectureRow};
pub use cy::{cy_bijection, cy_count, cy_enumerate, cy_inverse, verify_cy, CyArray};
pub use embed::{embed_corner, embed_tall, embed_wide, TriangleEmbedding};
pub use identities::{check_identities, verify_reciprocity, Identity};
pub use report::{CheckReport, CspReport, CspRow, Evaluation, OrbitCount, SCHEMA};
pub use suite::{bijection_suite, SuiteLimits};

use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::plane::{apply_word, enumerate, enumerate_symmetric, Generator, GroupWord, PlanePartition};
use crate::qpoly::{evaluate_at_root, mac_formula, symmac_formula, symmac_prime_formula, IntPolynomial};
use crate::tableau::{schur_eval, Partition};

/// Result of a fixed-point count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPoints {
    pub count: u64,
    pub witnesses: Vec<PlanePartition>,
}

/// Plane partitions in the box fixed by `word`, in canonical order.
pub fn fixed_point_iter(word: GroupWord, a: usize, b: usize, m: u32) -> Result<impl Iterator<Item = PlanePartition>> {
    if word.needs_square() && a != b {
        return Err(Error::NotSquare { a, b });
    }
    Ok(enumerate(a, b, m)?.filter(move |p| apply_word(p, &word).map(|q| q == *p).unwrap_or(false)))
}

/// Counts fixed points by testing every element, keeping at most `keep` witnesses.
pub fn fixed_points(word: &GroupWord, a: usize, b: usize, m: u32, keep: usize) -> Result<FixedPoints> {
    let mut out = FixedPoints { count: 0, witnesses: Vec::new() };
    for p in fixed_point_iter(word.clone(), a, b, m)? {
        out.count += 1;
        if out.witnesses.len() < keep {
            out.witnesses.push(p);
        }
    }
    Ok(out)
}

/// A finite set of plane partitions with the generators tabulated as permutations.
pub struct ActionTable {
    elements: Vec<PlanePartition>,
    index: HashMap<PlanePartition, u32>,
    forward: [OnceLock<Result<Vec<u32>>>; 5],
    backward: [OnceLock<Result<Vec<u32>>>; 5],
}

fn slot(g: Generator) -> usize {
    Generator::ALL.iter().position(|&h| h == g).expect("listed generator")
}

impl ActionTable {
    /// The whole box `PP^m(a × b)`.
    pub fn new(a: usize, b: usize, m: u32) -> Result<Self> {
        Self::from_elements(enumerate(a, b, m)?.collect())
    }

    /// A subset of one box. Generators are tabulated on demand and must preserve it.
    pub fn from_elements(elements: Vec<PlanePartition>) -> Result<Self> {
        if let Some(first) = elements.first() {
            let shape = (first.a(), first.b(), first.m());
            if elements.iter().any(|p| (p.a(), p.b(), p.m()) != shape) {
                return Err(Error::Precondition("elements come from different boxes".into()));
            }
        }
        let mut index = HashMap::with_capacity(elements.len());
        for (i, p) in elements.iter().enumerate() {
            if index.insert(p.clone(), i as u32).is_some() {
                return Err(Error::Precondition(format!("duplicate element {p}")));
            }
        }
        Ok(ActionTable { elements, index, forward: Default::default(), backward: Default::default() })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[PlanePartition] {
        &self.elements
    }

    pub fn index_of(&self, pi: &PlanePartition) -> Option<usize> {
        self.index.get(pi).map(|&i| i as usize)
    }

    fn build(&self, g: Generator) -> Result<Vec<u32>> {
        self.elements
            .par_iter()
            .map(|p| {
                let mut q = p.clone();
                g.apply_once(&mut q, false)?;
                self.index
                    .get(&q)
                    .copied()
                    .ok_or_else(|| Error::NotInvariant(format!("{} sends {p} outside the set", g.name())))
            })
            .collect()
    }

    pub fn permutation(&self, g: Generator) -> Result<&[u32]> {
        self.forward[slot(g)].get_or_init(|| self.build(g)).as_deref().map_err(Clone::clone)
    }

    pub fn inverse_permutation(&self, g: Generator) -> Result<&[u32]> {
        self.backward[slot(g)]
            .get_or_init(|| {
                let fwd = self.permutation(g)?;
                let mut inv = vec![0u32; fwd.len()];
                for (x, &y) in fwd.iter().enumerate() {
                    inv[y as usize] = x as u32;
                }
                Ok(inv)
            })
            .as_deref()
            .map_err(Clone::clone)
    }

    /// The permutation induced by `word`, rightmost token first.
    pub fn word_permutation(&self, word: &GroupWord) -> Result<Vec<u32>> {
        let mut p: Vec<u32> = (0..self.len() as u32).collect();
        for &(g, e) in word.tokens().iter().rev() {
            let step = if e < 0 { self.inverse_permutation(g)? } else { self.permutation(g)? };
            for _ in 0..e.unsigned_abs() {
                p.iter_mut().for_each(|x| *x = step[*x as usize]);
            }
        }
        Ok(p)
    }

    pub fn fixed_point_count(&self, word: &GroupWord) -> Result<u64> {
        let p = self.word_permutation(word)?;
        Ok(p.iter().enumerate().filter(|&(x, &y)| x as u32 == y).count() as u64)
    }

    pub fn fixed_point_indices(&self, word: &GroupWord) -> Result<Vec<usize>> {
        let p = self.word_permutation(word)?;
        Ok((0..p.len()).filter(|&x| p[x] as usize == x).collect())
    }

    /// Elements fixed by every word in `words`.
    pub fn common_fixed_count(&self, words: &[GroupWord]) -> Result<u64> {
        let perms = words.iter().map(|w| self.word_permutation(w)).collect::<Result<Vec<_>>>()?;
        Ok((0..self.len()).filter(|&x| perms.iter().all(|p| p[x] as usize == x)).count() as u64)
    }

    /// Orbit sizes of the cyclic group generated by `word`, as size ↦ number of orbits.
    pub fn orbit_histogram(&self, word: &GroupWord) -> Result<BTreeMap<u64, u64>> {
        Ok(cycle_histogram(&self.word_permutation(word)?))
    }
}

pub(crate) fn cycle_histogram(p: &[u32]) -> BTreeMap<u64, u64> {
    let mut seen = vec![false; p.len()];
    let mut hist = BTreeMap::new();
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0u64;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x] as usize;
            len += 1;
        }
        *hist.entry(len).or_insert(0) += 1;
    }
    hist
}

/// Number of `x` with `g^k(x) = x`, from the cycle structure of `g`.
pub fn fixed_from_histogram(hist: &BTreeMap<u64, u64>, k: u64) -> u64 {
    hist.iter().filter(|&(&len, _)| k % len == 0).map(|(&len, &c)| len * c).sum()
}

/// Burnside: fixed counts of `g^0 … g^{d−1}` average to the number of orbits, when `g^d = 1`.
pub fn burnside_holds(hist: &BTreeMap<u64, u64>, d: u64) -> bool {
    let orbits: u64 = hist.values().sum();
    let total: u64 = (0..d).map(|k| fixed_from_histogram(hist, k)).sum();
    hist.keys().all(|len| d % len == 0) && total == d * orbits
}

/// The fixed-point theorems checked on a box.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theorem {
    /// `Pro^k` against `Mac` at `ζ^k`, `ζ` of order `a+b`.
    Pro,
    /// `Co·Pro^k` against `Mac(−1)` or the alternating Schur value.
    CoPro,
    /// `Tr·Pro^k` against `SymMac((−1)^k)`.
    TrPro,
    /// `(Tr·Co)·Pro^{n+k}` against `SymMac` at `ζ^k`, `ζ` of order `2n`.
    TrCoPro,
    Row,
    CoRow,
    /// `Tr·Row^k` against `SymMac` at `ζ^k`, `ζ` of order `2n`.
    TrRow,
    /// `Tr·Co·Row^k` against `SymMac((−1)^{k+1})`.
    TrCoRow,
    /// `Co^k` against `Mac((−1)^k)`.
    CoQneg,
    /// `(Tr·Co)^k` against `SymMac((−1)^k)`.
    TrCoQneg,
    /// `Co^k` on symmetric plane partitions against `SymMac′((−1)^k)`.
    SymCoQneg,
}

impl Theorem {
    pub const ALL: [Theorem; 11] = [
        Theorem::Pro,
        Theorem::CoPro,
        Theorem::TrPro,
        Theorem::TrCoPro,
        Theorem::Row,
        Theorem::CoRow,
        Theorem::TrRow,
        Theorem::TrCoRow,
        Theorem::CoQneg,
        Theorem::TrCoQneg,
        Theorem::SymCoQneg,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::Pro => "pro-csp",
            Theorem::CoPro => "co-pro-csp",
            Theorem::TrPro => "tr-pro-csp",
            Theorem::TrCoPro => "trco-pro-csp",
            Theorem::Row => "row-csp",
            Theorem::CoRow => "co-row-csp",
            Theorem::TrRow => "tr-row-csp",
            Theorem::TrCoRow => "trco-row-csp",
            Theorem::CoQneg => "co-qneg",
            Theorem::TrCoQneg => "trco-qneg",
            Theorem::SymCoQneg => "sym-co-qneg",
        }
    }

    pub fn needs_square(self) -> bool {
        matches!(
            self,
            Theorem::TrPro
                | Theorem::TrCoPro
                | Theorem::TrRow
                | Theorem::TrCoRow
                | Theorem::TrCoQneg
                | Theorem::SymCoQneg
        )
    }

    /// Period covered by the report.
    pub fn order(self, a: usize, b: usize) -> u32 {
        match self {
            Theorem::Pro | Theorem::CoPro | Theorem::Row | Theorem::CoRow => (a + b) as u32,
            Theorem::TrPro | Theorem::TrCoPro | Theorem::TrRow | Theorem::TrCoRow => 2 * a as u32,
            Theorem::CoQneg | Theorem::TrCoQneg | Theorem::SymCoQneg => 2,
        }
    }

    /// The word whose fixed points are counted at `k`.
    pub fn word(self, a: usize, k: i64) -> GroupWord {
        use Generator::*;
        let n = a as i64;
        match self {
            Theorem::Pro => GroupWord::generator(Pro, k),
            Theorem::Row => GroupWord::generator(Row, k),
            Theorem::CoPro => GroupWord::from_tokens(vec![(Co, 1), (Pro, k)]),
            Theorem::CoRow => GroupWord::from_tokens(vec![(Co, 1), (Row, k)]),
            Theorem::TrPro => GroupWord::from_tokens(vec![(Tr, 1), (Pro, k)]),
            Theorem::TrRow => GroupWord::from_tokens(vec![(Tr, 1), (Row, k)]),
            Theorem::TrCoPro => GroupWord::from_tokens(vec![(TrCo, 1), (Pro, n + k)]),
            Theorem::TrCoRow => GroupWord::from_tokens(vec![(TrCo, 1), (Row, k)]),
            Theorem::CoQneg | Theorem::SymCoQneg => GroupWord::generator(Co, k),
            Theorem::TrCoQneg => GroupWord::generator(TrCo, k),
        }
    }

    /// Whether the words are the powers of one element of order dividing [`Theorem::order`].
    fn is_cyclic(self) -> bool {
        matches!(self, Theorem::Pro | Theorem::Row)
    }

    /// The exponents reported. The `q = −1` statements concern the involution itself.
    pub fn exponents(self, a: usize, b: usize) -> std::ops::Range<i64> {
        match self {
            Theorem::CoQneg | Theorem::TrCoQneg | Theorem::SymCoQneg => 1..2,
            _ => 0..self.order(a, b) as i64,
        }
    }
}

impl std::str::FromStr for Theorem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL.into_iter().find(|t| t.id() == s).ok_or_else(|| Error::Range(format!("unknown theorem `{s}`")))
    }
}

fn signed_alternating_schur(a: usize, b: usize, m: u32) -> BigInt {
    let shape = Partition::rectangle(m, a);
    let k = a + b;
    let values: Vec<BigInt> =
        (1..=k).map(|i| if i < k && i % 2 == 0 { -BigInt::one() } else { BigInt::one() }).collect();
    let s = schur_eval(&shape, k as u32, &values);
    if shape.kappa() % 2 == 1 {
        -s
    } else {
        s
    }
}

/// Target values for `Co·Pro^k`: `Mac(−1)` unless `k`, `a` and `b` are all odd.
pub fn complement_target(a: usize, b: usize, m: u32, k: i64) -> Result<BigInt> {
    if k % 2 != 0 && a % 2 == 1 && b % 2 == 1 {
        Ok(signed_alternating_schur(a, b, m))
    } else {
        evaluate_at_root(&mac_formula(a as u32, b as u32, m).expand()?, 2, 1).as_integer()
    }
}

/// Compares fixed counts of `family(k)` with `poly(ζ^k)` for `k` in `0..d`.
pub fn verify_csp(
    table: &ActionTable,
    family: impl Fn(i64) -> GroupWord,
    poly: &IntPolynomial,
    d: u32,
) -> Result<Vec<CspRow>> {
    (0..d as i64)
        .map(|k| {
            let count = table.fixed_point_count(&family(k))?;
            Ok(CspRow::compare(k, count, Evaluation::at_root(poly, d, k)))
        })
        .collect()
}

fn polynomial_for(th: Theorem, a: usize, b: usize, m: u32) -> Result<Option<IntPolynomial>> {
    let (a, b) = (a as u32, b as u32);
    Ok(match th {
        Theorem::Pro | Theorem::Row | Theorem::CoQneg => Some(mac_formula(a, b, m).expand()?),
        Theorem::TrPro | Theorem::TrCoPro | Theorem::TrRow | Theorem::TrCoRow | Theorem::TrCoQneg => {
            Some(symmac_formula(a, m).expand()?)
        }
        Theorem::SymCoQneg => Some(symmac_prime_formula(a, m).expand()?),
        Theorem::CoPro | Theorem::CoRow => None,
    })
}

fn target(th: Theorem, poly: Option<&IntPolynomial>, a: usize, b: usize, m: u32, k: i64) -> Result<Evaluation> {
    let d = th.order(a, b);
    Ok(match th {
        Theorem::CoPro | Theorem::CoRow => Evaluation::Integer(complement_target(a, b, m, k)?),
        Theorem::TrPro => Evaluation::at_root(poly.expect("polynomial"), 2, k),
        Theorem::TrCoRow => Evaluation::at_root(poly.expect("polynomial"), 2, k + 1),
        _ => Evaluation::at_root(poly.expect("polynomial"), d, k),
    })
}

/// Runs one theorem on a table holding the whole box (or, for [`Theorem::SymCoQneg`], the
/// symmetric plane partitions of the box).
pub fn verify_theorem_on(th: Theorem, table: &ActionTable, a: usize, b: usize, m: u32) -> Result<CspReport> {
    if th.needs_square() && a != b {
        return Err(Error::NotSquare { a, b });
    }
    let d = th.order(a, b);
    let poly = polynomial_for(th, a, b, m)?;
    let mut rows = Vec::with_capacity(d as usize);
    for k in th.exponents(a, b) {
        let count = table.fixed_point_count(&th.word(a, k))?;
        rows.push(CspRow::compare(k, count, target(th, poly.as_ref(), a, b, m, k)?));
    }
    let hist = table.orbit_histogram(&th.word(a, 1))?;
    let burnside = th.is_cyclic().then(|| burnside_holds(&hist, d as u64));
    let mut params = BTreeMap::new();
    if th.needs_square() {
        params.insert("n".to_string(), a as u32);
    } else {
        params.insert("a".to_string(), a as u32);
        params.insert("b".to_string(), b as u32);
    }
    params.insert("m".to_string(), m);
    Ok(CspReport {
        schema: SCHEMA,
        theorem: th.id().to_string(),
        params,
        order: d,
        rows,
        orbits: OrbitCount::from_histogram(&hist),
        burnside,
        elapsed_ms: None,
    })
}

/// Runs one theorem, building the needed table.
pub fn verify_theorem(th: Theorem, a: usize, b: usize, m: u32) -> Result<CspReport> {
    if th.needs_square() && a != b {
        return Err(Error::NotSquare { a, b });
    }
    let table = if th == Theorem::SymCoQneg {
        ActionTable::from_elements(enumerate_symmetric(a, m)?)?
    } else {
        ActionTable::new(a, b, m)?
    };
    verify_theorem_on(th, &table, a, b, m)
}

/// Runs every applicable theorem on the box, sharing one table.
pub fn verify_box(theorems: &[Theorem], a: usize, b: usize, m: u32) -> Result<Vec<CspReport>> {
    let mut out = Vec::new();
    let mut table = None;
    for &th in theorems {
        if th.needs_square() && a != b {
            continue;
        }
        if th == Theorem::SymCoQneg {
            out.push(verify_theorem(th, a, b, m)?);
            continue;
        }
        if table.is_none() {
            table = Some(ActionTable::new(a, b, m)?);
        }
        out.push(verify_theorem_on(th, table.as_ref().expect("built"), a, b, m)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
