//! Rowmotion on the triangular posets, counted directly and through the square embeddings.

use std::collections::BTreeMap;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::embed::TriangleEmbedding;
use super::fixed_from_histogram;
use super::report::{Evaluation, OrbitCount, SCHEMA};
use crate::error::{Error, Result};
use crate::plane::PlanePartition;
use crate::poset::Poset;
use crate::qpoly::{corner_formula, symmac_prime_formula, wide_formula, ProductFormula};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Conjecture {
    /// The shifted staircase `△_n`.
    Tall,
    /// The staircase `▽_n`.
    Wide,
    /// The folded staircase on pairs `i ≤ j`, `i + j ≤ 2n`.
    Corner,
}

impl Conjecture {
    pub const ALL: [Conjecture; 3] = [Conjecture::Tall, Conjecture::Wide, Conjecture::Corner];

    pub fn name(self) -> &'static str {
        match self {
            Conjecture::Tall => "tall",
            Conjecture::Wide => "wide",
            Conjecture::Corner => "corner",
        }
    }

    pub fn poset(self, n: u32) -> Poset {
        match self {
            Conjecture::Tall => Poset::tall_triangle(n),
            Conjecture::Wide => Poset::wide_triangle(n),
            Conjecture::Corner => Poset::corner_triangle(n),
        }
    }

    /// Order of the root of unity.
    pub fn order(self, n: u32) -> u32 {
        match self {
            Conjecture::Tall => 2 * n,
            Conjecture::Wide => 2 * (n + 1),
            Conjecture::Corner => 4 * n,
        }
    }

    pub fn formula(self, n: u32, m: u32) -> ProductFormula {
        match self {
            Conjecture::Tall => symmac_prime_formula(n, m),
            Conjecture::Wide => wide_formula(n, m),
            Conjecture::Corner => corner_formula(n, m),
        }
    }
}

impl FromStr for Conjecture {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Conjecture::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Range(format!("unknown triangle `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureRow {
    pub k: i64,
    pub direct: u64,
    pub embedded: u64,
    pub evaluation: Evaluation,
    #[serde(rename = "match")]
    pub matched: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub schema: u32,
    pub conjecture: String,
    pub params: BTreeMap<String, u32>,
    pub order: u32,
    pub rows: Vec<ConjectureRow>,
    pub orbits: Vec<OrbitCount>,
    pub routes_agree: bool,
    pub outcome: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl ConjectureReport {
    pub fn ok(&self) -> bool {
        self.routes_agree && self.rows.iter().all(|r| r.matched)
    }
}

fn period_histogram(periods: impl IntoIterator<Item = u64>) -> BTreeMap<u64, u64> {
    let mut hist = BTreeMap::new();
    for p in periods {
        *hist.entry(p).or_insert(0) += 1;
    }
    hist
}

/// Elements per period into orbits per size.
fn orbit_histogram(by_period: &BTreeMap<u64, u64>) -> BTreeMap<u64, u64> {
    by_period.iter().map(|(&p, &c)| (p, c / p)).collect()
}

fn rect_period(pi: &PlanePartition) -> u64 {
    let mut q = pi.rowmotion();
    let mut e = 1;
    while q != *pi {
        q.rowmote_mut();
        e += 1;
    }
    e
}

/// Compares `#{π : Row^k(π) = π}` on the triangle with the target polynomial at `ζ^k`,
/// once by rowmotion on the poset and once inside the square box.
pub fn verify_conjecture(which: Conjecture, n: u32, m: u32) -> Result<ConjectureReport> {
    let embedding = TriangleEmbedding::new(which, n)?;
    let poset = embedding.source();
    let elements: Vec<_> = poset.ppartitions(m).collect();
    let direct =
        orbit_histogram(&period_histogram(elements.par_iter().map(|p| poset.rowmotion_period(p)).collect::<Vec<_>>()));
    let embedded = orbit_histogram(&period_histogram(
        embedding.image_search(m)?.par_filter_map(|p| embedding.in_image(p).then(|| rect_period(p))),
    ));
    let d = which.order(n);
    let poly = which.formula(n, m).expand()?;
    let rows: Vec<ConjectureRow> = (0..d as i64)
        .map(|k| {
            let (x, y) = (fixed_from_histogram(&direct, k as u64), fixed_from_histogram(&embedded, k as u64));
            let evaluation = Evaluation::at_root(&poly, d, k);
            let matched = x == y && evaluation.as_integer() == Some(&x.into());
            ConjectureRow { k, direct: x, embedded: y, evaluation, matched }
        })
        .collect();
    let routes_agree = direct == embedded;
    let confirmed = routes_agree && rows.iter().all(|r| r.matched);
    let mut params = BTreeMap::new();
    params.insert("n".to_string(), n);
    params.insert("m".to_string(), m);
    Ok(ConjectureReport {
        schema: SCHEMA,
        conjecture: format!("conj-{}", which.name()),
        params,
        order: d,
        rows,
        orbits: OrbitCount::from_histogram(&direct),
        routes_agree,
        outcome: if confirmed { "confirmed at this scale" } else { "counterexample found" }.to_string(),
        elapsed_ms: None,
    })
}
