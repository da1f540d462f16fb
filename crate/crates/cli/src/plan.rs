//! Work items for `verify`, their predicted sizes, and how to run them.

use std::time::Instant;

use num_bigint::BigInt;
use serde::Serialize;

use ppsieve::qpoly::mac_formula;
use ppsieve::sieve::{
    bijection_suite, check_identities, verify_box, verify_conjecture, verify_cy, verify_reciprocity, SuiteLimits,
};
use ppsieve::{CheckReport, Conjecture, ConjectureReport, CspReport, Result, Theorem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Selector {
    PpartCsp,
    ComCsp,
    TrCsp,
    TrcomCsp,
    RowCspFamily,
    QnegFamily,
    CyBijection,
    Reciprocity,
    LemmaIdentities,
    ConjTall,
    ConjWide,
    ConjCorner,
    BijectionSuite,
}

impl Selector {
    /// Theorems checked per box, for the sieve selectors.
    fn theorems(self) -> &'static [Theorem] {
        match self {
            Selector::PpartCsp => &[Theorem::Pro],
            Selector::ComCsp => &[Theorem::CoPro],
            Selector::TrCsp => &[Theorem::TrPro],
            Selector::TrcomCsp => &[Theorem::TrCoPro],
            Selector::RowCspFamily => &[Theorem::Row, Theorem::CoRow, Theorem::TrRow, Theorem::TrCoRow],
            Selector::QnegFamily => &[Theorem::CoQneg, Theorem::TrCoQneg, Theorem::SymCoQneg],
            _ => &[],
        }
    }
}

/// Parameter ranges, already resolved to inclusive bounds.
#[derive(Clone, Debug)]
pub struct Ranges {
    pub a: (usize, usize),
    pub b: (usize, usize),
    pub n: (usize, usize),
    pub m: (u32, u32),
    pub half: (u32, u32),
    pub sum_max: Option<usize>,
}

impl Ranges {
    fn boxes(&self) -> Vec<(usize, usize, u32)> {
        let mut out = Vec::new();
        for a in self.a.0..=self.a.1 {
            for b in self.b.0..=self.b.1 {
                if self.sum_max.is_some_and(|s| a + b > s) {
                    continue;
                }
                for m in self.m.0..=self.m.1 {
                    out.push((a, b, m));
                }
            }
        }
        out
    }

    fn squares(&self) -> Vec<(usize, u32)> {
        (self.n.0..=self.n.1).flat_map(|n| (self.m.0..=self.m.1).map(move |m| (n, m))).collect()
    }
}

#[derive(Clone, Debug)]
pub enum Item {
    Box { theorems: Vec<Theorem>, a: usize, b: usize, m: u32 },
    Cy { n: usize, half: u32 },
    Reciprocity { a: usize, b: usize, m: u32 },
    Identities { a: usize, b: usize, m: u32 },
    Conjecture { which: Conjecture, n: u32, m: u32 },
    Suite(SuiteLimits),
}

fn mac_size(a: usize, b: usize, m: u32) -> BigInt {
    mac_formula(a as u32, b as u32, m).value_at_one().unwrap_or_default()
}

impl Item {
    pub fn describe(&self) -> String {
        match self {
            Item::Box { a, b, m, .. } | Item::Reciprocity { a, b, m } | Item::Identities { a, b, m } => {
                format!("{a}x{b} box of height {m}")
            }
            Item::Cy { n, half } => format!("{n}x{n} box of height {}", 2 * half),
            Item::Conjecture { which, n, m } => format!("{} triangle n = {n}, m = {m}", which.name()),
            Item::Suite(_) => "bijection suite".to_string(),
        }
    }

    /// Number of objects the item enumerates, from the product formulas at `q = 1`.
    pub fn predicted_size(&self) -> BigInt {
        match *self {
            Item::Box { a, b, m, .. } | Item::Reciprocity { a, b, m } | Item::Identities { a, b, m } => {
                mac_size(a, b, m)
            }
            Item::Cy { n, half } => mac_size(n, n, 2 * half),
            Item::Conjecture { which, n, m } => {
                let direct = which.formula(n, m).value_at_one().unwrap_or_default();
                // the pinned square search has one triangle above the antidiagonal and one below
                match which {
                    Conjecture::Tall => direct,
                    Conjecture::Wide | Conjecture::Corner => &direct * &direct,
                }
            }
            Item::Suite(l) => {
                let boxes = (1..l.max_sum).map(|a| mac_size(a, l.max_sum - a, l.max_m));
                let cy = mac_size(l.cy_n, l.cy_n, 2 * l.cy_half);
                boxes.chain(std::iter::once(cy)).max().unwrap_or_default()
            }
        }
    }

    pub fn run(&self, timing: bool) -> Result<Vec<Report>> {
        let start = Instant::now();
        let mut out: Vec<Report> = match self {
            Item::Box { theorems, a, b, m } => verify_box(theorems, *a, *b, *m)?.into_iter().map(Report::Csp).collect(),
            Item::Cy { n, half } => vec![Report::Check(verify_cy(*n, *half)?)],
            Item::Reciprocity { a, b, m } => vec![Report::Check(verify_reciprocity(*a, *b, *m)?)],
            Item::Identities { a, b, m } => check_identities(*a, *b, *m)?.into_iter().map(Report::Check).collect(),
            Item::Conjecture { which, n, m } => vec![Report::Conjecture(verify_conjecture(*which, *n, *m)?)],
            Item::Suite(limits) => bijection_suite(limits)?.into_iter().map(Report::Check).collect(),
        };
        if timing {
            let ms = start.elapsed().as_millis() as u64;
            out.iter_mut().for_each(|r| r.set_elapsed(ms));
        }
        Ok(out)
    }
}

pub fn plan(selector: Selector, r: &Ranges, limits: SuiteLimits) -> Vec<Item> {
    let conj = |which: Conjecture| {
        r.squares().into_iter().map(move |(n, m)| Item::Conjecture { which, n: n as u32, m }).collect()
    };
    match selector {
        Selector::CyBijection => {
            (r.n.0..=r.n.1).flat_map(|n| (r.half.0..=r.half.1).map(move |half| Item::Cy { n, half })).collect()
        }
        Selector::Reciprocity => r.boxes().into_iter().map(|(a, b, m)| Item::Reciprocity { a, b, m }).collect(),
        Selector::LemmaIdentities => r.boxes().into_iter().map(|(a, b, m)| Item::Identities { a, b, m }).collect(),
        Selector::ConjTall => conj(Conjecture::Tall),
        Selector::ConjWide => conj(Conjecture::Wide),
        Selector::ConjCorner => conj(Conjecture::Corner),
        Selector::BijectionSuite => vec![Item::Suite(limits)],
        sieve => {
            let theorems = sieve.theorems();
            let rect: Vec<Theorem> = theorems.iter().copied().filter(|t| !t.needs_square()).collect();
            let square: Vec<Theorem> = theorems.iter().copied().filter(|t| t.needs_square()).collect();
            let mut items = Vec::new();
            if !rect.is_empty() {
                for (a, b, m) in r.boxes() {
                    items.push(Item::Box { theorems: rect.clone(), a, b, m });
                }
            }
            if !square.is_empty() {
                for (n, m) in r.squares() {
                    items.push(Item::Box { theorems: square.clone(), a: n, b: n, m });
                }
            }
            items
        }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum Report {
    Csp(CspReport),
    Check(CheckReport),
    Conjecture(ConjectureReport),
}

impl Report {
    pub fn ok(&self) -> bool {
        match self {
            Report::Csp(r) => r.ok(),
            Report::Check(r) => r.ok(),
            Report::Conjecture(r) => r.ok(),
        }
    }

    fn set_elapsed(&mut self, ms: u64) {
        match self {
            Report::Csp(r) => r.elapsed_ms = Some(ms),
            Report::Check(r) => r.elapsed_ms = Some(ms),
            Report::Conjecture(r) => r.elapsed_ms = Some(ms),
        }
    }
}
