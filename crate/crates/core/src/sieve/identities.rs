//! Pointwise checks of operator identities and of reciprocity.

use std::str::FromStr;

use super::report::CheckReport;
use crate::error::{Error, Result};
use crate::plane::{enumerate, PlanePartition, ToggleWord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Identity {
    /// `D·Row·D⁻¹ = Pro`
    RowToPro,
    /// `D·Co·Row^{−(a+1)} = Co·D`
    Complement,
    /// `D·Tr·Row^n = Tr·Co·D`
    Transpose,
    /// `D·Tr·Co·Row^{−1} = Tr·D`
    TransposeComplement,
    /// `Co` as nested file toggles.
    ComplementFiles,
    /// `Co` as nested rank toggles.
    ComplementRanks,
    /// `Co·D` as nested column toggles.
    ComplementConjugator,
    /// `Pro = P_1 ⋯ P_a`
    ProRows,
    /// `Pro = N_b⁻¹ ⋯ N_1⁻¹`
    ProColumns,
    /// `Row = P_a ⋯ P_1`
    RowRows,
    /// `Row = N_b ⋯ N_1`
    RowColumns,
}

impl Identity {
    pub const ALL: [Identity; 11] = [
        Identity::RowToPro,
        Identity::Complement,
        Identity::Transpose,
        Identity::TransposeComplement,
        Identity::ComplementFiles,
        Identity::ComplementRanks,
        Identity::ComplementConjugator,
        Identity::ProRows,
        Identity::ProColumns,
        Identity::RowRows,
        Identity::RowColumns,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::RowToPro => "D·Row·D^-1 = Pro",
            Identity::Complement => "D·Co·Row^-(a+1) = Co·D",
            Identity::Transpose => "D·Tr·Row^n = Tr·Co·D",
            Identity::TransposeComplement => "D·Tr·Co·Row^-1 = Tr·D",
            Identity::ComplementFiles => "Co = file word",
            Identity::ComplementRanks => "Co = rank word",
            Identity::ComplementConjugator => "Co·D = column word",
            Identity::ProRows => "Pro = P_1···P_a",
            Identity::ProColumns => "Pro = N_b^-1···N_1^-1",
            Identity::RowRows => "Row = P_a···P_1",
            Identity::RowColumns => "Row = N_b···N_1",
        }
    }

    pub fn needs_square(self) -> bool {
        matches!(self, Identity::Transpose | Identity::TransposeComplement)
    }

    /// Both sides evaluated at `pi`.
    fn sides(self, pi: &PlanePartition, words: &Words) -> Result<(PlanePartition, PlanePartition)> {
        let a = pi.a();
        Ok(match self {
            Identity::RowToPro => (pi.conjugator_inverse().rowmotion().conjugator(), pi.promotion()),
            Identity::Complement => {
                let mut q = pi.clone();
                for _ in 0..=a {
                    q = q.rowmotion_inverse();
                }
                (q.complement().conjugator(), pi.conjugator().complement())
            }
            Identity::Transpose => {
                (pi.rowmotion_pow(a).transpose()?.conjugator(), pi.conjugator().complement().transpose()?)
            }
            Identity::TransposeComplement => {
                (pi.rowmotion_inverse().complement().transpose()?.conjugator(), pi.conjugator().transpose()?)
            }
            Identity::ComplementFiles => (words.co_files.apply(pi)?, pi.complement()),
            Identity::ComplementRanks => (words.co_ranks.apply(pi)?, pi.complement()),
            Identity::ComplementConjugator => (words.co_d.apply(pi)?, pi.conjugator().complement()),
            Identity::ProRows => (words.pro_rows.apply(pi)?, pi.promotion()),
            Identity::ProColumns => (words.pro_cols.apply(pi)?, pi.promotion()),
            Identity::RowRows => (words.row_rows.apply(pi)?, pi.rowmotion()),
            Identity::RowColumns => (words.row_cols.apply(pi)?, pi.rowmotion()),
        })
    }
}

impl FromStr for Identity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL.into_iter().find(|i| i.name() == s).ok_or_else(|| Error::Range(format!("unknown identity `{s}`")))
    }
}

struct Words {
    co_files: ToggleWord,
    co_ranks: ToggleWord,
    co_d: ToggleWord,
    pro_rows: ToggleWord,
    pro_cols: ToggleWord,
    row_rows: ToggleWord,
    row_cols: ToggleWord,
}

impl Words {
    fn new(a: usize, b: usize) -> Self {
        Words {
            co_files: ToggleWord::complement_by_files(a, b),
            co_ranks: ToggleWord::complement_by_ranks(a, b),
            co_d: ToggleWord::complement_conjugator(b),
            pro_rows: ToggleWord::promotion_by_rows(a),
            pro_cols: ToggleWord::promotion_by_columns(b),
            row_rows: ToggleWord::rowmotion_by_rows(a),
            row_cols: ToggleWord::rowmotion_by_columns(b),
        }
    }
}

/// Checks every applicable identity at every point of `PP^m(a × b)`.
pub fn check_identities(a: usize, b: usize, m: u32) -> Result<Vec<CheckReport>> {
    let words = Words::new(a, b);
    let ids: Vec<Identity> = Identity::ALL.into_iter().filter(|i| !i.needs_square() || a == b).collect();
    let params = [("a", a as u32), ("b", b as u32), ("m", m)];
    let mut reports: Vec<CheckReport> = ids.iter().map(|i| CheckReport::new(i.name(), &params)).collect();
    for pi in enumerate(a, b, m)? {
        for (id, report) in ids.iter().zip(reports.iter_mut()) {
            let (lhs, rhs) = id.sides(&pi, &words)?;
            report.record(lhs == rhs, || format!("at {pi}: left side {lhs}, right side {rhs}"));
        }
    }
    Ok(reports)
}

/// `π_{i,j} + Row^{i+j−1}(π)_{a+1−i, b+1−j} = m` for every cell of every `π`.
///
/// Pairing the power with `(i, j)` instead fails already for `π = 0` in `2 × 2` at `m > 0`.
pub fn verify_reciprocity(a: usize, b: usize, m: u32) -> Result<CheckReport> {
    let mut report = CheckReport::new("reciprocity", &[("a", a as u32), ("b", b as u32), ("m", m)]);
    for pi in enumerate(a, b, m)? {
        let mut powers = vec![pi.clone()];
        for _ in 1..a + b {
            let next = powers.last().expect("nonempty").rowmotion();
            powers.push(next);
        }
        for i in 1..=a {
            for j in 1..=b {
                let lhs = pi.get(i, j) + powers[i + j - 1].get(a + 1 - i, b + 1 - j);
                report.record(lhs == m, || format!("at {pi}, cell ({i},{j}): sum is {lhs}"));
            }
        }
    }
    Ok(report)
}
