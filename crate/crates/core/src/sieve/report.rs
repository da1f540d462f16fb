//! Serializable reports.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

use crate::qpoly::{evaluate_at_root, CyclotomicElement, IntPolynomial};

/// Version tag carried by every report.
pub const SCHEMA: u32 = 1;

/// An exact evaluation: an integer, or a cyclotomic value that is not one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evaluation {
    Integer(BigInt),
    NotRational(CyclotomicElement),
}

impl Evaluation {
    /// `poly(ζ^k)` with `ζ` a primitive `d`-th root of unity.
    pub fn at_root(poly: &IntPolynomial, d: u32, k: i64) -> Self {
        let x = evaluate_at_root(poly, d, k);
        match x.as_integer() {
            Ok(v) => Evaluation::Integer(v),
            Err(_) => Evaluation::NotRational(x),
        }
    }

    pub fn as_integer(&self) -> Option<&BigInt> {
        match self {
            Evaluation::Integer(v) => Some(v),
            Evaluation::NotRational(_) => None,
        }
    }
}

impl fmt::Display for Evaluation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Evaluation::Integer(v) => write!(f, "{v}"),
            Evaluation::NotRational(x) => write!(f, "not-rational: {x}"),
        }
    }
}

impl Serialize for Evaluation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Evaluation::Integer(v) => match v.to_i64() {
                Some(x) => s.serialize_i64(x),
                None => s.serialize_str(&v.to_string()),
            },
            Evaluation::NotRational(_) => s.serialize_str(&self.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CspRow {
    pub k: i64,
    pub count: u64,
    pub evaluation: Evaluation,
    #[serde(rename = "match")]
    pub matched: bool,
}

impl CspRow {
    pub fn compare(k: i64, count: u64, evaluation: Evaluation) -> Self {
        let matched = evaluation.as_integer() == Some(&BigInt::from(count));
        CspRow { k, count, evaluation, matched }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitCount {
    pub size: u64,
    pub orbits: u64,
}

impl OrbitCount {
    pub fn from_histogram(hist: &BTreeMap<u64, u64>) -> Vec<OrbitCount> {
        hist.iter().map(|(&size, &orbits)| OrbitCount { size, orbits }).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CspReport {
    pub schema: u32,
    pub theorem: String,
    pub params: BTreeMap<String, u32>,
    pub order: u32,
    pub rows: Vec<CspRow>,
    pub orbits: Vec<OrbitCount>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub burnside: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl CspReport {
    pub fn ok(&self) -> bool {
        self.rows.iter().all(|r| r.matched) && self.burnside != Some(false)
    }

    pub fn first_mismatch(&self) -> Option<&CspRow> {
        self.rows.iter().find(|r| !r.matched)
    }
}

/// Outcome of an exhaustive pointwise check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub schema: u32,
    pub check: String,
    pub params: BTreeMap<String, u32>,
    pub checked: u64,
    pub failures: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl CheckReport {
    pub fn new(check: impl Into<String>, params: &[(&str, u32)]) -> Self {
        CheckReport {
            schema: SCHEMA,
            check: check.into(),
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            checked: 0,
            failures: 0,
            counterexample: None,
            elapsed_ms: None,
        }
    }

    pub fn ok(&self) -> bool {
        self.failures == 0
    }

    /// Records one case.
    pub fn record(&mut self, pass: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !pass {
            self.failures += 1;
            if self.counterexample.is_none() {
                self.counterexample = Some(witness());
            }
        }
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.checked += other.checked;
        self.failures += other.failures;
        if self.counterexample.is_none() {
            self.counterexample = other.counterexample;
        }
    }
}
