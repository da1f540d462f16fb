use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{enumerate, PlanePartition};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Pro,
    Row,
    Co,
    Tr,
    TrCo,
}

impl Generator {
    pub const ALL: [Generator; 5] = [Generator::Pro, Generator::Row, Generator::Co, Generator::Tr, Generator::TrCo];

    pub fn name(self) -> &'static str {
        match self {
            Generator::Pro => "Pro",
            Generator::Row => "Row",
            Generator::Co => "Co",
            Generator::Tr => "Tr",
            Generator::TrCo => "TrCo",
        }
    }

    pub fn needs_square(self) -> bool {
        matches!(self, Generator::Tr | Generator::TrCo)
    }

    /// One application, or its inverse.
    pub fn apply_once(self, pi: &mut PlanePartition, inverse: bool) -> Result<()> {
        match (self, inverse) {
            (Generator::Pro, false) => pi.promote_mut(),
            (Generator::Pro, true) => pi.promote_inverse_mut(),
            (Generator::Row, false) => pi.rowmote_mut(),
            (Generator::Row, true) => pi.rowmote_inverse_mut(),
            (Generator::Co, _) => *pi = pi.complement(),
            (Generator::Tr, _) => *pi = pi.transpose()?,
            // Tr and Co commute, so TrCo is an involution
            (Generator::TrCo, _) => *pi = pi.complement().transpose()?,
        }
        Ok(())
    }
}

impl FromStr for Generator {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Generator::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| Error::MalformedWord(format!("unknown generator `{s}`")))
    }
}

/// A product of generators with integer exponents; the rightmost token acts first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GroupWord {
    tokens: Vec<(Generator, i64)>,
}

impl GroupWord {
    pub fn identity() -> Self {
        GroupWord::default()
    }

    pub fn generator(g: Generator, exponent: i64) -> Self {
        GroupWord { tokens: vec![(g, exponent)] }
    }

    pub fn from_tokens(tokens: Vec<(Generator, i64)>) -> Self {
        GroupWord { tokens }
    }

    pub fn tokens(&self) -> &[(Generator, i64)] {
        &self.tokens
    }

    /// `self · other`
    pub fn then_after(mut self, other: &GroupWord) -> Self {
        self.tokens.extend_from_slice(&other.tokens);
        self
    }

    pub fn needs_square(&self) -> bool {
        self.tokens.iter().any(|(g, _)| g.needs_square())
    }

    pub fn inverse(&self) -> Self {
        GroupWord { tokens: self.tokens.iter().rev().map(|&(g, e)| (g, -e)).collect() }
    }

    pub fn apply_mut(&self, pi: &mut PlanePartition) -> Result<()> {
        if self.needs_square() && !pi.is_square() {
            return Err(Error::NotSquare { a: pi.a(), b: pi.b() });
        }
        for &(g, e) in self.tokens.iter().rev() {
            for _ in 0..e.unsigned_abs() {
                g.apply_once(pi, e < 0)?;
            }
        }
        Ok(())
    }
}

impl FromStr for GroupWord {
    type Err = Error;

    /// Tokens `Pro^k`, `Row^k`, `Co`, `Tr`, `TrCo` separated by whitespace or `·`.
    fn from_str(s: &str) -> Result<Self> {
        let mut tokens = Vec::new();
        for raw in s.split(|c: char| c.is_whitespace() || c == '·' || c == '*').filter(|t| !t.is_empty()) {
            if raw == "id" {
                continue;
            }
            let (name, exp) = match raw.split_once('^') {
                None => (raw, 1),
                Some((name, e)) => {
                    let e = e.trim_matches(|c| matches!(c, '(' | ')' | '{' | '}'));
                    let e: i64 = e.parse().map_err(|_| Error::MalformedWord(format!("bad exponent in `{raw}`")))?;
                    (name, e)
                }
            };
            tokens.push((name.parse::<Generator>()?, exp));
        }
        Ok(GroupWord { tokens })
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tokens.is_empty() {
            return write!(f, "id");
        }
        let parts: Vec<String> = self
            .tokens
            .iter()
            .map(|&(g, e)| if e == 1 { g.name().to_string() } else { format!("{}^{e}", g.name()) })
            .collect();
        write!(f, "{}", parts.join("·"))
    }
}

impl Serialize for GroupWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GroupWord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

pub fn apply_word(pi: &PlanePartition, word: &GroupWord) -> Result<PlanePartition> {
    let mut out = pi.clone();
    word.apply_mut(&mut out)?;
    Ok(out)
}

/// Least `e ≥ 1` with `word^e` the identity on the whole box.
pub fn operator_order(word: &GroupWord, a: usize, b: usize, m: u32) -> Result<u64> {
    let mut order = 1u64;
    for pi in enumerate(a, b, m)? {
        let mut cur = apply_word(&pi, word)?;
        let mut e = 1u64;
        while cur != pi {
            word.apply_mut(&mut cur)?;
            e += 1;
        }
        order = order.lcm(&e);
    }
    Ok(order)
}
