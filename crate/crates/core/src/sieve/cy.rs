//! Triangular arrays with even first diagonal, and their bijection with `Tr·Pro`-fixed plane partitions.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::report::CheckReport;
use crate::error::{Error, Result};
use crate::plane::{enumerate, PlanePartition, MAX_HEIGHT};
use crate::poset::{ElementId, Poset};

/// `(π_{i,j})_{1 ≤ i < j ≤ n}`, weakly decreasing, bounded by `2M`, with `π_{i,i+1}` even.
///
/// `rows[i − 1]` holds `π_{i,i+1}, …, π_{i,n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CyArray {
    n: usize,
    #[serde(rename = "M")]
    half: u32,
    rows: Vec<Vec<u32>>,
}

impl CyArray {
    pub fn new(n: usize, half: u32, rows: Vec<Vec<u32>>) -> Result<Self> {
        let bad = |msg: String| Err(Error::Precondition(msg));
        if rows.len() != n.saturating_sub(1) || rows.iter().enumerate().any(|(i, r)| r.len() != n - 1 - i) {
            return bad(format!("rows of a size-{n} array must have lengths {}..1", n.saturating_sub(1)));
        }
        let c = CyArray { n, half, rows };
        for i in 1..n {
            for j in i + 1..=n {
                let v = c.get(i, j);
                if v > 2 * half {
                    return bad(format!("entry {v} exceeds {}", 2 * half));
                }
                if j < n && c.get(i, j + 1) > v || i + 1 < j && c.get(i + 1, j) > v {
                    return bad(format!("{:?} is not weakly decreasing", c.rows));
                }
                if j == i + 1 && v % 2 == 1 {
                    return bad(format!("entry ({i},{j}) = {v} on the first diagonal is odd"));
                }
            }
        }
        Ok(c)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `M`, half the height bound.
    pub fn half(&self) -> u32 {
        self.half
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// `π_{i,j}` for `1 ≤ i < j ≤ n`.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.rows[i - 1][j - i - 1]
    }
}

impl fmt::Display for CyArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.rows.iter().map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")).collect();
        write!(f, "[{}]", rows.join(" / "))
    }
}

/// All of `CY(n, 2M)`, in a fixed order.
pub fn cy_enumerate(n: usize, half: u32) -> Result<Vec<CyArray>> {
    if n <= 1 {
        return Ok(vec![CyArray { n, half, rows: Vec::new() }]);
    }
    let poset = Poset::tall_triangle(n as u32 - 1);
    let mut out = Vec::new();
    for p in poset.ppartitions(2 * half) {
        let mut rows: Vec<Vec<u32>> = (1..n).map(|i| vec![0; n - i]).collect();
        let mut even = true;
        for (h, &id) in poset.ids().iter().enumerate() {
            let ElementId::Cell(i, j) = id else { unreachable!("triangle ids are cells") };
            let v = p.value(h);
            if i == j && v % 2 == 1 {
                even = false;
            }
            rows[i as usize - 1][(j - i) as usize] = v;
        }
        if even {
            out.push(CyArray { n, half, rows });
        }
    }
    out.sort();
    Ok(out)
}

fn files_below(pi: &mut PlanePartition, undo: bool) {
    let n = pi.a() as isize;
    if undo {
        for k in (-n + 1..0).rev() {
            pi.file_mut(k);
        }
    } else {
        for k in -n + 1..0 {
            pi.file_mut(k);
        }
    }
}

/// `F_{−1} ⋯ F_{−n+1}(π)`, read off above the diagonal.
pub fn cy_bijection(pi: &PlanePartition) -> Result<CyArray> {
    let m = pi.m();
    if !pi.is_square() || m % 2 == 1 {
        return Err(Error::Precondition(format!("need a square box with even height, got {}x{}x{m}", pi.a(), pi.b())));
    }
    if pi.promotion().transpose()? != *pi {
        return Err(Error::Precondition(format!("{pi} is not fixed by Tr·Pro")));
    }
    let n = pi.a();
    let mut sigma = pi.clone();
    files_below(&mut sigma, false);
    let rows = (1..n).map(|i| (i + 1..=n).map(|j| sigma.get(i, j)).collect()).collect();
    Ok(CyArray { n, half: m / 2, rows })
}

/// The inverse: fill in the mirror image, put the average of its neighbours on the diagonal,
/// then undo the file toggles.
pub fn cy_inverse(c: &CyArray) -> Result<PlanePartition> {
    let (n, m) = (c.n, 2 * c.half);
    if n == 0 || m > MAX_HEIGHT {
        return Err(Error::Range(format!("no plane partitions for n = {n}, m = {m}")));
    }
    let mut rows = vec![vec![0u32; n]; n];
    for i in 1..=n {
        for j in i + 1..=n {
            rows[i - 1][j - 1] = c.get(i, j);
            rows[j - 1][i - 1] = c.get(i, j);
        }
        let above = if i == 1 { m } else { c.get(i - 1, i) };
        let below = if i == n { 0 } else { c.get(i, i + 1) };
        rows[i - 1][i - 1] = (above + below) / 2;
    }
    let mut sigma = PlanePartition::new(n, n, m, &rows)?;
    files_below(&mut sigma, true);
    Ok(sigma)
}

/// `∏_{1 ≤ i ≤ j ≤ n−1} (i+j+2M)/(i+j)`
pub fn cy_count(n: usize, half: u32) -> BigInt {
    let (mut num, mut den) = (BigInt::from(1), BigInt::from(1));
    for i in 1..n {
        for j in i..n {
            num *= i + j + 2 * half as usize;
            den *= i + j;
        }
    }
    num / den
}

/// Bijectivity of [`cy_bijection`] from `{π ∈ PP^{2M}(n×n) : Tr·Pro(π) = π}` onto `CY(n, 2M)`,
/// and the count against [`cy_count`].
pub fn verify_cy(n: usize, half: u32) -> Result<CheckReport> {
    let m = 2 * half;
    let mut report = CheckReport::new("cy-bijection", &[("n", n as u32), ("M", half)]);
    let domain: Vec<PlanePartition> =
        enumerate(n, n, m)?.filter(|p| p.promotion().transpose().map(|q| q == *p).unwrap_or(false)).collect();
    let targets = cy_enumerate(n, half)?;
    let mut images = Vec::with_capacity(domain.len());
    for pi in &domain {
        let c = cy_bijection(pi)?;
        let back = cy_inverse(&c)?;
        report.record(back == *pi, || format!("{pi} maps to {c}, which maps back to {back}"));
        images.push(c);
    }
    images.sort();
    let distinct = {
        let mut v = images.clone();
        v.dedup();
        v.len()
    };
    report.record(distinct == images.len(), || "two plane partitions share an image".into());
    report.record(images == targets, || format!("image has {} arrays, CY has {}", images.len(), targets.len()));
    for c in &targets {
        let ok = cy_inverse(c).and_then(|pi| cy_bijection(&pi)).map(|d| d == *c).unwrap_or(false);
        report.record(ok, || format!("{c} does not come from a Tr·Pro-fixed plane partition"));
    }
    let expected = cy_count(n, half);
    report.record(expected == targets.len().into(), || {
        format!("#CY = {} but the product formula gives {expected}", targets.len())
    });
    Ok(report)
}
