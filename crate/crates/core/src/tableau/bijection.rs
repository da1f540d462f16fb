use super::{GtPattern, Partition, Ssyt, SubsetI};
use crate::error::{Error, Result};
use crate::plane::PlanePartition;

/// `Φ`: row `t` of the tableau has `π_{t,t+s}` entries at most `k − s`.
pub fn gt_to_ssyt(g: &GtPattern) -> Ssyt {
    let k = g.k();
    let len = |t: usize, v: usize| if v < t { 0 } else { g.get(t, t + k - v) };
    let mut rows = Vec::new();
    for t in 1..=k {
        let mut row = Vec::new();
        for v in t..=k {
            let count = len(t, v) - len(t, v - 1);
            row.extend(std::iter::repeat(v as u32).take(count as usize));
        }
        if row.is_empty() {
            break;
        }
        rows.push(row);
    }
    Ssyt::new(k as u32, rows).expect("a valid pattern yields a semistandard tableau")
}

/// `Φ⁻¹`
pub fn ssyt_to_gt(t: &Ssyt) -> GtPattern {
    let k = t.k() as usize;
    let rows = (1..=k)
        .map(|i| {
            (i..=k)
                .map(|j| {
                    let bound = (k - (j - i)) as u32;
                    t.rows().get(i - 1).map_or(0, |r| r.iter().filter(|&&v| v <= bound).count() as u32)
                })
                .collect()
        })
        .collect();
    GtPattern::from_rows_unchecked(rows)
}

/// The pattern in `GT(m^a, a+b)` with the plane partition in its free rectangle.
pub fn pp_to_gt(pi: &PlanePartition) -> GtPattern {
    let (a, b, m) = (pi.a(), pi.b(), pi.m());
    let k = a + b;
    let rows = (1..=k)
        .map(|i| {
            (i..=k)
                .map(|j| {
                    if i > a {
                        0
                    } else if j <= a {
                        m
                    } else {
                        pi.get(i, j - a)
                    }
                })
                .collect()
        })
        .collect();
    GtPattern::from_rows_unchecked(rows)
}

/// `Ψ`
pub fn pp_to_ssyt(pi: &PlanePartition) -> Ssyt {
    gt_to_ssyt(&pp_to_gt(pi))
}

/// `Ψ⁻¹` for a tableau of shape `m^a` with entries up to `k = a + b`.
pub fn ssyt_to_pp(t: &Ssyt, a: usize) -> Result<PlanePartition> {
    let k = t.k() as usize;
    if a == 0 || a >= k {
        return Err(Error::Precondition(format!("need 1 <= a < k, got a = {a}, k = {k}")));
    }
    let shape = t.shape();
    let m = shape.part(0);
    if shape != Partition::rectangle(m, a) {
        return Err(Error::InvalidTableau(format!("shape {:?} is not {m}^{a}", shape.parts())));
    }
    let g = ssyt_to_gt(t);
    let b = k - a;
    let rows: Vec<Vec<u32>> = (1..=a).map(|i| (1..=b).map(|j| g.get(i, a + j)).collect()).collect();
    PlanePartition::new(a, b, m, &rows)
}

/// Positions of the down steps along the 0/1 boundary, read from the upper-right corner.
pub fn lattice_path_subset(pi: &PlanePartition) -> Result<SubsetI> {
    if pi.m() != 1 {
        return Err(Error::Precondition(format!("lattice paths need m = 1, got m = {}", pi.m())));
    }
    let (a, b) = (pi.a(), pi.b());
    let members = (1..=a).map(|i| {
        let ones = (1..=b).filter(|&j| pi.get(i, j) == 1).count();
        (b - ones + i) as u32
    });
    SubsetI::new((a + b) as u32, members)
}

/// `π = π¹ + ⋯ + π^m` with `(π^t)_{i,j} = [π_{i,j} ≥ t]`.
pub fn threshold_layers(pi: &PlanePartition) -> Vec<PlanePartition> {
    (1..=pi.m())
        .map(|t| {
            let rows: Vec<Vec<u32>> =
                pi.rows().iter().map(|r| r.iter().map(|&v| u32::from(v >= t)).collect()).collect();
            PlanePartition::new(pi.a(), pi.b(), 1, &rows).expect("layers of a plane partition are plane partitions")
        })
        .collect()
}
