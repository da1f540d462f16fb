//! Exhaustive checks of the tableau bijections and the worked examples.

use super::cy::verify_cy;
use super::report::CheckReport;
use crate::error::Result;
use crate::plane::{enumerate, PlanePartition};
use crate::tableau::{
    enumerate_ssyt, gt_to_ssyt, lattice_path_subset, pp_to_ssyt, ssyt_to_gt, ssyt_to_pp, GtPattern, Partition, Ssyt,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteLimits {
    /// Boxes with `a + b` up to this.
    pub max_sum: usize,
    pub max_m: u32,
    /// Arbitrary shapes up to this size, entries up to `max_k`.
    pub max_size: u32,
    pub max_k: u32,
    pub cy_n: usize,
    pub cy_half: u32,
}

impl Default for SuiteLimits {
    fn default() -> Self {
        SuiteLimits { max_sum: 6, max_m: 3, max_size: 5, max_k: 5, cy_n: 4, cy_half: 3 }
    }
}

fn partitions_up_to(size: u32, max_parts: usize) -> Vec<Partition> {
    fn go(left: u32, cap: u32, parts: &mut Vec<u32>, max_parts: usize, out: &mut Vec<Partition>) {
        out.push(Partition::new(parts.clone()).expect("weakly decreasing by construction"));
        if parts.len() == max_parts {
            return;
        }
        for p in (1..=cap.min(left)).rev() {
            parts.push(p);
            go(left - p, p, parts, max_parts, out);
            parts.pop();
        }
    }
    let mut out = Vec::new();
    go(size, size, &mut Vec::new(), max_parts, &mut out);
    out
}

fn small_tableaux(limits: &SuiteLimits) -> Vec<Ssyt> {
    let mut out = Vec::new();
    for k in 1..=limits.max_k {
        for shape in partitions_up_to(limits.max_size, k as usize) {
            out.extend(enumerate_ssyt(&shape, k));
        }
    }
    out
}

fn boxes(limits: &SuiteLimits) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
    (1..limits.max_sum)
        .flat_map(move |a| (1..=limits.max_sum - a).flat_map(move |b| (0..=limits.max_m).map(move |m| (a, b, m))))
}

fn phi_roundtrip(tabs: &[Ssyt]) -> CheckReport {
    let mut r = CheckReport::new("phi-roundtrip", &[]);
    for t in tabs {
        let g = ssyt_to_gt(t);
        let valid = GtPattern::new(g.rows().to_vec()).is_ok() && g.shape() == t.shape();
        r.record(valid && gt_to_ssyt(&g) == *t, || format!("{t}"));
    }
    r
}

fn bk_file_toggle(tabs: &[Ssyt]) -> CheckReport {
    let mut r = CheckReport::new("bk-file-toggle", &[]);
    for t in tabs {
        let k = t.k() as usize;
        for i in 1..k {
            let mut g = ssyt_to_gt(t);
            g.file_toggle(k - i);
            let ok = t.bender_knuth(i as u32).map(|b| b == gt_to_ssyt(&g)).unwrap_or(false);
            r.record(ok, || format!("BK_{i} at {t} (k = {k})"));
        }
    }
    r
}

fn promotion_evacuation(tabs: &[Ssyt]) -> CheckReport {
    let mut r = CheckReport::new("promotion-evacuation", &[]);
    for t in tabs {
        let (e, es) = (t.evacuation(), t.dual_evacuation());
        let mut p = t.clone();
        for _ in 0..t.k() {
            p = p.promotion();
        }
        r.record(e.evacuation() == *t && es.dual_evacuation() == *t, || {
            format!("evacuation is not an involution at {t}")
        });
        r.record(p == es.evacuation(), || format!("ρ^k differs from εε* at {t}"));
        if t.shape().is_rectangle() {
            let plus = t.rotate_complement().ok();
            r.record(p == *t, || format!("ρ^k is not the identity at {t}"));
            r.record(plus.as_ref() == Some(&e) && plus.as_ref() == Some(&es), || format!("ε, ε*, T⁺ differ at {t}"));
        }
    }
    r
}

fn psi_checks(limits: &SuiteLimits) -> Result<(CheckReport, CheckReport)> {
    let mut round = CheckReport::new("psi-roundtrip", &[("max_sum", limits.max_sum as u32), ("max_m", limits.max_m)]);
    let mut eq = CheckReport::new("psi-equivariance", &[("max_sum", limits.max_sum as u32), ("max_m", limits.max_m)]);
    for (a, b, m) in boxes(limits) {
        let mut images = Vec::new();
        for pi in enumerate(a, b, m)? {
            let t = pp_to_ssyt(&pi);
            let back = ssyt_to_pp(&t, a);
            round.record(back.as_ref().ok() == Some(&pi), || format!("{pi} ↦ {t}"));
            eq.record(pp_to_ssyt(&pi.promotion()) == t.promotion(), || format!("Pro at {pi}"));
            eq.record(t.rotate_complement().ok() == Some(pp_to_ssyt(&pi.complement())), || format!("Co at {pi}"));
            if a == b {
                let tr = pi.transpose().map(|q| pp_to_ssyt(&q)).ok();
                eq.record(t.dagger().ok() == tr, || format!("Tr at {pi}"));
            }
            images.push(t);
        }
        images.sort();
        let mut all = enumerate_ssyt(&Partition::rectangle(m, a), (a + b) as u32);
        all.sort();
        round.record(images == all, || format!("image of PP^{m}({a}x{b}) is not all of SSYT"));
    }
    Ok((round, eq))
}

fn tab(k: u32, rows: &[&[u32]]) -> Ssyt {
    Ssyt::new(k, rows.iter().map(|r| r.to_vec()).collect()).expect("worked example is semistandard")
}

fn worked_examples() -> Result<CheckReport> {
    let mut r = CheckReport::new("worked-examples", &[]);
    let mut expect = |name: &str, got: String, want: &str| {
        r.record(got == want, || format!("{name}: got {got}, expected {want}"));
    };

    let g = GtPattern::new(vec![vec![3, 3, 3, 1, 1], vec![2, 1, 1, 0], vec![1, 1, 0], vec![1, 0], vec![0]])?;
    expect("Φ", gt_to_ssyt(&g).to_string(), "[1,3,3]/[3,5]/[4]/[5]");

    let pi = PlanePartition::new(2, 2, 4, &[vec![2, 2], vec![1, 0]])?;
    expect("Ψ", pp_to_ssyt(&pi).to_string(), "[1,1,3,3]/[3,4,4,4]");

    let t = tab(
        6,
        &[
            &[1, 1, 1, 1, 2, 2, 2, 3, 3, 3, 4],
            &[2, 2, 3, 3, 3, 3, 4, 4, 4, 5],
            &[3, 4, 4, 4, 5, 5, 5, 5],
            &[5, 5, 5, 6],
            &[6, 6],
        ],
    );
    expect(
        "BK_4",
        t.bender_knuth(4)?.to_string(),
        "[1,1,1,1,2,2,2,3,3,3,5]/[2,2,3,3,3,3,4,4,4,5]/[3,4,4,4,4,5,5,5]/[4,5,5,6]/[6,6]",
    );

    let t = tab(6, &[&[1, 3, 3], &[2, 4, 6], &[4, 5], &[6, 6]]);
    expect("ρ", t.promotion().to_string(), "[1,1,1]/[2,4,4]/[3,5]/[5,6]");
    expect("ε", t.evacuation().to_string(), "[1,1,1]/[2,3,5]/[3,4]/[4,6]");

    let pi = PlanePartition::new(
        4,
        5,
        1,
        &[vec![1, 1, 1, 1, 0], vec![1, 1, 0, 0, 0], vec![1, 1, 0, 0, 0], vec![0, 0, 0, 0, 0]],
    )?;
    expect("lattice path", lattice_path_subset(&pi)?.to_string(), "{2,5,6,9}");
    Ok(r)
}

/// Runs every check; the last reports cover the triangular-array bijection.
pub fn bijection_suite(limits: &SuiteLimits) -> Result<Vec<CheckReport>> {
    let tabs = small_tableaux(limits);
    let (round, eq) = psi_checks(limits)?;
    let mut out =
        vec![phi_roundtrip(&tabs), round, eq, bk_file_toggle(&tabs), promotion_evacuation(&tabs), worked_examples()?];
    for n in 1..=limits.cy_n {
        for half in 0..=limits.cy_half {
            out.push(verify_cy(n, half)?);
        }
    }
    Ok(out)
}
