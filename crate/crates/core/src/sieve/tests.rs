use num_bigint::BigInt;

use super::*;
use crate::plane::{enumerate_symmetric, BoxSearch};
use crate::poset::{PPartition, Poset};
use crate::qpoly::{q_binomial, size_genfun, SetSpec, Statistic};
use crate::tableau::SubsetI;

fn word(s: &str) -> GroupWord {
    s.parse().unwrap()
}

#[test]
fn identity_word_counts_everything() {
    for (a, b, m) in [(1, 1, 1), (2, 2, 2), (2, 3, 1), (3, 3, 0)] {
        let all = fixed_points(&GroupWord::identity(), a, b, m, 0).unwrap().count;
        assert_eq!(BigInt::from(all), mac_formula(a as u32, b as u32, m).value_at_one().unwrap());
    }
}

#[test]
fn height_zero_fixes_everything() {
    for w in ["Pro", "Row^3", "Co·Pro", "TrCo·Pro^2", "Tr·Row"] {
        assert_eq!(fixed_points(&word(w), 2, 2, 0, 5).unwrap().count, 1);
    }
}

#[test]
fn example_twisted_subsets() {
    let fp = fixed_points(&word("TrCo·Pro^2"), 2, 2, 1, 10).unwrap();
    assert_eq!(fp.count, 4);
    let mut subsets: Vec<_> =
        fp.witnesses.iter().map(|p| crate::tableau::lattice_path_subset(p).unwrap().members()).collect();
    subsets.sort();
    assert_eq!(subsets, vec![vec![1, 2], vec![1, 4], vec![2, 3], vec![3, 4]]);
}

#[test]
fn table_agrees_with_direct_application() {
    for (a, b, m) in [(2, 2, 2), (2, 3, 2), (3, 3, 1)] {
        let table = ActionTable::new(a, b, m).unwrap();
        let mut words = vec!["Pro", "Pro^-2", "Row^3", "Co·Pro", "Co·Row^-1", "Pro·Row^-1·Co"];
        if a == b {
            words.extend(["Tr·Pro", "TrCo·Pro^3", "Tr·Row^2", "Tr·Co·Row"]);
        }
        for w in words {
            let w = word(w);
            assert_eq!(table.fixed_point_count(&w).unwrap(), fixed_points(&w, a, b, m, 0).unwrap().count, "{w}");
            let p = table.word_permutation(&w).unwrap();
            for (x, pi) in table.elements().iter().enumerate() {
                assert_eq!(table.elements()[p[x] as usize], apply_word(pi, &w).unwrap());
            }
        }
    }
}

#[test]
fn table_rejects_non_invariant_sets() {
    let sym = ActionTable::from_elements(enumerate_symmetric(2, 2).unwrap()).unwrap();
    assert!(sym.permutation(Generator::Co).is_ok());
    assert!(matches!(sym.permutation(Generator::Pro), Err(Error::NotInvariant(_))));
    assert!(matches!(ActionTable::new(2, 3, 1).unwrap().permutation(Generator::Tr), Err(Error::NotSquare { .. })));
}

#[test]
fn orbit_histograms() {
    let t = ActionTable::new(1, 1, 1).unwrap();
    assert_eq!(t.orbit_histogram(&word("Pro")).unwrap(), BTreeMap::from([(2, 1)]));
    let t = ActionTable::new(2, 2, 1).unwrap();
    let h = t.orbit_histogram(&word("Pro")).unwrap();
    assert_eq!(h.iter().map(|(s, c)| s * c).sum::<u64>(), 6);
    assert!(h.keys().all(|s| 4 % s == 0));
    assert!(burnside_holds(&h, 4));
    let t = ActionTable::new(2, 2, 2).unwrap();
    let h = t.orbit_histogram(&word("Row")).unwrap();
    assert_eq!(h.iter().map(|(s, c)| s * c).sum::<u64>(), 20);
    assert!(h.keys().all(|s| 4 % s == 0));
    for k in 0..4 {
        assert_eq!(
            fixed_from_histogram(&h, k),
            t.fixed_point_count(&GroupWord::generator(Generator::Row, k as i64)).unwrap()
        );
    }
}

#[test]
fn promotion_csp_small() {
    let t = ActionTable::new(2, 2, 1).unwrap();
    let rows =
        verify_csp(&t, |k| GroupWord::generator(Generator::Pro, k), &q_binomial(4, 2).expand().unwrap(), 4).unwrap();
    assert!(rows.iter().all(|r| r.matched), "{rows:?}");
    assert_eq!(rows[0].count, 6);
}

#[test]
fn trco_example_pattern() {
    let r = verify_theorem(Theorem::TrCoPro, 2, 2, 1).unwrap();
    let counts: Vec<u64> = r.rows.iter().map(|r| r.count).collect();
    assert_eq!(counts, vec![4, 2, 0, 2]);
    assert!(r.ok());
    let r = verify_theorem(Theorem::TrRow, 2, 2, 1).unwrap();
    assert_eq!(r.rows.iter().map(|r| r.count).collect::<Vec<_>>(), vec![4, 2, 0, 2]);
}

#[test]
fn every_theorem_at_small_sizes() {
    for a in 1..=3 {
        for b in 1..=3 {
            for m in 0..=3 {
                for r in verify_box(&Theorem::ALL, a, b, m).unwrap() {
                    assert!(r.ok(), "{} at {a}x{b}x{m}: {:?}", r.theorem, r.rows);
                }
            }
        }
    }
}

#[test]
fn odd_complement_branch_uses_schur_value() {
    // 1×1×1: Co·Pro fixes both elements, and the signed Schur value is 2.
    assert_eq!(complement_target(1, 1, 1, 1).unwrap(), BigInt::from(2));
    assert_eq!(complement_target(1, 1, 1, 0).unwrap(), BigInt::from(0));
    let r = verify_theorem(Theorem::CoPro, 1, 1, 1).unwrap();
    assert_eq!(r.rows.iter().map(|r| r.count).collect::<Vec<_>>(), vec![0, 2]);
}

#[test]
fn odd_height_kills_odd_transpose_powers() {
    for n in 1..=3 {
        for m in [1, 3] {
            let r = verify_theorem(Theorem::TrPro, n, n, m).unwrap();
            for row in r.rows.iter().filter(|r| r.k % 2 == 1) {
                assert_eq!(row.count, 0);
            }
        }
    }
}

#[test]
fn report_serialization() {
    let r = verify_theorem(Theorem::TrCoPro, 2, 2, 1).unwrap();
    let s = serde_json::to_string(&r).unwrap();
    assert!(s.starts_with(r#"{"schema":1,"theorem":"trco-pro-csp","params":{"m":1,"n":2},"order":4,"rows":[{"k":0,"count":4,"evaluation":4,"match":true}"#), "{s}");
    assert!(!s.contains("elapsed"));
}

#[test]
fn not_rational_is_a_mismatch() {
    let p = IntPolynomial::from_i64s(&[0, 1]);
    let e = Evaluation::at_root(&p, 3, 1);
    assert!(e.as_integer().is_none());
    assert!(!CspRow::compare(1, 0, e).matched);
}

#[test]
fn identities_hold() {
    for a in 1..=3 {
        for b in 1..=3 {
            for m in 0..=2 {
                for r in check_identities(a, b, m).unwrap() {
                    assert!(r.ok(), "{} at {a}x{b}x{m}: {:?}", r.check, r.counterexample);
                }
            }
        }
    }
}

#[test]
fn reciprocity_holds() {
    assert!(verify_reciprocity(2, 2, 0).unwrap().ok());
    let r = verify_reciprocity(2, 2, 2).unwrap();
    assert!(r.ok(), "{:?}", r.counterexample);
    assert_eq!(r.checked, 20 * 4);
    assert!(verify_reciprocity(3, 2, 3).unwrap().ok());
}

#[test]
fn reciprocity_pairing_matters() {
    let zero = PlanePartition::new(2, 2, 2, &[vec![0, 0], vec![0, 0]]).unwrap();
    let row3 = zero.rowmotion_pow(3);
    assert_eq!(zero.get(1, 1) + row3.get(2, 2), 0);
    assert_eq!(zero.get(2, 2) + row3.get(1, 1), 2);
}

#[test]
fn cy_small_cases() {
    assert_eq!(cy_enumerate(1, 2).unwrap().len(), 1);
    let two = cy_enumerate(2, 1).unwrap();
    assert_eq!(two.iter().map(|c| c.get(1, 2)).collect::<Vec<_>>(), vec![0, 2]);
    assert_eq!(cy_count(2, 1), BigInt::from(2));
    for n in 1..=3 {
        for half in 0..=2 {
            let r = verify_cy(n, half).unwrap();
            assert!(r.ok(), "n={n} M={half}: {:?}", r.counterexample);
            assert_eq!(BigInt::from(cy_enumerate(n, half).unwrap().len()), cy_count(n, half));
        }
    }
}

#[test]
fn cy_array_validation() {
    assert!(CyArray::new(3, 1, vec![vec![2, 1], vec![0]]).is_ok());
    assert!(CyArray::new(3, 1, vec![vec![1, 1], vec![0]]).is_err());
    assert!(CyArray::new(3, 1, vec![vec![2, 2], vec![1]]).is_err());
    assert!(CyArray::new(3, 1, vec![vec![0, 1], vec![0]]).is_err());
    let pi = PlanePartition::new(2, 2, 1, &[vec![1, 0], vec![0, 0]]).unwrap();
    assert!(cy_bijection(&pi).is_err());
}

#[test]
fn embeddings_are_equivariant_bijections() {
    for n in 1..=3 {
        for m in 0..=2 {
            let r = TriangleEmbedding::new(Conjecture::Tall, n).unwrap().verify(m).unwrap();
            assert!(r.ok(), "tall {n} {m}: {:?}", r.counterexample);
            let r = TriangleEmbedding::new(Conjecture::Wide, n).unwrap().verify(m).unwrap();
            assert!(r.ok(), "wide {n} {m}: {:?}", r.counterexample);
        }
    }
    for m in 0..=2 {
        for n in 1..=2 {
            let r = TriangleEmbedding::new(Conjecture::Corner, n).unwrap().verify(m).unwrap();
            assert!(r.ok(), "corner {n} {m}: {:?}", r.counterexample);
        }
    }
}

#[test]
fn pinned_wide_search_loses_nothing() {
    // the unpinned box search finds the same Tr·Row^n-fixed set
    for (n, m) in [(2, 1), (2, 2), (3, 1)] {
        let e = TriangleEmbedding::new(Conjecture::Wide, n).unwrap();
        let side = n as usize + 1;
        let full = BoxSearch::new(side, side, 2 * m).unwrap().par_filter_map(|p| e.in_image(p).then(|| p.clone()));
        assert_eq!(full, e.image(m).unwrap());
        let odd = BoxSearch::new(side, side, 2 * m + 1).unwrap().par_filter_map(|p| e.in_image(p).then_some(())).len();
        assert_eq!(odd, 0);
    }
    let e = TriangleEmbedding::new(Conjecture::Corner, 1).unwrap();
    for m in 0..=2 {
        let full = BoxSearch::symmetric(2, 2 * m).unwrap().par_filter_map(|p| e.in_image(p).then(|| p.clone()));
        assert_eq!(full, e.image(m).unwrap());
    }
}

#[test]
fn wide_image_size_is_a_signed_count() {
    let e = TriangleEmbedding::new(Conjecture::Wide, 1).unwrap();
    let size = e.image(1).unwrap().len();
    let v = evaluate_at_root(&symmac_formula(2, 2).expand().unwrap(), 2, 1).as_integer().unwrap();
    assert_eq!(BigInt::from(size), v);
}

#[test]
fn embedding_free_functions() {
    let tall = Poset::tall_triangle(1);
    for v in 0..=3 {
        let p = PPartition::new(3, vec![v]);
        assert_eq!(embed_tall(&p, 1).unwrap().rows(), vec![vec![v]]);
    }
    let wide = Poset::wide_triangle(1);
    let p = PPartition::new(2, vec![1]);
    assert_eq!(embed_wide(&p, 2).unwrap().rows(), vec![vec![3, 2], vec![2, 1]]);
    assert!(embed_wide(&p, 1).is_err());
    assert_eq!(tall.len(), 1);
    assert_eq!(wide.len(), 1);
    let corner = Poset::corner_triangle(1);
    let p = PPartition::new(1, vec![0; corner.len()]);
    assert!(embed_corner(&p, 1).unwrap().is_symmetric());
}

#[test]
fn conjectures_small() {
    for which in Conjecture::ALL {
        for n in 1..=2 {
            for m in 0..=2 {
                let r = verify_conjecture(which, n, m).unwrap();
                assert!(r.ok(), "{which:?} {n} {m}: {:?}", r.rows);
                assert_eq!(r.outcome, "confirmed at this scale");
            }
        }
    }
}

#[test]
fn conjecture_corner_smallest() {
    let r = verify_conjecture(Conjecture::Corner, 1, 1).unwrap();
    assert_eq!(r.order, 4);
    assert!(r.ok());
}

#[test]
fn tall_height_one_matches_twisted_rotation() {
    for n in 1..=4u32 {
        let r = verify_conjecture(Conjecture::Tall, n, 1).unwrap();
        let subsets = SubsetI::all(n);
        for row in &r.rows {
            let fixed = subsets
                .iter()
                .filter(|s| {
                    let mut x = (*s).clone();
                    for _ in 0..row.k {
                        x = x.twisted_rotate();
                    }
                    x == **s
                })
                .count() as u64;
            assert_eq!(fixed, row.direct, "n={n} k={}", row.k);
        }
    }
}

#[test]
fn subgroup_tabulation() {
    let t = ActionTable::new(3, 3, 2).unwrap();
    let sym = t.common_fixed_count(&[word("Tr")]).unwrap();
    assert_eq!(sym as usize, enumerate_symmetric(3, 2).unwrap().len());
    let both = t.common_fixed_count(&[word("Tr"), word("Row^2")]).unwrap();
    assert!(both <= sym);
}

#[test]
fn generating_functions() {
    for a in 1..=3 {
        for b in 1..=3 {
            for m in 0..=3 {
                let g = size_genfun(SetSpec::Box { a, b, m }, Statistic::Size).unwrap();
                assert_eq!(g, mac_formula(a as u32, b as u32, m).expand().unwrap());
            }
        }
    }
    for n in 1..=3 {
        for m in 0..=3 {
            let g = size_genfun(SetSpec::Symmetric { n, m }, Statistic::Size).unwrap();
            assert_eq!(g, symmac_formula(n as u32, m).expand().unwrap());
            let g = size_genfun(SetSpec::Symmetric { n, m }, Statistic::UpperSize).unwrap();
            assert_eq!(g, symmac_prime_formula(n as u32, m).expand().unwrap());
        }
    }
    assert!(size_genfun(SetSpec::Box { a: 2, b: 3, m: 1 }, Statistic::UpperSize).is_err());
}

#[test]
fn suite_passes_at_small_limits() {
    let limits = SuiteLimits { max_sum: 4, max_m: 2, max_size: 4, max_k: 4, cy_n: 3, cy_half: 1 };
    for r in bijection_suite(&limits).unwrap() {
        assert!(r.ok(), "{}: {:?}", r.check, r.counterexample);
        assert!(r.checked > 0, "{}", r.check);
    }
}
