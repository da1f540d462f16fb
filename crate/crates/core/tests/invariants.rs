use proptest::prelude::*;

use ppsieve::poset::Poset;
use ppsieve::tableau::{gt_to_ssyt, pp_to_ssyt, ssyt_to_gt, ssyt_to_pp};
use ppsieve::{ElementId, PPartition, PlanePartition};

/// Suffix maxima of a random array, so rows and columns weakly decrease.
fn plane_partition(max_side: usize, max_m: u32) -> impl Strategy<Value = PlanePartition> {
    (1..=max_side, 1..=max_side, 0..=max_m).prop_flat_map(|(a, b, m)| {
        prop::collection::vec(0..=m, a * b).prop_map(move |raw| {
            let mut rows = vec![vec![0u32; b]; a];
            for i in (0..a).rev() {
                for j in (0..b).rev() {
                    let mut v = raw[i * b + j];
                    if i + 1 < a {
                        v = v.max(rows[i + 1][j]);
                    }
                    if j + 1 < b {
                        v = v.max(rows[i][j + 1]);
                    }
                    rows[i][j] = v;
                }
            }
            PlanePartition::new(a, b, m, &rows).unwrap()
        })
    })
}

fn square(max_side: usize, max_m: u32) -> impl Strategy<Value = PlanePartition> {
    plane_partition(max_side, max_m).prop_filter("square", |p| p.is_square())
}

proptest! {
    #[test]
    fn toggles_are_involutions(pi in plane_partition(5, 6), i in 1usize..6, j in 1usize..6) {
        prop_assume!(i <= pi.a() && j <= pi.b());
        let t = pi.toggle(i, j).unwrap();
        prop_assert!(t.is_valid());
        prop_assert_eq!(t.toggle(i, j).unwrap(), pi);
    }

    #[test]
    fn promotion_and_rowmotion_have_order_a_plus_b(pi in plane_partition(4, 5)) {
        let n = pi.a() + pi.b();
        let (mut p, mut r) = (pi.clone(), pi.clone());
        for _ in 0..n {
            p = p.promotion();
            r = r.rowmotion();
        }
        prop_assert_eq!(&p, &pi);
        prop_assert_eq!(&r, &pi);
        prop_assert_eq!(pi.promotion().promotion_inverse(), pi.clone());
        prop_assert_eq!(pi.rowmotion().rowmotion_inverse(), pi);
    }

    #[test]
    fn conjugator_intertwines(pi in plane_partition(5, 5)) {
        prop_assert_eq!(pi.conjugator_inverse().rowmotion().conjugator(), pi.promotion());
        prop_assert_eq!(pi.conjugator().conjugator_inverse(), pi);
    }

    #[test]
    fn complement_reverses_dynamics(pi in plane_partition(5, 5)) {
        let c = pi.complement();
        prop_assert_eq!(c.complement(), pi.clone());
        prop_assert_eq!(c.size() + pi.size(), (pi.a() * pi.b()) as u64 * pi.m() as u64);
        prop_assert_eq!(pi.promotion().complement(), c.promotion_inverse());
        prop_assert_eq!(pi.rowmotion().complement(), c.rowmotion_inverse());
    }

    #[test]
    fn transpose_relations(pi in square(5, 5)) {
        let t = pi.transpose().unwrap();
        prop_assert_eq!(pi.promotion().transpose().unwrap(), t.promotion_inverse());
        prop_assert_eq!(pi.rowmotion().transpose().unwrap(), t.rowmotion());
        let tc = pi.complement().transpose().unwrap();
        prop_assert_eq!(pi.promotion().complement().transpose().unwrap(), tc.promotion());
    }

    #[test]
    fn reciprocity(pi in plane_partition(4, 5)) {
        let (a, b, m) = (pi.a(), pi.b(), pi.m());
        for i in 1..=a {
            for j in 1..=b {
                prop_assert_eq!(pi.get(i, j) + pi.rowmotion_pow(i + j - 1).get(a + 1 - i, b + 1 - j), m);
            }
        }
    }

    #[test]
    fn tableau_correspondence(pi in plane_partition(4, 5)) {
        let t = pp_to_ssyt(&pi);
        prop_assert_eq!(ssyt_to_pp(&t, pi.a()).unwrap(), pi.clone());
        prop_assert_eq!(gt_to_ssyt(&ssyt_to_gt(&t)), t.clone());
        prop_assert_eq!(pp_to_ssyt(&pi.promotion()), t.promotion());
    }

    #[test]
    fn generic_rowmotion_agrees_on_rectangles(pi in plane_partition(4, 4)) {
        let poset = Poset::rectangle(pi.a() as u32, pi.b() as u32);
        let read = |q: &PlanePartition| {
            let values = poset
                .ids()
                .iter()
                .map(|id| match *id {
                    ElementId::Cell(i, j) => q.get(i as usize, j as usize),
                    ElementId::Index(_) => unreachable!("rectangle ids are cells"),
                })
                .collect();
            PPartition::new(q.m(), values)
        };
        let p = read(&pi);
        prop_assert!(poset.is_ppartition(&p));
        let row = poset.rowmotion(&p);
        prop_assert_eq!(&row, &read(&pi.rowmotion()));
        prop_assert_eq!(poset.rowmotion_inverse(&row), p);
    }

    #[test]
    fn plane_partition_json_roundtrip(pi in plane_partition(4, 6)) {
        let s = serde_json::to_string(&pi).unwrap();
        let back: PlanePartition = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back, pi);
    }
}
