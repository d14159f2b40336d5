use std::collections::HashSet;

use proptest::prelude::*;
use quatimm::permgroup::{enumerate_permutations, factorial, unrank, Permutations};
use quatimm::{Orientation, Permutation};

fn permutation(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n)
        .prop_flat_map(|n| Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn with_anchor(max_n: usize) -> impl Strategy<Value = (Permutation, usize)> {
    permutation(max_n).prop_flat_map(|p| {
        let n = p.len();
        (Just(p), 0..n)
    })
}

proptest! {
    #[test]
    fn left_ordered_round_trips((p, anchor) in with_anchor(9)) {
        let oc = p.left_ordered(anchor).unwrap();
        prop_assert_eq!(oc.orientation, Orientation::Left);
        prop_assert_eq!(oc.cycles[0][0], anchor);
        prop_assert_eq!(oc.cycles.len(), p.cycle_type().cycle_count());
        for c in &oc.cycles[1..] {
            prop_assert_eq!(c[0], *c.iter().min().unwrap());
        }
        let leaders: Vec<usize> = oc.cycles[1..].iter().map(|c| c[0]).collect();
        prop_assert!(leaders.windows(2).all(|w| w[0] < w[1]));
        prop_assert_eq!(oc.to_permutation().unwrap(), p);
    }

    #[test]
    fn right_ordered_round_trips((p, anchor) in with_anchor(9)) {
        let oc = p.right_ordered(anchor).unwrap();
        prop_assert_eq!(oc.orientation, Orientation::Right);
        prop_assert_eq!(*oc.cycles.last().unwrap().last().unwrap(), anchor);
        let rest = &oc.cycles[..oc.cycles.len() - 1];
        for c in rest {
            prop_assert_eq!(*c.last().unwrap(), *c.iter().min().unwrap());
        }
        let leaders: Vec<usize> = rest.iter().map(|c| *c.last().unwrap()).collect();
        prop_assert!(leaders.windows(2).all(|w| w[0] > w[1]));
        prop_assert_eq!(oc.to_permutation().unwrap(), p);
    }

    #[test]
    fn inverse_composes_to_identity(p in permutation(10)) {
        let q = p.inverse();
        for m in 0..p.len() {
            prop_assert_eq!(q.apply(p.apply(m)), m);
        }
        prop_assert_eq!(q.sign(), p.sign());
        prop_assert_eq!(q.cycle_type(), p.cycle_type());
    }

    #[test]
    fn one_based_serde_round_trips(p in permutation(10)) {
        let text = serde_json::to_string(&p).unwrap();
        let images: Vec<usize> = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(&images, &p.one_based());
        prop_assert_eq!(serde_json::from_str::<Permutation>(&text).unwrap(), p);
    }
}

#[test]
fn sign_matches_inversion_parity() {
    for n in 1..=6 {
        for p in enumerate_permutations(n).unwrap() {
            let parity = if p.inversions() % 2 == 0 { 1 } else { -1 };
            assert_eq!(p.sign(), parity, "{:?}", p.one_based());
            assert_eq!(p.cycle_type().sign(), parity);
        }
    }
}

#[test]
fn enumeration_is_complete_and_lexicographic() {
    for n in 1..=6 {
        let all: Vec<Vec<usize>> = enumerate_permutations(n)
            .unwrap()
            .map(|p| p.images().to_vec())
            .collect();
        assert_eq!(all.len() as u128, factorial(n));
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        let distinct: HashSet<_> = all.iter().collect();
        assert_eq!(distinct.len(), all.len());
        for (rank, images) in all.iter().enumerate() {
            assert_eq!(&unrank(n, rank as u128), images);
        }
    }
}

#[test]
fn ranges_partition_the_enumeration() {
    let n = 5;
    let whole: Vec<_> = enumerate_permutations(n).unwrap().collect();
    let mut pieces = Vec::new();
    for (start, end) in [(0, 7), (7, 50), (50, 120)] {
        pieces.extend(Permutations::range(n, start, end));
    }
    assert_eq!(pieces, whole);
}

#[test]
fn enumeration_respects_size_limit() {
    assert!(enumerate_permutations(11).is_err());
    assert!(enumerate_permutations(0).is_err());
}

#[test]
fn invalid_permutations_are_rejected() {
    assert!(Permutation::from_images(vec![0, 0]).is_err());
    assert!(Permutation::from_images(vec![0, 2]).is_err());
    assert!(Permutation::from_one_based(&[0, 1]).is_err());
    assert!(Permutation::identity(3).left_ordered(3).is_err());
}

#[test]
fn written_forms_use_one_based_points() {
    let p = Permutation::from_one_based(&[3, 4, 1, 2]).unwrap();
    assert_eq!(p.left_ordered(1).unwrap().to_string(), "(2 4)(1 3)");
    assert_eq!(p.right_ordered(1).unwrap().to_string(), "(3 1)(4 2)");
}
