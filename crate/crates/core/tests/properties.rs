use gseq_core::bijections::{bridge_to_path, path_to_bridge};
use gseq_core::bridges::{irreducible_decomposition, is_graphical, lazify};
use gseq_core::trees::{multiset_count_m, path_area, walkup_t};
use gseq_core::walks_mc::sample_uniform_graphical_bridge;
use gseq_core::{Bridge, Walk};
use proptest::prelude::*;

fn bridge_strategy(max_half: usize) -> impl Strategy<Value = Bridge> {
    (0..=max_half)
        .prop_flat_map(|n| {
            Just(
                vec![1i8; n]
                    .into_iter()
                    .chain(vec![-1i8; n])
                    .collect::<Vec<_>>(),
            )
            .prop_shuffle()
        })
        .prop_map(|inc| Bridge::new(inc).unwrap())
}

proptest! {
    #[test]
    fn path_bijection_round_trips(b in bridge_strategy(20)) {
        let n = b.half_len();
        let (path, ell) = bridge_to_path(&b);
        prop_assert_eq!(path_area(&path) as i64, b.sigma() + (ell * n) as i64);
        prop_assert_eq!(path_to_bridge(&path).unwrap(), b);
    }

    #[test]
    fn sigma_is_lazy_area(b in bridge_strategy(20)) {
        let walk: &Walk = b.as_walk();
        prop_assert_eq!(lazify(walk).unwrap().area(), b.sigma());
    }

    #[test]
    fn decomposition_concatenates_back(n in 1usize..=30, seed in any::<u64>()) {
        let b = sample_uniform_graphical_bridge(n, seed).unwrap();
        prop_assert!(is_graphical(&b));
        let parts = irreducible_decomposition(&b).unwrap();
        let joined = parts.iter().fold(Bridge::empty(), |acc, p| acc.concat(p));
        prop_assert_eq!(joined, b);
        prop_assert!(parts.iter().all(is_graphical));
    }

    #[test]
    fn diagonal_submultisets_are_trees(n in 1u64..=120) {
        prop_assert_eq!(multiset_count_m(n, n).unwrap(), walkup_t(n).unwrap());
    }
}
