//! Randomized property tests for the encoding layers and the bijection.

use asmdpp::{
    check_nonintersecting, check_preservation, dpp_to_paths, dpp_to_perm, enumerate_asms,
    enumerate_dpps, paths_to_dpp, perm_to_dpp, Asm, Dpp, InversionWord, PathFamily, Permutation,
    StatHistogram, StatQuadruple,
};
use proptest::prelude::*;

/// A permutation of the given size, built by sorting random keys.
fn perm_strategy(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n)
        .prop_flat_map(|n| proptest::collection::vec(any::<u64>(), n))
        .prop_map(|keys| {
            let mut idx: Vec<usize> = (0..keys.len()).collect();
            idx.sort_by_key(|&i| (keys[i], i));
            let mut word = vec![0i64; keys.len()];
            for (rank, &i) in idx.iter().enumerate() {
                word[i] = rank as i64 + 1;
            }
            Permutation::new(word).expect("ranks form a permutation")
        })
}

/// An inversion word within its bounds, ambient size up to `max_n`.
fn word_strategy(max_n: usize) -> impl Strategy<Value = InversionWord> {
    (1..=max_n)
        .prop_flat_map(|n| {
            (1..n)
                .map(|k| (0..=(n - k) as i64).prop_map(|v| v))
                .collect::<Vec<_>>()
        })
        .prop_map(|entries| InversionWord::new(entries).expect("within bounds"))
}

proptest! {
    #[test]
    fn word_round_trip(w in word_strategy(12)) {
        let s = w.to_permutation();
        prop_assert_eq!(s.inversion_word(), w);
    }

    #[test]
    fn perm_round_trip_through_word(s in perm_strategy(12)) {
        prop_assert_eq!(s.inversion_word().to_permutation(), s);
    }

    #[test]
    fn matrix_inversions_generalize(s in perm_strategy(10)) {
        let m = Asm::from(&s);
        prop_assert_eq!(m.inversions(), s.inversions());
        prop_assert_eq!(m.to_permutation().unwrap(), s);
    }

    #[test]
    fn permutation_matrix_stats_formula(s in perm_strategy(10)) {
        let n = s.size() as u64;
        let expected = StatQuadruple::new(
            s.word()[0] as u64 - 1,
            0,
            s.inversions(),
            n - s.word()[s.size() - 1] as u64,
        );
        prop_assert_eq!(Asm::from(&s).stats(), expected);
    }

    #[test]
    fn bijection_preserves_and_inverts(s in perm_strategy(12)) {
        let n = s.size() as u32;
        let report = check_preservation(&s, n).unwrap();
        prop_assert!(report.equal, "stats differ: {}", report);
        let d = perm_to_dpp(&s, n).unwrap();
        prop_assert_eq!(d.special_count(), 0);
        prop_assert_eq!(dpp_to_perm(&d, n).unwrap(), s);
    }

    #[test]
    fn bijection_image_paths_round_trip(s in perm_strategy(12)) {
        let n = s.size() as u32;
        let d = perm_to_dpp(&s, n).unwrap();
        let f = dpp_to_paths(&d);
        prop_assert!(check_nonintersecting(&f));
        prop_assert_eq!(paths_to_dpp(&f).unwrap(), d);
    }

    #[test]
    fn dpp_serialization_round_trips(idx in 0usize..429) {
        let d = enumerate_dpps(5).unwrap().nth(idx).unwrap();
        let json = serde_json::to_string(&d).unwrap();
        prop_assert_eq!(serde_json::from_str::<Dpp>(&json).unwrap(), d);
    }

    #[test]
    fn path_family_serialization_round_trips(idx in 0usize..429) {
        let d = enumerate_dpps(5).unwrap().nth(idx).unwrap();
        let f = dpp_to_paths(&d);
        let json = serde_json::to_string(&f).unwrap();
        let back: PathFamily = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(&back, &f);
        prop_assert_eq!(paths_to_dpp(&back).unwrap(), d);
    }

    #[test]
    fn asm_serialization_round_trips(idx in 0usize..42) {
        let a = enumerate_asms(4).unwrap().nth(idx).unwrap();
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<Asm>(&json).unwrap(), a);
    }

    #[test]
    fn histogram_is_order_independent(seed in any::<u64>()) {
        let mut dpps: Vec<Dpp> = enumerate_dpps(4).unwrap().collect();
        let reference = StatHistogram::collect(&dpps, |d| d.stats(4).unwrap(), false);
        // Fisher-Yates with a splitmix-style generator
        let mut state = seed;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            state
        };
        for i in (1..dpps.len()).rev() {
            let j = (next() % (i as u64 + 1)) as usize;
            dpps.swap(i, j);
        }
        let shuffled = StatHistogram::collect(&dpps, |d| d.stats(4).unwrap(), false);
        prop_assert_eq!(shuffled, reference);
    }
}
