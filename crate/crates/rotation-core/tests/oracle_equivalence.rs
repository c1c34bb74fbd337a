use proptest::prelude::*;
use rotation_core::{
    rotate_block_cycle, rotate_block_swap, rotate_dolphin, rotate_oracle, rotate_triple_reverse,
    rotate_trinity, BlockCycleConfig, MoveLedger,
};

fn markers(n: usize) -> Vec<u32> {
    (0..n as u32).collect()
}

/// Every algorithm, every length up to 64, every shift: bit-exact
/// agreement with the out-of-place oracle on pairwise-distinct markers.
#[test]
fn all_algorithms_match_oracle_exhaustively() {
    let config = BlockCycleConfig::UNIT;
    for n in 0..=64usize {
        for k in 0..=n {
            let expect = rotate_oracle(&markers(n), k).unwrap();

            let mut v = markers(n);
            let mut ledger = MoveLedger::new();
            rotate_block_cycle(&mut v, k, &config, &mut ledger).unwrap();
            assert_eq!(v, expect, "block cycle n={n} k={k}");

            let mut v = markers(n);
            rotate_block_swap(&mut v, k, &mut MoveLedger::new()).unwrap();
            assert_eq!(v, expect, "block swap n={n} k={k}");

            let mut v = markers(n);
            rotate_triple_reverse(&mut v, k, &mut MoveLedger::new()).unwrap();
            assert_eq!(v, expect, "triple reverse n={n} k={k}");

            let mut v = markers(n);
            rotate_trinity(&mut v, k, &config, &mut MoveLedger::new()).unwrap();
            assert_eq!(v, expect, "trinity n={n} k={k}");

            if k > 0 && k < n {
                let mut v = markers(n);
                rotate_dolphin(&mut v, k, &mut MoveLedger::new()).unwrap();
                assert_eq!(v, expect, "dolphin n={n} k={k}");
            }
        }
    }
}

#[test]
fn wide_configs_match_oracle() {
    for &(early, batch) in &[(1usize, 4usize), (4, 1), (16, 8), (256, 32)] {
        let config = BlockCycleConfig::new(early, batch).unwrap();
        for n in [0usize, 1, 2, 17, 64, 129, 512] {
            for k in [0usize, 1, 2, n / 3, n / 2, n.saturating_sub(1), n] {
                if k > n {
                    continue;
                }
                let mut v = markers(n);
                rotate_block_cycle(&mut v, k, &config, &mut MoveLedger::new()).unwrap();
                assert_eq!(
                    v,
                    rotate_oracle(&markers(n), k).unwrap(),
                    "n={n} k={k} early={early} batch={batch}"
                );
            }
        }
    }
}

proptest! {
    /// Rotating by k and then by n - k restores the sequence, for every
    /// algorithm and arbitrary element values.
    #[test]
    fn rotate_then_counter_rotate_restores(
        seq in proptest::collection::vec(any::<u32>(), 0..200),
        k_seed in any::<usize>(),
    ) {
        let n = seq.len();
        let k = if n == 0 { 0 } else { k_seed % (n + 1) };
        let config = BlockCycleConfig::UNIT;

        let mut v = seq.clone();
        rotate_block_cycle(&mut v, k, &config, &mut MoveLedger::new()).unwrap();
        rotate_block_cycle(&mut v, n - k, &config, &mut MoveLedger::new()).unwrap();
        prop_assert_eq!(&v, &seq);

        let mut v = seq.clone();
        rotate_trinity(&mut v, k, &config, &mut MoveLedger::new()).unwrap();
        rotate_trinity(&mut v, n - k, &config, &mut MoveLedger::new()).unwrap();
        prop_assert_eq!(&v, &seq);
    }

    /// Oracle agreement on random sizes beyond the exhaustive range.
    #[test]
    fn algorithms_match_oracle_randomized(n in 0usize..1500, k_seed in any::<usize>()) {
        let k = if n == 0 { 0 } else { k_seed % (n + 1) };
        let expect = rotate_oracle(&markers(n), k).unwrap();
        let config = BlockCycleConfig::UNIT;

        let mut v = markers(n);
        rotate_block_cycle(&mut v, k, &config, &mut MoveLedger::new()).unwrap();
        prop_assert_eq!(&v, &expect);

        let mut v = markers(n);
        rotate_block_swap(&mut v, k, &mut MoveLedger::new()).unwrap();
        prop_assert_eq!(&v, &expect);

        let mut v = markers(n);
        rotate_trinity(&mut v, k, &config, &mut MoveLedger::new()).unwrap();
        prop_assert_eq!(&v, &expect);
    }

    /// Buffer traffic pairs up: whatever enters the buffer leaves it.
    #[test]
    fn type_a_moves_are_even(n in 0usize..400, k_seed in any::<usize>(), early in 1usize..64, batch in 1usize..64) {
        let k = if n == 0 { 0 } else { k_seed % (n + 1) };
        let config = BlockCycleConfig::new(early, batch).unwrap();
        let mut v = markers(n);
        let mut ledger = MoveLedger::new();
        rotate_block_cycle(&mut v, k, &config, &mut ledger).unwrap();
        prop_assert_eq!(ledger.type_a_moves % 2, 0);

        let mut v = markers(n);
        let mut ledger = MoveLedger::new();
        rotate_trinity(&mut v, k, &config, &mut ledger).unwrap();
        prop_assert_eq!(ledger.type_a_moves % 2, 0);
    }
}
