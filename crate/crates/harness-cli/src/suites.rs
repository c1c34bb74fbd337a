use crate::report::RunReport;
use rotation_core::{
    rotate_block_cycle, rotate_block_swap, rotate_dolphin, rotate_oracle, rotate_triple_reverse,
    rotate_trinity, BlockCycleConfig, MoveLedger,
};

fn markers(n: usize) -> Vec<u32> {
    (0..n as u32).collect()
}

fn cycle_ledger(n: usize, k: usize, config: &BlockCycleConfig) -> MoveLedger {
    let mut v = markers(n);
    let mut ledger = MoveLedger::new();
    rotate_block_cycle(&mut v, k, config, &mut ledger).expect("valid shift");
    ledger
}

/// All five algorithms against the out-of-place oracle.
pub fn oracle_equivalence(max_n: usize, config: &BlockCycleConfig) -> RunReport {
    let mut report = RunReport::new("oracle equivalence");
    for n in 0..=max_n {
        for k in 0..=n {
            let expect = rotate_oracle(&markers(n), k).expect("valid shift");

            let mut v = markers(n);
            rotate_block_cycle(&mut v, k, config, &mut MoveLedger::new()).unwrap();
            report.check(format!("block cycle ({n},{k})"), "oracle order", "mismatch", v == expect);

            let mut v = markers(n);
            rotate_block_swap(&mut v, k, &mut MoveLedger::new()).unwrap();
            report.check(format!("block swap ({n},{k})"), "oracle order", "mismatch", v == expect);

            let mut v = markers(n);
            rotate_triple_reverse(&mut v, k, &mut MoveLedger::new()).unwrap();
            report.check(format!("triple reverse ({n},{k})"), "oracle order", "mismatch", v == expect);

            let mut v = markers(n);
            rotate_trinity(&mut v, k, config, &mut MoveLedger::new()).unwrap();
            report.check(format!("trinity ({n},{k})"), "oracle order", "mismatch", v == expect);

            if k > 0 && k < n {
                let mut v = markers(n);
                rotate_dolphin(&mut v, k, &mut MoveLedger::new()).unwrap();
                report.check(format!("dolphin ({n},{k})"), "oracle order", "mismatch", v == expect);
            }
        }
    }
    report
}

/// The exact count laws. At unit capacities the block cycle ledger must
/// reproduce the remainder-sum formula split by move type; with a larger
/// early-exit buffer only the monotone bound (never more moves than the
/// unit-capacity formula) is asserted. Dolphin and block swap counts are
/// exact at every configuration.
pub fn ledger_exactness(max_n: usize, config: &BlockCycleConfig) -> RunReport {
    let mut report = RunReport::new("ledger exactness");
    let unit = config.early_exit_capacity() == 1;
    for n in 1..=max_n as u64 {
        for k in 0..=n {
            let ledger = cycle_ledger(n as usize, k as usize, config);
            let formula = euclid_numbers::move_count(n, k);
            if unit {
                let mbar = euclid_numbers::remainder_sum(n, k.min(n - k));
                let type_a = if k == 0 || k == n { 0 } else { 2 * mbar };
                let type_b = if k == 0 || k == n {
                    0
                } else {
                    n - euclid_numbers::gcd(n, k)
                };
                report.assert_eq(format!("total ({n},{k})"), formula, ledger.total_moves());
                report.assert_eq(format!("type A ({n},{k})"), type_a, ledger.type_a_moves);
                report.assert_eq(format!("type B ({n},{k})"), type_b, ledger.type_b_moves);
            } else {
                report.check(
                    format!("total ({n},{k})"),
                    format!("<= {formula}"),
                    ledger.total_moves(),
                    ledger.total_moves() <= formula,
                );
            }

            if k > 0 && k < n {
                let mut v = markers(n as usize);
                let mut dolphin = MoveLedger::new();
                rotate_dolphin(&mut v, k as usize, &mut dolphin).unwrap();
                report.assert_eq(
                    format!("dolphin ({n},{k})"),
                    n + euclid_numbers::gcd(n, k),
                    dolphin.total_moves(),
                );

                let mut v = markers(n as usize);
                let mut swap = MoveLedger::new();
                rotate_block_swap(&mut v, k as usize, &mut swap).unwrap();
                report.assert_eq(
                    format!("block swap ({n},{k})"),
                    n - euclid_numbers::gcd(n, k),
                    swap.swap_count,
                );
            }
        }
    }
    report
}

/// Block cycle totals never exceed three moves per non-fixed element.
pub fn worst_case_bound(max_n: usize, config: &BlockCycleConfig) -> RunReport {
    let mut report = RunReport::new("worst-case bound");
    for n in 1..=max_n as u64 {
        for k in 1..n {
            let total = cycle_ledger(n as usize, k as usize, config).total_moves();
            let bound = 3 * (n - euclid_numbers::gcd(n, k));
            report.check(
                format!("({n},{k})"),
                format!("<= {bound}"),
                total,
                total <= bound,
            );
        }
    }
    report
}

/// Rotating by k and by n - k costs the same.
pub fn symmetry(max_n: usize, config: &BlockCycleConfig) -> RunReport {
    let mut report = RunReport::new("shift symmetry");
    for n in 1..=max_n {
        for k in 0..=n / 2 {
            let a = cycle_ledger(n, k, config).total_moves();
            let b = cycle_ledger(n, n - k, config).total_moves();
            report.assert_eq(format!("({n},{k})"), a, b);
        }
    }
    report
}
