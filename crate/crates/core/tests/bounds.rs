use bid_core::algebra::index::pow3;
use bid_core::bounds::*;
use bid_core::codes::{generator_matrix, is_member, AbelianCodeSpec, FreqWeightSet};
use bid_core::algebra::BinaryWord;
use bid_core::gf2::BitRow;

include!("data/tables.rs");

#[test]
fn tables_reproduced_row_for_row() {
    let rows = reproduce_tables(2..=6).unwrap();
    assert_eq!(rows.len(), TABLE.len());
    assert_eq!(rows.len(), 75);
    for (row, &(m, r1, r2, lo, hi, k)) in rows.iter().zip(TABLE) {
        assert_eq!((row.m, row.r1, row.r2), (m, r1, r2));
        assert_eq!(
            row.bounds,
            DistanceBounds { lower: lo, upper: hi },
            "m={m} r1={r1} r2={r2}"
        );
        assert_eq!(row.k, k, "K for m={m} r1={r1} r2={r2}");
    }
}

#[test]
fn upper_bound_below_direct_sum_bound() {
    for row in reproduce_tables(2..=6).unwrap() {
        let mut cap = u64::MAX;
        if row.r1 > 0 {
            cap = cap.min(pow3(row.m - row.r1 + 1) as u64);
        }
        if row.r2 < row.m {
            cap = cap.min(1u64 << (row.r2 + 1));
        }
        assert!(row.bounds.upper <= cap, "{row:?}");
    }
}

#[test]
fn every_visited_key_is_consistent() {
    let mut solver = BoundsSolver::new();
    for m in 2..=6 {
        for mask in 1..(1u64 << (m + 1)) {
            solver.bounds(WeightSetKey { m, mask });
        }
    }
    assert!(solver.memo_len() > 0);
    for (key, (b, _)) in solver.entries() {
        if key.is_empty() {
            assert_eq!(b.lower, INF);
        } else {
            assert!(b.lower >= 1 && b.lower <= b.upper && b.upper < INF, "{key}: {b}");
        }
    }
}

/// Minimum distance by brute force: list all codewords when the dimension is
/// small, otherwise test low-weight words through the origin for membership.
fn exact_distance(spec: &AbelianCodeSpec) -> u64 {
    let n = spec.length();
    let m = spec.m();
    if spec.dimension() <= 16 {
        let rows = generator_matrix(spec).bit_rows();
        let mut word = BitRow::zeros(n);
        let mut best = u64::MAX;
        for step in 1u64..(1u64 << rows.len()) {
            word.xor_assign(&rows[step.trailing_zeros() as usize]);
            best = best.min(word.count_ones() as u64);
        }
        return best;
    }
    // the code is translation invariant, so some minimum word contains 0
    for wt in 1..=n {
        let mut found = false;
        for_each_subset(n - 1, wt - 1, &mut |others| {
            if found {
                return;
            }
            let support: Vec<usize> = std::iter::once(0).chain(others.iter().map(|&i| i + 1)).collect();
            if is_member(spec, &BinaryWord::from_support(m, &support).unwrap()) {
                found = true;
            }
        });
        if found {
            return wt as u64;
        }
    }
    unreachable!("the code is non-zero")
}

fn for_each_subset(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    go(0, n, k, &mut Vec::new(), f);
}

#[test]
fn bounds_sandwich_true_distance_for_small_m() {
    let mut solver = BoundsSolver::new();
    for m in 1..=3 {
        for mask in 1..(1u64 << (m + 1)) {
            let w = FreqWeightSet::from_mask(m, mask).unwrap();
            let d = exact_distance(&AbelianCodeSpec::new(w));
            let b = solver.bounds(WeightSetKey::new(w));
            assert!(b.lower <= d && d <= b.upper, "m={m} W={w}: d={d}, bounds {b}");
        }
    }
}
