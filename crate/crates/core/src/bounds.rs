//! Recursive lower and upper bounds on the minimum distance of abelian codes.

use std::collections::HashMap;
use std::fmt;

use crate::algebra::index::pow3;
use crate::codes::{AbelianCodeSpec, FreqWeightSet};
use crate::error::{Error, Result};

/// Distance value where `u64::MAX` stands for `+∞` (the zero code).
pub const INF: u64 = u64::MAX;

fn add(a: u64, b: u64) -> u64 {
    a.saturating_add(b)
}

fn times(k: u64, a: u64) -> u64 {
    if a == INF {
        INF
    } else {
        k.saturating_mul(a)
    }
}

/// Memoization key: `m` and the bitmask of `W`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightSetKey {
    pub m: usize,
    pub mask: u64,
}

impl WeightSetKey {
    pub fn new(weights: FreqWeightSet) -> Self {
        WeightSetKey {
            m: weights.m(),
            mask: weights.mask(),
        }
    }

    pub fn from_members(m: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        Ok(Self::new(FreqWeightSet::new(m, members)?))
    }

    fn full(m: usize) -> u64 {
        (1u64 << (m + 1)) - 1
    }

    fn range(lo: usize, hi: usize) -> u64 {
        if lo > hi {
            0
        } else {
            ((1u64 << (hi + 1)) - 1) & !((1u64 << lo) - 1)
        }
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }
}

impl fmt::Display for WeightSetKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let members: Vec<String> = (0..=self.m)
            .filter(|w| (self.mask >> w) & 1 == 1)
            .map(|w| w.to_string())
            .collect();
        write!(f, "d_{}({{{}}})", self.m, members.join(","))
    }
}

/// `W_x = W \ {m}` and `W_y = {w - 1 : w ∈ W, w ≠ 0}`, both over `m - 1`.
pub fn derived_weight_sets(key: WeightSetKey) -> Result<(WeightSetKey, WeightSetKey)> {
    if key.m == 0 {
        return Err(Error::UnsupportedM { m: 0, min: 1 });
    }
    let m = key.m - 1;
    let wx = key.mask & WeightSetKey::full(m);
    let wy = key.mask >> 1;
    Ok((WeightSetKey { m, mask: wx }, WeightSetKey { m, mask: wy }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DistanceBounds {
    pub lower: u64,
    pub upper: u64,
}

impl DistanceBounds {
    pub fn exact(d: u64) -> Self {
        DistanceBounds { lower: d, upper: d }
    }

    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }
}

impl fmt::Display for DistanceBounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: u64| {
            if v == INF {
                "inf".to_string()
            } else {
                v.to_string()
            }
        };
        if self.is_exact() {
            write!(f, "{}", show(self.lower))
        } else {
            write!(f, "{}-{}", show(self.lower), show(self.upper))
        }
    }
}

/// The case terms of one recursion step, each as a (lower, upper) pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundComponents {
    pub d2: DistanceBounds,
    pub d3: DistanceBounds,
    /// Lower bound for the all-non-zero case.
    pub d4: u64,
    pub d4_prime: DistanceBounds,
}

/// Which rule produced a memoized entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundSource {
    Empty,
    DualBerman,
    Berman,
    SecondOrderDual,
    SecondOrderDualM3,
    NoWeightOne,
    Recursion(BoundComponents),
}

/// Memoized evaluator of the recursion.
#[derive(Debug, Default)]
pub struct BoundsSolver {
    memo: HashMap<WeightSetKey, (DistanceBounds, BoundSource)>,
}

impl BoundsSolver {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// Every visited key with its bounds and source.
    pub fn entries(&self) -> impl Iterator<Item = (&WeightSetKey, &(DistanceBounds, BoundSource))> {
        self.memo.iter()
    }

    fn termination(key: WeightSetKey) -> Option<(u64, BoundSource)> {
        let m = key.m;
        let full = WeightSetKey::full(m);
        if key.mask == 0 {
            return Some((INF, BoundSource::Empty));
        }
        for r in 0..=m {
            if key.mask == WeightSetKey::range(0, r) {
                return Some((pow3(m - r) as u64, BoundSource::DualBerman));
            }
        }
        for r in 0..=m {
            if key.mask == WeightSetKey::range(r, m) {
                return Some((1u64 << r, BoundSource::Berman));
            }
        }
        if m >= 4 && key.mask == full & !(1 << 2) {
            return Some((6, BoundSource::SecondOrderDual));
        }
        if m == 3 && key.mask == 0b1011 {
            return Some((5, BoundSource::SecondOrderDualM3));
        }
        if m >= 1 && key.mask == full & !(1 << 1) {
            return Some((3, BoundSource::NoWeightOne));
        }
        None
    }

    pub fn bounds(&mut self, key: WeightSetKey) -> DistanceBounds {
        self.lookup(key).0
    }

    pub fn lookup(&mut self, key: WeightSetKey) -> (DistanceBounds, BoundSource) {
        if let Some(&hit) = self.memo.get(&key) {
            return hit;
        }
        let entry = match Self::termination(key) {
            Some((d, src)) => (DistanceBounds::exact(d), src),
            None => {
                // every key with m <= 1 terminates, so m >= 2 here
                let (wx, wy) = derived_weight_sets(key).expect("m >= 1");
                let inter = WeightSetKey {
                    m: wx.m,
                    mask: wx.mask & wy.mask,
                };
                let union = WeightSetKey {
                    m: wx.m,
                    mask: wx.mask | wy.mask,
                };
                let b_inter = self.bounds(inter);
                let b_y = self.bounds(wy);
                let b_x = self.bounds(wx);
                let b_u = self.bounds(union);
                let d2 = b_inter;
                let d3 = DistanceBounds {
                    lower: times(2, b_y.lower),
                    upper: times(2, b_y.upper),
                };
                let d4_prime = DistanceBounds {
                    lower: times(3, b_x.lower),
                    upper: times(3, b_x.upper),
                };
                let d4a = times(3, b_u.lower);
                let d4 = d4a.max(d4_prime.lower.min(add(b_u.lower, b_y.lower)));
                let lower = d2.lower.min(d3.lower).min(d4);
                let upper = d2.upper.min(d3.upper).min(d4_prime.upper);
                let comps = BoundComponents {
                    d2,
                    d3,
                    d4,
                    d4_prime,
                };
                (DistanceBounds { lower, upper }, BoundSource::Recursion(comps))
            }
        };
        self.memo.insert(key, entry);
        entry
    }
}

/// Bounds on the minimum distance of `A(m, W)`.
pub fn recursive_bounds(key: WeightSetKey) -> Result<DistanceBounds> {
    if key.is_empty() {
        return Err(Error::EmptyCode);
    }
    Ok(BoundsSolver::new().bounds(key))
}

/// One row of the dual-code distance tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub m: usize,
    pub r1: usize,
    pub r2: usize,
    pub bounds: DistanceBounds,
    /// Dimension of the dual code.
    pub k: usize,
}

impl TableRow {
    pub fn tsv(&self) -> String {
        format!("{}\t{}\t{}\t{}\t{}", self.m, self.r1, self.r2, self.bounds, self.k)
    }
}

pub const TABLE_HEADER: &str = "m\tr1\tr2\tdmin\tK";

/// Frequency weights `{0..r1-1} ∪ {r2+1..m}` of the dual of `BiD(m,r1,r2)`.
pub fn dual_bid_weights(m: usize, r1: usize, r2: usize) -> Result<FreqWeightSet> {
    let lo = 0..r1;
    let hi = (r2 + 1)..=m;
    FreqWeightSet::new(m, lo.chain(hi))
}

/// Rows for every dual BiD code with `m` in the range whose dual is non-zero,
/// i.e. all `0 ≤ r1 ≤ r2 ≤ m` except `(0, m)`.
pub fn reproduce_tables(ms: impl IntoIterator<Item = usize>) -> Result<Vec<TableRow>> {
    let mut solver = BoundsSolver::new();
    let mut rows = Vec::new();
    for m in ms {
        if !(1..=10).contains(&m) {
            return Err(Error::UnsupportedM { m, min: 1 });
        }
        for r1 in 0..=m {
            for r2 in r1..=m {
                if r1 == 0 && r2 == m {
                    continue;
                }
                let w = dual_bid_weights(m, r1, r2)?;
                rows.push(TableRow {
                    m,
                    r1,
                    r2,
                    bounds: solver.bounds(WeightSetKey::new(w)),
                    k: AbelianCodeSpec::new(w).dimension(),
                });
            }
        }
    }
    Ok(rows)
}
