use std::fmt;
use std::str::FromStr;

use crate::algebra::index::{binomial, pow3};
use crate::error::{Error, Result};

/// A frequency weight set `W ⊆ {0, ..., m}`, stored as a bitmask.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreqWeightSet {
    m: usize,
    mask: u64,
}

impl FreqWeightSet {
    pub fn new(m: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        if m > 62 {
            return Err(Error::BadSpec(format!("m = {m} is too large")));
        }
        let mut mask = 0u64;
        for w in members {
            if w > m {
                return Err(Error::BadSpec(format!("weight {w} exceeds m = {m}")));
            }
            mask |= 1 << w;
        }
        Ok(FreqWeightSet { m, mask })
    }

    pub fn from_mask(m: usize, mask: u64) -> Result<Self> {
        if m > 62 || mask >> (m + 1) != 0 {
            return Err(Error::BadSpec(format!("mask {mask:#b} invalid for m = {m}")));
        }
        Ok(FreqWeightSet { m, mask })
    }

    pub fn empty(m: usize) -> Self {
        FreqWeightSet { m, mask: 0 }
    }

    pub fn full(m: usize) -> Self {
        FreqWeightSet {
            m,
            mask: (1u64 << (m + 1)) - 1,
        }
    }

    /// `{lo, ..., hi}`; empty when `lo > hi`.
    pub fn range(m: usize, lo: usize, hi: usize) -> Result<Self> {
        FreqWeightSet::new(m, lo..=hi)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn contains(&self, w: usize) -> bool {
        w <= self.m && (self.mask >> w) & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        (0..=self.m).filter(|&w| self.contains(w))
    }

    pub fn complement(&self) -> Self {
        FreqWeightSet {
            m: self.m,
            mask: FreqWeightSet::full(self.m).mask & !self.mask,
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        debug_assert_eq!(self.m, other.m);
        FreqWeightSet {
            m: self.m,
            mask: self.mask & other.mask,
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        debug_assert_eq!(self.m, other.m);
        FreqWeightSet {
            m: self.m,
            mask: self.mask | other.mask,
        }
    }
}

impl fmt::Display for FreqWeightSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.members().map(|w| w.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

/// The abelian code `A(m, W)`: words whose spectrum vanishes on every `j`
/// with `wt(j) ∉ W`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AbelianCodeSpec {
    weights: FreqWeightSet,
}

impl AbelianCodeSpec {
    pub fn new(weights: FreqWeightSet) -> Self {
        AbelianCodeSpec { weights }
    }

    pub fn m(&self) -> usize {
        self.weights.m()
    }

    pub fn weights(&self) -> FreqWeightSet {
        self.weights
    }

    pub fn length(&self) -> usize {
        pow3(self.m())
    }

    /// `Σ_{w ∈ W} 2^w C(m, w)`.
    pub fn dimension(&self) -> usize {
        let m = self.m();
        self.weights
            .members()
            .map(|w| (1usize << w) * binomial(m, w))
            .sum()
    }

    pub fn rate(&self) -> f64 {
        self.dimension() as f64 / self.length() as f64
    }

    pub fn dual(&self) -> Self {
        AbelianCodeSpec {
            weights: self.weights.complement(),
        }
    }
}

impl fmt::Display for AbelianCodeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A({},{})", self.m(), self.weights)
    }
}

/// `BiD(m, r1, r2) = A(m, {r1, ..., r2})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BiDSpec {
    pub m: usize,
    pub r1: usize,
    pub r2: usize,
}

impl BiDSpec {
    pub fn new(m: usize, r1: usize, r2: usize) -> Result<Self> {
        if r1 > r2 || r2 > m {
            return Err(Error::BadSpec(format!(
                "need 0 <= r1 <= r2 <= m, got m={m} r1={r1} r2={r2}"
            )));
        }
        if m > 62 {
            return Err(Error::BadSpec(format!("m = {m} is too large")));
        }
        Ok(BiDSpec { m, r1, r2 })
    }

    pub fn to_abelian(&self) -> AbelianCodeSpec {
        AbelianCodeSpec::new(
            FreqWeightSet::range(self.m, self.r1, self.r2).expect("validated in constructor"),
        )
    }

    pub fn dimension(&self) -> usize {
        self.to_abelian().dimension()
    }

    pub fn length(&self) -> usize {
        pow3(self.m)
    }

    pub fn rate(&self) -> f64 {
        self.to_abelian().rate()
    }

    /// `max{4^r1 · 3^(m-r1-r2), 3^(m-r2) · 2^(r1+r2-m)}`, rounded up.
    ///
    /// The second term only enters when `r1 + r2 >= m`. When `r1 + r2 > m` the
    /// first term is fractional and its ceiling is used.
    pub fn dmin_lower_bound(&self) -> u64 {
        let (m, r1, r2) = (self.m as u32, self.r1 as u32, self.r2 as u32);
        let first = if r1 + r2 <= m {
            4u64.pow(r1) * 3u64.pow(m - r1 - r2)
        } else {
            4u64.pow(r1).div_ceil(3u64.pow(r1 + r2 - m))
        };
        if r1 + r2 >= m {
            first.max(3u64.pow(m - r2) * 2u64.pow(r1 + r2 - m))
        } else {
            first
        }
    }
}

impl fmt::Display for BiDSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "bid:{},{},{}", self.m, self.r1, self.r2)
    }
}

impl FromStr for BiDSpec {
    type Err = Error;

    /// Parses `bid:M,R1,R2`.
    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .strip_prefix("bid:")
            .ok_or_else(|| Error::BadSpec(format!("expected bid:M,R1,R2, got {s:?}")))?;
        let parts: Vec<usize> = body
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::BadSpec(format!("{s:?}: {e}")))?;
        match parts.as_slice() {
            [m, r1, r2] => BiDSpec::new(*m, *r1, *r2),
            _ => Err(Error::BadSpec(format!("expected three parameters in {s:?}"))),
        }
    }
}
