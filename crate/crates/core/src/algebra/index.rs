//! Vectors in `Z_3^m` and their integer ranks.
//!
//! Coordinate `i = (i_1, ..., i_m)` lives at rank `Σ i_ℓ 3^(ℓ-1)`, so `i_1` is the
//! least significant ternary digit. Every length-`3^m` vector in the crate uses
//! this ordering.

use crate::error::{Error, Result};

/// `3^m`.
pub const fn pow3(m: usize) -> usize {
    let mut p = 1usize;
    let mut i = 0;
    while i < m {
        p *= 3;
        i += 1;
    }
    p
}

/// Binomial coefficient for small arguments.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1usize;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TernaryIndex {
    digits: Vec<u8>,
}

impl TernaryIndex {
    /// Builds an index from digits `(i_1, ..., i_m)`; every digit must be below 3.
    pub fn new(digits: Vec<u8>) -> Result<Self> {
        if let Some(d) = digits.iter().find(|&&d| d > 2) {
            return Err(Error::BadSpec(format!("ternary digit {d} out of range")));
        }
        Ok(TernaryIndex { digits })
    }

    pub fn zero(m: usize) -> Self {
        TernaryIndex { digits: vec![0; m] }
    }

    pub fn from_rank(rank: usize, m: usize) -> Self {
        TernaryIndex {
            digits: digits_of(rank, m),
        }
    }

    pub fn rank(&self) -> usize {
        self.digits
            .iter()
            .rev()
            .fold(0usize, |acc, &d| acc * 3 + d as usize)
    }

    pub fn m(&self) -> usize {
        self.digits.len()
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn weight(&self) -> usize {
        self.digits.iter().filter(|&&d| d != 0).count()
    }

    /// Componentwise sum modulo 3.
    pub fn add(&self, other: &TernaryIndex) -> TernaryIndex {
        TernaryIndex {
            digits: self
                .digits
                .iter()
                .zip(&other.digits)
                .map(|(a, b)| (a + b) % 3)
                .collect(),
        }
    }

    pub fn neg(&self) -> TernaryIndex {
        TernaryIndex {
            digits: self.digits.iter().map(|d| (3 - d) % 3).collect(),
        }
    }

    /// Dot product over `Z_3`.
    pub fn dot(&self, other: &TernaryIndex) -> u8 {
        let s: usize = self
            .digits
            .iter()
            .zip(&other.digits)
            .map(|(&a, &b)| a as usize * b as usize)
            .sum();
        (s % 3) as u8
    }
}

/// Ternary digits of `rank`, least significant first.
pub fn digits_of(mut rank: usize, m: usize) -> Vec<u8> {
    let mut d = Vec::with_capacity(m);
    for _ in 0..m {
        d.push((rank % 3) as u8);
        rank /= 3;
    }
    d
}

pub fn rank_of(digits: &[u8]) -> usize {
    digits.iter().rev().fold(0usize, |acc, &d| acc * 3 + d as usize)
}

/// Hamming weight of the ternary vector with the given rank.
pub fn weight_of_rank(mut rank: usize, m: usize) -> usize {
    let mut w = 0;
    for _ in 0..m {
        if !rank.is_multiple_of(3) {
            w += 1;
        }
        rank /= 3;
    }
    w
}

/// Table of `weight_of_rank` for every rank in `0..3^m`.
pub fn weight_table(m: usize) -> Vec<u8> {
    (0..pow3(m)).map(|r| weight_of_rank(r, m) as u8).collect()
}

/// Rank of `2·i` (negation) for every rank.
pub fn negation_table(m: usize) -> Vec<usize> {
    (0..pow3(m))
        .map(|r| {
            let d: Vec<u8> = digits_of(r, m).iter().map(|&x| (3 - x) % 3).collect();
            rank_of(&d)
        })
        .collect()
}

/// Number of vectors of `Z_3^m` of each Hamming weight: `2^w · C(m, w)`.
pub fn weight_histogram(m: usize) -> Vec<usize> {
    (0..=m).map(|w| (1usize << w) * binomial(m, w)).collect()
}
