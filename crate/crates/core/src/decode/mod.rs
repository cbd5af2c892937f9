//! Soft-input decoders for the first-order codes and exhaustive references.
//!
//! LLRs follow `L_i = ln P(y_i | c_i = 0) / P(y_i | c_i = 1)`, so a positive
//! value favours bit 0. Codewords are scored by the correlation
//! `μ(c) = Σ_i (-1)^(c_i) L_i`.

mod brute;
mod first_order;

pub use brute::{brute_force_bitwise, brute_force_ml, BruteForceMl, MAX_BRUTE_DIMENSION};
pub use first_order::{
    fast_ml, fast_ml_01, fast_ml_11, maxlogmap, maxlogmap_01, maxlogmap_11, FirstOrderKind,
};
pub(crate) use first_order::maxlogmap_slice;

use crate::algebra::index::pow3;
use crate::algebra::BinaryWord;
use crate::error::{Error, Result};

/// Magnitude at which decoder inputs are clipped.
pub const LLR_CLIP: f64 = 50.0;

#[derive(Clone, Debug, PartialEq)]
pub struct LlrVector {
    m: usize,
    values: Vec<f64>,
}

impl LlrVector {
    /// Clips every entry to `±LLR_CLIP`; NaN is rejected.
    pub fn new(m: usize, values: Vec<f64>) -> Result<Self> {
        if values.len() != pow3(m) {
            return Err(Error::LengthMismatch {
                expected: pow3(m),
                actual: values.len(),
            });
        }
        if values.iter().any(|v| v.is_nan()) {
            return Err(Error::BadSpec("NaN in LLR input".into()));
        }
        let values = values
            .into_iter()
            .map(|v| v.clamp(-LLR_CLIP, LLR_CLIP))
            .collect();
        Ok(LlrVector { m, values })
    }

    /// Infers `m` from the length.
    pub fn from_values(values: Vec<f64>) -> Result<Self> {
        let mut m = 0;
        while pow3(m) < values.len() {
            m += 1;
        }
        Self::new(m, values)
    }

    /// Soft outputs skip clipping.
    pub(crate) fn unclipped(m: usize, values: Vec<f64>) -> Self {
        LlrVector { m, values }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn hard_decision(&self) -> BinaryWord {
        BinaryWord::new(self.m, self.values.iter().map(|&v| (v < 0.0) as u8).collect())
            .expect("length checked at construction")
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DecodeResult {
    pub codeword: BinaryWord,
    /// `Σ_i (-1)^(c_i) L_i` of `codeword`.
    pub metric: f64,
}

/// The correlation `Σ_i (-1)^(c_i) L_i`.
pub fn correlation(word: &BinaryWord, llr: &LlrVector) -> f64 {
    word.bits()
        .iter()
        .zip(llr.values())
        .map(|(&b, &l)| if b == 0 { l } else { -l })
        .sum()
}
