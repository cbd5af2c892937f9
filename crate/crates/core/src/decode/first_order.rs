//! Recursive decoders for `BiD(m,1,1)` and `BiD(m,0,1)`.
//!
//! Both codes split as `c = 1_3 ⊗ d + a ⊗ 1` with `a` in
//! `{000, 110, 101, 011}` and `d` in the same family at `m - 1`. Flipping the
//! thirds where `a_t = 1` and summing them folds the LLRs for `d`, giving four
//! subproblems of a third of the length.

use super::{DecodeResult, LlrVector};
use crate::algebra::index::pow3;
use crate::algebra::BinaryWord;
use crate::error::{Error, Result};

const BRANCHES: [[u8; 3]; 4] = [[0, 0, 0], [1, 1, 0], [1, 0, 1], [0, 1, 1]];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FirstOrderKind {
    /// `BiD(m,1,1)`; at `m = 0` the code is `{0}`.
    Bid11,
    /// `BiD(m,0,1)`; at `m = 0` the code is `{0, 1}`.
    Bid01,
}

fn fold(llr: &[f64], a: &[u8; 3]) -> Vec<f64> {
    let third = llr.len() / 3;
    (0..third)
        .map(|i| {
            (0..3)
                .map(|t| {
                    let l = llr[t * third + i];
                    if a[t] == 0 {
                        l
                    } else {
                        -l
                    }
                })
                .sum()
        })
        .collect()
}

/// Returns the best metric and writes the codeword bits into `out`.
/// Ties keep the earlier branch, which is the smaller message rank.
fn ml(llr: &[f64], kind: FirstOrderKind, out: &mut [u8]) -> f64 {
    if llr.len() == 1 {
        return match kind {
            FirstOrderKind::Bid11 => {
                out[0] = 0;
                llr[0]
            }
            FirstOrderKind::Bid01 => {
                out[0] = (llr[0] < 0.0) as u8;
                llr[0].abs()
            }
        };
    }
    let third = llr.len() / 3;
    let mut best = f64::NEG_INFINITY;
    let mut sub = vec![0u8; third];
    let mut best_d = vec![0u8; third];
    let mut best_a = 0;
    for (b, a) in BRANCHES.iter().enumerate() {
        let metric = ml(&fold(llr, a), kind, &mut sub);
        if metric > best {
            best = metric;
            best_a = b;
            best_d.copy_from_slice(&sub);
        }
    }
    let a = BRANCHES[best_a];
    for t in 0..3 {
        for i in 0..third {
            out[t * third + i] = best_d[i] ^ a[t];
        }
    }
    best
}

/// Per-bit constrained maxima `(M0, M1)`.
fn maxlog(llr: &[f64], kind: FirstOrderKind) -> (Vec<f64>, Vec<f64>) {
    if llr.len() == 1 {
        return match kind {
            FirstOrderKind::Bid11 => (vec![llr[0]], vec![f64::NEG_INFINITY]),
            FirstOrderKind::Bid01 => (vec![llr[0]], vec![-llr[0]]),
        };
    }
    let n = llr.len();
    let third = n / 3;
    let mut m0 = vec![f64::NEG_INFINITY; n];
    let mut m1 = vec![f64::NEG_INFINITY; n];
    for a in &BRANCHES {
        let (n0, n1) = maxlog(&fold(llr, a), kind);
        for (t, &at) in a.iter().enumerate() {
            // c = d ^ a_t, so the c-bit-b maximum is the d-bit-(b ^ a_t) one
            let (z, o) = if at == 0 { (&n0, &n1) } else { (&n1, &n0) };
            for i in 0..third {
                let j = t * third + i;
                m0[j] = m0[j].max(z[i]);
                m1[j] = m1[j].max(o[i]);
            }
        }
    }
    (m0, m1)
}

fn check(m: usize, llr: &LlrVector) -> Result<()> {
    if llr.m() != m {
        return Err(Error::DimensionMismatch {
            left: llr.m(),
            right: m,
        });
    }
    Ok(())
}

/// ML decoding by the four-branch recursion.
pub fn fast_ml(kind: FirstOrderKind, m: usize, llr: &LlrVector) -> Result<DecodeResult> {
    check(m, llr)?;
    let mut bits = vec![0u8; pow3(m)];
    let metric = ml(llr.values(), kind, &mut bits);
    Ok(DecodeResult {
        codeword: BinaryWord::new(m, bits)?,
        metric,
    })
}

/// Posterior bitwise max-log-MAP LLRs.
pub fn maxlogmap(kind: FirstOrderKind, m: usize, llr: &LlrVector) -> Result<LlrVector> {
    check(m, llr)?;
    let (m0, m1) = maxlog(llr.values(), kind);
    Ok(LlrVector::unclipped(
        m,
        m0.iter().zip(&m1).map(|(a, b)| a - b).collect(),
    ))
}

pub(crate) fn maxlogmap_slice(kind: FirstOrderKind, llr: &[f64]) -> Vec<f64> {
    let (m0, m1) = maxlog(llr, kind);
    m0.iter().zip(&m1).map(|(a, b)| a - b).collect()
}

pub fn fast_ml_11(m: usize, llr: &LlrVector) -> Result<DecodeResult> {
    fast_ml(FirstOrderKind::Bid11, m, llr)
}

pub fn fast_ml_01(m: usize, llr: &LlrVector) -> Result<DecodeResult> {
    fast_ml(FirstOrderKind::Bid01, m, llr)
}

pub fn maxlogmap_11(m: usize, llr: &LlrVector) -> Result<LlrVector> {
    maxlogmap(FirstOrderKind::Bid11, m, llr)
}

pub fn maxlogmap_01(m: usize, llr: &LlrVector) -> Result<LlrVector> {
    maxlogmap(FirstOrderKind::Bid01, m, llr)
}
