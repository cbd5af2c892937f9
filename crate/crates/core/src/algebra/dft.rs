//! The m-dimensional DFT over F4 and the ring product it diagonalises.
//!
//! `f̂_j = Σ_i f_i α^(i·j)` and `f_i = Σ_j f̂_j α^(-i·j)`. The transform is
//! separable, so the fast version runs `m` passes of 3-point butterflies,
//! one per ternary digit. There is no normalisation: `3^m` is odd, so the
//! round trip is already the identity in characteristic 2.

use super::gf4::Gf4;
use super::index::{digits_of, pow3, rank_of};
use super::word::{BinaryWord, Spectrum};
use crate::error::{Error, Result};

/// In-place radix-3 transform. `inverse` uses `α^-1 = α²` as the kernel.
pub fn transform_in_place(values: &mut [Gf4], m: usize, inverse: bool) {
    debug_assert_eq!(values.len(), pow3(m));
    let (w1, w2) = if inverse {
        (Gf4::ALPHA2, Gf4::ALPHA)
    } else {
        (Gf4::ALPHA, Gf4::ALPHA2)
    };
    let n = values.len();
    let mut stride = 1;
    for _ in 0..m {
        let block = stride * 3;
        for base in (0..n).step_by(block) {
            for off in base..base + stride {
                let x0 = values[off];
                let x1 = values[off + stride];
                let x2 = values[off + 2 * stride];
                values[off] = x0 + x1 + x2;
                values[off + stride] = x0 + w1 * x1 + w2 * x2;
                values[off + 2 * stride] = x0 + w2 * x1 + w1 * x2;
            }
        }
        stride = block;
    }
}

pub fn dft(word: &BinaryWord) -> Spectrum {
    let mut values: Vec<Gf4> = word.bits().iter().map(|&b| Gf4::from_bits(b)).collect();
    transform_in_place(&mut values, word.m(), false);
    Spectrum::from_vec_unchecked(word.m(), values)
}

pub fn idft(spectrum: &Spectrum) -> Result<BinaryWord> {
    let mut values = spectrum.values().to_vec();
    transform_in_place(&mut values, spectrum.m(), true);
    let mut bits = Vec::with_capacity(values.len());
    for (i, v) in values.into_iter().enumerate() {
        match v.bits() {
            0 | 1 => bits.push(v.bits()),
            _ => return Err(Error::NonBinaryResult(i)),
        }
    }
    Ok(BinaryWord::from_vec_unchecked(spectrum.m(), bits))
}

/// Quadratic-time DFT straight from the definition; kept as a reference.
pub fn naive_dft(word: &BinaryWord) -> Spectrum {
    let m = word.m();
    let n = pow3(m);
    let support: Vec<Vec<u8>> = word.support().into_iter().map(|r| digits_of(r, m)).collect();
    let values = (0..n)
        .map(|j| {
            let jd = digits_of(j, m);
            support.iter().fold(Gf4::ZERO, |acc, id| {
                let e: usize = id.iter().zip(&jd).map(|(&a, &b)| (a * b) as usize).sum();
                acc + Gf4::alpha_pow(e)
            })
        })
        .collect();
    Spectrum::from_vec_unchecked(m, values)
}

/// Product in the group algebra: `h_k = Σ_i f_i g_(k-i)`, computed as a sum of
/// translates of `f`, one per monomial of `g`.
pub fn multiply_ring(f: &BinaryWord, g: &BinaryWord) -> Result<BinaryWord> {
    if f.m() != g.m() {
        return Err(Error::DimensionMismatch {
            left: f.m(),
            right: g.m(),
        });
    }
    let m = f.m();
    let n = pow3(m);
    let f_support: Vec<Vec<u8>> = f.support().into_iter().map(|r| digits_of(r, m)).collect();
    let mut out = vec![0u8; n];
    for k in g.support() {
        let kd = digits_of(k, m);
        for id in &f_support {
            let sum: Vec<u8> = id.iter().zip(&kd).map(|(a, b)| (a + b) % 3).collect();
            out[rank_of(&sum)] ^= 1;
        }
    }
    Ok(BinaryWord::from_vec_unchecked(m, out))
}
