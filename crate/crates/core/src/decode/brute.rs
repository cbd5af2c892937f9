use super::{correlation, DecodeResult, LlrVector};
use crate::algebra::BinaryWord;
use crate::codes::{generator_matrix, AbelianCodeSpec};
use crate::error::{Error, Result};

/// Largest code dimension the exhaustive decoders accept.
pub const MAX_BRUTE_DIMENSION: usize = 26;

/// Exhaustive ML decoder with the generator columns precomputed.
///
/// Messages are ranked by `Σ_r msg_r 2^r`, where `msg_r` multiplies generator
/// row `r`. For each setting of the high message bits, the metric of every
/// low-bit completion is one Walsh–Hadamard transform of a folded LLR table,
/// so a frame costs about `2^k · (k_low + 1)` additions.
#[derive(Clone, Debug)]
pub struct BruteForceMl {
    spec: AbelianCodeSpec,
    k: usize,
    k_low: usize,
    rows: Vec<BinaryWord>,
    /// Column `i` of the generator matrix, bit `r` from row `r`.
    columns: Vec<u32>,
}

impl BruteForceMl {
    pub fn new(spec: &AbelianCodeSpec) -> Result<Self> {
        let k = spec.dimension();
        if k > MAX_BRUTE_DIMENSION {
            return Err(Error::TooLarge(k));
        }
        let g = generator_matrix(spec);
        let n = spec.length();
        let columns = (0..n)
            .map(|i| {
                g.rows()
                    .iter()
                    .enumerate()
                    .fold(0u32, |acc, (r, row)| acc | ((row.get(i) as u32) << r))
            })
            .collect();
        // minimise k_low + n / 2^k_low, the per-message cost
        let k_low = (0..=k.min(20))
            .min_by(|&a, &b| {
                let cost = |x: usize| x as f64 + n as f64 / (1u64 << x) as f64;
                cost(a).total_cmp(&cost(b))
            })
            .unwrap_or(0);
        Ok(BruteForceMl {
            spec: *spec,
            k,
            k_low,
            rows: g.rows().to_vec(),
            columns,
        })
    }

    pub fn spec(&self) -> &AbelianCodeSpec {
        &self.spec
    }

    pub fn encode_rank(&self, msg: u64) -> BinaryWord {
        let mut word = BinaryWord::zeros(self.spec.m());
        for (r, row) in self.rows.iter().enumerate() {
            if (msg >> r) & 1 == 1 {
                word.xor_assign(row);
            }
        }
        word
    }

    /// The best message rank; ties go to the smallest rank.
    pub fn best_message(&self, llr: &LlrVector) -> Result<u64> {
        if llr.len() != self.columns.len() {
            return Err(Error::LengthMismatch {
                expected: self.columns.len(),
                actual: llr.len(),
            });
        }
        let size = 1usize << self.k_low;
        let low_mask = (size - 1) as u32;
        let mut table = vec![0.0f64; size];
        let mut best = f64::NEG_INFINITY;
        let mut best_msg = 0u64;
        for high in 0..(1u64 << (self.k - self.k_low)) {
            table.iter_mut().for_each(|x| *x = 0.0);
            for (&col, &l) in self.columns.iter().zip(llr.values()) {
                let h = ((col >> self.k_low) as u64 & high).count_ones() & 1;
                table[(col & low_mask) as usize] += if h == 0 { l } else { -l };
            }
            walsh_hadamard(&mut table);
            for (low, &v) in table.iter().enumerate() {
                if v > best {
                    best = v;
                    best_msg = (high << self.k_low) | low as u64;
                }
            }
        }
        Ok(best_msg)
    }

    pub fn decode(&self, llr: &LlrVector) -> Result<DecodeResult> {
        let codeword = self.encode_rank(self.best_message(llr)?);
        let metric = correlation(&codeword, llr);
        Ok(DecodeResult { codeword, metric })
    }
}

fn walsh_hadamard(a: &mut [f64]) {
    let mut h = 1;
    while h < a.len() {
        for block in a.chunks_exact_mut(2 * h) {
            let (x, y) = block.split_at_mut(h);
            for (p, q) in x.iter_mut().zip(y.iter_mut()) {
                let (s, d) = (*p + *q, *p - *q);
                *p = s;
                *q = d;
            }
        }
        h *= 2;
    }
}

/// Exact argmax of the correlation over every codeword.
pub fn brute_force_ml(spec: &AbelianCodeSpec, llr: &LlrVector) -> Result<DecodeResult> {
    if llr.m() != spec.m() {
        return Err(Error::DimensionMismatch {
            left: llr.m(),
            right: spec.m(),
        });
    }
    BruteForceMl::new(spec)?.decode(llr)
}

/// Bitwise max-log-MAP by listing codewords:
/// `max_{c_i = 0} μ(c) - max_{c_i = 1} μ(c)` for each `i`.
pub fn brute_force_bitwise(spec: &AbelianCodeSpec, llr: &LlrVector) -> Result<LlrVector> {
    let k = spec.dimension();
    if k > 20 {
        return Err(Error::TooLarge(k));
    }
    if llr.m() != spec.m() {
        return Err(Error::DimensionMismatch {
            left: llr.m(),
            right: spec.m(),
        });
    }
    let g = generator_matrix(spec);
    let n = spec.length();
    let mut best = [vec![f64::NEG_INFINITY; n], vec![f64::NEG_INFINITY; n]];
    let mut word = BinaryWord::zeros(spec.m());
    for step in 0u64..(1u64 << k) {
        if step > 0 {
            word.xor_assign(&g.rows()[step.trailing_zeros() as usize]);
        }
        let mu = correlation(&word, llr);
        for (i, &b) in word.bits().iter().enumerate() {
            let slot = &mut best[b as usize][i];
            if mu > *slot {
                *slot = mu;
            }
        }
    }
    let out = best[0].iter().zip(&best[1]).map(|(a, b)| a - b).collect();
    // bypass clipping: the oracle must report the raw difference
    Ok(LlrVector::unclipped(spec.m(), out))
}
