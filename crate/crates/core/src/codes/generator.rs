use crate::algebra::dft::transform_in_place;
use crate::algebra::index::{pow3, weight_table};
use crate::algebra::{BinaryWord, Gf4};
use crate::error::{Error, Result};
use crate::gf2::BitRow;

use super::spec::AbelianCodeSpec;

/// Rows of `G_{m,w}`, the generator of `A(m, {w})`.
///
/// `G_{m,w} = [(1,1,1) ⊗ G_{m-1,w}; (1,1,0) ⊗ G_{m-1,w-1}; (1,0,1) ⊗ G_{m-1,w-1}]`
/// with `G_{0,0} = [1]` and out-of-range blocks empty. The outer Kronecker
/// factor runs over the most significant digit `i_m`.
pub fn weight_class_rows(m: usize, w: usize) -> Vec<Vec<u8>> {
    if w > m {
        return Vec::new();
    }
    if m == 0 {
        return vec![vec![1]];
    }
    let mut rows = Vec::new();
    for row in weight_class_rows(m - 1, w) {
        rows.push(kron(&[1, 1, 1], &row));
    }
    if w >= 1 {
        let lower = weight_class_rows(m - 1, w - 1);
        for pattern in [[1u8, 1, 0], [1, 0, 1]] {
            for row in &lower {
                rows.push(kron(&pattern, row));
            }
        }
    }
    rows
}

fn kron(outer: &[u8; 3], inner: &[u8]) -> Vec<u8> {
    let mut out = Vec::with_capacity(3 * inner.len());
    for &o in outer {
        out.extend(inner.iter().map(|&x| x & o));
    }
    out
}

/// Generator matrix of `A(m, W)`: the blocks `G_{m,w}` stacked for `w ∈ W` ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorMatrix {
    m: usize,
    rows: Vec<BinaryWord>,
}

impl GeneratorMatrix {
    pub fn new(spec: &AbelianCodeSpec) -> Self {
        let m = spec.m();
        let rows = spec
            .weights()
            .members()
            .flat_map(|w| weight_class_rows(m, w))
            .map(|bits| BinaryWord::from_vec_unchecked(m, bits))
            .collect();
        GeneratorMatrix { m, rows }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        pow3(self.m)
    }

    pub fn rows(&self) -> &[BinaryWord] {
        &self.rows
    }

    pub fn bit_rows(&self) -> Vec<BitRow> {
        self.rows.iter().map(|r| BitRow::from_bits(r.bits())).collect()
    }

    /// `message · G` over F2.
    pub fn encode(&self, message: &[u8]) -> Result<BinaryWord> {
        if message.len() != self.k() {
            return Err(Error::LengthMismatch {
                expected: self.k(),
                actual: message.len(),
            });
        }
        let mut out = BinaryWord::zeros(self.m);
        for (bit, row) in message.iter().zip(&self.rows) {
            if bit & 1 == 1 {
                out.xor_assign(row);
            }
        }
        Ok(out)
    }
}

pub fn generator_matrix(spec: &AbelianCodeSpec) -> GeneratorMatrix {
    GeneratorMatrix::new(spec)
}

pub fn encode(spec: &AbelianCodeSpec, message: &[u8]) -> Result<BinaryWord> {
    GeneratorMatrix::new(spec).encode(message)
}

/// Spectral membership test: every `f̂_j` with `wt(j) ∉ W` must vanish.
pub fn is_member(spec: &AbelianCodeSpec, word: &BinaryWord) -> bool {
    if word.m() != spec.m() {
        return false;
    }
    let m = spec.m();
    let mut values: Vec<Gf4> = word.bits().iter().map(|&b| Gf4::from_bits(b)).collect();
    transform_in_place(&mut values, m, false);
    let weights = weight_table(m);
    let allowed = spec.weights();
    values
        .iter()
        .zip(&weights)
        .all(|(v, &w)| v.is_zero() || allowed.contains(w as usize))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::dft;
    use crate::algebra::index::weight_of_rank;
    use crate::codes::spec::{BiDSpec, FreqWeightSet};
    use crate::gf2;

    #[test]
    fn base_cases() {
        assert_eq!(weight_class_rows(1, 0), vec![vec![1, 1, 1]]);
        assert_eq!(weight_class_rows(1, 1), vec![vec![1, 1, 0], vec![1, 0, 1]]);
        assert_eq!(weight_class_rows(2, 0), vec![vec![1; 9]]);
    }

    #[test]
    fn first_order_m3_generator() {
        let spec = BiDSpec::new(3, 1, 1).unwrap().to_abelian();
        let g = generator_matrix(&spec);
        assert_eq!((g.k(), g.n()), (6, 27));
        assert_eq!(gf2::rank(g.bit_rows().iter()), 6);
        for row in g.rows() {
            let s = dft(row);
            for (j, v) in s.values().iter().enumerate() {
                if weight_of_rank(j, 3) != 1 {
                    assert!(v.is_zero(), "row spectrum leaks at j = {j}");
                }
            }
        }
    }

    #[test]
    fn encode_basics() {
        let spec = BiDSpec::new(3, 1, 1).unwrap().to_abelian();
        let g = generator_matrix(&spec);
        assert!(g.encode(&[0; 6]).unwrap().is_zero());
        for t in 0..6 {
            let mut msg = vec![0u8; 6];
            msg[t] = 1;
            assert_eq!(&g.encode(&msg).unwrap(), &g.rows()[t]);
        }
        assert!(matches!(g.encode(&[1; 5]), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn membership_examples() {
        for m in 1..=4 {
            let zero = BinaryWord::zeros(m);
            for mask in 0..(1u64 << (m + 1)) {
                let spec = AbelianCodeSpec::new(FreqWeightSet::from_mask(m, mask).unwrap());
                assert!(is_member(&spec, &zero));
            }
            let rep = BiDSpec::new(m, 0, 0).unwrap().to_abelian();
            assert!(is_member(&rep, &BinaryWord::ones(m)));
            if m >= 2 {
                let second = BiDSpec::new(m, 2, 2).unwrap().to_abelian();
                assert!(!is_member(&second, &BinaryWord::ones(m)));
            }
        }
    }

    #[test]
    fn split_by_top_digit_matches_recursion() {
        // ρ = (1,1,1)⊗a + (1,1,0)⊗a' + (1,0,1)⊗a'' ⇒ ρ0 = a+a'+a'', ρ1 = a+a', ρ2 = a+a''.
        let m = 3;
        let x = weight_class_rows(m - 1, 2);
        let y = weight_class_rows(m - 1, 1);
        let full = weight_class_rows(m, 2);
        let third = pow3(m - 1);
        // first |x| rows are 1⊗a, then (110)⊗a', then (101)⊗a''
        for (r, row) in full.iter().enumerate() {
            let (p0, p1, p2) = (&row[..third], &row[third..2 * third], &row[2 * third..]);
            if r < x.len() {
                assert!(p0 == &x[r][..] && p1 == &x[r][..] && p2 == &x[r][..]);
            } else if r < x.len() + y.len() {
                let a = &y[r - x.len()];
                assert!(p0 == &a[..] && p1 == &a[..] && p2.iter().all(|&b| b == 0));
            } else {
                let a = &y[r - x.len() - y.len()];
                assert!(p0 == &a[..] && p2 == &a[..] && p1.iter().all(|&b| b == 0));
            }
        }
    }
}
