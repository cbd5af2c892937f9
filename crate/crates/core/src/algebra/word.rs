use std::fmt;

use super::gf4::Gf4;
use super::index::{pow3, TernaryIndex};
use crate::error::{Error, Result};

/// Coefficient vector of a polynomial in `F2[X_1..X_m]/(X_ℓ^3 - 1)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryWord {
    m: usize,
    bits: Vec<u8>,
}

impl BinaryWord {
    pub fn new(m: usize, bits: Vec<u8>) -> Result<Self> {
        let n = pow3(m);
        if bits.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                actual: bits.len(),
            });
        }
        if bits.iter().any(|&b| b > 1) {
            return Err(Error::BadSpec("word entries must be 0 or 1".into()));
        }
        Ok(BinaryWord { m, bits })
    }

    pub(crate) fn from_vec_unchecked(m: usize, bits: Vec<u8>) -> Self {
        debug_assert_eq!(bits.len(), pow3(m));
        BinaryWord { m, bits }
    }

    pub fn zeros(m: usize) -> Self {
        BinaryWord {
            m,
            bits: vec![0; pow3(m)],
        }
    }

    pub fn ones(m: usize) -> Self {
        BinaryWord {
            m,
            bits: vec![1; pow3(m)],
        }
    }

    /// Indicator word of a set of coordinate ranks.
    pub fn from_support(m: usize, support: &[usize]) -> Result<Self> {
        let mut w = BinaryWord::zeros(m);
        for &r in support {
            if r >= w.len() {
                return Err(Error::BadSpec(format!("coordinate {r} out of range")));
            }
            w.bits[r] ^= 1;
        }
        Ok(w)
    }

    /// The monomial `X^i`.
    pub fn monomial(i: &TernaryIndex) -> Self {
        let mut w = BinaryWord::zeros(i.m());
        w.bits[i.rank()] = 1;
        w
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn into_bits(self) -> Vec<u8> {
        self.bits
    }

    pub fn get(&self, rank: usize) -> u8 {
        self.bits[rank]
    }

    pub fn set(&mut self, rank: usize, bit: u8) {
        self.bits[rank] = bit & 1;
    }

    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b != 0).count()
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&b| b == 0)
    }

    pub fn support(&self) -> Vec<usize> {
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b != 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Sum over F2.
    pub fn xor(&self, other: &BinaryWord) -> Result<BinaryWord> {
        if self.m != other.m {
            return Err(Error::DimensionMismatch {
                left: self.m,
                right: other.m,
            });
        }
        Ok(BinaryWord {
            m: self.m,
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| a ^ b).collect(),
        })
    }

    pub fn xor_assign(&mut self, other: &BinaryWord) {
        assert_eq!(self.m, other.m, "dimension mismatch");
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a ^= b;
        }
    }

    /// Parity of the coefficients, i.e. the spectral value at `j = 0`.
    pub fn parity(&self) -> u8 {
        self.bits.iter().fold(0, |acc, &b| acc ^ b)
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryWord(m={}, ", self.m)?;
        for b in &self.bits {
            write!(f, "{b}")?;
        }
        write!(f, ")")
    }
}

/// The F4-valued DFT of a binary word, indexed like the word itself.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Spectrum {
    m: usize,
    values: Vec<Gf4>,
}

impl Spectrum {
    pub fn new(m: usize, values: Vec<Gf4>) -> Result<Self> {
        let n = pow3(m);
        if values.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                actual: values.len(),
            });
        }
        Ok(Spectrum { m, values })
    }

    pub(crate) fn from_vec_unchecked(m: usize, values: Vec<Gf4>) -> Self {
        Spectrum { m, values }
    }

    pub fn zeros(m: usize) -> Self {
        Spectrum {
            m,
            values: vec![Gf4::ZERO; pow3(m)],
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn values(&self) -> &[Gf4] {
        &self.values
    }

    pub fn get(&self, rank: usize) -> Gf4 {
        self.values[rank]
    }

    /// Checks `f̂_{2j} = (f̂_j)^2` for every `j`.
    pub fn is_conjugacy_symmetric(&self) -> bool {
        let neg = super::index::negation_table(self.m);
        self.values
            .iter()
            .enumerate()
            .all(|(j, v)| self.values[neg[j]] == v.square())
    }
}
