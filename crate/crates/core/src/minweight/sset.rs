use crate::algebra::index::{digits_of, pow3, rank_of};
use crate::algebra::Gf4;
use crate::error::{Error, Result};

/// `S = {u ∈ Z_3^(w-1) : Σ_i α^(u_i) = 1}`.
///
/// A weight-`w` word `1 + Σ X^(a_i)` lies in the dual of `BiD(m,2,2)` exactly
/// when `j·M^T ∈ S` for every weight-2 `j`, where `M` has rows `a_i`.
#[derive(Clone, Debug)]
pub struct SSet {
    w: usize,
    member: Vec<bool>,
}

impl SSet {
    pub fn build(w: usize) -> Result<Self> {
        if !(2..=6).contains(&w) {
            return Err(Error::BadSpec(format!("S-set defined for 2 <= w <= 6, got {w}")));
        }
        let len = w - 1;
        let member = (0..pow3(len))
            .map(|r| {
                digits_of(r, len)
                    .iter()
                    .fold(Gf4::ZERO, |acc, &u| acc + Gf4::alpha_pow(u as usize))
                    == Gf4::ONE
            })
            .collect();
        Ok(SSet { w, member })
    }

    pub fn w(&self) -> usize {
        self.w
    }

    /// Length of the vectors, `w - 1`.
    pub fn dim(&self) -> usize {
        self.w - 1
    }

    pub fn contains_rank(&self, rank: usize) -> bool {
        self.member[rank]
    }

    pub fn contains(&self, v: &[u8]) -> bool {
        v.len() == self.dim() && self.member[rank_of(v)]
    }

    pub fn ranks(&self) -> impl Iterator<Item = usize> + '_ {
        self.member
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(r, _)| r)
    }

    pub fn vectors(&self) -> Vec<Vec<u8>> {
        self.ranks().map(|r| digits_of(r, self.dim())).collect()
    }

    pub fn len(&self) -> usize {
        self.member.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

pub fn build_s_set(w: usize) -> Result<SSet> {
    SSet::build(w)
}

/// `a·x + b·y` over `Z_3`, on ranks of length-`len` vectors.
pub(crate) fn lin_comb(a: u8, x: usize, b: u8, y: usize, len: usize) -> usize {
    let xd = digits_of(x, len);
    let yd = digits_of(y, len);
    let z: Vec<u8> = xd
        .iter()
        .zip(&yd)
        .map(|(&p, &q)| (a * p + b * q) % 3)
        .collect();
    rank_of(&z)
}
