//! Coordinate permutations that preserve every abelian code `A(m, W)`.
//!
//! Digit positions are 0-based here: position `ℓ` is the digit `i_(ℓ+1)`.

use crate::algebra::index::{digits_of, rank_of};
use crate::algebra::{BinaryWord, TernaryIndex};
use crate::error::{Error, Result};

fn remap(word: &BinaryWord, map: impl Fn(&mut [u8])) -> BinaryWord {
    let m = word.m();
    let mut out = vec![0u8; word.len()];
    for (r, &b) in word.bits().iter().enumerate() {
        if b == 0 {
            continue;
        }
        let mut d = digits_of(r, m);
        map(&mut d);
        out[rank_of(&d)] = 1;
    }
    BinaryWord::from_vec_unchecked(m, out)
}

/// `X^i → X^(i+k)`, i.e. multiplication by the monomial `X^k`.
pub fn translate(word: &BinaryWord, k: &TernaryIndex) -> Result<BinaryWord> {
    if k.m() != word.m() {
        return Err(Error::DimensionMismatch {
            left: word.m(),
            right: k.m(),
        });
    }
    let kd = k.digits();
    Ok(remap(word, |d| {
        for (x, &y) in d.iter_mut().zip(kd) {
            *x = (*x + y) % 3;
        }
    }))
}

/// `X_ℓ → X_ℓ^2`: swaps digit values 1 and 2 at position `ℓ`.
pub fn square(word: &BinaryWord, position: usize) -> Result<BinaryWord> {
    if position >= word.m() {
        return Err(Error::BadSpec(format!(
            "position {position} out of range for m = {}",
            word.m()
        )));
    }
    Ok(remap(word, |d| d[position] = (3 - d[position]) % 3))
}

/// `X_ℓ → X_γ(ℓ)`: the digit at position `ℓ` moves to position `γ[ℓ]`.
pub fn permute(word: &BinaryWord, gamma: &[usize]) -> Result<BinaryWord> {
    let m = word.m();
    let mut seen = vec![false; m];
    if gamma.len() != m {
        return Err(Error::BadSpec(format!("permutation has length {}", gamma.len())));
    }
    for &g in gamma {
        if g >= m || seen[g] {
            return Err(Error::BadSpec(format!("{gamma:?} is not a permutation")));
        }
        seen[g] = true;
    }
    Ok(remap(word, |d| {
        let src = d.to_vec();
        for (l, &g) in gamma.iter().enumerate() {
            d[g] = src[l];
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn translate_identity_and_inverse() {
        let w = BinaryWord::from_support(2, &[0, 4, 7]).unwrap();
        assert_eq!(translate(&w, &TernaryIndex::zero(2)).unwrap(), w);
        let k = TernaryIndex::new(vec![1, 2]).unwrap();
        let t = translate(&w, &k).unwrap();
        assert_eq!(translate(&t, &k.neg()).unwrap(), w);
        assert_eq!(t.weight(), w.weight());
    }

    #[test]
    fn square_is_involution() {
        let w = BinaryWord::from_support(3, &[1, 5, 22, 26]).unwrap();
        for l in 0..3 {
            assert_eq!(square(&square(&w, l).unwrap(), l).unwrap(), w);
        }
        // X_1 + X_1^2 is fixed by X_1 -> X_1^2
        let sym = BinaryWord::from_support(1, &[1, 2]).unwrap();
        assert_eq!(square(&sym, 0).unwrap(), sym);
        assert!(square(&sym, 1).is_err());
    }

    #[test]
    fn permutation_identity_and_composition() {
        let w = BinaryWord::from_support(3, &[1, 5, 22, 26, 12]).unwrap();
        assert_eq!(permute(&w, &[0, 1, 2]).unwrap(), w);
        let g1 = [1, 2, 0];
        let g2 = [2, 0, 1];
        // applying g1 then g2 equals applying g2∘g1
        let composed: Vec<usize> = g1.iter().map(|&x| g2[x]).collect();
        assert_eq!(
            permute(&permute(&w, &g1).unwrap(), &g2).unwrap(),
            permute(&w, &composed).unwrap()
        );
        assert!(permute(&w, &[0, 0, 1]).is_err());
    }
}
