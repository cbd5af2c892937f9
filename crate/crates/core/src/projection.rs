//! Puncturing and projection of words indexed by `Z_3^m`.
//!
//! Positions are 0-based digit positions, as in [`crate::codes::automorphism`].

use crate::algebra::index::{digits_of, pow3, rank_of};
use crate::algebra::BinaryWord;
use crate::error::{Error, Result};

/// Ranks in `Z_3^m` of the coordinates whose digits at `coords` equal `u`,
/// listed in order of the punctured rank formed by the remaining digits.
pub fn puncture_indices(m: usize, coords: &[usize], u: &[u8]) -> Result<Vec<usize>> {
    validate(m, coords, u)?;
    let free: Vec<usize> = (0..m).filter(|p| !coords.contains(p)).collect();
    Ok((0..pow3(free.len()))
        .map(|r| {
            let rd = digits_of(r, free.len());
            let mut d = vec![0u8; m];
            for (&p, &x) in free.iter().zip(&rd) {
                d[p] = x;
            }
            for (&p, &x) in coords.iter().zip(u) {
                d[p] = x;
            }
            rank_of(&d)
        })
        .collect())
}

fn validate(m: usize, coords: &[usize], u: &[u8]) -> Result<()> {
    if coords.len() != u.len() {
        return Err(Error::BadSpec(format!(
            "{} positions but {} fixed values",
            coords.len(),
            u.len()
        )));
    }
    if coords.is_empty() || coords.len() > m {
        return Err(Error::BadSpec(format!("need 1..={m} positions, got {}", coords.len())));
    }
    for (i, &p) in coords.iter().enumerate() {
        if p >= m || coords[..i].contains(&p) {
            return Err(Error::BadSpec(format!("bad position list {coords:?} for m = {m}")));
        }
    }
    if u.iter().any(|&x| x > 2) {
        return Err(Error::BadSpec(format!("{u:?} is not over Z_3")));
    }
    Ok(())
}

/// `punc(f, S, u)`: the sub-word on coordinates with digits `u` at `S`.
pub fn puncture(word: &BinaryWord, coords: &[usize], u: &[u8]) -> Result<BinaryWord> {
    let idx = puncture_indices(word.m(), coords, u)?;
    BinaryWord::new(word.m() - coords.len(), idx.iter().map(|&i| word.get(i)).collect())
}

/// Fixed positions `S` and two distinct value vectors `u`, `v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjectionSpec {
    coords: Vec<usize>,
    u: Vec<u8>,
    v: Vec<u8>,
}

impl ProjectionSpec {
    pub fn new(coords: Vec<usize>, u: Vec<u8>, v: Vec<u8>) -> Result<Self> {
        if u == v {
            return Err(Error::BadSpec(format!("u = v = {u:?}")));
        }
        if u.len() != v.len() {
            return Err(Error::BadSpec("u and v differ in length".into()));
        }
        Ok(ProjectionSpec { coords, u, v })
    }

    pub fn coords(&self) -> &[usize] {
        &self.coords
    }

    pub fn u(&self) -> &[u8] {
        &self.u
    }

    pub fn v(&self) -> &[u8] {
        &self.v
    }

    pub fn order(&self) -> usize {
        self.coords.len()
    }
}

/// `punc(f,S,u) + punc(f,S,v)`.
pub fn project(word: &BinaryWord, spec: &ProjectionSpec) -> Result<BinaryWord> {
    ProjectionMap::new(word.m(), spec)?.apply(word)
}

/// Precomputed rank tables for one projection.
#[derive(Clone, Debug)]
pub struct ProjectionMap {
    m: usize,
    spec: ProjectionSpec,
    u_idx: Vec<usize>,
    v_idx: Vec<usize>,
}

impl ProjectionMap {
    pub fn new(m: usize, spec: &ProjectionSpec) -> Result<Self> {
        Ok(ProjectionMap {
            m,
            u_idx: puncture_indices(m, &spec.coords, &spec.u)?,
            v_idx: puncture_indices(m, &spec.coords, &spec.v)?,
            spec: spec.clone(),
        })
    }

    pub fn spec(&self) -> &ProjectionSpec {
        &self.spec
    }

    /// `m` of the projected code.
    pub fn sub_m(&self) -> usize {
        self.m - self.spec.order()
    }

    /// Full-length ranks feeding projected position `i` through `u`.
    pub fn u_indices(&self) -> &[usize] {
        &self.u_idx
    }

    pub fn v_indices(&self) -> &[usize] {
        &self.v_idx
    }

    pub fn apply(&self, word: &BinaryWord) -> Result<BinaryWord> {
        if word.m() != self.m {
            return Err(Error::DimensionMismatch {
                left: word.m(),
                right: self.m,
            });
        }
        let bits = self
            .u_idx
            .iter()
            .zip(&self.v_idx)
            .map(|(&a, &b)| word.get(a) ^ word.get(b))
            .collect();
        BinaryWord::new(self.sub_m(), bits)
    }
}

/// The `3m` order-1 projections: each position with each unordered value pair.
pub fn order1_specs(m: usize) -> Vec<ProjectionSpec> {
    let mut out = Vec::with_capacity(3 * m);
    for s in 0..m {
        for (u, v) in [(0u8, 1u8), (0, 2), (1, 2)] {
            out.push(ProjectionSpec {
                coords: vec![s],
                u: vec![u],
                v: vec![v],
            });
        }
    }
    out
}

/// The `18·C(m,2)` order-2 projections with `u1 ≠ v1` and `u2 ≠ v2`, one per
/// unordered pair `{u, v}`.
pub fn order2_specs(m: usize) -> Vec<ProjectionSpec> {
    let mut out = Vec::new();
    for s1 in 0..m {
        for s2 in (s1 + 1)..m {
            for u in 0..9usize {
                for v in (u + 1)..9usize {
                    let (ud, vd) = (digits_of(u, 2), digits_of(v, 2));
                    if ud[0] != vd[0] && ud[1] != vd[1] {
                        out.push(ProjectionSpec {
                            coords: vec![s1, s2],
                            u: ud,
                            v: vd,
                        });
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_punctures() {
        let f = BinaryWord::new(1, vec![1, 0, 1]).unwrap();
        assert_eq!(puncture(&f, &[0], &[0]).unwrap().bits(), &[1]);
        assert_eq!(puncture(&f, &[0], &[1]).unwrap().bits(), &[0]);
        let ones = BinaryWord::ones(4);
        let p = puncture(&ones, &[1, 3], &[2, 0]).unwrap();
        assert_eq!(p, BinaryWord::ones(2));
    }

    #[test]
    fn remaining_digits_keep_order() {
        // m=3, fix position 1 to value 2: punctured rank r = d0 + 3 d2
        let idx = puncture_indices(3, &[1], &[2]).unwrap();
        for (r, &full) in idx.iter().enumerate() {
            let d = digits_of(full, 3);
            assert_eq!(d[1], 2);
            assert_eq!(r, d[0] as usize + 3 * d[2] as usize);
        }
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(puncture_indices(3, &[0, 0], &[1, 1]).is_err());
        assert!(puncture_indices(3, &[3], &[1]).is_err());
        assert!(puncture_indices(3, &[0], &[1, 2]).is_err());
        assert!(ProjectionSpec::new(vec![0], vec![1], vec![1]).is_err());
    }

    #[test]
    fn spec_counts() {
        for m in 2..=6 {
            assert_eq!(order1_specs(m).len(), 3 * m);
            assert_eq!(order2_specs(m).len(), 18 * m * (m - 1) / 2);
        }
    }

    #[test]
    fn index_maps_partition_coordinates() {
        let m = 4;
        let mut seen = vec![0u8; pow3(m)];
        for a in 0..3u8 {
            for b in 0..3u8 {
                for i in puncture_indices(m, &[0, 2], &[a, b]).unwrap() {
                    seen[i] += 1;
                }
            }
        }
        assert!(seen.iter().all(|&c| c == 1));
    }
}
