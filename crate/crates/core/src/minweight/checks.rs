//! Weight-6 parity checks of the dual of `BiD(m,2,2)`.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::io::{BufRead, Write};

use rayon::prelude::*;

use super::graph::ConstraintGraph;
use super::sset::SSet;
use crate::algebra::index::{digits_of, pow3, rank_of};
use crate::algebra::BinaryWord;
use crate::codes::{is_member, generator_matrix, BiDSpec};
use crate::error::{Error, Result};
use crate::gf2::{BitRow, EchelonBasis};

/// A weight-6 dual codeword, stored as its sorted support ranks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParityCheck {
    support: [usize; 6],
}

impl ParityCheck {
    pub fn new(mut support: [usize; 6]) -> Result<Self> {
        support.sort_unstable();
        if support.windows(2).any(|p| p[0] == p[1]) {
            return Err(Error::BadSpec(format!("repeated position in {support:?}")));
        }
        Ok(ParityCheck { support })
    }

    pub fn support(&self) -> &[usize; 6] {
        &self.support
    }

    pub fn indicator(&self, m: usize) -> Result<BinaryWord> {
        BinaryWord::from_support(m, &self.support)
    }

    fn translate(&self, k: &[u8], m: usize) -> ParityCheck {
        self.map(|d| {
            for (x, y) in d.iter_mut().zip(k) {
                *x = (*x + y) % 3;
            }
        }, m)
    }

    fn map(&self, f: impl Fn(&mut Vec<u8>), m: usize) -> ParityCheck {
        let mut s = self.support.map(|r| {
            let mut d = digits_of(r, m);
            f(&mut d);
            rank_of(&d)
        });
        s.sort_unstable();
        ParityCheck { support: s }
    }
}

/// The two maximal cliques of the weight-6 graph that generate every check,
/// each as `[once, repeatable, repeatable]` column vectors in `Z_3^5`.
pub fn generating_cliques() -> Result<Vec<[Vec<u8>; 3]>> {
    let s = SSet::build(6)?;
    let graph = ConstraintGraph::build(&s);
    let cliques = graph.maximal_cliques(|_| true);
    let mut classes: BTreeSet<Vec<Vec<u8>>> = BTreeSet::new();
    let mut out = Vec::new();
    for c in cliques {
        if !c.iter().any(|&v| graph.is_repeatable(v)) || !distinct_nonzero_rows(&c) {
            continue;
        }
        let vecs: Vec<Vec<u8>> = c.iter().map(|&v| digits_of(v, 5)).collect();
        if classes.insert(canonical_under_row_perms(&vecs)) {
            let once: Vec<usize> = c.iter().copied().filter(|&v| !graph.is_repeatable(v)).collect();
            let rep: Vec<usize> = c.iter().copied().filter(|&v| graph.is_repeatable(v)).collect();
            if once.len() != 1 || rep.len() != 2 {
                return Err(Error::BadSpec(format!("unexpected clique shape {vecs:?}")));
            }
            out.push([
                digits_of(once[0], 5),
                digits_of(rep[0], 5),
                digits_of(rep[1], 5),
            ]);
        }
    }
    Ok(out)
}

fn distinct_nonzero_rows(cols: &[usize]) -> bool {
    let digits: Vec<Vec<u8>> = cols.iter().map(|&c| digits_of(c, 5)).collect();
    let rows: BTreeSet<Vec<u8>> = (0..5)
        .map(|i| digits.iter().map(|d| d[i]).collect())
        .collect();
    rows.len() == 5 && rows.iter().all(|r: &Vec<u8>| r.iter().any(|&x| x != 0))
}

/// Smallest sorted vector list over all simultaneous coordinate permutations.
pub(crate) fn canonical_under_row_perms(vecs: &[Vec<u8>]) -> Vec<Vec<u8>> {
    let len = vecs.first().map_or(0, |v| v.len());
    let mut best: Option<Vec<Vec<u8>>> = None;
    let mut perm: Vec<usize> = (0..len).collect();
    loop {
        let mut img: Vec<Vec<u8>> = vecs
            .iter()
            .map(|v| perm.iter().map(|&p| v[p]).collect())
            .collect();
        img.sort();
        if best.as_ref().is_none_or(|b| img < *b) {
            best = Some(img);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best.unwrap_or_default()
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Counts gathered while enumerating checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationStats {
    /// Distinct checks containing `X^0` built from the cliques.
    pub base_supports: usize,
    /// Translates generated before deduplication.
    pub translates: usize,
    pub distinct: usize,
}

/// All weight-6 checks of the dual of `BiD(m,2,2)` for `m ≥ 4`, sorted.
pub fn enumerate_weight6_checks(m: usize) -> Result<Vec<ParityCheck>> {
    enumerate_weight6_checks_with_stats(m).map(|(c, _)| c)
}

pub fn enumerate_weight6_checks_with_stats(
    m: usize,
) -> Result<(Vec<ParityCheck>, EnumerationStats)> {
    if m < 4 {
        return Err(Error::UnsupportedM { m, min: 4 });
    }
    let mut bases: BTreeSet<ParityCheck> = BTreeSet::new();
    for [once, a, b] in generating_cliques()? {
        for pos in 0..m {
            for pattern in 0..(1usize << (m - 1)) {
                let mut cols = Vec::with_capacity(m);
                let mut bit = 0;
                for l in 0..m {
                    if l == pos {
                        cols.push(&once);
                    } else {
                        cols.push(if (pattern >> bit) & 1 == 0 { &a } else { &b });
                        bit += 1;
                    }
                }
                let mut support = [0usize; 6];
                for (i, slot) in support.iter_mut().skip(1).enumerate() {
                    let row: Vec<u8> = cols.iter().map(|c| c[i]).collect();
                    *slot = rank_of(&row);
                }
                bases.insert(ParityCheck::new(support)?);
            }
        }
    }
    let bases: Vec<ParityCheck> = bases.into_iter().collect();
    let translated: Vec<ParityCheck> = (0..pow3(m))
        .into_par_iter()
        .flat_map_iter(|k| {
            let kd = digits_of(k, m);
            bases
                .iter()
                .map(move |c| c.translate(&kd, m))
                .collect::<Vec<_>>()
        })
        .collect();
    let translates = translated.len();
    let distinct: BTreeSet<ParityCheck> = translated.into_iter().collect();
    let checks: Vec<ParityCheck> = distinct.into_iter().collect();
    let stats = EnumerationStats {
        base_supports: bases.len(),
        translates,
        distinct: checks.len(),
    };
    Ok((checks, stats))
}

/// The expected count `m · 2^(m-2) · 3^(m-1)`.
pub fn weight6_count(m: usize) -> usize {
    m * (1 << (m - 2)) * pow3(m - 1)
}

/// `(X_1 + X_1^2)(1 + X_2⋯X_m + X_2^2⋯X_m^2)`.
pub fn canonical_polynomial(m: usize) -> Result<ParityCheck> {
    if m < 2 {
        return Err(Error::UnsupportedM { m, min: 2 });
    }
    let mut support = [0usize; 6];
    let mut i = 0;
    for x1 in 1..=2u8 {
        for rest in 0..=2u8 {
            let mut d = vec![rest; m];
            d[0] = x1;
            support[i] = rank_of(&d);
            i += 1;
        }
    }
    ParityCheck::new(support)
}

/// Which automorphism families a BFS may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrbitGenerators {
    pub translations: bool,
    pub squarings: bool,
    pub permutations: bool,
}

impl OrbitGenerators {
    pub const ALL: Self = OrbitGenerators {
        translations: true,
        squarings: true,
        permutations: true,
    };
}

/// Orbit of a check under the chosen generator families.
pub fn orbit(start: ParityCheck, m: usize, gens: OrbitGenerators) -> Vec<ParityCheck> {
    type Move = Box<dyn Fn(&ParityCheck) -> ParityCheck>;
    let mut moves: Vec<Move> = Vec::new();
    for l in 0..m {
        if gens.translations {
            let mut k = vec![0u8; m];
            k[l] = 1;
            moves.push(Box::new(move |c| c.translate(&k, m)));
        }
        if gens.squarings {
            moves.push(Box::new(move |c| c.map(|d| d[l] = (3 - d[l]) % 3, m)));
        }
        if gens.permutations && l + 1 < m {
            moves.push(Box::new(move |c| c.map(|d| d.swap(l, l + 1), m)));
        }
    }
    let mut seen = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(c) = queue.pop_front() {
        for f in &moves {
            let next = f(&c);
            if seen.insert(next) {
                queue.push_back(next);
            }
        }
    }
    let mut out: Vec<ParityCheck> = seen.into_iter().collect();
    out.sort_unstable();
    out
}

pub fn orbit_of_canonical_polynomial(m: usize) -> Result<Vec<ParityCheck>> {
    if m < 4 {
        return Err(Error::UnsupportedM { m, min: 4 });
    }
    Ok(orbit(canonical_polynomial(m)?, m, OrbitGenerators::ALL))
}

/// GF(2) rank of the matrix whose rows are the given checks.
pub fn check_matrix_rank(checks: &[ParityCheck], m: usize) -> usize {
    let n = pow3(m);
    let mut basis = EchelonBasis::new();
    for c in checks {
        basis.insert(&BitRow::from_support(n, c.support()));
    }
    basis.rank()
}

pub fn parity_check_rank(m: usize) -> Result<usize> {
    Ok(check_matrix_rank(&enumerate_weight6_checks(m)?, m))
}

/// Whether every check is a codeword of the dual of `BiD(m,2,2)`.
pub fn all_in_dual(checks: &[ParityCheck], m: usize) -> Result<bool> {
    let dual = BiDSpec::new(m, 2, 2)?.to_abelian().dual();
    for c in checks {
        if !is_member(&dual, &c.indicator(m)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether every check is orthogonal to every generator row of `BiD(m,2,2)`.
pub fn orthogonal_to_generator(checks: &[ParityCheck], m: usize) -> Result<bool> {
    let g = generator_matrix(&BiDSpec::new(m, 2, 2)?.to_abelian());
    let rows = g.bit_rows();
    let n = pow3(m);
    Ok(checks.iter().all(|c| {
        let h = BitRow::from_support(n, c.support());
        rows.iter().all(|r| !r.dot(&h))
    }))
}

/// One check per line, six space-separated ranks, lines in sorted order.
pub fn write_checks<W: Write>(mut out: W, checks: &[ParityCheck]) -> Result<()> {
    let mut sorted = checks.to_vec();
    sorted.sort_unstable();
    for c in sorted {
        let s = c.support();
        writeln!(out, "{} {} {} {} {} {}", s[0], s[1], s[2], s[3], s[4], s[5])?;
    }
    Ok(())
}

/// Parses the format written by [`write_checks`]; blank lines are skipped.
pub fn read_checks<R: BufRead>(input: R, n: usize) -> Result<Vec<ParityCheck>> {
    let mut out = Vec::new();
    for (lineno, line) in input.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let ranks: Vec<usize> = line
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::BadSpec(format!("line {}: {e}", lineno + 1)))?;
        let support: [usize; 6] = ranks.try_into().map_err(|r: Vec<usize>| {
            Error::BadSpec(format!("line {}: expected 6 ranks, got {}", lineno + 1, r.len()))
        })?;
        if let Some(&bad) = support.iter().find(|&&r| r >= n) {
            return Err(Error::BadSpec(format!("line {}: rank {bad} >= {n}", lineno + 1)));
        }
        out.push(ParityCheck::new(support)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cliques_match_published_pair() {
        let c1 = vec![vec![0, 0, 1, 1, 1], vec![1, 2, 0, 1, 2], vec![2, 1, 0, 2, 1]];
        let c2 = vec![vec![0, 0, 2, 2, 2], vec![1, 2, 0, 1, 2], vec![2, 1, 0, 2, 1]];
        let want: BTreeSet<_> = [c1, c2]
            .iter()
            .map(|c| canonical_under_row_perms(c))
            .collect();
        let got: BTreeSet<_> = generating_cliques()
            .unwrap()
            .iter()
            .map(|c| canonical_under_row_perms(c))
            .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn m4_counts_and_membership() {
        let (checks, stats) = enumerate_weight6_checks_with_stats(4).unwrap();
        assert_eq!(checks.len(), 432);
        assert_eq!(stats.base_supports, 4 * 8);
        assert_eq!(stats.translates, 6 * stats.distinct);
        assert!(all_in_dual(&checks, 4).unwrap());
        assert!(orthogonal_to_generator(&checks, 4).unwrap());
    }

    #[test]
    fn canonical_polynomial_in_orbit() {
        let f = canonical_polynomial(4).unwrap();
        let orb = orbit_of_canonical_polynomial(4).unwrap();
        assert!(orb.binary_search(&f).is_ok());
    }

    #[test]
    fn small_m_rejected() {
        assert!(matches!(
            enumerate_weight6_checks(3),
            Err(Error::UnsupportedM { m: 3, min: 4 })
        ));
    }

    #[test]
    fn file_round_trip() {
        let checks = enumerate_weight6_checks(4).unwrap();
        let mut buf = Vec::new();
        write_checks(&mut buf, &checks).unwrap();
        let back = read_checks(&buf[..], 81).unwrap();
        assert_eq!(back, checks);
        assert!(read_checks("1 2 3\n".as_bytes(), 81).is_err());
        assert!(read_checks("1 2 3 4 5 99\n".as_bytes(), 81).is_err());
    }
}
