//! Candidate exponent matrices and the low-weight non-existence checks.

use super::graph::{max_clique_size, ConstraintGraph};
use super::sset::{lin_comb, SSet};
use crate::algebra::index::{digits_of, pow3};
use crate::codes::{generator_matrix, BiDSpec};
use crate::error::{Error, Result};
use crate::gf2::BitRow;

/// A `(w-1) × m` matrix over `Z_3` whose rows are the non-zero exponents of a
/// weight-`w` dual codeword containing `X^0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CandidateMatrix {
    w: usize,
    m: usize,
    /// Column ranks in `Z_3^(w-1)`, digit `i` being row `i`.
    columns: Vec<usize>,
}

impl CandidateMatrix {
    pub fn w(&self) -> usize {
        self.w
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn columns(&self) -> &[usize] {
        &self.columns
    }

    pub fn entry(&self, row: usize, col: usize) -> u8 {
        digits_of(self.columns[col], self.w - 1)[row]
    }

    /// Row `i` as a vector in `Z_3^m`.
    pub fn row(&self, i: usize) -> Vec<u8> {
        (0..self.m).map(|l| self.entry(i, l)).collect()
    }

    pub fn rows(&self) -> Vec<Vec<u8>> {
        (0..self.w - 1).map(|i| self.row(i)).collect()
    }

    /// Ranks of the codeword support: `0` followed by the rows.
    pub fn support(&self) -> Vec<usize> {
        let mut s: Vec<usize> = std::iter::once(0)
            .chain(self.rows().iter().map(|r| crate::algebra::index::rank_of(r)))
            .collect();
        s.sort_unstable();
        s
    }
}

fn pair_table(s: &SSet) -> Vec<Vec<bool>> {
    let len = s.dim();
    let n = pow3(len);
    (0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    [(1u8, 1u8), (1, 2), (2, 1), (2, 2)]
                        .iter()
                        .all(|&(a, b)| s.contains_rank(lin_comb(a, x, b, y, len)))
                })
                .collect()
        })
        .collect()
}

fn rows_ok(columns: &[usize], len: usize) -> bool {
    let digits: Vec<Vec<u8>> = columns.iter().map(|&c| digits_of(c, len)).collect();
    let rows: Vec<Vec<u8>> = (0..len)
        .map(|i| digits.iter().map(|d| d[i]).collect())
        .collect();
    rows.iter().all(|r| r.iter().any(|&x| x != 0)) && rows.windows(2).all(|p| p[0] < p[1])
}

/// Every valid candidate matrix for weight `w` and `m` columns, by
/// backtracking over columns with pairwise pruning.
pub fn candidate_matrices(w: usize, m: usize) -> Result<Vec<CandidateMatrix>> {
    if !(2..=6).contains(&w) {
        return Err(Error::BadSpec(format!("weight {w} outside 2..=6")));
    }
    let s = SSet::build(w)?;
    let len = s.dim();
    let n = pow3(len);
    let ok = pair_table(&s);
    let mut out = Vec::new();
    let mut cols = Vec::with_capacity(m);
    fn extend(
        cols: &mut Vec<usize>,
        m: usize,
        n: usize,
        len: usize,
        w: usize,
        ok: &[Vec<bool>],
        out: &mut Vec<CandidateMatrix>,
    ) {
        if cols.len() == m {
            if rows_ok(cols, len) {
                out.push(CandidateMatrix {
                    w,
                    m,
                    columns: cols.clone(),
                });
            }
            return;
        }
        for c in 0..n {
            if cols.iter().all(|&p| ok[p][c]) {
                cols.push(c);
                extend(cols, m, n, len, w, ok, out);
                cols.pop();
            }
        }
    }
    extend(&mut cols, m, n, len, w, &ok, &mut out);
    Ok(out)
}

/// True iff no weight-`w` codeword of the dual of `BiD(m,2,2)` exists.
///
/// Weights up to 4 are settled by exhaustive column search. For weight 5 the
/// zero vector is not in `S`, so no column can repeat and the columns form an
/// `m`-clique; the clique number 3 rules out every `m ≥ 4`.
pub fn verify_no_low_weight(w: usize, m: usize) -> Result<bool> {
    match w {
        2..=4 => Ok(candidate_matrices(w, m)?.is_empty()),
        5 if m >= 4 => {
            let graph = ConstraintGraph::build(&SSet::build(5)?);
            let repeat = (0..graph.vertex_count()).any(|v| graph.is_repeatable(v));
            let clique = max_clique_size(&graph, |_| true, |_| true).size;
            Ok(!repeat && clique < m)
        }
        5 => Ok(candidate_matrices(5, m)?.is_empty()),
        _ => Err(Error::BadSpec(format!("weight {w} outside 2..=5"))),
    }
}

/// Minimum distance and minimum-weight supports of the dual of `BiD(m,2,2)`,
/// by listing every dual codeword. Only for `m ≤ 3`, where the dual has at
/// most `2^15` words.
pub fn exhaustive_dual_minimum(m: usize) -> Result<(usize, Vec<Vec<usize>>)> {
    if !(2..=3).contains(&m) {
        return Err(Error::UnsupportedM { m, min: 2 });
    }
    let dual = BiDSpec::new(m, 2, 2)?.to_abelian().dual();
    let rows = generator_matrix(&dual).bit_rows();
    let n = pow3(m);
    let mut word = BitRow::zeros(n);
    let mut best = usize::MAX;
    let mut words = Vec::new();
    // Gray-code walk over all messages
    for step in 1u64..(1u64 << rows.len()) {
        word.xor_assign(&rows[step.trailing_zeros() as usize]);
        let wt = word.count_ones();
        if wt < best {
            best = wt;
            words.clear();
        }
        if wt == best {
            words.push((0..n).filter(|&i| word.get(i)).collect());
        }
    }
    words.sort();
    Ok((best, words))
}
