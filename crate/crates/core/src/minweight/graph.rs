//! The column-compatibility graph and an exact clique search over it.

use super::sset::{lin_comb, SSet};
use crate::algebra::index::pow3;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    fn empty(n: usize) -> Self {
        VertexSet {
            words: vec![0; n.div_ceil(64)],
        }
    }

    fn insert(&mut self, v: usize) {
        self.words[v / 64] |= 1 << (v % 64);
    }

    fn remove(&mut self, v: usize) {
        self.words[v / 64] &= !(1 << (v % 64));
    }

    pub(crate) fn contains(&self, v: usize) -> bool {
        (self.words[v / 64] >> (v % 64)) & 1 == 1
    }

    fn and(&self, o: &VertexSet) -> VertexSet {
        VertexSet {
            words: self.words.iter().zip(&o.words).map(|(a, b)| a & b).collect(),
        }
    }

    fn and_not(&self, o: &VertexSet) -> VertexSet {
        VertexSet {
            words: self.words.iter().zip(&o.words).map(|(a, b)| a & !b).collect(),
        }
    }

    fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + t)
                }
            })
        })
    }
}

/// Simple graph on `Z_3^(w-1)` with `{c, c'}` an edge iff `a·c + a'·c' ∈ S`
/// for all `a, a' ∈ {1, 2}`.
#[derive(Clone, Debug)]
pub struct ConstraintGraph {
    w: usize,
    adjacency: Vec<VertexSet>,
    repeatable: Vec<bool>,
}

impl ConstraintGraph {
    pub fn build(s: &SSet) -> Self {
        let len = s.dim();
        let n = pow3(len);
        let compat = |x: usize, y: usize| {
            [(1u8, 1u8), (1, 2), (2, 1), (2, 2)]
                .iter()
                .all(|&(a, b)| s.contains_rank(lin_comb(a, x, b, y, len)))
        };
        let mut adjacency = vec![VertexSet::empty(n); n];
        for x in 0..n {
            for y in (x + 1)..n {
                if compat(x, y) {
                    adjacency[x].insert(y);
                    adjacency[y].insert(x);
                }
            }
        }
        // two equal columns c, c need c, 2c and 0 in S
        let repeatable = (0..n).map(|x| compat(x, x)).collect();
        ConstraintGraph {
            w: s.w(),
            adjacency,
            repeatable,
        }
    }

    pub fn w(&self) -> usize {
        self.w
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|a| a.count()).sum::<usize>() / 2
    }

    pub fn is_edge(&self, x: usize, y: usize) -> bool {
        self.adjacency[x].contains(y)
    }

    /// A vertex that may appear as two or more equal columns.
    pub fn is_repeatable(&self, v: usize) -> bool {
        self.repeatable[v]
    }

    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        self.adjacency[v].iter().collect()
    }

    /// Every maximal clique of the subgraph induced by `keep`, each sorted ascending.
    pub fn maximal_cliques(&self, keep: impl Fn(usize) -> bool) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut p = VertexSet::empty(n);
        for v in (0..n).filter(|&v| keep(v)) {
            p.insert(v);
        }
        let adj: Vec<VertexSet> = self.adjacency.iter().map(|a| a.and(&p)).collect();
        let mut out = Vec::new();
        let mut r = Vec::new();
        bron_kerbosch(&adj, &mut r, p, VertexSet::empty(n), &mut out);
        for c in out.iter_mut() {
            c.sort_unstable();
        }
        out.sort();
        out
    }
}

fn bron_kerbosch(
    adj: &[VertexSet],
    r: &mut Vec<usize>,
    p: VertexSet,
    mut x: VertexSet,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r.clone());
        }
        return;
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by_key(|&u| adj[u].and(&p).count())
        .expect("p is non-empty");
    let mut p = p;
    let candidates: Vec<usize> = p.and_not(&adj[pivot]).iter().collect();
    for v in candidates {
        r.push(v);
        bron_kerbosch(adj, r, p.and(&adj[v]), x.and(&adj[v]), out);
        r.pop();
        p.remove(v);
        x.insert(v);
    }
}

/// Result of a maximum-clique query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxCliques {
    pub size: usize,
    pub cliques: Vec<Vec<usize>>,
}

/// Largest cliques among the vertices passing `keep` whose vertex sets pass
/// `accept`. `accept` must be upward closed (if a clique passes, so does every
/// clique containing it), which lets the search look at maximal cliques only.
pub fn max_clique_size(
    graph: &ConstraintGraph,
    keep: impl Fn(usize) -> bool,
    accept: impl Fn(&[usize]) -> bool,
) -> MaxCliques {
    let maximal: Vec<Vec<usize>> = graph
        .maximal_cliques(keep)
        .into_iter()
        .filter(|c| accept(c))
        .collect();
    let size = maximal.iter().map(|c| c.len()).max().unwrap_or(0);
    MaxCliques {
        size,
        cliques: maximal.into_iter().filter(|c| c.len() == size).collect(),
    }
}
