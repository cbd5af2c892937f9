use crate::algebra::index::pow3;
use crate::algebra::BinaryWord;
use crate::error::{Error, Result};
use crate::minweight::{enumerate_weight6_checks, ParityCheck};
use crate::projection::{order1_specs, order2_specs, ProjectionMap};

/// Variable nodes, degree-6 checks, and the two families of projection
/// (generalized) check nodes. Read-only once built.
#[derive(Clone, Debug)]
pub struct FactorGraph {
    m: usize,
    checks: Vec<[u32; 6]>,
    var_checks: Vec<Vec<(u32, u8)>>,
    gcn1: Vec<ProjectionMap>,
    gcn2: Vec<ProjectionMap>,
}

impl FactorGraph {
    /// Uses the given checks instead of enumerating them, e.g. from a check file.
    pub fn from_checks(m: usize, checks: &[ParityCheck]) -> Result<Self> {
        if m < 4 {
            return Err(Error::UnsupportedM { m, min: 4 });
        }
        let n = pow3(m);
        let mut table = Vec::with_capacity(checks.len());
        let mut var_checks = vec![Vec::new(); n];
        for (j, c) in checks.iter().enumerate() {
            let s = c.support();
            if let Some(&bad) = s.iter().find(|&&r| r >= n) {
                return Err(Error::BadSpec(format!("check position {bad} >= {n}")));
            }
            table.push(s.map(|r| r as u32));
            for (slot, &v) in s.iter().enumerate() {
                var_checks[v].push((j as u32, slot as u8));
            }
        }
        let gcn1 = order1_specs(m)
            .iter()
            .map(|s| ProjectionMap::new(m, s))
            .collect::<Result<_>>()?;
        let gcn2 = order2_specs(m)
            .iter()
            .map(|s| ProjectionMap::new(m, s))
            .collect::<Result<_>>()?;
        Ok(FactorGraph {
            m,
            checks: table,
            var_checks,
            gcn1,
            gcn2,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.var_checks.len()
    }

    pub fn checks(&self) -> &[[u32; 6]] {
        &self.checks
    }

    /// `(check index, slot within the check)` for every check on variable `v`.
    pub fn var_checks(&self, v: usize) -> &[(u32, u8)] {
        &self.var_checks[v]
    }

    pub fn gcn1(&self) -> &[ProjectionMap] {
        &self.gcn1
    }

    pub fn gcn2(&self) -> &[ProjectionMap] {
        &self.gcn2
    }

    /// Every check sums to zero over `word`.
    pub fn syndrome_ok(&self, word: &BinaryWord) -> bool {
        word.len() == self.n() && self.syndrome_ok_bits(word.bits())
    }

    pub(crate) fn syndrome_ok_bits(&self, bits: &[u8]) -> bool {
        self.checks
            .iter()
            .all(|c| c.iter().fold(0u8, |acc, &v| acc ^ bits[v as usize]) == 0)
    }
}

/// All weight-6 checks plus the `3m` order-1 and `18·C(m,2)` order-2
/// projection nodes.
pub fn build_factor_graph(m: usize) -> Result<FactorGraph> {
    if m < 4 {
        return Err(Error::UnsupportedM { m, min: 4 });
    }
    FactorGraph::from_checks(m, &enumerate_weight6_checks(m)?)
}

pub fn syndrome_ok(graph: &FactorGraph, word: &BinaryWord) -> bool {
    graph.syndrome_ok(word)
}
