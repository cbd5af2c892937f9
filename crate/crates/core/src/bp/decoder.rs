use super::graph::FactorGraph;
use crate::algebra::BinaryWord;
use crate::decode::{maxlogmap_slice, FirstOrderKind, LlrVector};
use crate::error::{Error, Result};
use crate::projection::ProjectionMap;

#[derive(Clone, Debug, PartialEq)]
pub struct BpConfig {
    /// Weight on degree-6 check messages.
    pub beta0: f64,
    /// Weight on order-1 projection node messages.
    pub beta1: f64,
    /// Weight on order-2 projection node messages.
    pub beta2: f64,
    pub max_iterations: usize,
    /// Magnitude bound on every message.
    pub llr_clip: f64,
    /// Run the projection nodes; with this off only the degree-6 phases run.
    pub enable_gcns: bool,
}

impl Default for BpConfig {
    fn default() -> Self {
        BpConfig {
            beta0: 0.075,
            beta1: 0.0375,
            beta2: 0.0075,
            max_iterations: 50,
            llr_clip: 25.0,
            enable_gcns: true,
        }
    }
}

impl BpConfig {
    pub fn validate(&self) -> Result<()> {
        let finite = [self.beta0, self.beta1, self.beta2, self.llr_clip]
            .iter()
            .all(|x| x.is_finite() && *x >= 0.0);
        if !finite || self.llr_clip == 0.0 || self.max_iterations == 0 {
            return Err(Error::BadSpec(format!("invalid BP configuration {self:?}")));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BpOutcome {
    pub hard_decision: BinaryWord,
    pub iterations_used: usize,
    /// The decision satisfied every degree-6 check before the iteration cap.
    pub converged: bool,
    pub in_supercode: bool,
    /// In the supercode and of even weight, i.e. in `BiD(m,2,2)` itself.
    pub in_code: bool,
}

/// `2 atanh(tanh(a/2) tanh(b/2))` in a form that stays finite.
pub fn boxplus(a: f64, b: f64) -> f64 {
    let s = a.signum() * b.signum() * a.abs().min(b.abs());
    s + (-(a + b).abs()).exp().ln_1p() - (-(a - b).abs()).exp().ln_1p()
}

struct GcnMessages {
    to_u: Vec<f64>,
    to_v: Vec<f64>,
}

/// Per-frame message state over a shared graph.
pub struct BpDecoder<'g> {
    graph: &'g FactorGraph,
    config: BpConfig,
    channel: Vec<f64>,
    posterior: Vec<f64>,
    check_msgs: Vec<[f64; 6]>,
    gcn1_msgs: Vec<GcnMessages>,
    gcn2_msgs: Vec<GcnMessages>,
    sums: [Vec<f64>; 3],
}

impl<'g> BpDecoder<'g> {
    pub fn new(graph: &'g FactorGraph, config: BpConfig) -> Result<Self> {
        config.validate()?;
        let n = graph.n();
        let gcn = |maps: &[ProjectionMap]| {
            maps.iter()
                .map(|p| GcnMessages {
                    to_u: vec![0.0; p.u_indices().len()],
                    to_v: vec![0.0; p.v_indices().len()],
                })
                .collect()
        };
        Ok(BpDecoder {
            graph,
            config,
            channel: vec![0.0; n],
            posterior: vec![0.0; n],
            check_msgs: vec![[0.0; 6]; graph.checks().len()],
            gcn1_msgs: gcn(graph.gcn1()),
            gcn2_msgs: gcn(graph.gcn2()),
            sums: [vec![0.0; n], vec![0.0; n], vec![0.0; n]],
        })
    }

    pub fn config(&self) -> &BpConfig {
        &self.config
    }

    /// Current posterior LLRs.
    pub fn posterior(&self) -> &[f64] {
        &self.posterior
    }

    fn reset(&mut self, llr: &LlrVector) {
        let clip = self.config.llr_clip;
        for (c, &l) in self.channel.iter_mut().zip(llr.values()) {
            *c = l.clamp(-clip, clip);
        }
        self.posterior.copy_from_slice(&self.channel);
        self.check_msgs.iter_mut().for_each(|m| *m = [0.0; 6]);
        for g in self.gcn1_msgs.iter_mut().chain(self.gcn2_msgs.iter_mut()) {
            g.to_u.iter_mut().for_each(|x| *x = 0.0);
            g.to_v.iter_mut().for_each(|x| *x = 0.0);
        }
        for s in self.sums.iter_mut() {
            s.iter_mut().for_each(|x| *x = 0.0);
        }
    }

    fn refresh_posterior(&mut self) {
        let b = [self.config.beta0, self.config.beta1, self.config.beta2];
        for (v, p) in self.posterior.iter_mut().enumerate() {
            *p = self.channel[v] + b[0] * self.sums[0][v] + b[1] * self.sums[1][v] + b[2] * self.sums[2][v];
        }
    }

    fn check_phase(&mut self) {
        let clip = self.config.llr_clip;
        let beta = self.config.beta0;
        let sums = &mut self.sums[0];
        sums.iter_mut().for_each(|x| *x = 0.0);
        for (c, msgs) in self.graph.checks().iter().zip(self.check_msgs.iter_mut()) {
            let mut t = [0.0f64; 6];
            for k in 0..6 {
                let x = (self.posterior[c[k] as usize] - beta * msgs[k]).clamp(-clip, clip);
                t[k] = (0.5 * x).tanh();
            }
            let mut prefix = [1.0f64; 6];
            for k in 1..6 {
                prefix[k] = prefix[k - 1] * t[k - 1];
            }
            let mut suffix = 1.0;
            for k in (0..6).rev() {
                let prod = prefix[k] * suffix;
                suffix *= t[k];
                let out = (2.0 * prod.atanh()).clamp(-clip, clip);
                msgs[k] = out;
                sums[c[k] as usize] += out;
            }
        }
        self.refresh_posterior();
    }

    fn gcn_phase(&mut self, order: usize) {
        let clip = self.config.llr_clip;
        let (maps, msgs, beta, kind, slot) = if order == 1 {
            (self.graph.gcn1(), &mut self.gcn1_msgs, self.config.beta1, FirstOrderKind::Bid11, 1)
        } else {
            (self.graph.gcn2(), &mut self.gcn2_msgs, self.config.beta2, FirstOrderKind::Bid01, 2)
        };
        let sums = &mut self.sums[slot];
        sums.iter_mut().for_each(|x| *x = 0.0);
        let len = maps.first().map_or(0, |p| p.u_indices().len());
        let mut xa = vec![0.0; len];
        let mut xb = vec![0.0; len];
        let mut hidden = vec![0.0; len];
        for (map, g) in maps.iter().zip(msgs.iter_mut()) {
            let (ui, vi) = (map.u_indices(), map.v_indices());
            for i in 0..len {
                xa[i] = (self.posterior[ui[i]] - beta * g.to_u[i]).clamp(-clip, clip);
                xb[i] = (self.posterior[vi[i]] - beta * g.to_v[i]).clamp(-clip, clip);
                hidden[i] = boxplus(xa[i], xb[i]);
            }
            let soft = maxlogmap_slice(kind, &hidden);
            for i in 0..len {
                let e = (soft[i] - hidden[i]).clamp(-clip, clip);
                g.to_u[i] = boxplus(e, xb[i]).clamp(-clip, clip);
                g.to_v[i] = boxplus(e, xa[i]).clamp(-clip, clip);
                sums[ui[i]] += g.to_u[i];
                sums[vi[i]] += g.to_v[i];
            }
        }
        self.refresh_posterior();
    }

    fn decision(&self) -> Vec<u8> {
        self.posterior.iter().map(|&l| (l < 0.0) as u8).collect()
    }

    pub fn decode(&mut self, llr: &LlrVector) -> Result<BpOutcome> {
        if llr.len() != self.graph.n() {
            return Err(Error::LengthMismatch {
                expected: self.graph.n(),
                actual: llr.len(),
            });
        }
        self.reset(llr);
        let mut iterations = 0;
        let mut converged = false;
        while iterations < self.config.max_iterations {
            iterations += 1;
            if self.config.enable_gcns {
                self.gcn_phase(1);
            }
            self.check_phase();
            if self.config.enable_gcns {
                self.gcn_phase(2);
            }
            self.check_phase();
            if self.graph.syndrome_ok_bits(&self.decision()) {
                converged = true;
                break;
            }
        }
        let bits = self.decision();
        let in_supercode = self.graph.syndrome_ok_bits(&bits);
        let even = bits.iter().fold(0u8, |a, &b| a ^ b) == 0;
        Ok(BpOutcome {
            hard_decision: BinaryWord::new(self.graph.m(), bits)?,
            iterations_used: iterations,
            converged,
            in_supercode,
            in_code: in_supercode && even,
        })
    }
}

pub fn bp_decode(graph: &FactorGraph, llr: &LlrVector, config: &BpConfig) -> Result<BpOutcome> {
    BpDecoder::new(graph, config.clone())?.decode(llr)
}
