use std::collections::HashSet;

use bid_core::algebra::index::{binomial, digits_of, pow3, rank_of};
use bid_core::algebra::BinaryWord;
use bid_core::bp::*;
use bid_core::codes::{encode, BiDSpec};
use bid_core::decode::LlrVector;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn codeword(rng: &mut ChaCha8Rng, m: usize) -> BinaryWord {
    let spec = BiDSpec::new(m, 2, 2).unwrap().to_abelian();
    let msg: Vec<u8> = (0..spec.dimension()).map(|_| rng.random_range(0..2)).collect();
    encode(&spec, &msg).unwrap()
}

fn noisy_llr(rng: &mut ChaCha8Rng, word: &BinaryWord, sigma: f64) -> LlrVector {
    let v = word
        .bits()
        .iter()
        .map(|&b| {
            let x = if b == 0 { 1.0 } else { -1.0 };
            let z = (0..12).map(|_| rng.random::<f64>()).sum::<f64>() - 6.0;
            2.0 * (x + sigma * z) / (sigma * sigma)
        })
        .collect();
    LlrVector::new(word.m(), v).unwrap()
}

#[test]
fn node_counts() {
    for m in [4, 5, 6] {
        let g = build_factor_graph(m).unwrap();
        assert_eq!(g.checks().len(), m * (1 << (m - 2)) * pow3(m - 1));
        assert_eq!(g.gcn1().len(), 3 * m);
        assert_eq!(g.gcn2().len(), 18 * binomial(m, 2));
        assert!((0..g.n()).all(|v| !g.var_checks(v).is_empty()));
    }
    assert!(matches!(
        build_factor_graph(3),
        Err(bid_core::Error::UnsupportedM { m: 3, min: 4 })
    ));
}

#[test]
fn check_set_is_translation_closed() {
    let m = 4;
    let g = build_factor_graph(m).unwrap();
    let set: HashSet<[u32; 6]> = g.checks().iter().copied().collect();
    for k in 0..pow3(m) {
        let kd = digits_of(k, m);
        for c in g.checks() {
            let mut t = c.map(|r| {
                let d: Vec<u8> = digits_of(r as usize, m)
                    .iter()
                    .zip(&kd)
                    .map(|(a, b)| (a + b) % 3)
                    .collect();
                rank_of(&d) as u32
            });
            t.sort_unstable();
            assert!(set.contains(&t));
        }
    }
}

#[test]
fn syndrome_examples() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let g = build_factor_graph(4).unwrap();
    for _ in 0..50 {
        assert!(syndrome_ok(&g, &codeword(&mut rng, 4)));
    }
    assert!(syndrome_ok(&g, &BinaryWord::ones(4)));
    let single = BinaryWord::from_support(4, &[17]).unwrap();
    assert!(!syndrome_ok(&g, &single));
}

#[test]
fn noiseless_frame_converges_at_once() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for m in [4, 5] {
        let g = build_factor_graph(m).unwrap();
        let c = codeword(&mut rng, m);
        let llr = LlrVector::new(m, c.bits().iter().map(|&b| if b == 0 { 6.0 } else { -6.0 }).collect()).unwrap();
        let out = bp_decode(&g, &llr, &BpConfig::default()).unwrap();
        assert!(out.converged && out.in_code);
        assert_eq!(out.iterations_used, 1);
        assert_eq!(out.hard_decision, c);
    }
}

#[test]
fn zero_input_is_deterministic() {
    let g = build_factor_graph(4).unwrap();
    let llr = LlrVector::new(4, vec![0.0; 81]).unwrap();
    let a = bp_decode(&g, &llr, &BpConfig::default()).unwrap();
    let b = bp_decode(&g, &llr, &BpConfig::default()).unwrap();
    assert_eq!(a, b);
    assert!(!a.converged || a.in_supercode);
}

#[test]
fn no_weights_means_no_updates() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let g = build_factor_graph(4).unwrap();
    let config = BpConfig {
        beta0: 0.0,
        beta1: 0.0,
        beta2: 0.0,
        enable_gcns: false,
        max_iterations: 7,
        ..BpConfig::default()
    };
    let c = codeword(&mut rng, 4);
    let llr = noisy_llr(&mut rng, &c, 1.2);
    let mut dec = BpDecoder::new(&g, config).unwrap();
    dec.decode(&llr).unwrap();
    let clip = dec.config().llr_clip;
    for (p, l) in dec.posterior().iter().zip(llr.values()) {
        assert_eq!(*p, l.clamp(-clip, clip));
    }
}

#[test]
fn outcome_flags_are_consistent_and_finite() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let g = build_factor_graph(4).unwrap();
    let config = BpConfig {
        max_iterations: 5,
        ..BpConfig::default()
    };
    let mut dec = BpDecoder::new(&g, config).unwrap();
    for frame in 0..10_000 {
        let c = codeword(&mut rng, 4);
        let sigma = if frame % 2 == 0 { 1.0 } else { 3.0 };
        let out = dec.decode(&noisy_llr(&mut rng, &c, sigma)).unwrap();
        assert!(!out.converged || out.in_supercode);
        assert!(!out.in_code || out.in_supercode);
        assert_eq!(out.in_supercode, syndrome_ok(&g, &out.hard_decision));
        assert!(dec.posterior().iter().all(|p| p.is_finite()));
        // channel term plus every weighted message, each at most llr_clip
        let cfg = dec.config();
        let bound = cfg.llr_clip * (1.0 + 80.0 * cfg.beta0 + 8.0 * cfg.beta1 + 24.0 * cfg.beta2);
        assert!(dec.posterior().iter().all(|p| p.abs() <= bound));
    }
}

#[test]
fn decisions_follow_translations() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let m = 4;
    let g = build_factor_graph(m).unwrap();
    let mut matched = 0;
    for _ in 0..30 {
        let c = codeword(&mut rng, m);
        let llr = noisy_llr(&mut rng, &c, 0.9);
        let k: Vec<u8> = (0..m).map(|_| rng.random_range(0..3)).collect();
        let shift = |r: usize| {
            let d: Vec<u8> = digits_of(r, m).iter().zip(&k).map(|(a, b)| (a + b) % 3).collect();
            rank_of(&d)
        };
        let mut moved = vec![0.0; pow3(m)];
        for (r, &l) in llr.values().iter().enumerate() {
            moved[shift(r)] = l;
        }
        let a = bp_decode(&g, &llr, &BpConfig::default()).unwrap();
        let b = bp_decode(&g, &LlrVector::new(m, moved).unwrap(), &BpConfig::default()).unwrap();
        if a.iterations_used == b.iterations_used {
            matched += 1;
            for r in 0..pow3(m) {
                assert_eq!(a.hard_decision.get(r), b.hard_decision.get(shift(r)));
            }
        }
    }
    assert!(matched > 20);
}

#[test]
fn boxplus_matches_tanh_rule() {
    for (a, b) in [(1.0, 2.0), (-0.3, 4.0), (10.0, -10.0), (0.0, 5.0)] {
        let exact = 2.0 * ((0.5f64 * a).tanh() * (0.5f64 * b).tanh()).atanh();
        assert!((boxplus(a, b) - exact).abs() < 1e-9, "{a} {b}");
    }
}
