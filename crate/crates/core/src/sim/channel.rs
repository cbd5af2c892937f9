use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Name of the noise source, recorded alongside results.
pub const GENERATOR: &str = "chacha8+box-muller";

/// BPSK over AWGN at a given Eb/N0 and code rate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChannelModel {
    pub ebno_db: f64,
    pub rate: f64,
}

impl ChannelModel {
    pub fn new(ebno_db: f64, rate: f64) -> Result<Self> {
        if !ebno_db.is_finite() || !(rate > 0.0 && rate <= 1.0) {
            return Err(Error::BadSpec(format!(
                "invalid channel: Eb/N0 {ebno_db} dB, rate {rate}"
            )));
        }
        Ok(ChannelModel { ebno_db, rate })
    }

    /// `σ² = 1 / (2 R 10^(Eb/N0 / 10))`.
    pub fn sigma2(&self) -> f64 {
        1.0 / (2.0 * self.rate * 10f64.powf(self.ebno_db / 10.0))
    }
}

/// The stream for one frame: the seed packs the master seed, the bits of
/// the Eb/N0 value and the frame index.
pub fn frame_rng(master_seed: u64, ebno_db: f64, frame: u64) -> ChaCha8Rng {
    let mut seed = [0u8; 32];
    seed[..8].copy_from_slice(&master_seed.to_le_bytes());
    seed[8..16].copy_from_slice(&ebno_db.to_bits().to_le_bytes());
    seed[16..24].copy_from_slice(&frame.to_le_bytes());
    ChaCha8Rng::from_seed(seed)
}

/// `count` standard normals by Box-Muller, both outputs of each pair used.
pub(crate) fn gaussians(rng: &mut ChaCha8Rng, count: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(count + 1);
    while out.len() < count {
        // 1 - u lies in (0, 1], keeping the log finite
        let u1 = 1.0 - rng.random::<f64>();
        let u2 = rng.random::<f64>();
        let r = (-2.0 * u1.ln()).sqrt();
        let theta = std::f64::consts::TAU * u2;
        out.push(r * theta.cos());
        out.push(r * theta.sin());
    }
    out.truncate(count);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_for_second_order_81() {
        let ch = ChannelModel::new(0.0, 24.0 / 81.0).unwrap();
        assert!((ch.sigma2() - 81.0 / 48.0).abs() < 1e-12);
        assert!(ChannelModel::new(1.0, 0.0).is_err());
    }

    #[test]
    fn gaussian_moments() {
        let mut rng = frame_rng(7, 1.0, 0);
        let z = gaussians(&mut rng, 200_000);
        let mean = z.iter().sum::<f64>() / z.len() as f64;
        let var = z.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / z.len() as f64;
        assert!(mean.abs() < 0.01, "mean {mean}");
        assert!((var - 1.0).abs() < 0.01, "variance {var}");
    }

    #[test]
    fn streams_are_keyed() {
        let a: u64 = frame_rng(1, 2.0, 3).random();
        let b: u64 = frame_rng(1, 2.0, 3).random();
        let c: u64 = frame_rng(1, 2.0, 4).random();
        let d: u64 = frame_rng(1, 2.25, 3).random();
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_ne!(a, d);
    }
}
