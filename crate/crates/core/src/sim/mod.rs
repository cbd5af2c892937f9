//! Monte-Carlo block and bit error rates over the binary-input AWGN channel.
//!
//! Frame `t` at a given Eb/N0 draws its message and noise from a ChaCha8
//! stream keyed by `(master_seed, ebno_db bits, t)`, so results do not depend
//! on how frames are spread across threads. Frames run in batches; the
//! batch results are scanned in order and counting stops at the frame that
//! brings in the last required block error.

mod channel;
mod output;

pub use channel::{frame_rng, ChannelModel, GENERATOR};
pub use output::{write_csv, write_json_records, wilson_interval, CsvRecord, CSV_HEADER};

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bp::{build_factor_graph, BpConfig, BpDecoder, FactorGraph};
use crate::codes::{BiDSpec, GeneratorMatrix};
use crate::decode::{fast_ml_01, fast_ml_11, BruteForceMl, LlrVector};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum DecoderKind {
    #[serde(rename = "fast-ml-11")]
    FastMl11,
    #[serde(rename = "fast-ml-01")]
    FastMl01,
    #[serde(rename = "brute-ml")]
    BruteMl,
    #[serde(rename = "bp")]
    Bp,
}

impl DecoderKind {
    pub fn name(&self) -> &'static str {
        match self {
            DecoderKind::FastMl11 => "fast-ml-11",
            DecoderKind::FastMl01 => "fast-ml-01",
            DecoderKind::BruteMl => "brute-ml",
            DecoderKind::Bp => "bp",
        }
    }

    /// Whether this decoder handles `code`.
    pub fn check(&self, code: &BiDSpec) -> Result<()> {
        let ok = match self {
            DecoderKind::FastMl11 => code.r1 == 1 && code.r2 == 1,
            DecoderKind::FastMl01 => code.r1 == 0 && code.r2 == 1,
            DecoderKind::BruteMl => code.dimension() <= crate::decode::MAX_BRUTE_DIMENSION,
            DecoderKind::Bp => code.r1 == 2 && code.r2 == 2 && code.m >= 4,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::IncompatibleDecoder {
                decoder: self.name().into(),
                code: code.to_string(),
            })
        }
    }
}

impl fmt::Display for DecoderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DecoderKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fast-ml-11" => Ok(DecoderKind::FastMl11),
            "fast-ml-01" => Ok(DecoderKind::FastMl01),
            "brute-ml" => Ok(DecoderKind::BruteMl),
            "bp" => Ok(DecoderKind::Bp),
            _ => Err(Error::BadSpec(format!(
                "unknown decoder {s:?} (fast-ml-11, fast-ml-01, brute-ml, bp)"
            ))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SimConfig {
    pub code: BiDSpec,
    pub decoder: DecoderKind,
    pub snr_grid: Vec<f64>,
    pub max_frames: u64,
    pub min_block_errors: u64,
    pub master_seed: u64,
    pub bp: BpConfig,
    /// Frames decoded per parallel batch.
    pub batch_size: usize,
}

impl SimConfig {
    pub fn new(code: BiDSpec, decoder: DecoderKind) -> Self {
        SimConfig {
            code,
            decoder,
            snr_grid: Vec::new(),
            max_frames: 100_000,
            min_block_errors: 100,
            master_seed: 0,
            bp: BpConfig::default(),
            batch_size: 256,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_frames == 0 || self.min_block_errors == 0 || self.batch_size == 0 {
            return Err(Error::BadSpec(
                "max_frames, min_block_errors and batch_size must be positive".into(),
            ));
        }
        self.decoder.check(&self.code)?;
        if self.decoder == DecoderKind::Bp {
            self.bp.validate()?;
        }
        Ok(())
    }
}

/// Counts at one Eb/N0.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PointResult {
    pub ebno_db: f64,
    pub frames: u64,
    pub block_errors: u64,
    pub bit_errors: u64,
    pub bler: f64,
    /// Codeword bit error rate.
    pub ber: f64,
    /// Mean BP iterations per frame; `None` for other decoders.
    pub avg_iterations: Option<f64>,
    pub wall_time: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SimResult {
    pub code: String,
    pub n: usize,
    pub k: usize,
    pub rate: f64,
    pub decoder: DecoderKind,
    pub seed: u64,
    pub generator: &'static str,
    pub points: Vec<PointResult>,
}

impl SimResult {
    /// Pairs of adjacent grid points where the BLER rises with Eb/N0 by more
    /// than the 95% Wilson intervals allow. A flag, not a failure.
    pub fn monotonicity_violations(&self) -> Vec<(f64, f64)> {
        self.points
            .windows(2)
            .filter(|w| {
                let (_, hi_prev) = wilson_interval(w[0].block_errors, w[0].frames, 1.96);
                let (lo_next, _) = wilson_interval(w[1].block_errors, w[1].frames, 1.96);
                lo_next > hi_prev
            })
            .map(|w| (w[0].ebno_db, w[1].ebno_db))
            .collect()
    }
}

enum Prepared {
    FastMl11,
    FastMl01,
    Brute(Box<BruteForceMl>),
    Bp(Box<FactorGraph>),
}

struct FrameOutcome {
    block_error: bool,
    bit_errors: u64,
    iterations: Option<usize>,
}

/// A configured simulator; the decoder tables are built once.
pub struct Simulator {
    config: SimConfig,
    generator: GeneratorMatrix,
    prepared: Prepared,
}

impl Simulator {
    pub fn new(config: SimConfig) -> Result<Self> {
        config.validate()?;
        let spec = config.code.to_abelian();
        let prepared = match config.decoder {
            DecoderKind::FastMl11 => Prepared::FastMl11,
            DecoderKind::FastMl01 => Prepared::FastMl01,
            DecoderKind::BruteMl => Prepared::Brute(Box::new(BruteForceMl::new(&spec)?)),
            DecoderKind::Bp => Prepared::Bp(Box::new(build_factor_graph(config.code.m)?)),
        };
        Ok(Simulator {
            generator: GeneratorMatrix::new(&spec),
            config,
            prepared,
        })
    }

    pub fn config(&self) -> &SimConfig {
        &self.config
    }

    fn frame(
        &self,
        channel: &ChannelModel,
        index: u64,
        bp: &mut Option<BpDecoder<'_>>,
        noiseless: bool,
    ) -> Result<FrameOutcome> {
        let mut rng = frame_rng(self.config.master_seed, channel.ebno_db, index);
        let k = self.generator.k();
        let msg: Vec<u8> = (0..k).map(|_| rng.random_range(0..2u8)).collect();
        let sent = self.generator.encode(&msg)?;
        let scale = 2.0 / channel.sigma2();
        let sigma = channel.sigma2().sqrt();
        let noise = channel::gaussians(&mut rng, sent.len());
        let llr: Vec<f64> = sent
            .bits()
            .iter()
            .zip(&noise)
            .map(|(&b, &z)| {
                let x = if b == 0 { 1.0 } else { -1.0 };
                let y = if noiseless { x } else { x + sigma * z };
                scale * y
            })
            .collect();
        let llr = LlrVector::new(self.config.code.m, llr)?;
        let m = self.config.code.m;
        let (decided, iterations) = match &self.prepared {
            Prepared::FastMl11 => (fast_ml_11(m, &llr)?.codeword, None),
            Prepared::FastMl01 => (fast_ml_01(m, &llr)?.codeword, None),
            Prepared::Brute(dec) => (dec.decode(&llr)?.codeword, None),
            Prepared::Bp(_) => {
                let dec = bp.as_mut().expect("BP decoder per worker");
                let out = dec.decode(&llr)?;
                (out.hard_decision, Some(out.iterations_used))
            }
        };
        let bit_errors = decided
            .bits()
            .iter()
            .zip(sent.bits())
            .filter(|(a, b)| a != b)
            .count() as u64;
        Ok(FrameOutcome {
            block_error: bit_errors > 0,
            bit_errors,
            iterations,
        })
    }

    fn run(&self, ebno_db: f64, noiseless: bool) -> Result<PointResult> {
        let channel = ChannelModel::new(ebno_db, self.config.code.rate())?;
        let start = Instant::now();
        let cfg = &self.config;
        let (mut frames, mut block_errors, mut bit_errors, mut iters) = (0u64, 0u64, 0u64, 0u64);
        let mut next = 0u64;
        'outer: while next < cfg.max_frames {
            let end = (next + cfg.batch_size as u64).min(cfg.max_frames);
            let batch: Vec<Result<FrameOutcome>> = (next..end)
                .into_par_iter()
                .map_init(
                    || match &self.prepared {
                        Prepared::Bp(g) => Some(
                            BpDecoder::new(g, cfg.bp.clone()).expect("config validated"),
                        ),
                        _ => None,
                    },
                    |bp, t| self.frame(&channel, t, bp, noiseless),
                )
                .collect();
            next = end;
            for outcome in batch {
                let o = outcome?;
                frames += 1;
                bit_errors += o.bit_errors;
                iters += o.iterations.unwrap_or(0) as u64;
                if o.block_error {
                    block_errors += 1;
                    if block_errors >= cfg.min_block_errors {
                        break 'outer;
                    }
                }
            }
        }
        let n = self.generator.n() as f64;
        Ok(PointResult {
            ebno_db,
            frames,
            block_errors,
            bit_errors,
            bler: block_errors as f64 / frames as f64,
            ber: bit_errors as f64 / (frames as f64 * n),
            avg_iterations: (cfg.decoder == DecoderKind::Bp).then(|| iters as f64 / frames as f64),
            wall_time: start.elapsed().as_secs_f64(),
        })
    }

    pub fn run_point(&self, ebno_db: f64) -> Result<PointResult> {
        self.run(ebno_db, false)
    }

    /// Same frames with the noise left out.
    pub fn run_point_noiseless(&self, ebno_db: f64) -> Result<PointResult> {
        self.run(ebno_db, true)
    }

    pub fn run_grid(&self) -> Result<SimResult> {
        let points = self
            .config
            .snr_grid
            .iter()
            .map(|&e| self.run_point(e))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.result(points))
    }

    pub fn result(&self, points: Vec<PointResult>) -> SimResult {
        let code = self.config.code;
        SimResult {
            code: code.to_string(),
            n: code.length(),
            k: code.dimension(),
            rate: code.rate(),
            decoder: self.config.decoder,
            seed: self.config.master_seed,
            generator: GENERATOR,
            points,
        }
    }
}

pub fn run_point(config: &SimConfig, ebno_db: f64) -> Result<PointResult> {
    Simulator::new(config.clone())?.run_point(ebno_db)
}

pub fn run_grid(config: &SimConfig) -> Result<SimResult> {
    Simulator::new(config.clone())?.run_grid()
}

/// Parses `A:STEP:B` into `A, A+STEP, ...` up to `B` inclusive.
pub fn parse_snr_range(s: &str) -> Result<Vec<f64>> {
    let parts: Vec<f64> = s
        .split(':')
        .map(|p| p.trim().parse::<f64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| Error::BadSpec(format!("bad SNR range {s:?}: {e}")))?;
    match parts[..] {
        [a] => Ok(vec![a]),
        [_, step, _] if step <= 0.0 || !step.is_finite() => {
            Err(Error::BadSpec(format!("SNR step must be positive in {s:?}")))
        }
        [a, step, b] if b >= a => {
            let count = ((b - a) / step + 1e-9).floor() as usize;
            // round to limit drift from repeated float steps
            Ok((0..=count)
                .map(|i| ((a + i as f64 * step) * 1e9).round() / 1e9)
                .collect())
        }
        [_, _, _] => Ok(Vec::new()),
        _ => Err(Error::BadSpec(format!("expected A:STEP:B, got {s:?}"))),
    }
}
