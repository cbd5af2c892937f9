use std::fs::File;
use std::io::{self, BufReader, BufWriter, Read, Write};
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use bid_core::bounds::{reproduce_tables, BoundsSolver, WeightSetKey, TABLE_HEADER};
use bid_core::codes::{AbelianCodeSpec, BiDSpec, FreqWeightSet};
use bid_core::decode::{fast_ml_01, fast_ml_11, LlrVector};
use bid_core::minweight::{enumerate_weight6_checks, write_checks};
use bid_core::sim::{parse_snr_range, write_csv, write_json_records, DecoderKind, SimConfig, Simulator};
use clap::{Parser, Subcommand};
use serde_json::json;

#[derive(Parser)]
#[command(name = "bid", version, about = "BiD codes of length 3^m")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Length, dimension, rate and distance bound of BiD(m,r1,r2) as JSON.
    Info {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        r1: usize,
        #[arg(long)]
        r2: usize,
        /// Describe the dual code instead.
        #[arg(long)]
        dual: bool,
    },
    /// Write every weight-6 parity check of the dual of BiD(m,2,2).
    Checks {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Distance bounds as TSV: all dual BiD codes, or one weight set.
    Bounds {
        #[arg(long)]
        m: usize,
        #[arg(long, conflicts_with = "weights")]
        all_dual: bool,
        /// Comma-separated frequency weights, e.g. 0,1,4.
        #[arg(long, value_delimiter = ',')]
        weights: Option<Vec<usize>>,
    },
    /// Decode one LLR vector with a fast first-order decoder; prints the bits.
    Decode {
        /// bid:M,1,1 or bid:M,0,1
        #[arg(long)]
        code: BiDSpec,
        /// Whitespace-separated LLRs; positive favours bit 0.
        #[arg(long)]
        llr_file: PathBuf,
    },
    /// Monte-Carlo BLER/BER over the BPSK AWGN channel.
    Simulate {
        #[arg(long)]
        code: BiDSpec,
        /// fast-ml-11, fast-ml-01, brute-ml or bp
        #[arg(long)]
        decoder: DecoderKind,
        /// Eb/N0 grid in dB as A:STEP:B.
        #[arg(long)]
        snr: String,
        #[arg(long, default_value_t = 100_000)]
        max_frames: u64,
        #[arg(long, default_value_t = 100)]
        min_errors: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Emit JSON records instead of CSV.
        #[arg(long)]
        json: bool,
        #[arg(long)]
        beta0: Option<f64>,
        #[arg(long)]
        beta1: Option<f64>,
        #[arg(long)]
        beta2: Option<f64>,
        #[arg(long)]
        max_iters: Option<usize>,
    },
}

fn output(path: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("creating {}", p.display()))?,
        )),
        None => Box::new(io::stdout().lock()),
    })
}

fn main() -> Result<()> {
    match Cli::parse().command {
        Command::Info { m, r1, r2, dual } => {
            let bid = BiDSpec::new(m, r1, r2)?;
            let spec = if dual { bid.to_abelian().dual() } else { bid.to_abelian() };
            let weights: Vec<usize> = spec.weights().members().collect();
            let mut doc = json!({
                "code": if dual { format!("dual {bid}") } else { bid.to_string() },
                "m": m,
                "weights": weights,
                "n": spec.length(),
                "k": spec.dimension(),
                "rate": spec.rate(),
            });
            if dual {
                let b = BoundsSolver::new().bounds(WeightSetKey::new(spec.weights()));
                doc["dmin_lower"] = json!(b.lower);
                doc["dmin_upper"] = json!(b.upper);
            } else {
                doc["dmin_lower"] = json!(bid.dmin_lower_bound());
            }
            println!("{}", serde_json::to_string_pretty(&doc)?);
        }
        Command::Checks { m, out } => {
            let checks = enumerate_weight6_checks(m)?;
            let file = File::create(&out).with_context(|| format!("creating {}", out.display()))?;
            write_checks(BufWriter::new(file), &checks)?;
            eprintln!("wrote {} checks to {}", checks.len(), out.display());
        }
        Command::Bounds { m, all_dual, weights } => {
            let mut stdout = io::stdout().lock();
            match weights {
                Some(w) => {
                    let set = FreqWeightSet::new(m, w)?;
                    let b = BoundsSolver::new().bounds(WeightSetKey::new(set));
                    writeln!(stdout, "m\tW\tdmin\tK")?;
                    writeln!(
                        stdout,
                        "{m}\t{set}\t{b}\t{}",
                        AbelianCodeSpec::new(set).dimension()
                    )?;
                }
                None => {
                    if !all_dual {
                        eprintln!("no --weights given; listing every dual BiD code");
                    }
                    writeln!(stdout, "{TABLE_HEADER}")?;
                    for row in reproduce_tables([m])? {
                        writeln!(stdout, "{}", row.tsv())?;
                    }
                }
            }
        }
        Command::Decode { code, llr_file } => {
            let mut text = String::new();
            BufReader::new(
                File::open(&llr_file).with_context(|| format!("opening {}", llr_file.display()))?,
            )
            .read_to_string(&mut text)?;
            let values = text
                .split_whitespace()
                .map(|t| t.parse::<f64>().with_context(|| format!("bad LLR {t:?}")))
                .collect::<Result<Vec<_>>>()?;
            let llr = LlrVector::new(code.m, values)?;
            let result = match (code.r1, code.r2) {
                (1, 1) => fast_ml_11(code.m, &llr)?,
                (0, 1) => fast_ml_01(code.m, &llr)?,
                _ => bail!("decode supports bid:M,1,1 and bid:M,0,1, got {code}"),
            };
            let bits: Vec<String> = result.codeword.bits().iter().map(|b| b.to_string()).collect();
            println!("{}", bits.join(" "));
        }
        Command::Simulate {
            code,
            decoder,
            snr,
            max_frames,
            min_errors,
            seed,
            out,
            json,
            beta0,
            beta1,
            beta2,
            max_iters,
        } => {
            let mut config = SimConfig::new(code, decoder);
            config.snr_grid = parse_snr_range(&snr)?;
            config.max_frames = max_frames;
            config.min_block_errors = min_errors;
            config.master_seed = seed;
            if let Some(b) = beta0 {
                config.bp.beta0 = b;
            }
            if let Some(b) = beta1 {
                config.bp.beta1 = b;
            }
            if let Some(b) = beta2 {
                config.bp.beta2 = b;
            }
            if let Some(n) = max_iters {
                config.bp.max_iterations = n;
            }
            let sim = Simulator::new(config)?;
            let mut points = Vec::new();
            for &e in &sim.config().snr_grid {
                let p = sim.run_point(e)?;
                eprintln!(
                    "{code} {decoder} {e:.2} dB: {} / {} block errors, bler {:.3e}{}",
                    p.block_errors,
                    p.frames,
                    p.bler,
                    p.avg_iterations.map(|a| format!(", {a:.2} iterations")).unwrap_or_default()
                );
                points.push(p);
            }
            let result = sim.result(points);
            for (a, b) in result.monotonicity_violations() {
                eprintln!("warning: BLER rises from {a} dB to {b} dB beyond the 95% Wilson intervals");
            }
            let w = output(&out)?;
            if json {
                write_json_records(w, &result)?;
            } else {
                write_csv(w, &result)?;
            }
        }
    }
    Ok(())
}
