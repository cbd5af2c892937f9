use std::io::Write;

use serde::Serialize;

use super::SimResult;
use crate::error::Result;

pub const CSV_HEADER: &str =
    "code,n,k,rate,decoder,ebno_db,frames,block_errors,bit_errors,bler,ber,avg_iterations,seed";

/// One CSV row; field order is the column order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CsvRecord {
    pub code: String,
    pub n: usize,
    pub k: usize,
    pub rate: f64,
    pub decoder: String,
    pub ebno_db: f64,
    pub frames: u64,
    pub block_errors: u64,
    pub bit_errors: u64,
    pub bler: f64,
    pub ber: f64,
    pub avg_iterations: Option<f64>,
    pub seed: u64,
}

impl SimResult {
    pub fn records(&self) -> Vec<CsvRecord> {
        self.points
            .iter()
            .map(|p| CsvRecord {
                code: self.code.clone(),
                n: self.n,
                k: self.k,
                rate: self.rate,
                decoder: self.decoder.name().to_string(),
                ebno_db: p.ebno_db,
                frames: p.frames,
                block_errors: p.block_errors,
                bit_errors: p.bit_errors,
                bler: p.bler,
                ber: p.ber,
                avg_iterations: p.avg_iterations,
                seed: self.seed,
            })
            .collect()
    }
}

/// Header plus one row per grid point. The code name contains commas, so
/// that field is quoted.
pub fn write_csv<W: Write>(out: W, result: &SimResult) -> Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record(CSV_HEADER.split(','))?;
    for r in result.records() {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

/// The same records as a JSON array, plus the generator name.
pub fn write_json_records<W: Write>(mut out: W, result: &SimResult) -> Result<()> {
    #[derive(Serialize)]
    struct Doc<'a> {
        generator: &'a str,
        records: Vec<CsvRecord>,
    }
    let doc = Doc {
        generator: result.generator,
        records: result.records(),
    };
    let text = serde_json_string(&doc)?;
    out.write_all(text.as_bytes())?;
    Ok(())
}

fn serde_json_string<T: Serialize>(v: &T) -> Result<String> {
    serde_json::to_string_pretty(v).map_err(|e| crate::Error::Io(e.to_string()))
}

/// Wilson score interval for `errors / trials` at normal quantile `z`.
pub fn wilson_interval(errors: u64, trials: u64, z: f64) -> (f64, f64) {
    if trials == 0 {
        return (0.0, 1.0);
    }
    let n = trials as f64;
    let p = errors as f64 / n;
    let z2 = z * z;
    let centre = (p + z2 / (2.0 * n)) / (1.0 + z2 / n);
    let half = z / (1.0 + z2 / n) * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt();
    ((centre - half).max(0.0), (centre + half).min(1.0))
}
