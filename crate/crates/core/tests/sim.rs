use bid_core::codes::BiDSpec;
use bid_core::sim::*;

fn config(code: &str, decoder: DecoderKind) -> SimConfig {
    let mut c = SimConfig::new(code.parse::<BiDSpec>().unwrap(), decoder);
    c.master_seed = 42;
    c
}

fn csv_text(result: &SimResult) -> String {
    let mut buf = Vec::new();
    write_csv(&mut buf, result).unwrap();
    String::from_utf8(buf).unwrap()
}

#[test]
fn empty_grid_gives_header_only() {
    let result = run_grid(&config("bid:3,1,1", DecoderKind::FastMl11)).unwrap();
    assert_eq!(csv_text(&result), format!("{CSV_HEADER}\n"));
}

#[test]
fn csv_layout() {
    let mut c = config("bid:3,1,1", DecoderKind::FastMl11);
    c.snr_grid = vec![1.0];
    c.max_frames = 50;
    let text = csv_text(&run_grid(&c).unwrap());
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), CSV_HEADER);
    let row = lines.next().unwrap();
    assert!(row.starts_with("\"bid:3,1,1\",27,6,"));
    // avg_iterations is empty for decoders without iterations
    assert!(row.ends_with(",,42"), "{row}");

    let mut c = config("bid:4,2,2", DecoderKind::Bp);
    c.snr_grid = vec![3.0];
    c.max_frames = 20;
    let result = run_grid(&c).unwrap();
    assert!(result.points[0].avg_iterations.is_some());
    let mut json = Vec::new();
    write_json_records(&mut json, &result).unwrap();
    let v: serde_json::Value = serde_json::from_slice(&json).unwrap();
    assert_eq!(v["generator"], GENERATOR);
    let rec = &v["records"][0];
    for field in CSV_HEADER.split(',') {
        assert!(rec.get(field).is_some(), "missing {field}");
    }
    assert_eq!(rec["code"], "bid:4,2,2");
}

#[test]
fn same_seed_same_bytes_any_thread_count() {
    let mut c = config("bid:4,2,2", DecoderKind::Bp);
    c.snr_grid = vec![1.5, 2.0];
    c.max_frames = 300;
    c.min_block_errors = 10;
    c.batch_size = 37;
    let run = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| csv_text(&run_grid(&c).unwrap()))
    };
    let one = run(1);
    assert_eq!(one, run(1));
    assert_eq!(one, run(3));
}

#[test]
fn early_stop_lands_on_last_error() {
    let mut c = config("bid:3,1,1", DecoderKind::FastMl11);
    c.max_frames = 100_000;
    c.min_block_errors = 25;
    c.batch_size = 64;
    let p = run_point(&c, 0.0).unwrap();
    assert_eq!(p.block_errors, 25);
    assert!(p.frames < 100_000);
    assert_eq!(p.bler, 25.0 / p.frames as f64);
    // the last counted frame is an error: one frame fewer would hold 24
    c.max_frames = p.frames - 1;
    assert_eq!(run_point(&c, 0.0).unwrap().block_errors, 24);
}

#[test]
fn noiseless_frames_never_fail() {
    for (code, dec) in [
        ("bid:4,1,1", DecoderKind::FastMl11),
        ("bid:3,0,1", DecoderKind::FastMl01),
        ("bid:3,2,2", DecoderKind::BruteMl),
        ("bid:4,2,2", DecoderKind::Bp),
    ] {
        let mut c = config(code, dec);
        c.max_frames = 40;
        let p = Simulator::new(c).unwrap().run_point_noiseless(-5.0).unwrap();
        assert_eq!((p.block_errors, p.bler), (0, 0.0), "{code} {dec}");
    }
}

#[test]
fn first_order_243_at_6db() {
    let mut c = config("bid:5,1,1", DecoderKind::FastMl11);
    c.max_frames = 5000;
    let p = run_point(&c, 6.0).unwrap();
    assert!(p.bler < 1e-3, "bler {}", p.bler);
}

#[test]
fn decoder_compatibility() {
    let bad = [
        ("bid:4,2,2", DecoderKind::FastMl11),
        ("bid:4,1,1", DecoderKind::FastMl01),
        ("bid:3,2,2", DecoderKind::Bp),
        ("bid:5,2,2", DecoderKind::BruteMl),
    ];
    for (code, dec) in bad {
        assert!(matches!(
            run_point(&config(code, dec), 1.0),
            Err(bid_core::Error::IncompatibleDecoder { .. })
        ));
    }
    assert!("viterbi".parse::<DecoderKind>().is_err());
}

#[test]
fn snr_ranges() {
    assert_eq!(parse_snr_range("0:0.25:1").unwrap(), vec![0.0, 0.25, 0.5, 0.75, 1.0]);
    assert_eq!(parse_snr_range("2").unwrap(), vec![2.0]);
    assert!(parse_snr_range("3:1:2").unwrap().is_empty());
    assert!(parse_snr_range("0:0:1").is_err());
    assert!(parse_snr_range("a:b").is_err());
}

#[test]
fn monotonicity_flags() {
    let mut c = config("bid:3,1,1", DecoderKind::FastMl11);
    c.snr_grid = vec![0.0, 2.0, 4.0];
    c.max_frames = 2000;
    let r = run_grid(&c).unwrap();
    assert!(r.monotonicity_violations().is_empty());
    let mut flipped = r.clone();
    flipped.points.reverse();
    assert!(!flipped.monotonicity_violations().is_empty());
}
