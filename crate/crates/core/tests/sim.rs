use ldpc_core::code::{derive_encoder, gallager_construct};
use ldpc_core::sim::{run_point, run_sweep, to_csv, write_csv, DecoderKind, SweepConfig, CSV_HEADER};
use ldpc_core::Error;

fn small_encoder() -> ldpc_core::code::SystematicEncoder {
    derive_encoder(&gallager_construct(96, 3, 6, 2).unwrap()).unwrap()
}

fn cfg(decoder: DecoderKind) -> SweepConfig {
    SweepConfig {
        decoder,
        max_iter: 20,
        ebn0_points: vec![1.0, 2.0, 3.0],
        max_frames: 300,
        min_bit_errors: 100,
        seed: 11,
        workers: 1,
    }
}

#[test]
fn noiseless_point() {
    let enc = small_encoder();
    for kind in [DecoderKind::SumProduct, DecoderKind::BitFlip] {
        let p = run_point(&enc, &SweepConfig { max_frames: 50, ..cfg(kind) }, 60.0).unwrap();
        assert_eq!(p.frames, 50);
        assert_eq!(p.ber, 0.0);
        assert_eq!(p.fer, 0.0);
        assert_eq!(p.avg_iterations, 0.0);
        assert_eq!(p.uncoded_ber, 0.0);
    }
}

#[test]
fn uncoded_column_tracks_theory() {
    let enc = small_encoder();
    let c = SweepConfig {
        max_frames: 400,
        min_bit_errors: 0,
        ..cfg(DecoderKind::BitFlip)
    };
    let p = run_point(&enc, &c, 0.0).unwrap();
    let bits = p.bits() as f64;
    let expected = p.theory_uncoded;
    assert!((expected - 0.0786496).abs() < 1e-6);
    let sigma = (expected * (1.0 - expected) / bits).sqrt();
    assert!((p.uncoded_ber - expected).abs() <= 3.0 * sigma, "{} vs {}", p.uncoded_ber, expected);
}

#[test]
fn worker_count_does_not_change_results() {
    let enc = small_encoder();
    for kind in [DecoderKind::SumProduct, DecoderKind::BitFlip] {
        let serial = run_sweep(&enc, &cfg(kind)).unwrap();
        let parallel = run_sweep(&enc, &SweepConfig { workers: 4, ..cfg(kind) }).unwrap();
        assert_eq!(to_csv(&serial), to_csv(&parallel));
        assert_eq!(serial, parallel);
    }
}

#[test]
fn sweep_invariants() {
    let enc = small_encoder();
    let points = run_sweep(&enc, &cfg(DecoderKind::SumProduct)).unwrap();
    assert_eq!(points.len(), 3);
    for w in points.windows(2) {
        assert!(w[0].ebn0_db < w[1].ebn0_db);
    }
    for p in &points {
        assert!(p.frame_errors <= p.frames);
        assert!(p.frame_errors <= p.bit_errors);
        assert!((0.0..=1.0).contains(&p.ber));
        assert_eq!(p.ber, p.bit_errors as f64 / p.bits() as f64);
        // stop rule: either the cap or the error target was reached
        assert!(p.frames == 300 || p.bit_errors >= 100);
    }
}

#[test]
fn early_stop_lands_on_the_target_frame() {
    let enc = small_encoder();
    let c = SweepConfig {
        ebn0_points: vec![0.0],
        min_bit_errors: 30,
        ..cfg(DecoderKind::BitFlip)
    };
    let p = run_point(&enc, &c, 0.0).unwrap();
    assert!(p.bit_errors >= 30);
    // one frame fewer stays below the target
    let fewer = run_point(&enc, &SweepConfig { max_frames: p.frames - 1, min_bit_errors: 0, ..c.clone() }, 0.0).unwrap();
    assert!(fewer.bit_errors < 30);
}

#[test]
fn csv_layout() {
    let enc = small_encoder();
    let points = run_sweep(&enc, &SweepConfig { max_frames: 20, ..cfg(DecoderKind::SumProduct) }).unwrap();
    let csv = to_csv(&points);
    let lines: Vec<&str> = csv.split('\n').collect();
    assert_eq!(lines[0], CSV_HEADER);
    assert_eq!(lines.len(), 5);
    assert_eq!(lines[4], "");
    assert!(!csv.contains('\r'));
    assert!(lines[1].starts_with("1,"));
    assert_eq!(lines[1].split(',').count(), 9);
}

#[test]
fn config_errors() {
    let enc = small_encoder();
    let empty = SweepConfig { ebn0_points: vec![], ..cfg(DecoderKind::BitFlip) };
    assert!(matches!(run_sweep(&enc, &empty), Err(Error::Config(_))));
    let dup = SweepConfig { ebn0_points: vec![1.0, 1.0], ..cfg(DecoderKind::BitFlip) };
    assert!(matches!(run_sweep(&enc, &dup), Err(Error::Config(_))));
}

#[test]
fn unwritable_path_is_reported() {
    let path = std::path::Path::new("/nonexistent-dir/out.csv");
    let err = write_csv(path, &[]).unwrap_err();
    assert!(err.to_string().contains("/nonexistent-dir/out.csv"));
}
