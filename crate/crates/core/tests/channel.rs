use ldpc_core::channel::{
    bpsk_modulate, hard_demap, llr_demap, q_function, transmit, uncoded_ber_theory, ChannelSpec,
    Received,
};
use ldpc_core::gf2::BitVector;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Q(x) by composite Simpson integration of the Gaussian density on [x, x + 12].
fn q_quadrature(x: f64) -> f64 {
    let n = 200_000;
    let h = 12.0 / n as f64;
    let pdf = |t: f64| (-0.5 * t * t).exp() / (2.0 * std::f64::consts::PI).sqrt();
    let mut sum = pdf(x) + pdf(x + 12.0);
    for i in 1..n {
        let t = x + i as f64 * h;
        sum += if i % 2 == 1 { 4.0 } else { 2.0 } * pdf(t);
    }
    sum * h / 3.0
}

#[test]
fn theory_matches_quadrature() {
    let q = q_quadrature(2f64.sqrt());
    assert!((q - 0.0786496).abs() < 1e-6, "{q}");
    assert!((uncoded_ber_theory(0.0) - q).abs() < 1e-10);
    for db in [-3.0, 0.0, 2.0, 4.0, 6.0, 8.0] {
        let x = (2.0 * 10f64.powf(db / 10.0)).sqrt();
        let oracle = q_quadrature(x);
        assert!((uncoded_ber_theory(db) - oracle).abs() <= 1e-9 * oracle.max(1e-12), "{db} dB");
    }
    assert_eq!(q_function(0.0), 0.5);
}

#[test]
fn empirical_noise_variance() {
    for (db, rate) in [(0.0, 1.0), (2.0, 0.5), (-1.0, 0.75)] {
        let spec = ChannelSpec::new(db, rate).unwrap();
        let n = 1_000_000;
        let rx = transmit(&spec, &vec![0.0; n], &mut ChaCha8Rng::seed_from_u64(9));
        let mean = rx.samples.iter().sum::<f64>() / n as f64;
        let var = rx.samples.iter().map(|y| (y - mean).powi(2)).sum::<f64>() / n as f64;
        let target = spec.noise_variance();
        assert!((var / target - 1.0).abs() < 0.01, "{db} dB: {var} vs {target}");
        assert!(mean.abs() < 0.01);
    }
}

#[test]
fn hard_decision_error_rate_matches_theory() {
    let n = 200_000;
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let bits: BitVector = (0..n).map(|i| (i * 7919) % 3 == 0).collect();
    let x = bpsk_modulate(&bits);
    for db in [0.0, 2.0, 4.0, 6.0] {
        let spec = ChannelSpec::new(db, 1.0).unwrap();
        let decided = hard_demap(&transmit(&spec, &x, &mut rng));
        let errors = decided.hamming_distance(&bits) as f64;
        let p = uncoded_ber_theory(db);
        let sigma = (n as f64 * p * (1.0 - p)).sqrt();
        assert!((errors - n as f64 * p).abs() <= 3.0 * sigma, "{db} dB: {errors} errors, expected {}", n as f64 * p);
    }
}

#[test]
fn same_stream_same_output() {
    let spec = ChannelSpec::new(1.0, 0.5).unwrap().with_erasures(0.1).unwrap();
    let x = bpsk_modulate(&BitVector::from_support(500, &[1, 2, 3, 300]));
    let a = transmit(&spec, &x, &mut ChaCha8Rng::seed_from_u64(5));
    let b = transmit(&spec, &x, &mut ChaCha8Rng::seed_from_u64(5));
    assert_eq!(a, b);
    let c = transmit(&spec, &x, &mut ChaCha8Rng::seed_from_u64(6));
    assert_ne!(a, c);
}

#[test]
fn erasure_fraction_and_llrs() {
    let spec = ChannelSpec::new(60.0, 0.5).unwrap().with_erasures(0.05).unwrap();
    let x = vec![1.0; 100_000];
    let rx = transmit(&spec, &x, &mut ChaCha8Rng::seed_from_u64(3));
    let erased = rx.erased.iter().filter(|&&e| e).count();
    assert!((erased as f64 / 1e5 - 0.05).abs() < 0.003);
    let llr = llr_demap(&spec, &rx).unwrap();
    for (l, &e) in llr.iter().zip(&rx.erased) {
        if e {
            assert_eq!(*l, 0.0);
        } else {
            assert_eq!(*l, 30.0);
        }
    }
}

proptest! {
    #[test]
    fn llr_is_odd_and_agrees_with_hard_decisions(
        ys in prop::collection::vec(-0.2f64..0.2, 1..50),
        db in -2.0f64..8.0,
    ) {
        let spec = ChannelSpec::new(db, 0.5).unwrap();
        let pos = llr_demap(&spec, &Received::clean(ys.clone())).unwrap();
        let neg = llr_demap(&spec, &Received::clean(ys.iter().map(|y| -y).collect())).unwrap();
        for (a, b) in pos.iter().zip(neg.iter()) {
            prop_assert_eq!(*a, -*b);
        }
        let hard = hard_demap(&Received::clean(ys.clone()));
        for (i, l) in pos.iter().enumerate() {
            if *l != 0.0 {
                prop_assert_eq!(hard.get(i), *l < 0.0);
            }
        }
    }
}
