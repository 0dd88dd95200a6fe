//! BPSK over an additive white Gaussian noise channel, with optional
//! erasures, plus hard and soft demapping.
//!
//! Noise is normalized by Eb/N0, the energy per *information* bit. With
//! unit-energy symbols and code rate `R`, the per-dimension noise variance is
//! `σ² = 1 / (2·R·10^(Eb/N0 / 10))`, so coded and uncoded transmissions at
//! the same Eb/N0 spend the same energy per message bit.

use rand::Rng;
use rand_distr::StandardNormal;
use statrs::function::erf::erfc;

use crate::decode::LlrVector;
use crate::error::{Error, Result};
use crate::gf2::BitVector;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChannelSpec {
    pub ebn0_db: f64,
    pub rate: f64,
    pub erasure_prob: f64,
}

impl ChannelSpec {
    pub fn new(ebn0_db: f64, rate: f64) -> Result<Self> {
        if !(rate > 0.0 && rate <= 1.0) {
            return Err(Error::InvalidParameters(format!(
                "code rate must lie in (0, 1], got {rate}"
            )));
        }
        if ebn0_db.is_nan() {
            return Err(Error::InvalidParameters("Eb/N0 is NaN".into()));
        }
        Ok(ChannelSpec {
            ebn0_db,
            rate,
            erasure_prob: 0.0,
        })
    }

    pub fn with_erasures(mut self, erasure_prob: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&erasure_prob) {
            return Err(Error::InvalidParameters(format!(
                "erasure probability must lie in [0, 1], got {erasure_prob}"
            )));
        }
        self.erasure_prob = erasure_prob;
        Ok(self)
    }

    /// `σ²` per real dimension.
    pub fn noise_variance(&self) -> f64 {
        1.0 / (2.0 * self.rate * 10f64.powf(self.ebn0_db / 10.0))
    }
}

/// Channel output: noisy samples and the positions the channel erased.
#[derive(Clone, Debug, PartialEq)]
pub struct Received {
    pub samples: Vec<f64>,
    pub erased: Vec<bool>,
}

impl Received {
    /// Noiseless, erasure-free reception of `symbols`.
    pub fn clean(symbols: Vec<f64>) -> Self {
        let erased = vec![false; symbols.len()];
        Received {
            samples: symbols,
            erased,
        }
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }
}

/// Bit 0 maps to `+1.0`, bit 1 to `-1.0`.
pub fn bpsk_modulate(bits: &BitVector) -> Vec<f64> {
    bits.iter().map(|b| if b { -1.0 } else { 1.0 }).collect()
}

/// Adds i.i.d. Gaussian noise of variance `spec.noise_variance()` to each
/// symbol, then erases each position independently with
/// `spec.erasure_prob`. All randomness comes from `rng`.
pub fn transmit<R: Rng + ?Sized>(spec: &ChannelSpec, symbols: &[f64], rng: &mut R) -> Received {
    let sigma = spec.noise_variance().sqrt();
    let samples = symbols
        .iter()
        .map(|&x| {
            let z: f64 = rng.sample(StandardNormal);
            x + sigma * z
        })
        .collect();
    let erased = if spec.erasure_prob > 0.0 {
        symbols
            .iter()
            .map(|_| rng.random::<f64>() < spec.erasure_prob)
            .collect()
    } else {
        vec![false; symbols.len()]
    };
    Received { samples, erased }
}

/// `L = 2y / σ²`, clamped; erased positions get exactly 0.
pub fn llr_demap(spec: &ChannelSpec, rx: &Received) -> Result<LlrVector> {
    let var = spec.noise_variance();
    if var <= 0.0 {
        return Err(Error::ZeroNoiseVariance);
    }
    let scale = 2.0 / var;
    let values = rx
        .samples
        .iter()
        .zip(&rx.erased)
        .map(|(&y, &erased)| if erased { 0.0 } else { scale * y })
        .collect();
    LlrVector::new(values)
}

/// `y ≥ 0` decides 0, `y < 0` decides 1. Erased positions decide 0.
pub fn hard_demap(rx: &Received) -> BitVector {
    rx.samples
        .iter()
        .zip(&rx.erased)
        .map(|(&y, &erased)| !erased && y < 0.0)
        .collect()
}

/// Gaussian tail probability `Q(x) = erfc(x / √2) / 2`.
pub fn q_function(x: f64) -> f64 {
    0.5 * erfc(x / std::f64::consts::SQRT_2)
}

/// Bit error rate of uncoded BPSK with hard decisions: `Q(√(2·Eb/N0))`.
pub fn uncoded_ber_theory(ebn0_db: f64) -> f64 {
    q_function((2.0 * 10f64.powf(ebn0_db / 10.0)).sqrt())
}
