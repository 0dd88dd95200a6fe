use std::ops::Deref;

use crate::error::{Error, Result};
use crate::gf2::BitVector;

/// Magnitude bound applied to channel LLRs and to every decoder message.
pub const LLR_CLAMP: f64 = 30.0;

#[inline]
pub(crate) fn clamp_llr(x: f64) -> f64 {
    x.clamp(-LLR_CLAMP, LLR_CLAMP)
}

/// Per-bit log-likelihood ratios `log(P(bit = 0) / P(bit = 1))`.
///
/// Positive means `0` is more likely. Values are finite and lie within
/// `±LLR_CLAMP`; an LLR of exactly zero marks an erasure.
#[derive(Clone, Debug, PartialEq)]
pub struct LlrVector(Vec<f64>);

impl LlrVector {
    /// Rejects non-finite entries and clamps the rest to `±LLR_CLAMP`.
    pub fn new(values: Vec<f64>) -> Result<Self> {
        let mut values = values;
        for (index, v) in values.iter_mut().enumerate() {
            if !v.is_finite() {
                return Err(Error::NonFiniteLlr { index });
            }
            *v = clamp_llr(*v);
        }
        Ok(LlrVector(values))
    }

    /// Hard decision per position; an LLR of exactly zero decides `0`.
    pub fn hard_decision(&self) -> BitVector {
        hard_slice(&self.0)
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }
}

impl Deref for LlrVector {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.0
    }
}

pub(crate) fn hard_slice(values: &[f64]) -> BitVector {
    values.iter().map(|&l| l < 0.0).collect()
}

/// Check-node combination `2·atanh(tanh(a/2)·tanh(b/2))`.
///
/// Inputs with a small magnitude go through the tanh product directly, where
/// it is accurate. When both are large the equivalent form
/// `sign(a)sign(b)min(|a|,|b|) + ln(1+e^-|a+b|) - ln(1+e^-|a-b|)` is used, so
/// the product never saturates to 1.
#[inline]
pub fn boxplus(a: f64, b: f64) -> f64 {
    let (abs_a, abs_b) = (a.abs(), b.abs());
    let min = abs_a.min(abs_b);
    if min < 2.0 {
        2.0 * ((0.5 * a).tanh() * (0.5 * b).tanh()).atanh()
    } else {
        let signed = if (a < 0.0) != (b < 0.0) { -min } else { min };
        signed + (-(a + b).abs()).exp().ln_1p() - (-(a - b).abs()).exp().ln_1p()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_absorbs() {
        for a in [-30.0, -3.0, -0.1, 0.0, 0.5, 7.0, 30.0] {
            assert_eq!(boxplus(a, 0.0), 0.0);
            assert_eq!(boxplus(0.0, a), 0.0);
        }
    }

    #[test]
    fn certainty_is_identity() {
        for x in [-12.0, -1.0, 0.3, 4.0, 10.0] {
            let y = boxplus(LLR_CLAMP, x);
            assert!((y - x).abs() < 1e-6, "{x} -> {y}");
            assert!((boxplus(-LLR_CLAMP, x) + x).abs() < 1e-6);
        }
    }

    #[test]
    fn reference_values() {
        // 2·atanh(tanh(1)²) and 2·atanh(tanh(2)²)
        assert!((boxplus(2.0, 2.0) - 1.325_002_747_357_864).abs() < 1e-12);
        assert!((boxplus(4.0, 4.0) - 3.307_188_225_812_951).abs() < 1e-12);
        assert!((boxplus(-2.0, 2.0) + 1.325_002_747_357_864).abs() < 1e-12);
    }

    #[test]
    fn forms_agree_at_the_switch() {
        // Both branches must produce the same value near the threshold.
        let direct = |a: f64, b: f64| 2.0 * ((0.5 * a).tanh() * (0.5 * b).tanh()).atanh();
        for (a, b) in [(2.0, 2.0), (2.5, -3.0), (-2.0, 9.0)] {
            assert!((boxplus(a, b) - direct(a, b)).abs() < 1e-12);
        }
    }

    #[test]
    fn llr_vector_clamps_and_rejects_nan() {
        let v = LlrVector::new(vec![100.0, -45.0, 1.5]).unwrap();
        assert_eq!(&*v, &[30.0, -30.0, 1.5]);
        assert!(matches!(
            LlrVector::new(vec![0.0, f64::NAN]),
            Err(Error::NonFiniteLlr { index: 1 })
        ));
        assert!(LlrVector::new(vec![f64::INFINITY]).is_err());
    }

    #[test]
    fn zero_llr_slices_to_zero() {
        let v = LlrVector::new(vec![0.0, -0.0, -1e-9, 2.0]).unwrap();
        assert_eq!(v.hard_decision().to_string(), "0010");
    }
}
