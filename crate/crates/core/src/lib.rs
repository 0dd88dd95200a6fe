//! Low-density parity-check codes over GF(2).
//!
//! The crate covers the whole pipeline: build a sparse parity-check matrix
//! ([`code::gallager_construct`]), derive a systematic encoder from it by
//! Gauss-Jordan elimination ([`code::derive_encoder`]), send codewords over
//! a BPSK/AWGN channel ([`channel`]), decode with bit flipping or sum-product
//! message passing ([`decode`]), and measure bit error rates across an Eb/N0
//! sweep ([`sim`]).
//!
//! ```
//! use ldpc_core::code::{derive_encoder, gallager_construct};
//! use ldpc_core::decode::{sum_product_decode, LlrVector};
//! use ldpc_core::gf2::BitVector;
//!
//! let h = gallager_construct(96, 3, 6, 1).unwrap();
//! let enc = derive_encoder(&h).unwrap();
//! let msg = BitVector::from_support(enc.k(), &[0, 5, 17]);
//! let cw = enc.encode(&msg).unwrap();
//! assert!(h.syndrome(&cw).unwrap().is_zero());
//!
//! // Confident channel LLRs with one position erased.
//! let mut llr: Vec<f64> = cw.iter().map(|b| if b { -8.0 } else { 8.0 }).collect();
//! llr[3] = 0.0;
//! let out = sum_product_decode(&h, &LlrVector::new(llr).unwrap(), 20).unwrap();
//! assert!(out.is_converged());
//! assert_eq!(enc.extract_message(&out.bits).unwrap(), msg);
//! ```

pub mod channel;
pub mod code;
pub mod decode;
mod error;
pub mod gf2;
pub mod sim;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/gf2.md")]
    mod gf2 {}
    #[doc = include_str!("../../../book/src/codes.md")]
    mod codes {}
    #[doc = include_str!("../../../book/src/encoding.md")]
    mod encoding {}
    #[doc = include_str!("../../../book/src/decoding.md")]
    mod decoding {}
    #[doc = include_str!("../../../book/src/channel.md")]
    mod channel {}
    #[doc = include_str!("../../../book/src/simulation.md")]
    mod simulation {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
