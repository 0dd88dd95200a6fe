//! LDPC code construction, inspection, interchange and systematic encoding.

mod alist;
mod construct;
mod encoder;
mod rate;
mod sparse;
mod tanner;
mod validate;

pub use alist::{load_alist, save_alist};
pub use construct::gallager_construct;
pub use encoder::{derive_encoder, SystematicEncoder};
pub use rate::{code_rate, CodeRate};
pub use sparse::SparseParityCheck;
pub use tanner::{build_tanner, Edge, TannerGraph};
pub use validate::{validate, Degree, RegularityReport};
