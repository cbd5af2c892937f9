//! BiD codes of length `3^m`.
//!
//! The crate covers the full pipeline: F4 spectral algebra, abelian and BiD
//! code construction, enumeration of the weight-6 parity checks of second-order
//! codes, recursive minimum-distance bounds, projections, fast first-order
//! ML and max-log-MAP decoding, a weighted belief-propagation decoder for
//! second-order codes and a reproducible Monte-Carlo AWGN harness.

pub mod algebra;
pub mod bounds;
pub mod bp;
pub mod codes;
pub mod decode;
pub mod error;
pub mod gf2;
pub mod minweight;
pub mod projection;
pub mod sim;

pub use error::{Error, Result};
