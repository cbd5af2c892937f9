//! F4 arithmetic, `Z_3^m` bookkeeping and the DFT that defines every code here.

pub mod dft;
pub mod gf4;
pub mod index;
pub mod word;

pub use dft::{dft, idft, multiply_ring, naive_dft};
pub use gf4::Gf4;
pub use index::{pow3, weight_histogram, TernaryIndex};
pub use word::{BinaryWord, Spectrum};
