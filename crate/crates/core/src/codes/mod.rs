//! Abelian codes `A(m, W)` and BiD codes: dimensions, generators, membership,
//! duals and automorphisms.

pub mod automorphism;
pub mod generator;
pub mod spec;

pub use generator::{encode, generator_matrix, is_member, weight_class_rows, GeneratorMatrix};
pub use spec::{AbelianCodeSpec, BiDSpec, FreqWeightSet};
