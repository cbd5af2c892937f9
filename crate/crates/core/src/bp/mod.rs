//! Weighted belief propagation for `BiD(m,2,2)`.
//!
//! One iteration runs the order-1 projection nodes, the degree-6 checks, the
//! order-2 projection nodes and the degree-6 checks again, refreshing every
//! variable after each phase. Messages into a variable are scaled by a
//! per-class weight; messages out of a variable are its posterior minus its
//! own weighted contribution from the destination node.
//!
//! A projection node sees each hidden bit `c_a + c_b` through
//! `x_a ⊞ x_b`, runs max-log-MAP on the projected first-order code, and
//! returns `e ⊞ x_b` to `a` and `e ⊞ x_a` to `b`, where `e` is the soft
//! output minus its input.

mod decoder;
mod graph;

pub use decoder::{bp_decode, boxplus, BpConfig, BpDecoder, BpOutcome};
pub use graph::{build_factor_graph, syndrome_ok, FactorGraph};
