//! Minimum-weight words of the dual of `BiD(m,2,2)`.

mod candidate;
mod checks;
mod graph;
mod sset;

pub use candidate::{candidate_matrices, exhaustive_dual_minimum, verify_no_low_weight, CandidateMatrix};
pub use checks::{
    all_in_dual, canonical_polynomial, check_matrix_rank, enumerate_weight6_checks,
    enumerate_weight6_checks_with_stats, generating_cliques, orbit,
    orbit_of_canonical_polynomial, orthogonal_to_generator, parity_check_rank, read_checks,
    weight6_count, write_checks, EnumerationStats, OrbitGenerators, ParityCheck,
};
pub use graph::{max_clique_size, ConstraintGraph, MaxCliques};
pub use sset::{build_s_set, SSet};
