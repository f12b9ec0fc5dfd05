//! Independent verification layer on exact matrices.
//!
//! Nothing here calls the partition combinatorics of the engine: Jordan
//! types come from rank sequences, induced orbits from random sampling, and
//! orbit closures from the rank criterion. No floating point is used.

mod induced;
mod jordan;
mod lie;
mod micro;

pub use induced::{
    class_closure_member_oracle, generic_induced_type, seeded_eigenvalues, DEFAULT_TRIALS, ENTRY_BOUND,
};
pub use jordan::{
    characteristic_polynomial, jordan_matrix, jordan_type, jordan_type_with, orbit_closure_leq,
    rank_sequence, rational_matrix, rational_roots, representative, JordanType, SpectrumField,
};
pub use lie::{centralizer_dim_lie, mat2_mul, pgl2_algebra, pgl2_coords, Mat2, StructureConstantAlgebra};
pub use micro::{pgl2_micro, MicroReport, MicroRow, MicroSummary};
