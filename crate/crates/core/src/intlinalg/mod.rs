//! Exact integer and rational matrices, Hermite and Smith normal forms,
//! integral solving and lattice comparison.

mod lattice;
mod matrix;

pub use lattice::{
    column_scales, determinant, hnf, hnf_full, inverse, is_unimodular, rank, scale_columns,
    smith_invariants, solve_integral, solve_rational, z_span_equal, Hnf, IntegralSolver,
};
pub use matrix::{
    is_permutation_matrix, permutation_matrix, permutation_of, IntMatrix, Matrix, RatMatrix,
};
