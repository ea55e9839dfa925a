//! Exact linear algebra over the Gaussian rationals and the diagram-to-matrix map.

mod brauer;
mod gaussian;
mod intertwiner;
mod matrix;
mod sample;
mod tmap;

pub use brauer::{
    brauer_check, brauer_check_with_closure, default_closure_points, word_pairs, BrauerEntry, BrauerReport, SeedOutcome, Verdict,
    DEFAULT_MAX_SAMPLES,
};
pub use gaussian::GaussianRational;
pub use intertwiner::{
    intertwiner_space, intertwiner_space_stable, BasisMode, HomSpace, IntertwinerSolver, DEFAULT_UNKNOWN_CAP,
};
pub use matrix::{Echelon, ExactMatrix};
pub use sample::{sample, structured_elements, Sample, SampleKind, SampleSource};
pub use tmap::{
    check_functor, check_functor_dense, delta, gram_matrix, span_rank, t_matrix, t_matrix_capped, vectorize,
    verify_functor, FunctorCheck, SparseT, DEFAULT_SIZE_CAP, DEFAULT_VECTOR_CAP,
};
