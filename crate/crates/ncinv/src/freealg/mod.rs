//! Exact arithmetic in the free associative algebra over the rationals,
//! plus identity evaluation in finite-dimensional algebras given by
//! structure constants.
//!
//! All values are immutable after construction and every operation is a
//! pure function, so concurrent use on shared inputs is safe.

mod comm;
mod poly;
mod structure;
mod word;

pub use comm::{CommMono, CommPoly};
pub use poly::NcPoly;
pub use structure::{holds_in_algebra, StructureAlgebra};
pub use word::{
    multidegree_word_count, multidegrees_of_degree, words_of_degree, words_of_multidegree,
    MultiDeg, Word,
};

/// Errors from free-algebra operations.
#[derive(Debug, thiserror::Error)]
pub enum FreeAlgError {
    #[error("commutator needs at least 2 arguments, got {0}")]
    CommutatorArity(usize),
    #[error("no substitution image for variable x{0}")]
    MissingImage(u16),
    #[error("image of x{0} has a constant term, forbidden in nonunitary mode")]
    ConstantImage(u16),
    #[error("invalid structure constants: {0}")]
    BadStructureConstants(String),
}
