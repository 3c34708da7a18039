//! Integer polynomials, symbolic matrices and their minors.

mod lemma;
mod matrix;
mod monomial;
mod order;
mod parse;
mod polynomial;
mod ring;

pub use lemma::{lemma_matrix, lemma_matrix_names, LemmaMatrixSpec, LEMMA_MATRICES};
pub use matrix::{generalized_distance_matrix, SymMatrix};
pub use monomial::Monomial;
pub use order::{compare_permuted, MonomialOrder, OrderKind};
pub use polynomial::Poly;
pub use ring::{Ring, VarClass, Variable};

/// Maximum number of variables in one ring.
pub const MAX_VARS: usize = 32;
