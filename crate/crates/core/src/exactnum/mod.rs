//! Exact arithmetic: the field Q(√2, √5), dense linear algebra over it, and
//! small matrices over F2 and F3.

mod fp;
mod linalg;
mod qnum;

pub use fp::{fp_kernel, fp_rank, fp_row_reduce, MatrixFp};
pub use linalg::{
    char_poly, inner_product, unit_vector, vec_add, vec_neg, vec_scale, vec_sub, MatrixQ, Poly,
    VectorQ,
};
pub use qnum::{rat, QNum, Rational};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),
    #[error("matrix is singular")]
    Singular,
}
