//! The right-triangular Gibonacci array, sign-alternating Gibonacci
//! polynomials, the `W_k` sequence and eigenvalue evaluation.

pub mod array;
pub mod binet;
pub mod sapoly;

pub use array::{gib_entry, GibParams, GibonacciArray};
pub use binet::{binet_eval, binet_formal, lambda_only_check, BinetValue, EigenPair, QuadElem};
pub use sapoly::{
    build_sa_poly, eval_at_four, fib_decomposition_check, sa_poly_from_array, w_poly, w_sequence,
    w_transform_check, SAPolynomial, SaSequence,
};
