//! Exact arithmetic: rationals, polynomials, intervals, Sturm chains,
//! certified root isolation and real algebraic numbers.

pub mod algebraic;
pub mod approx;
pub mod field;
pub mod interval;
pub mod poly;
pub mod rational;
pub mod sturm;

pub use algebraic::{isolate_real_roots, sign_at_algebraic, AlgebraicNumber};
pub use field::{AlgElem, NumberField, Scalar};
pub use interval::Interval;
pub use poly::{poly_arith, Poly, PolyOp};
pub use rational::{parse_rational, Rational, Sign};
pub use sturm::{sturm_count, SturmChain};
