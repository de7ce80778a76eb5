//! Symmetric alpha-Gibonaccian ranked posets, their rank generating
//! functions and the symmetric (alpha; n) triangles. `beta` is always 1.

pub mod counts;
pub mod poset;
pub mod qpoly;
pub mod strings;
pub mod thm54;
pub mod triangle;

pub use counts::{count_by_formula, count_by_inclusion_exclusion, ie_count};
pub use poset::{build_poset, check_lattice, rank_generating_function, LatticeReport, SGPoset};
pub use qpoly::QPolynomial;
pub use strings::{enumerate_strings, rank_of, validate_string, GibString, Violation};
pub use thm54::{closed_form, verify_theorem54, IdentityCheck, Thm54Report, PRINTED_SPLIT};
pub use triangle::{triangle_polynomial, triangle_row, SymTriangle};
