//! Kronecker-product codes over GF(q) and exhaustive verification of their
//! covering radius, intersection array, complete regularity, outer distance
//! and uniform packing.
//!
//! All regularity questions are answered on the syndrome space: for a linear
//! code the coset weight, the neighbor depths and the number of codewords at
//! each distance are functions of the syndrome alone, so `q^(n-k)` states are
//! enumerated instead of `q^n` vectors.

pub mod analyze;
pub mod construct;
pub mod error;
pub mod gf;
pub mod matrix;

pub use analyze::{analyze, AnalysisConfig, AnalysisReport};
pub use construct::{
    hamming_check, kron_cr_code, kron_up_code, repetition_check, CodeSpec, Family,
};
pub use error::{Error, Result};
pub use gf::{Elem, FieldTable};
pub use matrix::GFMatrix;
