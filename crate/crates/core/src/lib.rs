//! Generalized singular numbers, Fuglede–Kadison determinants and
//! logarithmic submajorisation for matrices in the normalized trace, with
//! checkers for Harnack-type determinant inequalities and a randomized
//! verification harness.

// `!(v > 0.0)` style guards are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod harness;
pub mod inequalities;
pub mod linalg;
pub mod oracle;
pub mod spectral;
pub mod stepfn;
pub mod submaj;
