//! Kummer extensions `y^m = f(x)` over finite fields.
//!
//! This crate models the curve, its totally ramified places and divisors
//! supported on them, and computes Riemann-Roch dimensions along two
//! independent routes: the closed form coming from the absolute maximal
//! elements of the generalized Weierstrass semigroup, and a decomposition of
//! `L(D)` over the rational subfield `F_q(x)`. On top of that sit criteria
//! and explicit families of non-special divisors of degree `g - 1` and `g`,
//! and three constructions of linear complementary pairs (LCPs) of
//! algebraic geometry codes.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod arith;
pub mod codes;
pub mod constructions;
pub mod curve;
pub mod divisor;
mod error;
pub mod field;
pub mod function;
pub mod nonspecial;
pub mod poly;
pub mod presets;
pub mod rrspace;
pub mod semigroup;

pub use codes::{LcpReport, LinearCode, Matrix};
pub use curve::{Generator, KummerCurve, RationalPlaces, Root};
pub use divisor::{Divisor, Place};
pub use error::{Error, Result};
pub use field::{ArithOp, Field, FieldElement};
pub use function::CurveFunction;
pub use poly::Poly;
pub use semigroup::{GammaElement, QTuple};
