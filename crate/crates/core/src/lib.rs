//! Exact construction and certified zero analysis of linear combinations of
//! Laguerre polynomials.
//!
//! Everything here is `no_std` with `alloc`. Polynomials carry exact rational
//! coefficients; real-zero statements are certified by Sturm sequences or by
//! exact sign alternation, while asymptotic comparisons run in floating point.

#![no_std]

extern crate alloc;

pub mod asymptotics;
pub mod combo;
pub mod error;
pub mod laguerre;
pub mod ratpoly;
pub mod zeros;

pub use error::{Error, Result};
pub use laguerre::Family;
pub use ratpoly::{Poly, Rational};
