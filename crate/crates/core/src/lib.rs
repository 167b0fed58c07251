//! Exact computational Galois theory for small degrees.
//!
//! Polynomials over ℚ, finite fields and quotient fields, irreducibility
//! certificates over ℚ, number fields with minimum polynomials, Galois group
//! classification up to degree 5, concrete permutation groups and
//! ruler-and-compass decision procedures.

pub mod construct;
pub mod error;
pub mod exact;
pub mod galois;
pub mod irr;
pub mod modp;
pub mod numfield;
pub mod permgrp;
pub mod poly;
pub mod ring;

pub use error::{Error, Result};
pub use exact::{BigInt, Rational};
pub use poly::{Degree, Poly, QPoly};
pub use ring::{Field, FiniteField, FiniteRing, RationalField, Ring};
