//! Exact discrete residues of rational functions over Q(x).
//!
//! The discrete residues of `f` are complete obstructions to rational
//! summability: `f = g(x+1) - g(x)` for some rational `g` iff all of them
//! vanish. This crate computes them symbolically, as pairs of polynomials
//! `(B_k, D_k)` where the roots of `B_k` represent the orbits `alpha + Z`
//! with nonzero residue of order `k` and `D_k` evaluates to that residue.
//! Nothing here factors a denominator into irreducibles: everything runs on
//! gcds, resultants, partial fractions over known coprime splittings, and
//! exact linear algebra.
//!
//! Pipeline:
//!
//! 1. [`hermite::hermite_list`] splits a proper `f` into layers `f_k` with
//!    simple poles carrying the order-`k` classical residues.
//! 2. [`reduction::simple_reduction`] shifts every pole of a layer onto the
//!    leftmost point of its orbit.
//! 3. [`residues::first_residues`] expresses the residues at the remaining
//!    poles as a polynomial evaluated at the roots of the denominator.
//!
//! On top of that sit parameterized summability ([`summability::vspace`])
//! and multiplicative relations for diagonal difference systems
//! ([`galois::multiplicative_relations`]).

pub mod error;
pub mod expr;
pub mod galois;
pub mod hermite;
pub mod lattice;
pub mod linalg;
pub mod poly;
pub mod ratfun;
pub mod reduction;
pub mod residues;
pub mod shiftset;
pub mod summability;
pub mod testkit;

pub use error::{Error, Result};
pub use poly::{Poly, SquarefreeDecomposition};
pub use ratfun::RatFun;

/// Exact rational scalar.
pub type Rat = num_rational::BigRational;

/// Builds the rational `num/den`. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(num.into(), den.into())
}

/// Formats a rational as `p/q` with `q >= 1`, integers included.
pub fn rat_to_string(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}
