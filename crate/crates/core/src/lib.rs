//! Exact-arithmetic kernel for conjugate-polynomial verification.
//!
//! Given a separable irreducible polynomial `f` over a base field `K` (the
//! rationals or a prime field) and a divisor `g` of `f` whose coefficients
//! live in the splitting field of `f`, the crate computes the distinct
//! conjugates of `g` under the Galois group, their product `h`, and
//! certifies that the number of conjugates equals the degree of the
//! coefficient field of `g` and that `h = c * f^n` exactly. A companion
//! check establishes the norm analogue in monogenic rings: the norm of a
//! divisor of a rational prime is that prime to a power, times a unit.
//!
//! Everything is computed in exact arithmetic; there are no tolerances
//! anywhere. The crate is `no_std` (with `alloc`); parsing, printing and
//! the command-line front end live in the companion `polyconj-cli` crate.

#![cfg_attr(not(test), no_std)]
// Multi-polynomial return tuples are clearer than named aliases here.
#![allow(clippy::type_complexity)]

extern crate alloc;

pub mod arith;
pub mod conjtheorem;
pub mod error;
pub mod factor_fp;
pub mod factor_qq;
mod linalg;
pub mod normtheorem;
pub mod numfield;
pub mod poly;
pub mod rng;
pub mod splitting;

pub use arith::{Field, Integer, PrimeField, PrimeFieldElement, Rational, Rationals};
pub use conjtheorem::{
    divisor_from_roots, frobenius_setting, ConjugateSetting, CorollaryStatus, DivisorSpec,
    VerificationReport,
};
pub use error::{Error, Result};
pub use normtheorem::{MonogenicRing, NormReport, RingElement};
pub use numfield::{NFElement, NumberField, QElem, QuotientField};
pub use poly::Poly;
pub use splitting::{build_splitting_field, Automorphism, SplittingField};
