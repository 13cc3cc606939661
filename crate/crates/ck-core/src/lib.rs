//! Exact symbolic engine for the Casimir invariants of the Cayley-Klein
//! (quasi-simple orthogonal) Lie algebras `so_{w1,...,wN}(N+1)`.
//!
//! The N contraction coefficients `w_a` are kept as exact symbolic
//! parameters (or fixed rationals), so one computation covers the whole
//! 3^N family at once: setting `w_a := 0` by substitution realizes the
//! Inonu-Wigner contraction with no generator rescaling.
//!
//! All arithmetic is exact: arbitrary-precision rationals for
//! coefficients, sparse multivariate polynomials in the `w_a` for the
//! symbolic paths. No floating point anywhere.
//!
//! The crate is `no_std` (alloc required); IO, CLI and file formats live
//! in the companion `ckcas` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod casimirs;
pub mod enveloping;
pub mod error;
pub mod gelfand;
pub mod matrix;
pub mod omega;
pub mod wsymbols;

pub use algebra::Generator;
pub use enveloping::{Centrality, EnvelopingElement, PbwMonomial};
pub use error::CkError;
pub use matrix::RatMatrix;
pub use omega::{OmegaEntry, OmegaPoly, OmegaSpec, Rational};
pub use wsymbols::{WIndexSet, WSymbol, WTable};
