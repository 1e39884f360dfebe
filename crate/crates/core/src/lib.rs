//! Exact-arithmetic kernel for quadric geometry.
//!
//! Everything here is exact: scalars live in `Q`, a prime field `F_p`, or a
//! small extension `F_{p^k}`; polynomials are sparse multivariate with
//! integer or field coefficients; linear algebra is fraction-free Gaussian
//! elimination. On top of that base the crate builds quadratic forms with
//! their polar forms, radicals and coranks (including the characteristic-2
//! corank correction), Clifford algebras with their ideals and spinor matrix
//! factorizations, hyperbolic reduction in coordinates, discriminant algebras
//! of even-rank quadric bundles, the cubic-fourfold-with-a-plane pipeline,
//! and exhaustive isotropic-subspace enumeration over finite fields.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the CLI live in
//! the companion `quadrics-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bundles;
pub mod clifford;
pub mod cubic4fold;
pub mod error;
pub mod exact;
pub mod fano;
pub mod quadform;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
