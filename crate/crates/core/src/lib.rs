//! Exact and finite-field machinery for quadratic-residue codes.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is pure
//! computation; parallel drivers, JSON and the command line live in the
//! `qrgp` companion crate.
//!
//! Module map:
//!
//! * [`cycint`]: exact arithmetic in `Z[z]/Phi_l(z)`, Gaussian periods and the
//!   sign of `l * gamma`, minors of the character matrix `(z^(ij))`.
//! * [`gf`]: `GF(p^m)` with a deterministic modulus, Legendre symbols, roots of
//!   unity and the absolute trace.
//! * [`poly`], [`linalg`]: polynomials and dense matrices over a [`gf::FieldCtx`].
//! * [`cyccode`]: cyclic codes, the trace construction, duals, MDS checks and
//!   exhaustive weight enumeration.
//! * [`qrext`]: the QR code family, its extension by `gamma`, the monomial map
//!   `sigma` and the invariance checks built on it.

#![no_std]
#![deny(rust_2018_idioms)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod cyccode;
pub mod cycint;
mod error;
pub mod gf;
pub mod linalg;
pub mod nt;
pub mod poly;
pub mod qrext;

pub use error::{Error, Result};
