//! Exact Weil–Petersson volumes of moduli spaces of pointed curves.
//!
//! The volumes `V_{g,n} = <kappa_1^{3g-3+n}>` are computed two ways:
//!
//! * [`kappavol::volume`] converts `kappa_1` powers into Witten–Kontsevich
//!   correlators, evaluated exactly by [`taucalc::TauEngine`];
//! * [`genexp::build_phi_g`] assembles the generating function `phi_g(x)`
//!   from the inverse `y(x)` of a Bessel-type series and the auxiliary
//!   series `f_i`.
//!
//! The coefficients agree exactly, and [`genexp`] also checks the
//! identities linking the two routes. [`asympt`] fits the large-`n`
//! growth of the volumes and compares it with the singularity of `y(x)`.
//!
//! ```
//! use wpvol::genexp::{build_phi_g, GenusExpansionContext};
//! use wpvol::kappavol::volume;
//! use wpvol::taucalc::TauEngine;
//!
//! let engine = TauEngine::new();
//! let ctx = GenusExpansionContext::for_genus(2, 3).unwrap();
//! let phi2 = build_phi_g(2, &ctx, &engine, 3).unwrap();
//! for n in 0..=3 {
//!     assert_eq!(phi2.coeffs()[n], volume(&engine, 2, n as u32).normalized);
//! }
//! ```
//!
//! A narrative guide lives in the `book/` directory of the repository; its
//! code listings are compiled as doctests of this crate.

pub mod asympt;
pub mod genexp;
pub mod kappavol;
pub mod qseries;
pub mod taucalc;

#[cfg(doctest)]
mod book;

pub use qseries::{Rational, Series};
