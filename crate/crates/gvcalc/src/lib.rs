//! Exact-arithmetic toolkit for enumerative invariants of contractible curves.
//!
//! The crate has four subject areas plus file I/O:
//!
//! - [`series`]: exact rationals, truncated Laurent series in the genus
//!   parameter λ, curve classes and degree functionals.
//! - [`transform`]: the all-genus multiple-cover expansion taking
//!   Gopakumar-Vafa tables to Gromov-Witten tables, its inversion, the
//!   genus-0 Möbius inversion, an integrality audit, and the local
//!   divisor-sum contribution of a contractible curve.
//! - [`ade`]: symbolic powers of the curve ideal in A_k hypersurface
//!   rings, resolution-chart pullbacks, vanishing orders, and the
//!   degree −1 check for the six contraction cases.
//! - [`sheaf`]: Hilbert-polynomial comparisons, stability audits, and
//!   the moduli enumeration for thickened curves.
//! - [`io`]: the versioned JSON table format used by the CLI.
//!
//! All arithmetic is exact; no floating point is used anywhere.

pub mod ade;
pub mod error;
pub mod io;
pub mod rational;
pub mod series;
pub mod sheaf;
pub mod transform;

pub use error::Error;
pub use rational::Rational;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
