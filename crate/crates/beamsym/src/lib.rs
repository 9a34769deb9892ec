//! Symmetry analysis of fourth-order beam vibration equations
//! `(f(x) u_xx)_xx + m(x) u_tt = 0` with smooth positive stiffness `f`
//! and linear density `m`.
//!
//! The crate classifies a beam by the size of its Lie point-symmetry
//! algebra, builds the explicit change of variables onto a canonical
//! representative whenever extra symmetries exist, generates families of
//! distinct beams sharing one spectrum, reduces the self-adjoint profile
//! ODE to a planar first-order system, and cross-checks every analytic
//! claim numerically (constraint residuals, commutator tables, pulled-back
//! PDE residuals, clamped-clamped spectra).
//!
//! Entry points:
//! - [`beam::BeamProfile`] — a beam `(f, m, [a, b])` parsed from text or a
//!   TOML beam file,
//! - [`classifier::classify`] — symmetry class with residual diagnostics,
//! - [`equivalence`] — canonical transforms, pullbacks, pushforwards,
//! - [`gottlieb`] — iso-spectral beam families,
//! - [`reduction`] — the profile ODE reduction chain,
//! - [`spectral`] — clamped-clamped discretization and eigenvalues.

pub mod beam;
pub mod classifier;
pub mod cli;
pub mod equivalence;
pub mod error;
pub mod expr;
pub mod gottlieb;
pub mod jet;
pub mod linalg;
pub mod numeric;
pub mod ode;
pub mod quad;
pub mod reduction;
pub mod report;
pub mod spectral;

pub use error::{Error, Result};
