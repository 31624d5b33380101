//! Numerical beta functions of closed space curves.
//!
//! A closed curve `γ` carries two natural two-point self-energies: the
//! single-layer integral `B(s) = ∬ ‖γ(x) − γ(y)‖^s ds ds` over arclength, and
//! the coaxial-layer variant obtained by applying the normal-plane second
//! derivative at both endpoints, which splits as
//! `s(s−2)(s+1)(s−1)·B(s−4)` plus a mean-curvature term. Both are meromorphic
//! in `s` after continuation across their convergence half-planes.
//!
//! This crate provides
//!
//! - exact jet (truncated Taylor) arithmetic and curve models with analytic
//!   jet evaluation ([`jets`], [`curves`]),
//! - canonical local graph coefficients at a curve point with the closed-form
//!   curvature/torsion and residue polynomials in them ([`localgraph`]),
//! - direct quadrature of the energies in their convergence half-planes
//!   ([`beta`]),
//! - meromorphic continuation by diagonal Taylor subtraction and residue
//!   extraction at the simple poles ([`continuation`]),
//! - a verification harness and a CLI front end ([`verify`], [`cli`]).

pub mod beta;
pub mod cli;
pub mod continuation;
pub mod curves;
pub mod geom;
pub mod jets;
pub mod localgraph;
pub mod special;
pub mod verify;

pub use beta::{beta_b2, beta_coaxial, beta_single_layer, BetaError, BetaKind, BetaValue, QuadratureSpec};
pub use continuation::{
    continue_beta, residue, residue_numeric, ContinuationConfig, ContinuationError,
    ContinuationKind, ResidueReport,
};
pub use curves::{Curve, CurveError, CurveKind, FrenetData, TrigPoly};
pub use geom::Vec3;
pub use jets::{CJet, Jet, JetError, RJet, Scalar};
pub use localgraph::{graph_coefficients, invariants_from_coeffs, pointwise_residues, GraphCoeffs};

pub use num_complex::Complex64;
