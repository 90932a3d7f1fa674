//! Numerical analysis of the period function of separable planar
//! Hamiltonian centers `H(x, y) = F(x) + G(y)`.
//!
//! The library decides and verifies monotonicity of the period function
//! `T(E)` on the period annulus of the center at the origin. It combines
//! three mutually independent routes for `T(E)` (a smooth trigonometric
//! quadrature, a singular-endpoint quadrature, and an ODE return-time
//! oracle), a pointwise sign criterion `M(x, y)` whose one-signedness on
//! the sublevel region forces monotonicity, sampled sign certificates,
//! and a full case classifier for the cubic-quartic polynomial family
//! `H = x^2/2 + a x^3/3 + b x^4/4 + y^2/2 + c y^4/4`.

pub mod cli;
pub mod config;
pub mod criterion;
pub mod error;
pub mod gallery;
pub mod hamiltonian;
pub mod numerics;
pub mod period;
pub mod polyfamily;

pub use error::Error;
pub type Result<T> = std::result::Result<T, Error>;
