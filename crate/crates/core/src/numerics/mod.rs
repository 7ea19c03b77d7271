//! High-precision evaluation: reference Gamma and Beta, tanh-sinh quadrature
//! for the period integrals, branch-point integrals and expression evaluation.

pub mod arb;
pub mod branch;
pub mod eval;
pub mod gamma;
pub mod quad;

pub use arb::{ArbComplex, ArbReal, Precision, DEFAULT_DIGITS};
pub use branch::{branch_integral, symmetry_ratio, SymmetryReport};
pub use eval::{eval_expr, Numerics, PeriodMethod, Verification};
pub use gamma::{ref_beta, ref_gamma, ref_gamma_frac, Spouge};
pub use quad::{quad_i, quad_i_nk, QuadResult, TanhSinh};
