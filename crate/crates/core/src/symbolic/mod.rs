//! Product-expression algebra over period atoms and the Gamma chain solver.

pub mod expr;
pub mod render;
pub mod rules;
pub mod solve;

pub use expr::{Atom, PeriodExpr};
pub use rules::{apply_duplication, apply_recurrence, apply_reflection};
pub use solve::{solve_closed_form, solve_fraction, ClosedForm};
