//! Coefficient domains: Laurent polynomials in `q, z`, reduced rational
//! functions, the quadratic extension by `w = √λ`, and polynomials in the
//! trace parameters `s_k`.

mod field;
mod laurent;
pub mod modular;
mod poly;
mod rational;
mod spoly;
pub mod text;

use thiserror::Error;

pub use field::{lambda, XScalar};
pub use laurent::{Exp, IntLaurent};
pub use modular::{modular_evaluate, sample_point, Assignment, ModularError};
pub use rational::RationalFn;
pub use spoly::{Coeff, SMonomial, SPoly, TraceValue, XPoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
