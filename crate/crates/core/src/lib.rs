// NaN inputs must fail the domain checks, hence `!(x > 0.0)` rather than `x <= 0.0`.
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision, clippy::type_complexity)]

pub mod continuum;
pub mod error;
pub mod mapping;
pub mod specfun;
pub mod sqdt;
pub mod suites;
pub mod susy;
pub mod systems;
pub mod verify;

pub use error::{Error, Result};
