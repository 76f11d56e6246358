//! Special functions: gamma, generalized Laguerre polynomials and Kummer's
//! confluent hypergeometric function.

mod gamma;
mod hyp1f1;
mod laguerre;

pub use gamma::{gamma_fn, ln_gamma};
pub use hyp1f1::{hyp1f1, ComplexValue};
pub use laguerre::{laguerre, PolyEval};

pub(crate) use hyp1f1::hyp1f1_jet;
pub(crate) use laguerre::{laguerre_derivative, laguerre_value};
