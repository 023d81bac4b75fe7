//! Exact construction and certification of regular nut graphs.
//!
//! A nut graph has a one-dimensional adjacency kernel spanned by a vector with
//! no zero entries. Everything here is computed over the integers; no floating
//! point enters any verdict.

pub mod error;
pub mod exactla;
pub mod families;
pub mod graphcore;
pub mod nutcert;
pub mod polyz;

pub use error::{Error, Result};
pub use exactla::{ExactMatrix, KernelResult};
pub use graphcore::{CirculantSpec, Graph};
pub use nutcert::{NutCertificate, Route};
pub use polyz::{CyclotomicFactorSet, IntPoly};
