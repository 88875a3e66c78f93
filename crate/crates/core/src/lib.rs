//! Exact-arithmetic toolkit for base-change lifts of classical newforms to
//! totally real Galois number fields: prime decomposition, the
//! residual-degree eigenvalue formula, local L-factor comparison, ordinary
//! stabilization, and weight-indexed family tables, with bundled example
//! data and an LMFDB ingestion client.

pub mod characters;
pub mod error;
pub mod finitefield;
pub mod fixtures;
pub mod hida;
pub mod lfunction;
pub mod lift;
pub mod lmfdb;
pub mod newform;
pub mod numberfield;
pub(crate) mod qpoly;

pub use error::{Error, Result};
