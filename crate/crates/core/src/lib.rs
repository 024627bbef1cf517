//! Affine flag varieties, their Schubert cells and motivic classes.

pub mod affine_weyl;
pub mod error;
pub mod flag_cells;
pub mod kl_hecke;
pub mod lattice;
pub mod motive;
pub mod oracle;
pub mod parse;
pub mod root_datum;
pub mod shtuka;

pub use error::{Error, Result};
