#![no_std]
//! Exact computations for twisted affine Grassmannians: root systems, crystals,
//! representations, foldings, smooth loci and twisted loop algebras.

extern crate alloc;

pub mod error;
pub mod exact_linalg;
pub mod folding;
pub mod crystal;
pub mod e6;
pub mod rep;
pub mod root_system;
pub mod twisted_cells;
pub mod twisted_loop;

pub use error::{Error, Result};
