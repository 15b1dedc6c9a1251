pub mod bitset;
pub mod cli;
pub mod enumeration;
pub mod error;
pub mod group;
pub mod io;
pub mod lattice;
pub mod render;
pub mod transfer;

pub use error::{Error, Result};
