pub mod cli;
pub mod error;
pub mod exactalg;
pub mod expansions;
pub mod fock;
pub mod shapes;
pub mod supersym;

pub use error::{Error, Result};
