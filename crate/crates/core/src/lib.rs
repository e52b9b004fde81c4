pub mod arrgmt;
pub mod cycle;
pub mod error;
pub mod exactalg;
pub mod fixtures;
pub mod groebner;
pub mod logder;
pub mod logideal;

pub use error::{Error, Result};
