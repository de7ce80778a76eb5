pub mod error;
pub mod exactnum;
pub mod game;
pub mod gibonacci;
pub mod posets;
#[cfg(test)]
mod properties;
pub mod roots;
pub mod verify;

pub use error::{Error, Result};
