pub mod base;
pub mod charge;
pub mod collapse;
pub mod error;
pub mod fillings;
pub mod matching;
pub mod mlq;
pub mod poly;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
