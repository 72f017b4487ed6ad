//! Belief-propagation decoding of quantum LDPC stabilizer codes.

pub mod bp;
pub mod channel;
pub mod construct;
pub mod decoders;
pub mod error;
pub mod gf;
pub mod sim;
pub mod stabilizer;

pub use error::{Error, Result};
