//! JSON documents and the `facelex` command line on top of `facelex-core`.

pub mod cli;
mod error;
pub mod format;

pub use cli::{dispatch, Outcome};
pub use error::FormatError;
