//! File formats, caption filtering and a stub image generator around
//! [`sprel_core`], plus the `sprel` command-line tool.

pub mod captions;
pub mod config;
mod error;
pub mod pgm;
pub mod profile;
pub mod records;
pub mod report;
pub mod scene;
pub mod stub;

pub use error::{Error, Result};
