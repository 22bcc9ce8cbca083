//! Spatial relations between labeled bounding boxes.
//!
//! The crate is `no_std` (it needs `alloc`) and free of I/O. It covers:
//!
//! * [`geometry`]: box distances, the positional constraints for the
//!   2D relations (right, left, top, bottom, next, between) and the
//!   overlap + average-depth rule for front/behind.
//! * [`extract`]: turning a scene of detections into relation instances.
//! * [`prompt`]: rendering and parsing spatially explicit prompts.
//! * [`tore`]: flipping clauses towards the side a model renders better.
//! * [`eval`]: soft/strict accuracy and the opposite-pair bias table.
//!
//! File formats and the command line live in the companion `sprel` crate.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

mod error;
pub mod eval;
pub mod extract;
pub mod geometry;
pub mod prompt;
mod text;
pub mod tore;

pub use error::{Error, Result};
pub use geometry::{BoundingBox, DepthMap, Locality, RelationKind, Strictness};
pub use text::normalize_label;
