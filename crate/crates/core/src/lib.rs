pub mod constructions;
pub mod error;
pub mod exact;
pub mod geometry;
pub mod regions;
pub mod report;
pub mod search;
pub mod symmetry;
pub mod manifest;
pub mod scan;
pub mod svg;

pub use error::{Error, Result};
