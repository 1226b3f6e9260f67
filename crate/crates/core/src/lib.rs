pub mod bounds;
pub mod canon;
pub mod cli;
pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod mp;
pub mod saturation;
pub mod search;
pub mod verify;

pub use error::{Error, Result};
pub use graph::Graph;
