pub mod error;
pub mod binomial;
pub mod graph;
pub mod harness;
pub mod poly;
pub mod regularity;
pub mod vnumber;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
