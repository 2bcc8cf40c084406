pub mod alternating;
pub mod configurations;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod graph6;
pub mod ke;
pub mod limits;
pub mod matching;
pub mod verify;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::{Graph, LabelledGraph, VertexId};
pub use limits::Limits;
pub use matching::Matching;
pub use vertex_set::VertexSet;
