pub mod field;
pub mod graph;

pub use field::{FieldError, FieldSpec, Polynomial, Scalar};
pub use graph::{Edge, Graph, GraphError, Path, VertexSet};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
