//! File formats and small-graph generation.
//!
//! * Rotation text: a line-oriented, 1-based listing of clockwise rotations.
//! * planar_code: the byte format used by common plane-graph generators.

mod canonical;
mod generate;
mod planar_code;
mod rotation_text;

pub use canonical::{canonical_code, canonical_form};
pub use generate::{generate_plane_graphs, graphs_with_order, GraphFilter, MAX_GENERATED_ORDER};
pub use planar_code::{read_planar_code, write_planar_code, PLANAR_CODE_HEADER};
pub use rotation_text::{parse_rotation, serialize_rotation, RotationDocument};

use thiserror::Error;

use crate::plane_graph::GraphError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("planar_code stream ends in the middle of a graph (byte {offset})")]
    TruncatedStream { offset: usize },
    #[error("unrecognized planar_code header")]
    BadHeader,
    #[error("planar_code graph at byte {offset} uses the two-byte variant, which is not supported")]
    WideVariant { offset: usize },
    #[error("graphs with more than {max} vertices cannot be generated")]
    BoundTooLarge { max: usize },
}
