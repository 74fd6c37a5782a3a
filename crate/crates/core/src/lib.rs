//! Plane-graph toolkit for defective colorings and discharging arguments.
//!
//! * [`plane_graph`] — rotation-system embeddings, faces, cycles, the family
//!   test (no 5-cycles, no two triangles sharing an edge), contractions.
//! * [`coloring`] — defective colorings, an exact solver and superextension.
//! * [`configurations`] — a catalog of reducible configurations and a
//!   brute-force local extendability checker.
//! * [`discharging`] — exact rational charges and the transfer rules.
//! * [`caseenum`] — enumeration of local charge scenarios around a center.
//! * [`io`] — rotation text and planar_code formats, and a plane graph generator.

pub mod caseenum;
pub mod coloring;
pub mod configurations;
pub mod discharging;
pub mod io;
pub mod plane_graph;

pub use coloring::{ColorSpec, Coloring};
pub use plane_graph::{Adjacency, GraphError, PlaneGraph, RootedPlaneGraph, SimpleGraph, Vertex};
