//! Shared inputs for the benchmarks.

use plancol_core::io::{generate_plane_graphs, GraphFilter};
use plancol_core::{PlaneGraph, RootedPlaneGraph};

/// Cube rooted at the square 0-1-2-3.
pub fn cube() -> RootedPlaneGraph {
    let g = PlaneGraph::from_rotation(vec![
        vec![1, 4, 3],
        vec![2, 5, 0],
        vec![3, 6, 1],
        vec![0, 7, 2],
        vec![0, 5, 7],
        vec![1, 6, 4],
        vec![2, 7, 5],
        vec![3, 4, 6],
    ])
    .expect("cube embeds");
    g.root_at(&[0, 1, 2, 3]).expect("outer square is a face")
}

/// Graphs in F with at most `n` vertices.
pub fn family(n: usize) -> Vec<PlaneGraph> {
    generate_plane_graphs(n, GraphFilter::FamilyF).expect("bound within the generator limit")
}
