//! Shared helpers for the integration tests: a corpus of generated plane
//! graphs, relabelings, and the bundled fixture files.
#![allow(dead_code)]

use std::path::PathBuf;
use std::sync::OnceLock;

use plancol_core::io::{generate_plane_graphs, parse_rotation, GraphFilter};
use plancol_core::{PlaneGraph, RootedPlaneGraph, Vertex};
use proptest::prelude::*;

/// Every connected plane graph with at most 7 vertices.
pub fn corpus() -> &'static [PlaneGraph] {
    static C: OnceLock<Vec<PlaneGraph>> = OnceLock::new();
    C.get_or_init(|| generate_plane_graphs(7, GraphFilter::All).unwrap())
}

/// The same embedding with vertex `v` renamed `perm[v]`, mirrored if asked.
pub fn relabel(g: &PlaneGraph, perm: &[Vertex], mirror: bool) -> PlaneGraph {
    let rot = g.rotation();
    let mut out = vec![Vec::new(); rot.len()];
    for (v, list) in rot.iter().enumerate() {
        let mut l: Vec<Vertex> = list.iter().map(|&u| perm[u]).collect();
        if mirror {
            l.reverse();
        }
        out[perm[v]] = l;
    }
    PlaneGraph::from_rotation(out).unwrap()
}

/// A corpus graph under a random relabeling and reflection.
pub fn any_graph() -> impl Strategy<Value = PlaneGraph> {
    (0..corpus().len(), any::<bool>()).prop_flat_map(|(i, mirror)| {
        let n = corpus()[i].rotation().len();
        Just((0..n).collect::<Vec<Vertex>>()).prop_shuffle().prop_map(move |perm| relabel(&corpus()[i], &perm, mirror))
    })
}

/// A graph from [`any_graph`] rooted at a random face.
pub fn any_rooted() -> impl Strategy<Value = RootedPlaneGraph> {
    (any_graph(), any::<prop::sample::Index>())
        .prop_map(|(g, i)| {
            let f = i.index(g.face_count());
            RootedPlaneGraph::at_face(g, f)
        })
}

pub fn fixture_dir() -> PathBuf {
    [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures"].iter().collect()
}

/// The bundled rotation fixtures, by file name, with their roots.
pub fn fixtures() -> Vec<(String, PlaneGraph, Option<Vec<Vertex>>)> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(fixture_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "rot"))
        .collect();
    files.sort();
    files
        .into_iter()
        .map(|p| {
            let doc = parse_rotation(&std::fs::read_to_string(&p).unwrap()).unwrap();
            (p.file_name().unwrap().to_string_lossy().into_owned(), doc.graph, doc.outer)
        })
        .collect()
}
