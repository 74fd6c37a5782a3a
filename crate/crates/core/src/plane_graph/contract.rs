use super::{check_family_membership, embed_planar, Adjacency, FamilyVerdict, GraphError, PlaneGraph, SimpleGraph, Vertex};

/// Result of identifying vertex sets.
#[derive(Debug, Clone)]
pub struct Contraction {
    pub graph: SimpleGraph,
    /// `map[v]` is the new id of old vertex `v`.
    pub map: Vec<Vertex>,
    /// A fresh plane embedding of `graph`, when one was found.
    pub embedding: Option<PlaneGraph>,
}

impl Contraction {
    /// Family test on the contracted graph. The test only looks at cycles,
    /// so it does not depend on whether an embedding was found.
    pub fn family_verdict(&self) -> FamilyVerdict {
        check_family_membership(&self.graph)
    }
}

/// Identifies each set into a single vertex, merging parallel edges.
///
/// New ids follow the least original vertex of each class. Sets must be
/// disjoint and independent (identifying adjacent vertices would create a loop).
pub fn contract_sets(g: &impl Adjacency, sets: &[Vec<Vertex>]) -> Result<Contraction, GraphError> {
    let n = g.vertex_count();
    let mut class: Vec<Vertex> = (0..n).collect();
    let mut seen = vec![false; n];
    for set in sets {
        for &v in set {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, neighbor: v });
            }
            if seen[v] {
                return Err(GraphError::SetsOverlap(v));
            }
            seen[v] = true;
        }
        for (i, &a) in set.iter().enumerate() {
            if set[i + 1..].iter().any(|&b| g.has_edge(a, b)) {
                let mut s = set.clone();
                s.sort_unstable();
                return Err(GraphError::LoopCreated(s));
            }
        }
        if let Some(&m) = set.iter().min() {
            for &v in set {
                class[v] = m;
            }
        }
    }
    let mut reps: Vec<Vertex> = class.clone();
    reps.sort_unstable();
    reps.dedup();
    let mut new_id = vec![usize::MAX; n];
    for (i, &r) in reps.iter().enumerate() {
        new_id[r] = i;
    }
    let map: Vec<Vertex> = (0..n).map(|v| new_id[class[v]]).collect();
    let mut edges: Vec<(Vertex, Vertex)> = g
        .edges()
        .into_iter()
        .map(|(u, v)| (map[u].min(map[v]), map[u].max(map[v])))
        .collect();
    edges.sort_unstable();
    edges.dedup();
    let graph = SimpleGraph::from_edges(reps.len(), &edges)?;
    let embedding = embed_planar(&graph);
    Ok(Contraction { graph, map, embedding })
}
