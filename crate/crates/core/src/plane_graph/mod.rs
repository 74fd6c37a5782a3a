//! Combinatorial embeddings of plane graphs.
//!
//! A [`PlaneGraph`] is a connected simple graph together with a rotation
//! system: for every vertex the clockwise cyclic order of its neighbors.
//! Faces are traced with a fixed convention (see [`PlaneGraph::faces`]) so
//! face walks, and everything derived from them, are reproducible.

mod contract;
mod cycles;
mod embed;
mod rooted;

pub use contract::{contract_sets, Contraction};
pub use cycles::{check_family_membership, enumerate_cycles, CycleWitness, FamilyVerdict};
pub use embed::embed_planar;
pub use rooted::{FaceClass, RootedPlaneGraph};

use thiserror::Error;

/// Vertex ids are `0..n` internally; file formats use 1-based ids.
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has no vertices")]
    Empty,
    #[error("vertex {vertex} lists neighbor {neighbor}, which is out of range")]
    VertexOutOfRange { vertex: Vertex, neighbor: Vertex },
    #[error("edge {from}->{to} has no reverse edge {to}->{from}")]
    MissingReverseEdge { from: Vertex, to: Vertex },
    #[error("vertex {vertex} has a loop or a repeated neighbor")]
    LoopOrMultiEdge { vertex: Vertex },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("rotation system is not a sphere embedding: V={v}, E={e}, F={f}")]
    EulerViolation { v: usize, e: usize, f: usize },
    #[error("vertex sequence {0:?} is not the boundary of a face")]
    NotAFace(Vec<Vertex>),
    #[error("vertex sequence {0:?} is not a cycle")]
    NotACycle(Vec<Vertex>),
    #[error("contracting {0:?} would create a loop")]
    LoopCreated(Vec<Vertex>),
    #[error("contraction sets overlap at vertex {0}")]
    SetsOverlap(Vertex),
}

/// Read-only adjacency view shared by plane and abstract graphs.
pub trait Adjacency {
    fn vertex_count(&self) -> usize;
    fn neighbors(&self, v: Vertex) -> &[Vertex];

    fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v).len()
    }

    fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.neighbors(u).contains(&v)
    }

    fn edge_count(&self) -> usize {
        (0..self.vertex_count()).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.vertex_count() {
            for &v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out.sort_unstable();
        out
    }
}

/// A simple undirected graph without an embedding. Neighbor lists are sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    adj: Vec<Vec<Vertex>>,
}

impl SimpleGraph {
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u.min(v), neighbor: u.max(v) });
            }
            if u == v {
                return Err(GraphError::LoopOrMultiEdge { vertex: u });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(GraphError::LoopOrMultiEdge { vertex: v });
            }
        }
        Ok(SimpleGraph { adj })
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n).map(|v| (0..n).filter(|&u| u != v).collect()).collect();
        SimpleGraph { adj }
    }

    pub fn is_connected(&self) -> bool {
        is_connected(self)
    }

    /// Induced subgraph on `keep` (in the given order), plus the old ids.
    pub fn induced(g: &impl Adjacency, keep: &[Vertex]) -> SimpleGraph {
        let mut index = vec![usize::MAX; g.vertex_count()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| {
                let mut l: Vec<Vertex> = g
                    .neighbors(v)
                    .iter()
                    .filter(|&&u| index[u] != usize::MAX)
                    .map(|&u| index[u])
                    .collect();
                l.sort_unstable();
                l
            })
            .collect();
        SimpleGraph { adj }
    }
}

impl Adjacency for SimpleGraph {
    fn vertex_count(&self) -> usize {
        self.adj.len()
    }
    fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }
}

pub(crate) fn is_connected(g: &impl Adjacency) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &u in g.neighbors(v) {
            if !seen[u] {
                seen[u] = true;
                count += 1;
                stack.push(u);
            }
        }
    }
    count == n
}

/// A closed boundary walk. `walk[i] -> walk[i+1]` (cyclically) are the darts of the face.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Face {
    pub walk: Vec<Vertex>,
}

impl Face {
    /// Face degree: the length of the boundary walk.
    pub fn degree(&self) -> usize {
        self.walk.len()
    }

    /// Distinct vertices on the boundary, sorted.
    pub fn vertex_set(&self) -> Vec<Vertex> {
        let mut s = self.walk.clone();
        s.sort_unstable();
        s.dedup();
        s
    }

    /// True when the walk visits no vertex twice (the boundary is a cycle).
    pub fn is_cycle(&self) -> bool {
        self.walk.len() >= 3 && self.vertex_set().len() == self.walk.len()
    }
}

/// Immutable plane graph: rotation system plus derived faces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneGraph {
    rotation: Vec<Vec<Vertex>>,
    /// `rev[v][i]` is the index of `v` in the rotation of `rotation[v][i]`.
    rev: Vec<Vec<usize>>,
    faces: Vec<Face>,
    /// `dart_face[v][i]` is the face containing the dart `v -> rotation[v][i]`.
    dart_face: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Adjacency for PlaneGraph {
    fn vertex_count(&self) -> usize {
        self.rotation.len()
    }
    fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.rotation[v]
    }
    fn edge_count(&self) -> usize {
        self.edge_count
    }
}

impl PlaneGraph {
    /// Builds a plane graph from clockwise neighbor lists (0-based).
    pub fn from_rotation(rotation: Vec<Vec<Vertex>>) -> Result<Self, GraphError> {
        let n = rotation.len();
        if n == 0 {
            return Err(GraphError::Empty);
        }
        for (v, list) in rotation.iter().enumerate() {
            for &u in list {
                if u >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, neighbor: u });
                }
                if u == v {
                    return Err(GraphError::LoopOrMultiEdge { vertex: v });
                }
            }
            let mut sorted = list.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return Err(GraphError::LoopOrMultiEdge { vertex: v });
            }
        }
        let mut rev = Vec::with_capacity(n);
        for (v, list) in rotation.iter().enumerate() {
            let mut r = Vec::with_capacity(list.len());
            for &u in list {
                match rotation[u].iter().position(|&w| w == v) {
                    Some(j) => r.push(j),
                    None => return Err(GraphError::MissingReverseEdge { from: v, to: u }),
                }
            }
            rev.push(r);
        }
        let edge_count = rotation.iter().map(Vec::len).sum::<usize>() / 2;
        let mut g = PlaneGraph { rotation, rev, faces: Vec::new(), dart_face: Vec::new(), edge_count };
        if !is_connected(&g) {
            return Err(GraphError::Disconnected);
        }
        g.trace();
        let f = g.faces.len();
        if n as isize - edge_count as isize + f as isize != 2 {
            return Err(GraphError::EulerViolation { v: n, e: edge_count, f });
        }
        Ok(g)
    }

    /// The successor of dart `v -> rotation[v][i]` on its face, as `(w, j)`
    /// meaning the dart `w -> rotation[w][j]`.
    ///
    /// From `(u, v)` the walk continues to `(v, w)` where `w` precedes `u`
    /// in the clockwise rotation at `v`.
    #[inline]
    pub fn next_dart(&self, v: Vertex, i: usize) -> (Vertex, usize) {
        let w = self.rotation[v][i];
        let j = self.rev[v][i];
        let d = self.rotation[w].len();
        (w, (j + d - 1) % d)
    }

    fn trace(&mut self) {
        let n = self.rotation.len();
        let mut dart_face: Vec<Vec<usize>> = self.rotation.iter().map(|l| vec![usize::MAX; l.len()]).collect();
        let mut faces = Vec::new();
        if self.edge_count == 0 {
            // K1: the single face has an empty boundary walk.
            faces.push(Face { walk: vec![0] });
        }
        for v in 0..n {
            for i in 0..self.rotation[v].len() {
                if dart_face[v][i] != usize::MAX {
                    continue;
                }
                let id = faces.len();
                let mut walk = Vec::new();
                let (mut x, mut k) = (v, i);
                loop {
                    dart_face[x][k] = id;
                    walk.push(x);
                    let (y, l) = self.next_dart(x, k);
                    x = y;
                    k = l;
                    if x == v && k == i {
                        break;
                    }
                }
                faces.push(Face { walk });
            }
        }
        self.faces = faces;
        self.dart_face = dart_face;
    }

    /// Clockwise neighbor lists.
    pub fn rotation(&self) -> &[Vec<Vertex>] {
        &self.rotation
    }

    /// Faces in order of their first dart `(v, i)`, `v` ascending then rotation index.
    ///
    /// For K1 a single face with walk `[0]` is reported (degree counted as 0
    /// by [`PlaneGraph::face_degree_sum`]).
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// Face of the dart `v -> rotation[v][i]`.
    pub fn dart_face(&self, v: Vertex, i: usize) -> usize {
        self.dart_face[v][i]
    }

    /// Face of the directed edge `u -> v`, if the edge exists.
    pub fn face_of_edge(&self, u: Vertex, v: Vertex) -> Option<usize> {
        let i = self.rotation[u].iter().position(|&w| w == v)?;
        Some(self.dart_face[u][i])
    }

    /// Sum of face walk lengths (equals `2E`).
    pub fn face_degree_sum(&self) -> usize {
        if self.edge_count == 0 {
            0
        } else {
            self.faces.iter().map(Face::degree).sum()
        }
    }

    /// Faces incident with `v` in clockwise corner order: entry `i` is the face
    /// between `rotation[v][i]` and `rotation[v][i+1]`.
    pub fn corner_faces(&self, v: Vertex) -> Vec<usize> {
        self.dart_face[v].clone()
    }

    /// Index of the face whose boundary is exactly the given cycle (either direction).
    pub fn find_face(&self, cycle: &[Vertex]) -> Option<usize> {
        let key = canonical_cycle(cycle);
        self.faces
            .iter()
            .position(|f| f.walk.len() == cycle.len() && f.is_cycle() && canonical_cycle(&f.walk) == key)
    }

    /// All cycles of length at most `max_len`, canonical and tagged.
    pub fn cycles_up_to(&self, max_len: usize) -> Vec<CycleWitness> {
        cycles::tagged_cycles(self, max_len)
    }

    /// Whether `cycle` has vertices strictly on both sides.
    pub fn is_separating(&self, cycle: &[Vertex]) -> Result<bool, GraphError> {
        if !is_cycle_of(self, cycle) {
            return Err(GraphError::NotACycle(cycle.to_vec()));
        }
        Ok(cycles::separates(self, cycle))
    }

    /// Roots the graph at the face bounded by `cycle`.
    pub fn root_at(&self, cycle: &[Vertex]) -> Result<RootedPlaneGraph, GraphError> {
        RootedPlaneGraph::new(self.clone(), cycle)
    }

    /// Mirror image: every rotation reversed.
    pub fn mirror(&self) -> PlaneGraph {
        let rot = self.rotation.iter().map(|l| l.iter().rev().copied().collect()).collect();
        PlaneGraph::from_rotation(rot).expect("mirror of a plane graph is plane")
    }

    /// Relabels vertices: new id of `v` is `perm[v]`; rotations keep their cyclic order.
    pub fn relabel(&self, perm: &[Vertex]) -> PlaneGraph {
        let n = self.vertex_count();
        let mut rot = vec![Vec::new(); n];
        for v in 0..n {
            rot[perm[v]] = self.rotation[v].iter().map(|&u| perm[u]).collect();
        }
        PlaneGraph::from_rotation(rot).expect("relabeling preserves validity")
    }

    pub fn to_simple(&self) -> SimpleGraph {
        SimpleGraph::from_edges(self.vertex_count(), &self.edges()).expect("plane graphs are simple")
    }
}

/// Whether `seq` is a cycle of `g` (distinct vertices, consecutive ones adjacent).
pub fn is_cycle_of(g: &impl Adjacency, seq: &[Vertex]) -> bool {
    let n = g.vertex_count();
    if seq.len() < 3 || seq.iter().any(|&v| v >= n) {
        return false;
    }
    let mut s = seq.to_vec();
    s.sort_unstable();
    if s.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    (0..seq.len()).all(|i| g.has_edge(seq[i], seq[(i + 1) % seq.len()]))
}

/// Lexicographically least rotation/reflection of a cyclic sequence.
pub fn canonical_cycle(seq: &[Vertex]) -> Vec<Vertex> {
    let k = seq.len();
    let mut best: Option<Vec<Vertex>> = None;
    for dir in [false, true] {
        for s in 0..k {
            let cand: Vec<Vertex> = (0..k)
                .map(|i| if dir { seq[(s + k - i) % k] } else { seq[(s + i) % k] })
                .collect();
            if best.as_ref().map_or(true, |b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn triangle() -> PlaneGraph {
        PlaneGraph::from_rotation(vec![vec![1, 2], vec![2, 0], vec![0, 1]]).unwrap()
    }

    /// Cube: outer square 0-1-2-3, inner square 4-5-6-7, spokes i -- i+4.
    pub fn cube() -> PlaneGraph {
        PlaneGraph::from_rotation(vec![
            vec![1, 4, 3],
            vec![2, 5, 0],
            vec![3, 6, 1],
            vec![0, 7, 2],
            vec![0, 5, 7],
            vec![1, 6, 4],
            vec![2, 7, 5],
            vec![3, 4, 6],
        ])
        .unwrap()
    }

    /// K4 drawn as a triangle 0,1,2 with hub 3 inside.
    pub fn k4() -> PlaneGraph {
        PlaneGraph::from_rotation(vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]]).unwrap()
    }

    pub fn cycle(n: usize) -> PlaneGraph {
        PlaneGraph::from_rotation((0..n).map(|i| vec![(i + 1) % n, (i + n - 1) % n]).collect()).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn triangle_has_two_faces() {
        let g = triangle();
        assert_eq!((g.vertex_count(), g.edge_count(), g.face_count()), (3, 3, 2));
        assert!(g.faces().iter().all(|f| f.degree() == 3));
    }

    #[test]
    fn cube_counts() {
        let g = cube();
        assert_eq!((g.vertex_count(), g.edge_count(), g.face_count()), (8, 12, 6));
        assert!(g.faces().iter().all(|f| f.degree() == 4 && f.is_cycle()));
        assert_eq!(g.face_degree_sum(), 24);
    }

    #[test]
    fn single_edge_has_one_face_of_length_two() {
        let g = PlaneGraph::from_rotation(vec![vec![1], vec![0]]).unwrap();
        assert_eq!(g.face_count(), 1);
        assert_eq!(g.faces()[0].walk, vec![0, 1]);
    }

    #[test]
    fn single_vertex() {
        let g = PlaneGraph::from_rotation(vec![vec![]]).unwrap();
        assert_eq!(g.face_count(), 1);
        assert_eq!(g.face_degree_sum(), 0);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            PlaneGraph::from_rotation(vec![vec![1], vec![]]),
            Err(GraphError::MissingReverseEdge { from: 0, to: 1 })
        );
        assert_eq!(PlaneGraph::from_rotation(vec![vec![0]]), Err(GraphError::LoopOrMultiEdge { vertex: 0 }));
        assert_eq!(
            PlaneGraph::from_rotation(vec![vec![1, 1], vec![0, 0]]),
            Err(GraphError::LoopOrMultiEdge { vertex: 0 })
        );
        assert_eq!(
            PlaneGraph::from_rotation(vec![vec![1], vec![0], vec![]]),
            Err(GraphError::Disconnected)
        );
        // K4 with one rotation reversed embeds on the torus, not the sphere.
        let bad = PlaneGraph::from_rotation(vec![vec![1, 2, 3], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]]);
        assert!(matches!(bad, Err(GraphError::EulerViolation { .. })));
    }

    #[test]
    fn corner_faces_match_walks() {
        let g = cube();
        for v in 0..8 {
            let rot = &g.rotation()[v];
            for (i, f) in g.corner_faces(v).into_iter().enumerate() {
                // The walk enters v from rot[i+1] and leaves towards rot[i].
                let w = &g.faces()[f].walk;
                let p = w.iter().position(|&x| x == v).unwrap();
                assert_eq!(w[(p + 1) % w.len()], rot[i]);
                assert_eq!(w[(p + w.len() - 1) % w.len()], rot[(i + 1) % rot.len()]);
            }
        }
    }

    #[test]
    fn canonical_cycle_form() {
        assert_eq!(canonical_cycle(&[3, 1, 2]), vec![1, 2, 3]);
        assert_eq!(canonical_cycle(&[2, 1, 3]), vec![1, 2, 3]);
        assert_eq!(canonical_cycle(&[4, 0, 5, 1]), vec![0, 4, 1, 5]);
    }
}
