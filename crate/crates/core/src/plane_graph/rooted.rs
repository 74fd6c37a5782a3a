use super::{Adjacency, GraphError, PlaneGraph, Vertex};

/// Degree of a non-outer face and how many distinct C0 vertices lie on it.
///
/// `hits == 0` is the plain class F_k, `1` is F_k', `2` is F_k''.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FaceClass {
    pub degree: usize,
    pub hits: usize,
}

impl FaceClass {
    pub fn is_interior(&self, k: usize) -> bool {
        self.degree == k && self.hits == 0
    }

    /// Short label such as `F3`, `F4'`, `F3''`, `F6+`, `F4[3]`.
    pub fn label(&self) -> String {
        let d = if self.degree >= 6 { "6+".to_string() } else { self.degree.to_string() };
        let marks = match self.hits {
            0 => String::new(),
            1 => "'".into(),
            2 => "''".into(),
            h => format!("[{h}]"),
        };
        format!("F{d}{marks}")
    }
}

/// A plane graph with a designated facial cycle C0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedPlaneGraph {
    base: PlaneGraph,
    outer: Vec<Vertex>,
    outer_face: usize,
    on_outer: Vec<bool>,
    classes: Vec<FaceClass>,
    chords: Vec<(Vertex, Vertex)>,
}

impl RootedPlaneGraph {
    pub fn new(base: PlaneGraph, cycle: &[Vertex]) -> Result<Self, GraphError> {
        let outer_face = base.find_face(cycle).ok_or_else(|| GraphError::NotAFace(cycle.to_vec()))?;
        let n = base.vertex_count();
        let mut on_outer = vec![false; n];
        for &v in cycle {
            on_outer[v] = true;
        }
        let classes = base
            .faces()
            .iter()
            .map(|f| FaceClass { degree: f.degree(), hits: f.vertex_set().iter().filter(|&&v| on_outer[v]).count() })
            .collect();
        let k = cycle.len();
        let mut chords = Vec::new();
        for i in 0..k {
            for j in i + 2..k {
                if i == 0 && j == k - 1 {
                    continue;
                }
                let (a, b) = (cycle[i], cycle[j]);
                if base.has_edge(a, b) {
                    chords.push((a.min(b), a.max(b)));
                }
            }
        }
        chords.sort_unstable();
        Ok(RootedPlaneGraph { base, outer: cycle.to_vec(), outer_face, on_outer, classes, chords })
    }

    /// Roots at face `f` whatever its boundary; the outer walk may repeat
    /// vertices (trees, cut vertices). Used by charge sweeps over corpora
    /// whose graphs need not have a facial cycle.
    pub fn at_face(base: PlaneGraph, f: usize) -> Self {
        let walk = base.faces()[f].walk.clone();
        if base.faces()[f].is_cycle() {
            return RootedPlaneGraph::new(base, &walk).expect("a facial cycle is a face");
        }
        let n = base.vertex_count();
        let mut on_outer = vec![false; n];
        for &v in &walk {
            on_outer[v] = true;
        }
        let classes = base
            .faces()
            .iter()
            .map(|f| FaceClass { degree: f.degree(), hits: f.vertex_set().iter().filter(|&&v| on_outer[v]).count() })
            .collect();
        RootedPlaneGraph { base, outer: walk, outer_face: f, on_outer, classes, chords: Vec::new() }
    }

    /// Whether C0 is a cycle (always, unless built by [`RootedPlaneGraph::at_face`]).
    pub fn outer_is_cycle(&self) -> bool {
        self.base.faces()[self.outer_face].is_cycle()
    }

    pub fn base(&self) -> &PlaneGraph {
        &self.base
    }

    /// C0 in the order it was given.
    pub fn outer(&self) -> &[Vertex] {
        &self.outer
    }

    pub fn outer_face(&self) -> usize {
        self.outer_face
    }

    pub fn on_outer(&self, v: Vertex) -> bool {
        self.on_outer[v]
    }

    /// Class of face `f`; meaningless for the outer face itself.
    pub fn class(&self, f: usize) -> FaceClass {
        self.classes[f]
    }

    /// Edges between non-consecutive C0 vertices.
    pub fn chords(&self) -> &[(Vertex, Vertex)] {
        &self.chords
    }

    /// Non-outer face ids.
    pub fn inner_faces(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.base.face_count()).filter(move |&f| f != self.outer_face)
    }

    /// Vertices not on C0.
    pub fn interior_vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.base.vertex_count()).filter(move |&v| !self.on_outer[v])
    }

    /// Interior vertices of degree below three (impossible in a minimal counterexample).
    pub fn low_degree_interior(&self) -> Vec<Vertex> {
        self.interior_vertices().filter(|&v| self.base.degree(v) < 3).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    fn count(r: &RootedPlaneGraph, degree: usize, hits: usize) -> usize {
        r.inner_faces().filter(|&f| r.class(f) == FaceClass { degree, hits }).count()
    }

    #[test]
    fn cube_rooted_at_a_face() {
        let r = cube().root_at(&[0, 1, 2, 3]).unwrap();
        assert_eq!(count(&r, 4, 2), 4);
        assert_eq!(count(&r, 4, 0), 1);
        assert!(r.chords().is_empty());
    }

    #[test]
    fn k4_rooted_at_outer_triangle() {
        let r = k4().root_at(&[0, 1, 2]).unwrap();
        assert_eq!(count(&r, 3, 2), 3);
        assert_eq!(r.class(r.inner_faces().next().unwrap()).label(), "F3''");
    }

    #[test]
    fn non_facial_root_is_rejected() {
        assert!(matches!(cube().root_at(&[0, 1, 5, 4, 7, 3]), Err(GraphError::NotAFace(_))));
        assert!(matches!(cube().root_at(&[0, 1, 2]), Err(GraphError::NotAFace(_))));
    }

    #[test]
    fn incidences_sum() {
        let r = cube().root_at(&[4, 5, 6, 7]).unwrap();
        let total: usize = r.inner_faces().map(|f| r.class(f).hits).sum();
        let direct: usize = r
            .inner_faces()
            .map(|f| r.base().faces()[f].vertex_set().iter().filter(|&&v| r.on_outer(v)).count())
            .sum();
        assert_eq!(total, direct);
    }
}
