use std::collections::HashSet;

use super::{canonical_cycle, Adjacency, PlaneGraph, Vertex};

/// A cycle in canonical form (least rotation/reflection) with embedding tags.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleWitness {
    pub vertices: Vec<Vertex>,
    /// Bounds a face of the embedding.
    pub facial: bool,
    /// Has vertices strictly inside and strictly outside.
    pub separating: bool,
}

impl CycleWitness {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// All cycles of length `3..=max_len` in canonical form, sorted by (length, sequence).
///
/// Each cycle is grown from its least vertex `s` through vertices greater than
/// `s`, and only the direction whose second vertex is smaller than its last is
/// kept, so the emitted sequence is already canonical.
pub fn enumerate_cycles(g: &impl Adjacency, max_len: usize) -> Vec<Vec<Vertex>> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(max_len);
    let mut on_path = vec![false; n];
    for s in 0..n {
        path.push(s);
        on_path[s] = true;
        grow(g, s, max_len, &mut path, &mut on_path, &mut out);
        on_path[s] = false;
        path.pop();
    }
    out.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

fn grow(
    g: &impl Adjacency,
    s: Vertex,
    max_len: usize,
    path: &mut Vec<Vertex>,
    on_path: &mut [bool],
    out: &mut Vec<Vec<Vertex>>,
) {
    let last = *path.last().unwrap();
    for &u in g.neighbors(last) {
        if u == s && path.len() >= 3 && path[1] < last {
            out.push(path.clone());
        }
        if u > s && !on_path[u] && path.len() < max_len {
            path.push(u);
            on_path[u] = true;
            grow(g, s, max_len, path, on_path, out);
            on_path[u] = false;
            path.pop();
        }
    }
}

pub(super) fn tagged_cycles(g: &PlaneGraph, max_len: usize) -> Vec<CycleWitness> {
    let facial: HashSet<Vec<Vertex>> = g
        .faces()
        .iter()
        .filter(|f| f.is_cycle() && f.degree() <= max_len)
        .map(|f| canonical_cycle(&f.walk))
        .collect();
    enumerate_cycles(g, max_len)
        .into_iter()
        .map(|c| {
            let separating = separates(g, &c);
            CycleWitness { facial: facial.contains(&c), separating, vertices: c }
        })
        .collect()
}

/// Side test for a cycle given as a vertex sequence.
///
/// At each cycle vertex, the neighbors met strictly clockwise after the next
/// cycle vertex and before the previous one lie on one side (call it A); the
/// rest lie on side B. Components of `G - C` inherit the side of any edge
/// attaching them to `C`.
pub(super) fn separates(g: &PlaneGraph, cycle: &[Vertex]) -> bool {
    let n = g.vertex_count();
    let k = cycle.len();
    let mut on_cycle = vec![false; n];
    for &v in cycle {
        on_cycle[v] = true;
    }
    let mut side = vec![0u8; n]; // 0 unknown, 1 = A, 2 = B
    let mut stack = Vec::new();
    for i in 0..k {
        let v = cycle[i];
        let next = cycle[(i + 1) % k];
        let prev = cycle[(i + k - 1) % k];
        let rot = &g.rotation()[v];
        let d = rot.len();
        let start = rot.iter().position(|&u| u == next).unwrap();
        let mut in_a = true;
        for step in 1..d {
            let u = rot[(start + step) % d];
            if u == prev {
                in_a = false;
                continue;
            }
            if on_cycle[u] {
                continue;
            }
            let s = if in_a { 1 } else { 2 };
            if side[u] == 0 {
                side[u] = s;
                stack.push(u);
            }
        }
    }
    while let Some(v) = stack.pop() {
        for &u in g.neighbors(v) {
            if !on_cycle[u] && side[u] == 0 {
                side[u] = side[v];
                stack.push(u);
            }
        }
    }
    side.contains(&1) && side.contains(&2)
}

/// Outcome of the family test: no 5-cycles and no two triangles sharing an edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyVerdict {
    InFamily,
    FiveCycle(Vec<Vertex>),
    AdjacentTriangles(Vec<Vertex>, Vec<Vertex>),
}

impl FamilyVerdict {
    pub fn is_member(&self) -> bool {
        matches!(self, FamilyVerdict::InFamily)
    }
}

/// First violation in canonical order: the least 5-cycle, otherwise the least
/// pair of triangles with a common edge.
pub fn check_family_membership(g: &impl Adjacency) -> FamilyVerdict {
    let cycles = enumerate_cycles(g, 5);
    if let Some(c) = cycles.iter().find(|c| c.len() == 5) {
        return FamilyVerdict::FiveCycle(c.clone());
    }
    let triangles: Vec<&Vec<Vertex>> = cycles.iter().filter(|c| c.len() == 3).collect();
    for (i, a) in triangles.iter().enumerate() {
        for b in &triangles[i + 1..] {
            if a.iter().filter(|v| b.contains(v)).count() >= 2 {
                return FamilyVerdict::AdjacentTriangles((*a).clone(), (*b).clone());
            }
        }
    }
    FamilyVerdict::InFamily
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    #[test]
    fn k4_has_four_triangles() {
        let c = k4().cycles_up_to(3);
        assert_eq!(c.len(), 4);
        assert!(c.iter().all(|w| w.facial && !w.separating));
    }

    #[test]
    fn cube_has_six_four_cycles_only() {
        let c = cube().cycles_up_to(5);
        assert_eq!(c.len(), 6);
        assert!(c.iter().all(|w| w.len() == 4 && w.facial));
    }

    #[test]
    fn seven_cycle() {
        let c = cycle(7).cycles_up_to(7);
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].vertices, vec![0, 1, 2, 3, 4, 5, 6]);
        assert!(c[0].facial);
    }

    #[test]
    fn membership_examples() {
        assert_eq!(check_family_membership(&cycle(5)), FamilyVerdict::FiveCycle(vec![0, 1, 2, 3, 4]));
        assert!(matches!(check_family_membership(&k4()), FamilyVerdict::AdjacentTriangles(..)));
        assert!(check_family_membership(&cube()).is_member());
    }

    #[test]
    fn separating_triangle() {
        // Triangle 0,1,2 with vertex 3 inside and vertex 4 outside, both joined to all three.
        let g = PlaneGraph::from_rotation(vec![
            vec![1, 3, 2, 4],
            vec![2, 3, 0, 4],
            vec![0, 3, 1, 4],
            vec![0, 1, 2],
            vec![0, 2, 1],
        ])
        .unwrap();
        assert_eq!(g.is_separating(&[0, 1, 2]), Ok(true));
        assert_eq!(k4().is_separating(&[0, 1, 2]), Ok(false));
        assert!(g.is_separating(&[0, 3, 4]).is_err());
    }
}
