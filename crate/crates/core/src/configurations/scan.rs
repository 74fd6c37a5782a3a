//! Occurrences of forbidden local patterns in a rooted plane graph.
//!
//! Each pattern is the hypothesis of one reducibility lemma read as a shape
//! to look for. `Strict` keeps the side conditions (interior vertices, faces
//! of F3/F4); `Relaxed` matches degrees and face lengths only, which is what
//! small test graphs, where nearly everything touches C0, usually need.

use crate::discharging::{classify_roles, incident_faces, is_f3, is_f4, RoleTags};
use crate::plane_graph::{Adjacency, RootedPlaneGraph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ScanMode {
    #[default]
    Strict,
    Relaxed,
}

/// Pattern ids with a short description, in report order.
pub const PATTERNS: &[(&str, &str)] = &[
    ("L2.3-1", "3-vertex with two 3-neighbors"),
    ("L2.3-2", "(3,3,4⁻)-triangle"),
    ("L2.3-3", "4-vertex on one (3,4,4)-triangle, both other neighbors 3⁻"),
    ("L2.4-1", "5-vertex on two (3,4⁻,5)-triangles, fifth neighbor 3⁻"),
    ("L2.6-2", "4-face with a diagonal of two 3⁻-vertices"),
    ("L2.7", "bad 4/5-vertex opposite a 3⁻-vertex on a 4-face"),
    ("L2.9-1", "4-vertex, two 4-faces around a 3-neighbor followed by a 3-vertex"),
    ("L2.9-4", "poor 4-vertex with two opposite 4⁻-neighbors"),
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternMatch {
    pub name: &'static str,
    /// Pattern vertices, central vertex first where there is one.
    pub vertices: Vec<Vertex>,
}

impl PatternMatch {
    /// `v3 v7 v8`, 1-based like the charge reports.
    pub fn location(&self) -> String {
        self.vertices.iter().map(|v| format!("v{}", v + 1)).collect::<Vec<_>>().join(" ")
    }

    fn order(&self) -> usize {
        PATTERNS.iter().position(|(n, _)| *n == self.name).unwrap_or(usize::MAX)
    }
}

struct Ctx<'a> {
    g: &'a RootedPlaneGraph,
    roles: RoleTags,
    strict: bool,
    out: Vec<PatternMatch>,
}

impl Ctx<'_> {
    fn deg(&self, v: Vertex) -> usize {
        self.g.base().degree(v)
    }

    fn inner(&self, v: Vertex) -> bool {
        !self.strict || !self.g.on_outer(v)
    }

    fn face_ok(&self, f: usize, k: usize) -> bool {
        let face = &self.g.base().faces()[f];
        if self.strict {
            if k == 3 {
                is_f3(self.g, f)
            } else {
                is_f4(self.g, f)
            }
        } else {
            f != self.g.outer_face() && face.degree() == k && face.is_cycle()
        }
    }

    fn walk(&self, f: usize) -> &[Vertex] {
        &self.g.base().faces()[f].walk
    }

    /// The vertex of a 4-face opposite `v`.
    fn opposite(&self, f: usize, v: Vertex) -> Vertex {
        let w = self.walk(f);
        w[(w.iter().position(|&x| x == v).unwrap() + 2) % 4]
    }

    fn push(&mut self, name: &'static str, vertices: Vec<Vertex>) {
        self.out.push(PatternMatch { name, vertices });
    }

    fn low(&self, v: Vertex, max: usize) -> bool {
        self.deg(v) <= max && self.inner(v)
    }

    fn run(&mut self) {
        let b = self.g.base();
        let n = b.vertex_count();
        for x in 0..n {
            if self.deg(x) != 3 || !self.inner(x) {
                continue;
            }
            let nb: Vec<Vertex> = b.neighbors(x).iter().copied().filter(|&u| self.deg(u) == 3 && self.inner(u)).collect();
            for i in 0..nb.len() {
                for j in i + 1..nb.len() {
                    let (a, c) = (nb[i].min(nb[j]), nb[i].max(nb[j]));
                    self.push("L2.3-1", vec![x, a, c]);
                }
            }
        }
        for f in 0..b.face_count() {
            if self.face_ok(f, 3) {
                let mut d: Vec<usize> = self.walk(f).iter().map(|&x| self.deg(x)).collect();
                d.sort_unstable();
                if d[0] == 3 && d[1] == 3 && d[2] <= 4 {
                    let mut vs = self.walk(f).to_vec();
                    vs.sort_unstable();
                    self.push("L2.3-2", vs);
                }
            }
        }
        for v in 0..n {
            if !self.inner(v) {
                continue;
            }
            let tri: Vec<usize> = incident_faces(self.g, v).into_iter().filter(|&f| self.face_ok(f, 3)).collect();
            let on_tri = |u: Vertex| tri.iter().any(|&f| self.walk(f).contains(&u));
            let off: Vec<Vertex> = b.neighbors(v).iter().copied().filter(|&u| !on_tri(u)).collect();
            let others = |f: usize| -> (usize, usize) {
                let d: Vec<usize> = self.walk(f).iter().filter(|&&x| x != v).map(|&x| self.deg(x)).collect();
                (d[0].min(d[1]), d[0].max(d[1]))
            };
            let l233 =
                self.deg(v) == 4 && tri.len() == 1 && others(tri[0]) == (3, 4) && off.iter().all(|&u| self.low(u, 3));
            let light = tri.iter().filter(|&&f| matches!(others(f), (3, h) if h <= 4)).count();
            let l241 = self.deg(v) == 5 && light >= 2 && off.len() == 1 && self.low(off[0], 3);
            if l233 {
                self.push("L2.3-3", [vec![v], off.clone()].concat());
            }
            if l241 {
                self.push("L2.4-1", vec![v, off[0]]);
            }
        }
        for f in 0..b.face_count() {
            if self.face_ok(f, 4) {
                let w = self.walk(f).to_vec();
                for k in 0..2 {
                    let (a, c) = (w[k], w[k + 2]);
                    if self.low(a, 3) && self.low(c, 3) {
                        self.push("L2.6-2", vec![a.min(c), a.max(c)]);
                    }
                }
            }
        }
        for v in 0..n {
            if !(self.roles.bad4[v] || self.roles.bad5[v]) {
                continue;
            }
            for f in incident_faces(self.g, v) {
                if self.face_ok(f, 4) {
                    let x = self.opposite(f, v);
                    if self.deg(x) <= 3 {
                        self.push("L2.7", vec![v, x]);
                    }
                }
            }
        }
        for v in 0..n {
            if self.deg(v) != 4 || !self.inner(v) {
                continue;
            }
            let rot = &b.rotation()[v];
            let corner = b.corner_faces(v);
            // corner[i] lies between rot[i] and rot[i+1].
            let quads: Vec<bool> = corner.iter().map(|&f| self.face_ok(f, 4)).collect();
            for i in 0..4 {
                let prev = (i + 3) % 4;
                let vi = rot[i];
                if quads[prev] && quads[i] && self.deg(vi) == 3 {
                    for f in [corner[prev], corner[i]] {
                        let u = self.opposite(f, v);
                        if self.deg(u) == 3 {
                            self.push("L2.9-1", vec![v, vi, u]);
                        }
                    }
                }
            }
            if quads.iter().all(|&q| q) {
                for i in 0..2 {
                    let (a, c) = (rot[i], rot[i + 2]);
                    if self.deg(a) <= 4 && self.deg(c) <= 4 {
                        self.push("L2.9-4", vec![v, a.min(c), a.max(c)]);
                    }
                }
            }
        }
    }
}

/// All pattern occurrences, ordered by pattern then location.
pub fn scan_graph(g: &RootedPlaneGraph, mode: ScanMode) -> Vec<PatternMatch> {
    let mut ctx = Ctx { g, roles: classify_roles(g), strict: mode == ScanMode::Strict, out: Vec::new() };
    ctx.run();
    let mut out = ctx.out;
    out.sort_by(|a, b| (a.order(), &a.vertices).cmp(&(b.order(), &b.vertices)));
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane_graph::fixtures::{cube, k4};

    #[test]
    fn cube_has_two_threes_next_to_a_three() {
        let r = cube().root_at(&[0, 1, 2, 3]).unwrap();
        let m = scan_graph(&r, ScanMode::Strict);
        let l231: Vec<_> = m.iter().filter(|p| p.name == "L2.3-1").collect();
        // Each interior vertex sees exactly two interior 3-neighbors.
        assert_eq!(l231.len(), 4);
        assert!(l231.iter().all(|p| p.vertices.iter().all(|&v| v >= 4)));
    }

    #[test]
    fn k4_hub_faces_in_relaxed_mode() {
        let r = k4().root_at(&[0, 1, 2]).unwrap();
        let relaxed = scan_graph(&r, ScanMode::Relaxed);
        assert_eq!(relaxed.iter().filter(|p| p.name == "L2.3-2").count(), 3);
        // The inner faces all touch C0, so none is in F3.
        assert!(scan_graph(&r, ScanMode::Strict).iter().all(|p| p.name != "L2.3-2"));
    }

    #[test]
    fn deterministic_order() {
        let r = cube().root_at(&[0, 1, 2, 3]).unwrap();
        let a = scan_graph(&r, ScanMode::Relaxed);
        let b = scan_graph(&r, ScanMode::Relaxed);
        assert_eq!(a, b);
        let keys: Vec<_> = a.iter().map(|p| (p.order(), p.vertices.clone())).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }
}
