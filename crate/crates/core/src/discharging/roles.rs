use std::collections::BTreeMap;

use super::rules::{is_light_shape, is_superlight, Occupant};
use crate::plane_graph::{Adjacency, RootedPlaneGraph, Vertex};

/// Weak/strong status of a 3-vertex on a particular F3 face.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThreeRole {
    /// The neighbor off the face.
    pub outer: Vertex,
    /// Outer neighbor is an interior 3⁻-vertex. Degrees below 3 cannot occur
    /// in a minimal counterexample; they are counted as weak so every 3-vertex
    /// on an F3 face is exactly one of weak/strong.
    pub weak: bool,
}

/// Every role flag the rules consult, computed on the whole graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoleTags {
    pub on_c0: Vec<bool>,
    pub bad4: Vec<bool>,
    pub bad5: Vec<bool>,
    pub weak5: Vec<bool>,
    pub weak6: Vec<bool>,
    pub poor: Vec<bool>,
    pub rich: Vec<bool>,
    /// Weak on some F3 face.
    pub weak3: Vec<bool>,
    /// Strong on some F3 face.
    pub strong3: Vec<bool>,
    /// Keyed by (face, 3-vertex).
    pub three_roles: BTreeMap<(usize, Vertex), ThreeRole>,
    pub bad_face: Vec<bool>,
    pub light: Vec<bool>,
    pub superlight: Vec<bool>,
    /// Per F3 face: the outer neighbors of its 3-vertices (sorted, distinct).
    pub pendant_of: Vec<Vec<Vertex>>,
    /// Per vertex: F3 faces that are pendant 3-faces of it.
    pub pendant_faces: Vec<Vec<usize>>,
    /// Per interior 5⁺-vertex: poor 4-neighbors off C0 on a (3,4,4,4)-face of F4.
    pub q4: Vec<Vec<Vertex>>,
}

/// Faces met at `v`, each once, in corner order.
pub(crate) fn incident_faces(g: &RootedPlaneGraph, v: Vertex) -> Vec<usize> {
    let mut out = Vec::new();
    for f in g.base().corner_faces(v) {
        if !out.contains(&f) {
            out.push(f);
        }
    }
    out
}

pub(crate) fn is_f3(g: &RootedPlaneGraph, f: usize) -> bool {
    f != g.outer_face() && g.class(f).is_interior(3)
}

pub(crate) fn is_f4(g: &RootedPlaneGraph, f: usize) -> bool {
    f != g.outer_face() && g.class(f).is_interior(4) && g.base().faces()[f].is_cycle()
}

/// The other vertices of a cycle face, in walk order starting after `v`.
pub(crate) fn others_on_face(g: &RootedPlaneGraph, f: usize, v: Vertex) -> Vec<Vertex> {
    let w = &g.base().faces()[f].walk;
    let p = w.iter().position(|&x| x == v).expect("vertex on face");
    (1..w.len()).map(|k| w[(p + k) % w.len()]).collect()
}

fn degree_multiset(g: &RootedPlaneGraph, f: usize) -> Vec<usize> {
    let mut d: Vec<usize> = g.base().faces()[f].walk.iter().map(|&x| g.base().degree(x)).collect();
    d.sort_unstable();
    d
}

impl RoleTags {
    /// `x` as seen on face `f`.
    pub fn occupant(&self, g: &RootedPlaneGraph, f: usize, x: Vertex) -> Occupant {
        Occupant {
            degree: g.base().degree(x),
            bad4: self.bad4[x],
            weak3: self.three_roles.get(&(f, x)).is_some_and(|r| r.weak),
            poor: self.poor[x],
        }
    }

    pub fn is_weak_big(&self, v: Vertex) -> bool {
        self.weak5[v] || self.weak6[v]
    }
}

pub fn classify_roles(g: &RootedPlaneGraph) -> RoleTags {
    let b = g.base();
    let n = b.vertex_count();
    let nf = b.face_count();
    let deg: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    let on_c0: Vec<bool> = (0..n).map(|v| g.on_outer(v)).collect();
    let f3: Vec<bool> = (0..nf).map(|f| is_f3(g, f)).collect();
    let f4: Vec<bool> = (0..nf).map(|f| is_f4(g, f)).collect();
    let incident: Vec<Vec<usize>> = (0..n).map(|v| incident_faces(g, v)).collect();
    let multiset: Vec<Vec<usize>> = (0..nf).map(|f| degree_multiset(g, f)).collect();

    let bad4: Vec<bool> = (0..n)
        .map(|v| !on_c0[v] && deg[v] == 4 && incident[v].iter().any(|&f| f3[f] && multiset[f] == [3, 4, 4]))
        .collect();

    let mut bad_face = vec![false; nf];
    for f in 0..nf {
        if f3[f] && multiset[f][0] == 3 && multiset[f][1] == 4 && multiset[f][2] >= 5 {
            let w = &b.faces()[f].walk;
            bad_face[f] = w.iter().any(|&x| deg[x] == 4 && bad4[x]);
        }
    }
    let bad5: Vec<bool> = (0..n)
        .map(|v| {
            !on_c0[v]
                && deg[v] == 5
                && incident[v].iter().any(|&f| {
                    f3[f] && ((bad_face[f] && multiset[f] == [3, 4, 5]) || multiset[f] == [3, 3, 5])
                })
        })
        .collect();

    let mut three_roles = BTreeMap::new();
    let mut weak3 = vec![false; n];
    let mut strong3 = vec![false; n];
    let mut pendant_of = vec![Vec::new(); nf];
    let mut pendant_faces = vec![Vec::new(); n];
    for f in 0..nf {
        if !f3[f] {
            continue;
        }
        let w = &b.faces()[f].walk;
        for &x in w {
            if deg[x] != 3 {
                continue;
            }
            let y = *b.neighbors(x).iter().find(|u| !w.contains(u)).expect("3-vertex has a neighbor off its triangle");
            let weak = !on_c0[y] && deg[y] <= 3;
            three_roles.insert((f, x), ThreeRole { outer: y, weak });
            if weak {
                weak3[x] = true;
            } else {
                strong3[x] = true;
            }
            if !pendant_of[f].contains(&y) {
                pendant_of[f].push(y);
            }
            if !pendant_faces[y].contains(&f) {
                pendant_faces[y].push(f);
            }
        }
        pendant_of[f].sort_unstable();
    }
    for l in &mut pendant_faces {
        l.sort_unstable();
    }

    let poor: Vec<bool> =
        (0..n).map(|v| !on_c0[v] && deg[v] > 0 && b.corner_faces(v).iter().all(|&f| f4[f])).collect();
    let rich: Vec<bool> = (0..n).map(|v| !on_c0[v] && !poor[v]).collect();

    let mut light = vec![false; nf];
    let mut superlight = vec![false; nf];
    for f in 0..nf {
        if !f4[f] {
            continue;
        }
        let w = &b.faces()[f].walk;
        if let Some(&v) = w.iter().find(|&&x| deg[x] >= 5) {
            let seq = others_on_face(g, f, v);
            let occ = [0, 1, 2].map(|i| Occupant { degree: deg[seq[i]], poor: poor[seq[i]], ..Default::default() });
            if is_light_shape(&occ) {
                superlight[f] = is_superlight(&occ);
                light[f] = !superlight[f];
            }
        }
    }

    let q4: Vec<Vec<Vertex>> = (0..n)
        .map(|v| {
            if on_c0[v] || deg[v] < 5 {
                return Vec::new();
            }
            let mut s: Vec<Vertex> = b
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&u| {
                    !on_c0[u]
                        && deg[u] == 4
                        && poor[u]
                        && incident[u].iter().any(|&f| f4[f] && multiset[f] == [3, 4, 4, 4])
                })
                .collect();
            s.sort_unstable();
            s
        })
        .collect();

    // Weak 5-vertex: two (5,5⁻,3)-faces of F3, one of them bad, and a pendant 3-face.
    let weak5: Vec<bool> = (0..n)
        .map(|v| {
            if on_c0[v] || deg[v] != 5 {
                return false;
            }
            let faces: Vec<usize> = incident[v]
                .iter()
                .copied()
                .filter(|&f| {
                    f3[f] && {
                        let o: Vec<usize> = others_on_face(g, f, v).iter().map(|&x| deg[x]).collect();
                        let (lo, hi) = (o[0].min(o[1]), o[0].max(o[1]));
                        lo == 3 && hi <= 5
                    }
                })
                .collect();
            faces.len() >= 2 && faces.iter().any(|&f| bad_face[f]) && !pendant_faces[v].is_empty()
        })
        .collect();
    // Weak 6-vertex: two bad (6,4,3)-faces and a (3,5⁺,6)-face, all in F3.
    let weak6: Vec<bool> = (0..n)
        .map(|v| {
            if on_c0[v] || deg[v] != 6 {
                return false;
            }
            let tri: Vec<usize> = incident[v].iter().copied().filter(|&f| f3[f]).collect();
            let bad643 = tri.iter().filter(|&&f| bad_face[f] && multiset[f] == [3, 4, 6]).count();
            let big3 = tri.iter().filter(|&&f| multiset[f][0] == 3 && multiset[f][1] >= 5).count();
            bad643 >= 2 && big3 >= 1
        })
        .collect();

    RoleTags {
        on_c0,
        bad4,
        bad5,
        weak5,
        weak6,
        poor,
        rich,
        weak3,
        strong3,
        three_roles,
        bad_face,
        light,
        superlight,
        pendant_of,
        pendant_faces,
        q4,
    }
}
