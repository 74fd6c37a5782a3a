use std::collections::HashSet;
use std::str::FromStr;

use super::canonical::{canonical_code, decode};
use super::FormatError;
use crate::plane_graph::{check_family_membership, Adjacency, PlaneGraph, Vertex};

pub const MAX_GENERATED_ORDER: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphFilter {
    All,
    FamilyF,
    HasTriangle,
}

impl GraphFilter {
    pub fn accepts(self, g: &PlaneGraph) -> bool {
        match self {
            GraphFilter::All => true,
            GraphFilter::FamilyF => check_family_membership(g).is_member(),
            GraphFilter::HasTriangle => has_triangle(g),
        }
    }
}

impl FromStr for GraphFilter {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "all" => Ok(GraphFilter::All),
            "family_F" | "family-f" | "family_f" | "F" => Ok(GraphFilter::FamilyF),
            "has_triangle" | "has-triangle" => Ok(GraphFilter::HasTriangle),
            _ => Err(format!("unknown filter {s:?} (expected all, family_F or has_triangle)")),
        }
    }
}

fn has_triangle(g: &impl Adjacency) -> bool {
    g.edges().into_iter().any(|(u, v)| g.neighbors(u).iter().any(|w| g.neighbors(v).contains(w)))
}

/// All connected plane graphs with `1..=max_n` vertices accepted by `filter`,
/// one per embedding class (relabeling and reflection), by order, then by
/// canonical code.
pub fn generate_plane_graphs(max_n: usize, filter: GraphFilter) -> Result<Vec<PlaneGraph>, FormatError> {
    if max_n > MAX_GENERATED_ORDER {
        return Err(FormatError::BoundTooLarge { max: MAX_GENERATED_ORDER });
    }
    let mut out = Vec::new();
    let mut trees: Vec<Vec<Vec<Vertex>>> = Vec::new();
    for n in 1..=max_n {
        trees = if n == 1 { vec![vec![Vec::new()]] } else { grow_trees(&trees) };
        out.extend(close_under_edges(&trees).into_iter().filter(|g| filter.accepts(g)));
    }
    Ok(out)
}

/// Every connected plane graph with exactly `n` vertices.
pub fn graphs_with_order(n: usize) -> Result<Vec<PlaneGraph>, FormatError> {
    if n > MAX_GENERATED_ORDER {
        return Err(FormatError::BoundTooLarge { max: MAX_GENERATED_ORDER });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut trees = vec![vec![Vec::new()]];
    for _ in 1..n {
        trees = grow_trees(&trees);
    }
    Ok(close_under_edges(&trees))
}

/// Plane trees with one more vertex: a pendant in every corner.
fn grow_trees(trees: &[Vec<Vec<Vertex>>]) -> Vec<Vec<Vec<Vertex>>> {
    let mut seen = HashSet::new();
    for rot in trees {
        let n = rot.len();
        for v in 0..n {
            for i in 0..rot[v].len().max(1) {
                let mut r = rot.clone();
                let at = if r[v].is_empty() { 0 } else { i + 1 };
                r[v].insert(at, n);
                r.push(vec![v]);
                seen.insert(canonical_code(&r));
            }
        }
    }
    sorted(seen).iter().map(|c| decode(c)).collect()
}

/// Adds edges inside faces level by level (by edge count) starting from the
/// trees; every connected plane graph arises because deleting a non-bridge
/// edge merges two faces.
fn close_under_edges(trees: &[Vec<Vec<Vertex>>]) -> Vec<PlaneGraph> {
    let mut all: Vec<Vec<u8>> = Vec::new();
    let mut level: Vec<Vec<u8>> = trees.iter().map(|r| canonical_code(r)).collect();
    level.sort_unstable();
    while !level.is_empty() {
        let mut next = HashSet::new();
        for code in &level {
            let rot = decode(code);
            for corners in face_corners(&rot) {
                for (p, &(x, i)) in corners.iter().enumerate() {
                    for &(y, j) in &corners[p + 1..] {
                        if x == y || rot[x].contains(&y) {
                            continue;
                        }
                        let mut r = rot.clone();
                        r[x].insert(i + 1, y);
                        r[y].insert(j + 1, x);
                        next.insert(canonical_code(&r));
                    }
                }
            }
        }
        all.append(&mut level);
        level = sorted(next);
    }
    all.sort_unstable();
    all.iter()
        .map(|c| PlaneGraph::from_rotation(decode(c)).expect("generated rotation systems are plane"))
        .collect()
}

fn sorted(set: HashSet<Vec<u8>>) -> Vec<Vec<u8>> {
    let mut v: Vec<_> = set.into_iter().collect();
    v.sort_unstable();
    v
}

/// Corners `(v, i)` (between `rot[v][i]` and `rot[v][i+1]`) grouped by face.
fn face_corners(rot: &[Vec<Vertex>]) -> Vec<Vec<(Vertex, usize)>> {
    let mut seen: Vec<Vec<bool>> = rot.iter().map(|l| vec![false; l.len()]).collect();
    let mut faces = Vec::new();
    for v in 0..rot.len() {
        for i in 0..rot[v].len() {
            if seen[v][i] {
                continue;
            }
            let mut face = Vec::new();
            let (mut x, mut k) = (v, i);
            while !seen[x][k] {
                seen[x][k] = true;
                face.push((x, k));
                let y = rot[x][k];
                let d = rot[y].len();
                let back = rot[y].iter().position(|&z| z == x).unwrap();
                (x, k) = (y, (back + d - 1) % d);
            }
            faces.push(face);
        }
    }
    faces
}
