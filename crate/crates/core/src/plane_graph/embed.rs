use super::{is_connected, Adjacency, PlaneGraph, SimpleGraph, Vertex};

/// Upper bound on search nodes before giving up.
const NODE_BUDGET: usize = 2_000_000;

/// Best-effort plane embedding of a small connected graph.
///
/// Edges are inserted one at a time (BFS tree edges interleaved with the
/// back edges of each new vertex) into faces of the current partial
/// embedding, backtracking over the choice of corners. Inserting an edge
/// between two corners of one face keeps the embedding planar, so any leaf
/// is a valid embedding. Returns `None` for non-planar or disconnected
/// graphs, or when the search budget runs out.
pub fn embed_planar(g: &SimpleGraph) -> Option<PlaneGraph> {
    let n = g.vertex_count();
    if n == 0 || !is_connected(g) {
        return None;
    }
    let e = g.edge_count();
    if n >= 3 && e > 3 * n - 6 {
        return None;
    }
    // BFS order and the insertion sequence.
    let mut order = vec![0];
    let mut pos = vec![usize::MAX; n];
    pos[0] = 0;
    let mut parent = vec![usize::MAX; n];
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for &u in g.neighbors(v) {
            if pos[u] == usize::MAX {
                pos[u] = order.len();
                parent[u] = v;
                order.push(u);
            }
        }
    }
    let mut steps = Vec::with_capacity(e);
    for &w in &order[1..] {
        steps.push((parent[w], w));
        for &u in g.neighbors(w) {
            if pos[u] < pos[w] && u != parent[w] {
                steps.push((u, w));
            }
        }
    }
    let mut rot: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    let mut budget = NODE_BUDGET;
    if search(&steps, 0, &mut rot, &mut budget) {
        PlaneGraph::from_rotation(rot).ok()
    } else {
        None
    }
}

fn search(steps: &[(Vertex, Vertex)], k: usize, rot: &mut Vec<Vec<Vertex>>, budget: &mut usize) -> bool {
    if k == steps.len() {
        return true;
    }
    if *budget == 0 {
        return false;
    }
    *budget -= 1;
    let (a, b) = steps[k];
    if rot[b].is_empty() {
        // b is new: hang it in one of a's corners.
        let corners = rot[a].len().max(1);
        for i in 0..corners {
            let at = if rot[a].is_empty() { 0 } else { i + 1 };
            rot[a].insert(at, b);
            rot[b].push(a);
            if search(steps, k + 1, rot, budget) {
                return true;
            }
            rot[b].pop();
            rot[a].remove(at);
        }
        return false;
    }
    let faces = corner_faces(rot);
    let (da, db) = (rot[a].len(), rot[b].len());
    for i in 0..da {
        for j in 0..db {
            if faces[a][i] != faces[b][j] {
                continue;
            }
            rot[a].insert(i + 1, b);
            rot[b].insert(j + 1, a);
            if search(steps, k + 1, rot, budget) {
                return true;
            }
            rot[b].remove(j + 1);
            rot[a].remove(i + 1);
        }
    }
    false
}

/// Face id of every corner: corner `i` at `v` sits after `rot[v][i]` and
/// belongs to the face of the dart `v -> rot[v][i]`.
fn corner_faces(rot: &[Vec<Vertex>]) -> Vec<Vec<usize>> {
    let mut face: Vec<Vec<usize>> = rot.iter().map(|l| vec![usize::MAX; l.len()]).collect();
    let mut id = 0;
    for v in 0..rot.len() {
        for i in 0..rot[v].len() {
            if face[v][i] != usize::MAX {
                continue;
            }
            let (mut x, mut k) = (v, i);
            loop {
                face[x][k] = id;
                let y = rot[x][k];
                let j = rot[y].iter().position(|&u| u == x).unwrap();
                let d = rot[y].len();
                x = y;
                k = (j + d - 1) % d;
                if x == v && k == i {
                    break;
                }
            }
            id += 1;
        }
    }
    face
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embeds_small_planar_graphs() {
        let k4 = SimpleGraph::complete(4);
        let p = embed_planar(&k4).unwrap();
        assert_eq!(p.face_count(), 4);
        let cube_edges = [(0, 1), (1, 2), (2, 3), (0, 3), (4, 5), (5, 6), (6, 7), (4, 7), (0, 4), (1, 5), (2, 6), (3, 7)];
        let cube = SimpleGraph::from_edges(8, &cube_edges).unwrap();
        assert_eq!(embed_planar(&cube).unwrap().face_count(), 6);
    }

    #[test]
    fn rejects_k5_and_k33() {
        assert!(embed_planar(&SimpleGraph::complete(5)).is_none());
        let mut e = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                e.push((a, b));
            }
        }
        assert!(embed_planar(&SimpleGraph::from_edges(6, &e).unwrap()).is_none());
    }
}
