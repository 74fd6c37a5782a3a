use crate::plane_graph::{PlaneGraph, Vertex};

/// Canonical code of a connected rotation system up to relabeling and reflection.
///
/// For a starting dart and an orientation, vertices are numbered in BFS order
/// (from 1), each vertex's neighbors are scanned around its rotation beginning
/// at the dart it was discovered through, and the code is the concatenation
/// of the scanned labels with `0` after each vertex. The canonical code is the
/// least such string over all starting darts at maximum-degree vertices and
/// both orientations.
pub fn canonical_code(rot: &[Vec<Vertex>]) -> Vec<u8> {
    let n = rot.len();
    if n == 1 {
        return vec![0];
    }
    let maxdeg = rot.iter().map(Vec::len).max().unwrap_or(0);
    let mut best: Vec<u8> = Vec::new();
    let mut buf = Scratch::new(n);
    for v in 0..n {
        if rot[v].len() != maxdeg {
            continue;
        }
        for i in 0..maxdeg {
            for cw in [true, false] {
                buf.run(rot, v, i, cw, &mut best);
            }
        }
    }
    best
}

/// The representative rotation system encoded by [`canonical_code`].
pub fn canonical_form(g: &PlaneGraph) -> PlaneGraph {
    PlaneGraph::from_rotation(decode(&canonical_code(g.rotation()))).expect("relabeling keeps a valid embedding")
}

pub(crate) fn decode(code: &[u8]) -> Vec<Vec<Vertex>> {
    let mut rot = vec![Vec::new()];
    for &b in code {
        if b == 0 {
            rot.push(Vec::new());
        } else {
            rot.last_mut().unwrap().push(b as usize - 1);
        }
    }
    rot.pop();
    rot
}

struct Scratch {
    label: Vec<u8>,
    entry: Vec<usize>,
    queue: Vec<Vertex>,
    code: Vec<u8>,
}

impl Scratch {
    fn new(n: usize) -> Self {
        Scratch { label: vec![0; n], entry: vec![0; n], queue: Vec::with_capacity(n), code: Vec::new() }
    }

    /// Writes the code for one start into `best` if it is smaller; gives up
    /// as soon as a prefix exceeds `best`.
    fn run(&mut self, rot: &[Vec<Vertex>], v0: Vertex, i0: usize, cw: bool, best: &mut Vec<u8>) {
        self.label.iter_mut().for_each(|l| *l = 0);
        self.queue.clear();
        self.code.clear();
        let mut next = 1u8;
        self.label[v0] = next;
        self.entry[v0] = i0;
        self.queue.push(v0);
        // `smaller` once strictly below `best`; compare while equal.
        let mut smaller = best.is_empty();
        let mut head = 0;
        while head < self.queue.len() {
            let x = self.queue[head];
            head += 1;
            let d = rot[x].len();
            let r = self.entry[x];
            for t in 0..d {
                let idx = if cw { (r + t) % d } else { (r + d - t) % d };
                let y = rot[x][idx];
                if self.label[y] == 0 {
                    next += 1;
                    self.label[y] = next;
                    self.entry[y] = rot[y].iter().position(|&z| z == x).unwrap();
                    self.queue.push(y);
                }
                if !self.emit(self.label[y], best, &mut smaller) {
                    return;
                }
            }
            if !self.emit(0, best, &mut smaller) {
                return;
            }
        }
        if smaller {
            std::mem::swap(best, &mut self.code);
        }
    }

    #[inline]
    fn emit(&mut self, b: u8, best: &[u8], smaller: &mut bool) -> bool {
        let p = self.code.len();
        self.code.push(b);
        if !*smaller {
            match b.cmp(&best[p]) {
                std::cmp::Ordering::Less => *smaller = true,
                std::cmp::Ordering::Greater => return false,
                std::cmp::Ordering::Equal => {}
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane_graph::fixtures::*;
    use crate::plane_graph::Adjacency;

    #[test]
    fn invariant_under_relabeling_and_mirroring() {
        let g = cube();
        let code = canonical_code(g.rotation());
        let perm = [5, 2, 7, 0, 3, 6, 1, 4];
        assert_eq!(canonical_code(g.relabel(&perm).rotation()), code);
        assert_eq!(canonical_code(g.mirror().rotation()), code);
        let f = canonical_form(&g);
        assert_eq!(canonical_code(f.rotation()), code);
        assert_eq!(f.edge_count(), 12);
    }

    #[test]
    fn small_codes() {
        assert_eq!(canonical_code(triangle().rotation()), vec![2, 3, 0, 1, 3, 0, 1, 2, 0]);
        assert_eq!(canonical_code(&[vec![1], vec![0]]), vec![2, 0, 1, 0]);
    }

    #[test]
    fn distinguishes_embeddings() {
        // Two pendants at a triangle vertex: both in one face, or one in each.
        let a = PlaneGraph::from_rotation(vec![vec![1, 2, 3, 4], vec![2, 0], vec![0, 1], vec![0], vec![0]]).unwrap();
        let c = a.relabel(&[0, 2, 1, 4, 3]);
        assert_eq!(canonical_code(a.rotation()), canonical_code(c.rotation()));
        let d = PlaneGraph::from_rotation(vec![vec![1, 3, 2, 4], vec![2, 0], vec![0, 1], vec![0], vec![0]]).unwrap();
        assert_ne!(canonical_code(a.rotation()), canonical_code(d.rotation()));
    }
}
