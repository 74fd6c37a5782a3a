use super::{Color, ColorSpec, Coloring};
use crate::plane_graph::{Adjacency, Vertex};

/// Chronological backtracking with incremental defect accounting.
///
/// Every vertex has a limit on same-colored neighbors: the cap of its color,
/// optionally tightened by a per-vertex budget, and a mask of forbidden colors.
/// [`Search::extend`] colors the given vertices in order trying colors
/// ascending, so the first solution found is the lexicographically least one.
pub struct Search<'a, G: Adjacency> {
    g: &'a G,
    caps: Vec<u32>,
    colors: Vec<Option<Color>>,
    defect: Vec<u32>,
    budget: Vec<u32>,
    forbidden: Vec<u32>,
    nodes: u64,
}

impl<'a, G: Adjacency> Search<'a, G> {
    pub fn new(g: &'a G, spec: &ColorSpec) -> Self {
        let n = g.vertex_count();
        Search {
            g,
            caps: spec.caps().to_vec(),
            colors: vec![None; n],
            defect: vec![0; n],
            budget: vec![u32::MAX; n],
            forbidden: vec![0; n],
            nodes: 0,
        }
    }

    /// Caps the number of same-colored neighbors of `v` below its color cap.
    pub fn set_budget(&mut self, v: Vertex, b: u32) {
        self.budget[v] = b;
    }

    /// Bit `c` set means `v` may not take color `c`.
    pub fn set_forbidden(&mut self, v: Vertex, mask: u32) {
        self.forbidden[v] = mask;
    }

    pub fn clear_constraints(&mut self) {
        self.budget.iter_mut().for_each(|b| *b = u32::MAX);
        self.forbidden.iter_mut().for_each(|m| *m = 0);
    }

    #[inline]
    fn limit(&self, v: Vertex, c: Color) -> u32 {
        self.caps[c as usize].min(self.budget[v])
    }

    /// Installs a partial coloring; false when it already breaks a limit.
    pub fn load(&mut self, colors: &[Option<Color>]) -> bool {
        self.colors.copy_from_slice(colors);
        let mut ok = true;
        for v in 0..self.colors.len() {
            self.defect[v] = 0;
            if let Some(c) = self.colors[v] {
                let d = self.g.neighbors(v).iter().filter(|&&u| self.colors[u] == Some(c)).count() as u32;
                self.defect[v] = d;
                if d > self.limit(v, c) || self.forbidden[v] >> c & 1 == 1 {
                    ok = false;
                }
            }
        }
        ok
    }

    pub fn colors(&self) -> &[Option<Color>] {
        &self.colors
    }

    pub fn coloring(&self) -> Coloring {
        Coloring::from_partial(self.colors.clone())
    }

    /// Search nodes visited since construction.
    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    #[inline]
    fn fits(&self, x: Vertex, c: Color) -> bool {
        if self.forbidden[x] >> c & 1 == 1 {
            return false;
        }
        let lim = self.limit(x, c);
        let mut same = 0;
        for &y in self.g.neighbors(x) {
            if self.colors[y] == Some(c) {
                same += 1;
                if same > lim || self.defect[y] + 1 > self.limit(y, c) {
                    return false;
                }
            }
        }
        true
    }

    fn assign(&mut self, x: Vertex, c: Color) {
        let mut same = 0;
        for i in 0..self.g.neighbors(x).len() {
            let y = self.g.neighbors(x)[i];
            if self.colors[y] == Some(c) {
                same += 1;
                self.defect[y] += 1;
            }
        }
        self.defect[x] = same;
        self.colors[x] = Some(c);
    }

    fn unassign(&mut self, x: Vertex) {
        let c = self.colors[x].take();
        for i in 0..self.g.neighbors(x).len() {
            let y = self.g.neighbors(x)[i];
            if self.colors[y].is_some() && self.colors[y] == c {
                self.defect[y] -= 1;
            }
        }
        self.defect[x] = 0;
    }

    /// Colors `order` (all currently uncolored) on top of the loaded state.
    /// On failure the state is left as it was.
    pub fn extend(&mut self, order: &[Vertex]) -> bool {
        self.nodes += 1;
        let Some((&x, rest)) = order.split_first() else {
            return true;
        };
        for c in 0..self.caps.len() as Color {
            if self.fits(x, c) {
                self.assign(x, c);
                if self.extend(rest) {
                    return true;
                }
                self.unassign(x);
            }
        }
        false
    }
}
