//! Defective colorings: a (c1,…,ck)-coloring gives every vertex a color `i`
//! so that at most `ci` of its neighbors share that color.
//!
//! Colors are 0-based in the API (`0..k`) and printed 1-based.

mod search;
mod superext;

pub use search::Search;
pub(crate) use superext::first_use_in_order;
pub use superext::{
    superextend, superextend_on, valid_precolorings, verify_superextendability, verify_superextendability_on,
    SuperextReport,
};

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::plane_graph::{Adjacency, FamilyVerdict, Vertex};

pub type Color = u8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("vertex {vertex} has color {color}, but only {k} colors exist")]
    ColorOutOfRange { vertex: Vertex, color: Color, k: usize },
    #[error("coloring has {got} entries, graph has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },
    #[error("precoloring of C0 is not a valid coloring of the subgraph induced by C0")]
    InvalidPrecoloring,
    #[error("graph is not in the family: {0:?}")]
    NotInFamily(FamilyVerdict),
    #[error("C0 has length {0}; only 3 and 7 are supported")]
    BadC0Length(usize),
    #[error("invalid color spec: {0}")]
    BadSpec(String),
}

/// Defect caps `(c1,…,ck)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorSpec {
    caps: Vec<u32>,
}

impl ColorSpec {
    pub fn new(caps: Vec<u32>) -> Result<Self, ColoringError> {
        if caps.is_empty() || caps.len() > 16 {
            return Err(ColoringError::BadSpec(format!("need 1..=16 colors, got {}", caps.len())));
        }
        Ok(ColorSpec { caps })
    }

    /// The (1,1,0) caps.
    pub fn one_one_zero() -> Self {
        ColorSpec { caps: vec![1, 1, 0] }
    }

    /// Proper k-coloring.
    pub fn proper(k: usize) -> Self {
        ColorSpec { caps: vec![0; k.max(1)] }
    }

    pub fn k(&self) -> usize {
        self.caps.len()
    }

    pub fn cap(&self, c: Color) -> u32 {
        self.caps[c as usize]
    }

    pub fn caps(&self) -> &[u32] {
        &self.caps
    }

    /// Componentwise `self <= other` with the same number of colors.
    pub fn le(&self, other: &ColorSpec) -> bool {
        self.k() == other.k() && self.caps.iter().zip(&other.caps).all(|(a, b)| a <= b)
    }

    /// Colors grouped into classes of equal cap; colors inside a class are interchangeable.
    pub fn symmetry_classes(&self) -> Vec<Vec<Color>> {
        let mut classes: Vec<Vec<Color>> = Vec::new();
        for (c, &cap) in self.caps.iter().enumerate() {
            match classes.iter_mut().find(|cl| self.caps[cl[0] as usize] == cap) {
                Some(cl) => cl.push(c as Color),
                None => classes.push(vec![c as Color]),
            }
        }
        classes
    }
}

impl fmt::Display for ColorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.caps.iter().map(u32::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for ColorSpec {
    type Err = ColoringError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let caps: Result<Vec<u32>, _> =
            s.trim().trim_matches(|c| c == '(' || c == ')').split(',').map(|t| t.trim().parse::<u32>()).collect();
        ColorSpec::new(caps.map_err(|e| ColoringError::BadSpec(format!("{s:?}: {e}")))?)
    }
}

/// A possibly partial color assignment.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coloring {
    colors: Vec<Option<Color>>,
}

impl Coloring {
    pub fn empty(n: usize) -> Self {
        Coloring { colors: vec![None; n] }
    }

    pub fn total(colors: Vec<Color>) -> Self {
        Coloring { colors: colors.into_iter().map(Some).collect() }
    }

    pub fn from_partial(colors: Vec<Option<Color>>) -> Self {
        Coloring { colors }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn get(&self, v: Vertex) -> Option<Color> {
        self.colors[v]
    }

    pub fn set(&mut self, v: Vertex, c: Option<Color>) {
        self.colors[v] = c;
    }

    pub fn as_slice(&self) -> &[Option<Color>] {
        &self.colors
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    /// Colors of a total coloring.
    pub fn to_total(&self) -> Option<Vec<Color>> {
        self.colors.iter().copied().collect()
    }

    /// Number of colored neighbors of `v` that share its color.
    pub fn defect(&self, g: &impl Adjacency, v: Vertex) -> u32 {
        match self.colors[v] {
            None => 0,
            Some(c) => g.neighbors(v).iter().filter(|&&u| self.colors[u] == Some(c)).count() as u32,
        }
    }
}

impl fmt::Display for Coloring {
    /// 1-based colors, `-` for uncolored vertices.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> =
            self.colors.iter().map(|c| c.map_or_else(|| "-".to_string(), |c| (c + 1).to_string())).collect();
        write!(f, "{}", s.join(" "))
    }
}

/// Outcome of [`validate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Validity {
    Valid,
    DefectExceeded { vertex: Vertex, defect: u32, cap: u32 },
    Uncolored { vertex: Vertex },
}

impl Validity {
    pub fn is_valid(&self) -> bool {
        matches!(self, Validity::Valid)
    }
}

/// Checks defect caps; reports the first offending vertex in vertex order.
/// Only edges between colored vertices count.
pub fn validate(g: &impl Adjacency, spec: &ColorSpec, phi: &Coloring, total: bool) -> Result<Validity, ColoringError> {
    let n = g.vertex_count();
    if phi.len() != n {
        return Err(ColoringError::LengthMismatch { expected: n, got: phi.len() });
    }
    for v in 0..n {
        if let Some(c) = phi.get(v) {
            if c as usize >= spec.k() {
                return Err(ColoringError::ColorOutOfRange { vertex: v, color: c, k: spec.k() });
            }
        }
    }
    for v in 0..n {
        match phi.get(v) {
            None if total => return Ok(Validity::Uncolored { vertex: v }),
            None => {}
            Some(c) => {
                let d = phi.defect(g, v);
                if d > spec.cap(c) {
                    return Ok(Validity::DefectExceeded { vertex: v, defect: d, cap: spec.cap(c) });
                }
            }
        }
    }
    Ok(Validity::Valid)
}

/// Lexicographically least valid total extension of `fixed` (vertices in id
/// order, colors ascending), or `None` when no extension exists or `fixed`
/// itself already violates a cap.
pub fn solve(g: &impl Adjacency, spec: &ColorSpec, fixed: &Coloring) -> Result<Option<Coloring>, ColoringError> {
    if !validate(g, spec, fixed, false)?.is_valid() {
        return Ok(None);
    }
    let mut s = Search::new(g, spec);
    if !s.load(fixed.as_slice()) {
        return Ok(None);
    }
    let free: Vec<Vertex> = (0..g.vertex_count()).filter(|&v| fixed.get(v).is_none()).collect();
    Ok(if s.extend(&free) { Some(s.coloring()) } else { None })
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane_graph::fixtures::*;
    use crate::plane_graph::SimpleGraph;

    #[test]
    fn validate_triangle() {
        let g = triangle();
        let s = ColorSpec::one_one_zero();
        assert_eq!(
            validate(&g, &s, &Coloring::total(vec![0, 0, 0]), true).unwrap(),
            Validity::DefectExceeded { vertex: 0, defect: 2, cap: 1 }
        );
        assert!(validate(&g, &s, &Coloring::total(vec![0, 0, 1]), true).unwrap().is_valid());
        assert_eq!(
            validate(&g, &s, &Coloring::total(vec![0, 0, 3]), true),
            Err(ColoringError::ColorOutOfRange { vertex: 2, color: 3, k: 3 })
        );
    }

    #[test]
    fn k4_two_pairs() {
        let g = SimpleGraph::complete(4);
        assert!(validate(&g, &ColorSpec::one_one_zero(), &Coloring::total(vec![0, 0, 1, 1]), true).unwrap().is_valid());
    }

    #[test]
    fn solver_examples() {
        let c7 = cycle(7);
        let sol = solve(&c7, &ColorSpec::proper(3), &Coloring::empty(7)).unwrap().unwrap();
        assert_eq!(sol.to_total().unwrap(), vec![0, 1, 0, 1, 0, 1, 2]);
        assert!(solve(&SimpleGraph::complete(4), &ColorSpec::proper(3), &Coloring::empty(4)).unwrap().is_none());
        assert!(solve(&SimpleGraph::complete(6), &ColorSpec::one_one_zero(), &Coloring::empty(6)).unwrap().is_none());
        assert!(solve(&SimpleGraph::complete(5), &ColorSpec::one_one_zero(), &Coloring::empty(5)).unwrap().is_some());
    }

    #[test]
    fn solver_matches_oracle_on_small_complete_graphs() {
        for m in 1..=6 {
            let g = SimpleGraph::complete(m);
            let s = ColorSpec::one_one_zero();
            let a = solve(&g, &s, &Coloring::empty(m)).unwrap().and_then(|c| c.to_total());
            assert_eq!(a, oracle::brute_force(&g, &s), "K{m}");
            assert_eq!(a.is_some(), m <= 5);
        }
    }

    #[test]
    fn invalid_fixed_part_is_unsat() {
        let g = triangle();
        let fixed = Coloring::from_partial(vec![Some(2), Some(2), None]);
        assert!(solve(&g, &ColorSpec::one_one_zero(), &fixed).unwrap().is_none());
    }

    #[test]
    fn spec_parsing() {
        assert_eq!("1,1,0".parse::<ColorSpec>().unwrap(), ColorSpec::one_one_zero());
        assert_eq!("(1, 1, 0)".parse::<ColorSpec>().unwrap().to_string(), "1,1,0");
        assert!("1,x".parse::<ColorSpec>().is_err());
        assert_eq!(ColorSpec::one_one_zero().symmetry_classes(), vec![vec![0, 1], vec![2]]);
    }
}
