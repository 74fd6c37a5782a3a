use super::{Color, ColorSpec, Coloring, ColoringError, Search};
use crate::plane_graph::{check_family_membership, Adjacency, FamilyVerdict, RootedPlaneGraph, Vertex};

/// Result of checking every precoloring of C0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperextReport {
    pub c0: Vec<Vertex>,
    pub spec: ColorSpec,
    /// Precolorings checked.
    pub tried: usize,
    /// The lexicographically least precoloring (in C0 order) with no superextension.
    pub failing: Option<Vec<Color>>,
    /// Edges between non-consecutive C0 vertices; precolorings are still only
    /// required to be valid on the subgraph induced by C0.
    pub chords: Vec<(Vertex, Vertex)>,
    /// Only one precoloring per orbit under permutations of equal-cap colors was checked.
    pub symmetry_reduced: bool,
}

impl SuperextReport {
    pub fn is_ok(&self) -> bool {
        self.failing.is_none()
    }
}

fn check_precoloring(g: &impl Adjacency, spec: &ColorSpec, c0: &[Vertex], phi0: &[Color]) -> Result<(), ColoringError> {
    if c0.len() != phi0.len() {
        return Err(ColoringError::LengthMismatch { expected: c0.len(), got: phi0.len() });
    }
    for (&v, &c) in c0.iter().zip(phi0) {
        if c as usize >= spec.k() {
            return Err(ColoringError::ColorOutOfRange { vertex: v, color: c, k: spec.k() });
        }
    }
    if !induced_valid(g, spec, c0, phi0) {
        return Err(ColoringError::InvalidPrecoloring);
    }
    Ok(())
}

fn induced_valid(g: &impl Adjacency, spec: &ColorSpec, c0: &[Vertex], phi0: &[Color]) -> bool {
    (0..c0.len()).all(|i| {
        let same = (0..c0.len()).filter(|&j| j != i && phi0[j] == phi0[i] && g.has_edge(c0[i], c0[j])).count();
        same as u32 <= spec.cap(phi0[i])
    })
}

/// Superextension on an abstract graph: extend `phi0` (colors of `c0`, in
/// order) so that every vertex outside C0 avoids the colors of all its C0
/// neighbors. Returns the lexicographically least such coloring.
pub fn superextend_on(
    g: &impl Adjacency,
    spec: &ColorSpec,
    c0: &[Vertex],
    phi0: &[Color],
) -> Result<Option<Coloring>, ColoringError> {
    check_precoloring(g, spec, c0, phi0)?;
    let mut s = Search::new(g, spec);
    Ok(run(&mut s, g, c0, phi0))
}

fn run<G: Adjacency>(s: &mut Search<'_, G>, g: &G, c0: &[Vertex], phi0: &[Color]) -> Option<Coloring> {
    let n = g.vertex_count();
    let mut fixed = vec![None; n];
    let mut in_c0 = vec![false; n];
    for (&v, &c) in c0.iter().zip(phi0) {
        fixed[v] = Some(c);
        in_c0[v] = true;
    }
    s.clear_constraints();
    let mut free = Vec::new();
    for v in 0..n {
        if in_c0[v] {
            continue;
        }
        let mask = g.neighbors(v).iter().filter(|&&u| in_c0[u]).fold(0u32, |m, &u| m | 1 << fixed[u].unwrap());
        s.set_forbidden(v, mask);
        free.push(v);
    }
    if !s.load(&fixed) {
        return None;
    }
    if s.extend(&free) {
        Some(s.coloring())
    } else {
        None
    }
}

/// [`superextend_on`] for the designated outer cycle of a rooted graph.
pub fn superextend(g: &RootedPlaneGraph, spec: &ColorSpec, phi0: &[Color]) -> Result<Option<Coloring>, ColoringError> {
    superextend_on(g.base(), spec, g.outer(), phi0)
}

/// All colorings of `c0` (in order) that are valid on the subgraph induced by
/// `c0`, lexicographically. With `symmetric`, only the least member of each
/// orbit under permutations of equal-cap colors is kept.
pub fn valid_precolorings(g: &impl Adjacency, spec: &ColorSpec, c0: &[Vertex], symmetric: bool) -> Vec<Vec<Color>> {
    let k = spec.k() as Color;
    let classes = spec.symmetry_classes();
    let mut out = Vec::new();
    let mut cur = vec![0 as Color; c0.len()];
    fn rec(
        i: usize,
        cur: &mut Vec<Color>,
        out: &mut Vec<Vec<Color>>,
        g: &impl Adjacency,
        spec: &ColorSpec,
        c0: &[Vertex],
        k: Color,
        classes: &[Vec<Color>],
        symmetric: bool,
    ) {
        if i == c0.len() {
            if induced_valid(g, spec, c0, cur) {
                out.push(cur.clone());
            }
            return;
        }
        for c in 0..k {
            if symmetric && !first_use_in_order(&cur[..i], c, classes) {
                continue;
            }
            cur[i] = c;
            rec(i + 1, cur, out, g, spec, c0, k, classes, symmetric);
        }
    }
    rec(0, &mut cur, &mut out, g, spec, c0, k, classes.as_slice(), symmetric);
    out
}

/// Whether appending `c` keeps first appearances within each symmetry class increasing.
pub(crate) fn first_use_in_order(prefix: &[Color], c: Color, classes: &[Vec<Color>]) -> bool {
    if prefix.contains(&c) {
        return true;
    }
    let class = classes.iter().find(|cl| cl.contains(&c)).expect("color belongs to a class");
    let pos = class.iter().position(|&x| x == c).unwrap();
    pos == 0 || prefix.contains(&class[pos - 1])
}

/// Checks that every valid precoloring of `c0` superextends.
pub fn verify_superextendability_on(
    g: &impl Adjacency,
    spec: &ColorSpec,
    c0: &[Vertex],
    symmetric: bool,
) -> Result<SuperextReport, ColoringError> {
    match check_family_membership(g) {
        FamilyVerdict::InFamily => {}
        v => return Err(ColoringError::NotInFamily(v)),
    }
    if c0.len() != 3 && c0.len() != 7 {
        return Err(ColoringError::BadC0Length(c0.len()));
    }
    if !crate::plane_graph::is_cycle_of(g, c0) {
        return Err(ColoringError::InvalidPrecoloring);
    }
    let k = c0.len();
    let mut chords = Vec::new();
    for i in 0..k {
        for j in i + 2..k {
            if !(i == 0 && j == k - 1) && g.has_edge(c0[i], c0[j]) {
                chords.push((c0[i].min(c0[j]), c0[i].max(c0[j])));
            }
        }
    }
    chords.sort_unstable();
    let mut s = Search::new(g, spec);
    let mut tried = 0;
    let mut failing = None;
    for phi0 in valid_precolorings(g, spec, c0, symmetric) {
        tried += 1;
        if run(&mut s, g, c0, &phi0).is_none() {
            failing = Some(phi0);
            break;
        }
    }
    Ok(SuperextReport { c0: c0.to_vec(), spec: spec.clone(), tried, failing, chords, symmetry_reduced: symmetric })
}

/// [`verify_superextendability_on`] for the outer cycle of a rooted graph.
pub fn verify_superextendability(
    g: &RootedPlaneGraph,
    spec: &ColorSpec,
    symmetric: bool,
) -> Result<SuperextReport, ColoringError> {
    verify_superextendability_on(g.base(), spec, g.outer(), symmetric)
}
