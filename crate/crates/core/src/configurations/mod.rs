//! Reducible configurations and a brute-force local extendability check.
//!
//! A configuration is a small graph split into a core S (deleted in the
//! reducibility argument), a recolorable part R of the shell whose whole
//! neighborhood is visible, and the fixed rest of the shell T∖R. Every
//! coloring of T∖R must extend to S ∪ R.
//!
//! Fixed shell vertices may have neighbors outside the configuration, so
//! their spare defect budget is unknown. `allowance(v)` is the number of
//! same-colored neighbors `v` may gain inside S ∪ R (0 is the worst case,
//! and is also how C0 vertices are modeled: superextension forbids sharing
//! their color). Edges between two fixed shell vertices are ordinary edges
//! of the precoloring and are checked against the color caps. Degree ranges
//! such as 4⁻ or 5⁺ are instantiated at concrete boundary values; the
//! catalog spot-checks those instances and is not a closed induction over
//! all degrees.

mod catalog;
mod scan;
mod text;

pub use catalog::{catalog, catalog_text, falsified_variants};
pub use scan::{scan_graph, PatternMatch, ScanMode};
pub use text::{parse_configurations, serialize_configurations};

use thiserror::Error;

use crate::coloring::first_use_in_order;
use crate::coloring::{Color, ColorSpec, Coloring, Search};
use crate::plane_graph::{Adjacency, SimpleGraph, Vertex};

/// Largest fixed shell that is enumerated.
pub const MAX_FIXED_SHELL: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("configuration {name}: {message}")]
    Invalid { name: String, message: String },
    #[error("configuration {name}: {size} fixed shell vertices exceed the limit of {MAX_FIXED_SHELL}")]
    ConfigTooLarge { name: String, size: usize },
    #[error("no configuration named {0:?}")]
    UnknownName(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    pub name: String,
    /// Lemma label and a one-line description.
    pub anchor: String,
    pub spec: ColorSpec,
    pub vertices: Vec<String>,
    /// Sorted, `u < v`.
    pub edges: Vec<(Vertex, Vertex)>,
    /// S, sorted.
    pub core: Vec<Vertex>,
    /// R, sorted; disjoint from S.
    pub recolorable: Vec<Vertex>,
    /// Per vertex; only read for T∖R.
    pub allowance: Vec<u32>,
    /// Pairs of T∖R vertices forced to share a color, `a < b`, sorted.
    pub equalities: Vec<(Vertex, Vertex)>,
}

impl Configuration {
    pub fn graph(&self) -> SimpleGraph {
        SimpleGraph::from_edges(self.vertices.len(), &self.edges).expect("validated configuration")
    }

    /// T∖R in vertex order: the vertices whose colors are enumerated.
    pub fn fixed_shell(&self) -> Vec<Vertex> {
        (0..self.vertices.len()).filter(|v| !self.core.contains(v) && !self.recolorable.contains(v)).collect()
    }

    /// T = V ∖ S.
    pub fn shell(&self) -> Vec<Vertex> {
        (0..self.vertices.len()).filter(|v| !self.core.contains(v)).collect()
    }

    pub fn vertex_id(&self, name: &str) -> Option<Vertex> {
        self.vertices.iter().position(|n| n == name)
    }

    /// Fixed shell vertices joined by equalities, each class sorted, classes
    /// ordered by first member. Singletons included.
    pub fn identification_classes(&self) -> Vec<Vec<Vertex>> {
        let fixed = self.fixed_shell();
        let mut rep: Vec<Vertex> = (0..self.vertices.len()).collect();
        fn find(rep: &mut [Vertex], v: Vertex) -> Vertex {
            let mut r = v;
            while rep[r] != r {
                r = rep[r];
            }
            rep[v] = r;
            r
        }
        for &(a, b) in &self.equalities {
            let (ra, rb) = (find(&mut rep, a), find(&mut rep, b));
            rep[ra.max(rb)] = ra.min(rb);
        }
        let mut classes: Vec<Vec<Vertex>> = Vec::new();
        let mut index = vec![usize::MAX; self.vertices.len()];
        for &v in &fixed {
            let r = find(&mut rep, v);
            if index[r] == usize::MAX {
                index[r] = classes.len();
                classes.push(Vec::new());
            }
            classes[index[r]].push(v);
        }
        classes
    }

    fn invalid(&self, message: impl Into<String>) -> ConfigError {
        ConfigError::Invalid { name: self.name.clone(), message: message.into() }
    }

    /// Checks the structural invariants.
    pub fn validate(&self) -> Result<(), ConfigError> {
        let n = self.vertices.len();
        let mut names = self.vertices.clone();
        names.sort();
        if names.windows(2).any(|w| w[0] == w[1]) {
            return Err(self.invalid("duplicate vertex name"));
        }
        if self.allowance.len() != n {
            return Err(self.invalid("allowance list has the wrong length"));
        }
        SimpleGraph::from_edges(n, &self.edges).map_err(|e| self.invalid(e.to_string()))?;
        if self.core.iter().chain(&self.recolorable).any(|&v| v >= n) {
            return Err(self.invalid("vertex out of range"));
        }
        if self.core.iter().any(|v| self.recolorable.contains(v)) {
            return Err(self.invalid("core and recolorable sets overlap"));
        }
        let max_cap = self.spec.caps().iter().copied().max().unwrap_or(0);
        let fixed = self.fixed_shell();
        for &v in &fixed {
            if self.allowance[v] > max_cap {
                return Err(self.invalid(format!("allowance of {} exceeds every cap", self.vertices[v])));
            }
        }
        for &(a, b) in &self.equalities {
            if !fixed.contains(&a) || !fixed.contains(&b) || a == b {
                return Err(self.invalid("equalities must join two distinct fixed shell vertices"));
            }
        }
        for class in self.identification_classes() {
            for (i, &a) in class.iter().enumerate() {
                if class[i + 1..].iter().any(|&b| self.edges.contains(&(a, b))) {
                    return Err(self.invalid("identified vertices must not be adjacent"));
                }
            }
        }
        if fixed.len() > MAX_FIXED_SHELL {
            return Err(ConfigError::ConfigTooLarge { name: self.name.clone(), size: fixed.len() });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducibilityReport {
    pub name: String,
    pub ok: bool,
    /// Colors of T∖R (in vertex order) that admit no extension, if any: the
    /// lexicographically least (within its symmetry orbit when reduced).
    pub witness: Option<Vec<Color>>,
    /// Precolorings of T∖R checked.
    pub tried: u64,
    /// Precolorings that extended.
    pub extended: u64,
    pub symmetry_reduced: bool,
}

impl ReducibilityReport {
    /// Witness as `name=color` pairs, colors 1-based.
    pub fn witness_text(&self, cfg: &Configuration) -> Option<String> {
        self.witness.as_ref().map(|w| {
            cfg.fixed_shell()
                .iter()
                .zip(w)
                .map(|(&v, &c)| format!("{}={}", cfg.vertices[v], c + 1))
                .collect::<Vec<_>>()
                .join(" ")
        })
    }
}

struct Checker<'a> {
    cfg: &'a Configuration,
    g: &'a SimpleGraph,
    fixed: Vec<Vertex>,
    is_fixed: Vec<bool>,
    free_order: Vec<Vertex>,
    groups: Vec<Vec<Vertex>>,
    /// Distinct neighboring groups of each group: edges of the identified graph.
    group_adj: Vec<Vec<usize>>,
}

impl<'a> Checker<'a> {
    fn new(cfg: &'a Configuration, g: &'a SimpleGraph) -> Self {
        let fixed = cfg.fixed_shell();
        let mut is_fixed = vec![false; cfg.vertices.len()];
        for &v in &fixed {
            is_fixed[v] = true;
        }
        let free_order = (0..cfg.vertices.len()).filter(|&v| !is_fixed[v]).collect();
        let groups = cfg.identification_classes();
        let mut group_of = vec![usize::MAX; cfg.vertices.len()];
        for (i, grp) in groups.iter().enumerate() {
            for &v in grp {
                group_of[v] = i;
            }
        }
        let group_adj = groups
            .iter()
            .map(|grp| {
                let mut adj: Vec<usize> = grp
                    .iter()
                    .flat_map(|&v| g.neighbors(v).iter().copied())
                    .filter(|&u| is_fixed[u])
                    .map(|u| group_of[u])
                    .collect();
                adj.sort_unstable();
                adj.dedup();
                adj
            })
            .collect();
        Checker { cfg, g, fixed, is_fixed, free_order, groups, group_adj }
    }

    fn colors_of(&self, group_colors: &[Color]) -> Vec<Option<Color>> {
        let mut colors = vec![None; self.cfg.vertices.len()];
        for (grp, &c) in self.groups.iter().zip(group_colors) {
            for &v in grp {
                colors[v] = Some(c);
            }
        }
        colors
    }

    /// Valid on the identified fixed part.
    fn admissible(&self, group_colors: &[Color]) -> bool {
        self.group_adj.iter().enumerate().all(|(i, adj)| {
            let c = group_colors[i];
            adj.iter().filter(|&&j| group_colors[j] == c).count() as u32 <= self.cfg.spec.cap(c)
        })
    }

    /// Splitting identified vertices can overload a common neighbor; such a
    /// precoloring cannot extend.
    fn try_extend(&self, s: &mut Search<'_, SimpleGraph>, colors: &[Option<Color>]) -> Option<Coloring> {
        s.clear_constraints();
        for &v in &self.fixed {
            let c = colors[v].unwrap();
            let internal =
                self.g.neighbors(v).iter().filter(|&&u| self.is_fixed[u] && colors[u] == Some(c)).count() as u32;
            if internal > self.cfg.spec.cap(c) {
                return None;
            }
            s.set_budget(v, internal + self.cfg.allowance[v]);
        }
        if !s.load(colors) {
            return None;
        }
        s.extend(&self.free_order).then(|| s.coloring())
    }

    fn group_colors(&self, phi: &[Color]) -> Option<Vec<Color>> {
        let mut colors = vec![None; self.cfg.vertices.len()];
        for (&v, &c) in self.fixed.iter().zip(phi) {
            colors[v] = Some(c);
        }
        self.groups
            .iter()
            .map(|grp| {
                let c = colors[grp[0]];
                grp.iter().all(|&v| colors[v] == c).then_some(c.unwrap())
            })
            .collect()
    }
}

/// Extension of one T∖R precoloring (colors in [`Configuration::fixed_shell`]
/// order) to all of the configuration, or `None`.
pub fn extends(cfg: &Configuration, phi: &[Color]) -> Result<Option<Coloring>, ConfigError> {
    cfg.validate()?;
    let g = cfg.graph();
    let ch = Checker::new(cfg, &g);
    if phi.len() != ch.fixed.len() || phi.iter().any(|&c| c as usize >= cfg.spec.k()) {
        return Err(cfg.invalid("precoloring does not match the fixed shell"));
    }
    let mut colors = vec![None; cfg.vertices.len()];
    for (&v, &c) in ch.fixed.iter().zip(phi) {
        colors[v] = Some(c);
    }
    let mut s = Search::new(&g, &cfg.spec);
    Ok(ch.try_extend(&mut s, &colors))
}

/// Whether a T∖R precoloring is one the check quantifies over: equalities
/// hold and it is valid once equal vertices are identified.
pub fn is_admissible_precoloring(cfg: &Configuration, phi: &[Color]) -> bool {
    let g = cfg.graph();
    let ch = Checker::new(cfg, &g);
    phi.len() == ch.fixed.len() && ch.group_colors(phi).is_some_and(|gc| ch.admissible(&gc))
}

/// Checks every admissible coloring of T∖R, symmetry-reduced over equal-cap colors.
pub fn verify_local_extendability(cfg: &Configuration) -> Result<ReducibilityReport, ConfigError> {
    verify_with(cfg, true)
}

struct Walk<'c, 'g> {
    ch: &'c Checker<'g>,
    classes: Vec<Vec<Color>>,
    symmetric: bool,
    prefix: Vec<Color>,
    same: Vec<u32>,
    search: Search<'g, SimpleGraph>,
    report: ReducibilityReport,
}

impl Walk<'_, '_> {
    /// Colors groups in order; false once a witness is found.
    fn rec(&mut self, i: usize) -> bool {
        let ch = self.ch;
        if i == ch.groups.len() {
            self.report.tried += 1;
            let colors = ch.colors_of(&self.prefix);
            if ch.try_extend(&mut self.search, &colors).is_some() {
                self.report.extended += 1;
                return true;
            }
            self.report.ok = false;
            self.report.witness = Some(ch.fixed.iter().map(|&v| colors[v].unwrap()).collect());
            return false;
        }
        for c in 0..ch.cfg.spec.k() as Color {
            if self.symmetric && !first_use_in_order(&self.prefix, c, &self.classes) {
                continue;
            }
            let cap = ch.cfg.spec.cap(c);
            let nb: Vec<usize> = ch.group_adj[i].iter().copied().filter(|&j| j < i && self.prefix[j] == c).collect();
            if nb.len() as u32 > cap || nb.iter().any(|&j| self.same[j] + 1 > cap) {
                continue;
            }
            self.prefix.push(c);
            self.same[i] = nb.len() as u32;
            for &j in &nb {
                self.same[j] += 1;
            }
            let go_on = self.rec(i + 1);
            for &j in &nb {
                self.same[j] -= 1;
            }
            self.same[i] = 0;
            self.prefix.pop();
            if !go_on {
                return false;
            }
        }
        true
    }
}

pub fn verify_with(cfg: &Configuration, symmetric: bool) -> Result<ReducibilityReport, ConfigError> {
    cfg.validate()?;
    let g = cfg.graph();
    let ch = Checker::new(cfg, &g);
    let mut walk = Walk {
        ch: &ch,
        classes: cfg.spec.symmetry_classes(),
        symmetric,
        prefix: Vec::with_capacity(ch.groups.len()),
        same: vec![0; ch.groups.len()],
        search: Search::new(&g, &cfg.spec),
        report: ReducibilityReport {
            name: cfg.name.clone(),
            ok: true,
            witness: None,
            tried: 0,
            extended: 0,
            symmetry_reduced: symmetric,
        },
    };
    walk.rec(0);
    Ok(walk.report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny(core: &[&str], edges: &[(&str, &str)], names: &[&str]) -> Configuration {
        let vertices: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let id = |s: &str| vertices.iter().position(|n| n == s).unwrap();
        let mut e: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (id(a).min(id(b)), id(a).max(id(b)))).collect();
        e.sort_unstable();
        let mut c: Vec<usize> = core.iter().map(|s| id(s)).collect();
        c.sort_unstable();
        Configuration {
            name: "t".into(),
            anchor: "test".into(),
            spec: ColorSpec::one_one_zero(),
            allowance: vec![0; vertices.len()],
            vertices,
            edges: e,
            core: c,
            recolorable: Vec::new(),
            equalities: Vec::new(),
        }
    }

    #[test]
    fn empty_core_is_vacuous() {
        let cfg = tiny(&[], &[("a", "b")], &["a", "b"]);
        let r = verify_local_extendability(&cfg).unwrap();
        assert!(r.ok);
        assert!(r.tried > 0);
    }

    #[test]
    fn single_three_vertex_fails() {
        let cfg = tiny(&["v"], &[("v", "a"), ("v", "b"), ("v", "c")], &["v", "a", "b", "c"]);
        let r = verify_with(&cfg, false).unwrap();
        assert!(!r.ok);
        let w = r.witness.clone().unwrap();
        assert_eq!(w, vec![0, 1, 2]);
        assert_eq!(extends(&cfg, &w).unwrap(), None);
        assert_eq!(r.witness_text(&cfg).unwrap(), "a=1 b=2 c=3");
        // Spare budget on the leaves rescues it.
        let mut relaxed = cfg.clone();
        relaxed.allowance = vec![0, 1, 1, 1];
        assert!(verify_local_extendability(&relaxed).unwrap().ok);
    }

    #[test]
    fn equalities_shrink_the_space() {
        let mut cfg = tiny(&["v"], &[("v", "a"), ("v", "b"), ("v", "c")], &["v", "a", "b", "c"]);
        cfg.equalities = vec![(1, 2)];
        let r = verify_with(&cfg, false).unwrap();
        assert!(r.ok);
        assert_eq!(r.tried, 9);
    }

    #[test]
    fn too_large() {
        let names: Vec<String> = (0..16).map(|i| format!("x{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let cfg = tiny(&["x0"], &[], &refs);
        assert!(matches!(verify_local_extendability(&cfg), Err(ConfigError::ConfigTooLarge { size: 15, .. })));
    }

    #[test]
    fn catalog_entries_verify() {
        let cat = catalog();
        assert!(cat.len() >= 10);
        for cfg in &cat {
            let r = verify_local_extendability(cfg).unwrap();
            assert!(r.ok, "{} failed on {:?}", cfg.name, r.witness_text(cfg));
            assert_eq!(r.tried, r.extended);
        }
    }

    #[test]
    fn falsified_variant_has_witness() {
        for cfg in falsified_variants() {
            let r = verify_local_extendability(&cfg).unwrap();
            assert!(!r.ok);
            let w = r.witness.clone().unwrap();
            assert!(is_admissible_precoloring(&cfg, &w));
            assert_eq!(extends(&cfg, &w).unwrap(), None);
        }
    }

    #[test]
    fn catalog_text_is_canonical() {
        assert_eq!(serialize_configurations(&catalog()), catalog_text());
    }

    #[test]
    fn identification_counts_merged_defect() {
        // a and b are identified and both see c: with all three colored 1 the
        // merged vertex has a single same-colored neighbor, but c has two
        // after splitting, so the precoloring is admissible and cannot extend.
        let mut cfg = tiny(&["v"], &[("v", "a"), ("a", "c"), ("b", "c")], &["v", "a", "b", "c"]);
        cfg.equalities = vec![(1, 2)];
        assert!(is_admissible_precoloring(&cfg, &[0, 0, 0]));
        assert_eq!(extends(&cfg, &[0, 0, 0]).unwrap(), None);
        let r = verify_with(&cfg, false).unwrap();
        assert_eq!(r.witness, Some(vec![0, 0, 0]));
    }
}
