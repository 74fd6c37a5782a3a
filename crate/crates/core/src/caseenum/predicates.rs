//! Reducibility facts as local predicates on scenarios.
//!
//! Each predicate returns `true` when it holds or does not apply. A
//! predicate has an id and a lemma anchor; [`Switches::disable`] accepts
//! either, so `L2.3-5` turns off every predicate anchored there.

use std::collections::BTreeSet;

use super::eval::{center_poor, corner_gift, four_is_bad};
use super::{CaseError, Class, Corner, LocalScenario, Occ, View};
use crate::discharging::Charge;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PredicateKind {
    /// Hypothesis of a reducibility lemma, read locally.
    Lemma,
    /// One direction of the weak 5-/6-vertex definition.
    Definition,
    /// A step of a charge proof that no listed lemma states.
    ProofClaim,
    /// A degenerate graph handled outside the discharging.
    EscapeHatch,
}

pub struct Predicate {
    pub id: &'static str,
    pub lemma: &'static str,
    pub kind: PredicateKind,
    pub statement: &'static str,
    pub(crate) holds: fn(&LocalScenario) -> bool,
}

impl Predicate {
    pub fn holds(&self, s: &LocalScenario) -> bool {
        (self.holds)(s)
    }
}

impl std::fmt::Debug for Predicate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Predicate({})", self.id)
    }
}

/// Which predicates are enabled.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Switches {
    disabled: BTreeSet<&'static str>,
}

fn squash(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).flat_map(char::to_lowercase).collect()
}

impl Switches {
    pub fn all() -> Switches {
        Switches::default()
    }

    /// Disables every predicate whose id or lemma anchor is `key`
    /// (whitespace and case ignored). Returns how many were disabled.
    pub fn disable(&mut self, key: &str) -> Result<usize, CaseError> {
        let k = squash(key);
        let hits: Vec<&'static str> =
            PREDICATES.iter().filter(|p| squash(p.id) == k || squash(p.lemma) == k).map(|p| p.id).collect();
        if hits.is_empty() {
            return Err(CaseError::UnknownPredicate(key.to_string()));
        }
        let n = hits.len();
        self.disabled.extend(hits);
        Ok(n)
    }

    pub fn without(keys: &[&str]) -> Result<Switches, CaseError> {
        let mut s = Switches::all();
        for k in keys {
            s.disable(k)?;
        }
        Ok(s)
    }

    pub fn is_enabled(&self, id: &str) -> bool {
        !self.disabled.contains(id)
    }

    pub fn disabled(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.disabled.iter().copied()
    }
}

pub(crate) fn failed_predicates(s: &LocalScenario, sw: &Switches) -> Vec<&'static str> {
    PREDICATES.iter().filter(|p| sw.is_enabled(p.id) && !p.holds(s)).map(|p| p.id).collect()
}

pub(crate) fn admissible(s: &LocalScenario, sw: &Switches) -> bool {
    PREDICATES.iter().all(|p| !sw.is_enabled(p.id) || p.holds(s))
}

// ---- helpers -------------------------------------------------------------

fn interior_vertex<'a>(s: &'a LocalScenario) -> Option<View<'a>> {
    match s {
        LocalScenario::Vertex { on_c0: false, .. } => Some(View::of(s)),
        _ => None,
    }
}

fn boundary_vertex<'a>(s: &'a LocalScenario) -> Option<View<'a>> {
    match s {
        LocalScenario::Vertex { on_c0: true, .. } => Some(View::of(s)),
        _ => None,
    }
}

fn face(s: &LocalScenario) -> Option<&[Occ]> {
    match s {
        LocalScenario::Face { occupants } => Some(occupants),
        _ => None,
    }
}

fn interior_face(s: &LocalScenario) -> Option<&[Occ]> {
    face(s).filter(|o| o.iter().all(|x| !x.on_c0()))
}

fn classes(o: &[Occ]) -> Vec<Class> {
    let mut c: Vec<Class> = o.iter().map(|x| x.class).collect();
    c.sort_unstable();
    c
}

fn is3(o: Occ) -> bool {
    o.class == Class::Three
}

fn is4(o: Occ) -> bool {
    o.class == Class::Four
}

fn big(o: Occ) -> bool {
    o.class.is_big()
}

/// Degree at most `d`, for an interior vertex (C0 vertices never count).
fn at_most(o: Occ, d: usize) -> bool {
    o.class.degree().is_some_and(|x| x <= d)
}

impl View<'_> {
    fn tris(&self) -> Vec<usize> {
        (0..self.k).filter(|&i| self.tri_f(i)).collect()
    }

    /// The two other vertices of F3 corner i, sorted by class.
    fn tri_pair(&self, i: usize) -> (Occ, Occ) {
        let (a, b) = (self.n(i), self.n(i + 1));
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    }

    /// Corner i is a (3, 4⁻, center)-triangle of F3.
    fn light_tri(&self, i: usize) -> bool {
        let (a, b) = self.tri_pair(i);
        self.tri_f(i) && is3(a) && at_most(b, 4)
    }

    /// Corner i is a bad (3,4,center)-triangle of F3.
    fn bad_tri(&self, i: usize) -> bool {
        let (a, b) = self.tri_pair(i);
        self.tri_f(i) && is3(a) && is4(b) && b.bad
    }

    fn far(&self, i: usize) -> Occ {
        self.c(i).far().expect("quad corner")
    }

    fn on_tri(&self, j: usize) -> bool {
        let j = j % self.k;
        self.c(self.prev(j)).is_tri() || self.c(j).is_tri()
    }
}

// ---- the predicates ------------------------------------------------------

fn l23_1(s: &LocalScenario) -> bool {
    if let Some(o) = interior_face(s).filter(|o| o.len() == 3) {
        return (0..3).all(|i| !(is3(o[i]) && o[i].weak && (is3(o[(i + 1) % 3]) || is3(o[(i + 2) % 3]))));
    }
    if let Some(v) = interior_vertex(s) {
        if v.k == 3 {
            return (0..3).filter(|&i| is3(v.n(i))).count() <= 1;
        }
        return v.tris().into_iter().all(|i| {
            let (a, b) = v.tri_pair(i);
            !(is3(a) && is3(b) && (a.weak || b.weak))
        });
    }
    true
}

fn l23_2(s: &LocalScenario) -> bool {
    if let Some(o) = interior_face(s).filter(|o| o.len() == 3) {
        let c = classes(o);
        return !(c[0] == Class::Three && c[1] == Class::Three && matches!(c[2], Class::Three | Class::Four));
    }
    if let Some(v) = interior_vertex(s) {
        return v.tris().into_iter().all(|i| {
            let d = v.face_degrees(i);
            !(d[0] == 3 && d[1] == 3 && d[2] <= 4)
        });
    }
    true
}

fn l23_3(s: &LocalScenario) -> bool {
    let Some(v) = interior_vertex(s).filter(|v| v.k == 4) else { return true };
    let tri: Vec<usize> = (0..4).filter(|&i| v.c(i).is_tri()).collect();
    if tri.len() != 1 || !v.tri_f(tri[0]) || v.face_degrees(tri[0]) != [3, 4, 4] {
        return true;
    }
    let i = tri[0];
    !(is3(v.n(i + 2)) && is3(v.n(i + 3)))
}

fn l23_4(s: &LocalScenario) -> bool {
    match interior_face(s).filter(|o| o.len() == 3) {
        Some(o) if classes(o) == [Class::Three, Class::Four, Class::Four] => o.iter().all(|x| !(is3(*x) && x.weak)),
        _ => true,
    }
}

fn l23_5(s: &LocalScenario) -> bool {
    if let Some(o) = interior_face(s).filter(|o| o.len() == 3) {
        let is344 = classes(o) == [Class::Three, Class::Four, Class::Four];
        return is344 || !o.iter().any(|x| is4(*x) && x.bad) || o.iter().any(|x| big(*x));
    }
    if let Some(v) = interior_vertex(s).filter(|v| v.k == 4) {
        let tris = v.tris();
        return tris.iter().all(|&x| {
            v.face_degrees(x) != [3, 4, 4]
                || tris.iter().filter(|&&y| y != x).all(|&y| {
                    let (a, b) = v.tri_pair(y);
                    big(a) || big(b)
                })
        });
    }
    true
}

/// Two F3 triangles at an interior 5-vertex; `None` otherwise.
fn five_two_tris<'a>(s: &'a LocalScenario) -> Option<(View<'a>, usize, usize)> {
    let v = interior_vertex(s).filter(|v| v.k == 5)?;
    let t = v.tris();
    (t.len() == 2).then(|| (v, t[0], t[1]))
}

fn l24_1(s: &LocalScenario) -> bool {
    let Some((v, a, b)) = five_two_tris(s) else { return true };
    if !(v.light_tri(a) && v.light_tri(b)) {
        return true;
    }
    (0..5).filter(|&j| !v.on_tri(j)).all(|j| !is3(v.n(j)))
}

fn l24_2(s: &LocalScenario) -> bool {
    let Some((v, a, b)) = five_two_tris(s) else { return true };
    !(v.bad_tri(a) && v.bad_tri(b))
}

fn l24_3(s: &LocalScenario) -> bool {
    let Some((v, a, b)) = five_two_tris(s) else { return true };
    [(a, b), (b, a)].into_iter().all(|(x, y)| {
        let (p, q) = v.tri_pair(y);
        !(v.bad_tri(x) && is3(p) && is4(q) && p.weak)
    })
}

fn l24_4(s: &LocalScenario) -> bool {
    let Some((v, a, b)) = five_two_tris(s) else { return true };
    [(a, b), (b, a)].into_iter().all(|(x, y)| {
        let (p, q) = v.tri_pair(y);
        !(v.bad_tri(x) && is4(p) && is4(q) && p.bad && q.bad)
    })
}

fn l24_5(s: &LocalScenario) -> bool {
    let Some(v) = interior_vertex(s).filter(|v| v.k == 6) else { return true };
    v.tris().into_iter().filter(|&i| v.light_tri(i)).count() < 3
}

fn l25_1(s: &LocalScenario) -> bool {
    match interior_face(s).filter(|o| o.len() == 3) {
        Some(o) => {
            let c = classes(o);
            !(c[0] == Class::Three && c[1].is_big() && c[2].is_big() && o.iter().all(|x| x.weak))
        }
        None => true,
    }
}

fn l26_1(s: &LocalScenario) -> bool {
    if let Some(o) = face(s).filter(|o| o.len() == 4) {
        return o.iter().filter(|x| x.on_c0()).count() != 1;
    }
    let v = View::of(s);
    (0..v.k).all(|i| !v.c(i).is_quad() || v.hits(i) != 1)
}

fn l26_2(s: &LocalScenario) -> bool {
    if let Some(o) = interior_face(s).filter(|o| o.len() == 4) {
        return (0..2).all(|i| !(is3(o[i]) && is3(o[i + 2])));
    }
    if let Some(v) = interior_vertex(s) {
        return (0..v.k).filter(|&i| v.quad_f(i)).all(|i| !(is3(v.n(i)) && is3(v.n(i + 1))) && !(v.k == 3 && is3(v.far(i))));
    }
    true
}

fn l27(s: &LocalScenario) -> bool {
    let Some(v) = interior_vertex(s) else { return true };
    let hot = match v.k {
        4 => four_is_bad(&v),
        5 => v.tris().into_iter().any(|i| {
            let (a, b) = v.tri_pair(i);
            v.bad_tri(i) || (is3(a) && is3(b))
        }),
        _ => false,
    };
    !hot || (0..v.k).all(|i| !v.c(i).is_quad() || !is3(v.far(i)))
}

fn l29_1(s: &LocalScenario) -> bool {
    if let Some(v) = interior_vertex(s) {
        if v.k == 4 {
            for i in 0..4 {
                if !v.c(i).is_quad() {
                    continue;
                }
                let u = v.far(i);
                let flank_big = v.c(i + 3) == Corner::Big && v.c(i + 1) == Corner::Big;
                if is3(u) && (is3(v.n(i)) || is3(v.n(i + 1))) && !flank_big {
                    return false;
                }
            }
        } else if v.k >= 5 {
            for i in 0..v.k {
                if v.n(i).poor {
                    let (p, c) = (v.prev(i), i);
                    if (is3(v.n(p)) && is3(v.far(p))) || (is3(v.n(c + 1)) && is3(v.far(c))) {
                        return false;
                    }
                }
            }
        }
        return true;
    }
    if let Some(o) = interior_face(s).filter(|o| o.len() == 4) {
        return (0..4).all(|j| {
            let opp = o[(j + 2) % 4];
            !(is4(o[j]) && o[j].poor && is3(opp) && (is3(o[(j + 1) % 4]) || is3(o[(j + 3) % 4])))
        });
    }
    true
}

fn l29_2(s: &LocalScenario) -> bool {
    let Some(v) = interior_vertex(s) else { return true };
    if v.k == 4 {
        return (0..4).all(|i| !(v.c(i).is_quad() && v.c(i + 1).is_quad() && is3(v.far(i)) && is3(v.far(i + 1))));
    }
    if v.k >= 5 {
        return (0..v.k).all(|i| {
            let p = v.prev(i);
            !(is4(v.n(i)) && v.c(p).is_quad() && v.c(i).is_quad() && is3(v.n(p)) && is3(v.n(i + 1)))
        });
    }
    true
}

fn l29_3(s: &LocalScenario) -> bool {
    let Some(v) = interior_vertex(s).filter(|v| v.k == 4) else { return true };
    (0..2).all(|i| !(v.c(i).is_quad() && v.c(i + 2).is_quad() && is3(v.far(i)) && is3(v.far(i + 2))))
}

fn l29_4(s: &LocalScenario) -> bool {
    let Some(v) = interior_vertex(s) else { return true };
    if v.k == 4 && center_poor(&v) {
        return (0..2).all(|i| big(v.n(i)) || big(v.n(i + 2)));
    }
    if v.k >= 5 {
        return (0..v.k).all(|i| !v.n(i).poor || big(v.far(v.prev(i))) || big(v.far(i)));
    }
    true
}

fn poor5<'a>(s: &'a LocalScenario) -> Option<View<'a>> {
    interior_vertex(s).filter(|v| v.k == 5 && center_poor(v))
}

fn l210_1(s: &LocalScenario) -> bool {
    let Some(v) = poor5(s) else { return true };
    (0..5).filter(|&i| is3(v.far(i))).count() <= 2
}

fn l210_2(s: &LocalScenario) -> bool {
    let Some(v) = poor5(s) else { return true };
    (0..5).all(|i| !is3(v.far(i)) || big(v.n(i + 4)) || big(v.n(i + 2)))
}

fn l210_3(s: &LocalScenario) -> bool {
    let Some(v) = poor5(s) else { return true };
    (0..5).all(|i| {
        let hit = is3(v.far(i)) && (is3(v.n(i)) || is3(v.n(i + 1)));
        !hit || (0..5).filter(|&j| j != i).all(|j| !is3(v.far(j)))
    })
}

fn l210_4(s: &LocalScenario) -> bool {
    let Some(v) = poor5(s) else { return true };
    (0..5).all(|i| !(is4(v.n(i)) && is3(v.far(i)) && is4(v.n(i + 1)) && v.n(i).q4 && v.n(i + 1).q4))
}

fn l210_5(s: &LocalScenario) -> bool {
    let Some(v) = poor5(s) else { return true };
    (0..5).all(|i| {
        // v_i, u_i, v_{i+2} are 3-vertices, or the mirror image v_{i+1}, u_i, v_{i-1}.
        let fwd = is3(v.n(i)) && is3(v.far(i)) && is3(v.n(i + 2));
        let back = is3(v.n(i + 1)) && is3(v.far(i)) && is3(v.n(i + 4));
        let rest = |skip: [usize; 2]| (0..5).filter(|j| !skip.contains(j)).all(|j| big(v.n(j)));
        (!fwd || rest([i, (i + 2) % 5])) && (!back || rest([(i + 1) % 5, (i + 4) % 5]))
    })
}

fn l210_6(s: &LocalScenario) -> bool {
    let Some(v) = poor5(s) else { return true };
    (0..5).all(|i| {
        let u = v.far(i);
        let (a, b) = (v.n(i), v.n(i + 1));
        let poor4 = |o: Occ| is4(o) && o.poor;
        let fwd = is3(a) && poor4(u) && poor4(b) && b.q4;
        let back = is3(b) && poor4(u) && poor4(a) && a.q4;
        !(fwd || back)
    })
}

/// Corner i of a 5⁺-center, containing the Q4 neighbor `j`, is cheap: no
/// 3-vertex, or a (3,5⁺,4,5⁺)-face with the 3-vertex opposite `j`.
fn cheap_quad(v: &View, i: usize, j: usize) -> bool {
    let others = v.face_others(i);
    if others.iter().all(|o| !is3(*o)) {
        return true;
    }
    let opposite = if j == i % v.k { v.n(i + 1) } else { v.n(i) };
    is3(opposite) && big(v.far(i))
}

fn l33(s: &LocalScenario) -> bool {
    let Some(v) = interior_vertex(s).filter(|v| v.k >= 5) else { return true };
    (0..v.k).all(|j| {
        if !v.n(j).q4 {
            return true;
        }
        let p = v.prev(j);
        (v.quad_f(p) && cheap_quad(&v, p, j)) || (v.quad_f(j) && cheap_quad(&v, j, j))
    })
}

fn q4_bundle(s: &LocalScenario) -> bool {
    let Some(v) = interior_vertex(s).filter(|v| v.k >= 5) else { return true };
    let members: Vec<usize> = (0..v.k).filter(|&j| v.n(j).q4).collect();
    let gift: Vec<Charge> =
        (0..v.k).map(|i| corner_gift(&v, i).map_or(Charge::from_integer(0), |(_, a)| a)).collect();
    let sixth = Charge::new(1, 6);
    // Each member picks one of its two corners; at most 2^k choices.
    let m = members.len();
    (0..1u32 << m).any(|mask| {
        let mut load = gift.clone();
        let mut used = vec![false; v.k];
        for (b, &j) in members.iter().enumerate() {
            let c = if mask >> b & 1 == 1 { j } else { v.prev(j) };
            if !v.quad_f(c) {
                return false;
            }
            load[c] += sixth;
            used[c] = true;
        }
        (0..v.k).all(|c| !used[c] || load[c] <= Charge::from_integer(1))
    })
}

/// The weak 5-/6-vertex definition holds at the center.
pub(crate) fn weak_definition(v: &View) -> bool {
    let tris = v.tris();
    match v.k {
        5 => {
            let small: Vec<usize> = tris
                .iter()
                .copied()
                .filter(|&i| {
                    let (a, b) = v.tri_pair(i);
                    is3(a) && at_most(b, 5)
                })
                .collect();
            small.len() >= 2 && small.iter().any(|&i| v.bad_tri(i)) && v.units.iter().any(|u| u.neighbor.pendant)
        }
        6 => {
            let bad643 = tris.iter().filter(|&&i| v.bad_tri(i)).count();
            let big3 = tris.iter().filter(|&&i| {
                let (a, b) = v.tri_pair(i);
                is3(a) && big(b)
            });
            bad643 >= 2 && big3.count() >= 1
        }
        _ => false,
    }
}

fn weak5_reduction(s: &LocalScenario) -> bool {
    let Some(v) = interior_vertex(s).filter(|v| v.k == 5) else { return true };
    !weak_definition(&v) || v.weak
}

fn weak6_reduction(s: &LocalScenario) -> bool {
    let Some(v) = interior_vertex(s).filter(|v| v.k == 6) else { return true };
    !weak_definition(&v) || v.weak
}

fn weak_needs_definition(s: &LocalScenario) -> bool {
    let Some(v) = interior_vertex(s) else { return true };
    !v.weak || weak_definition(&v)
}

fn l22_3(s: &LocalScenario) -> bool {
    if let Some(o) = face(s).filter(|o| o.len() == 3) {
        return o.iter().filter(|x| x.on_c0()).count() <= 2;
    }
    if let Some(v) = boundary_vertex(s) {
        // The two C0 neighbors are the cycle neighbors; any other would be a chord.
        return (1..v.k - 1).all(|j| !v.n(j).on_c0()) && (0..v.k).all(|i| !v.c(i).is_tri() || v.hits(i) <= 2);
    }
    if let Some(v) = interior_vertex(s) {
        // Two C0 neighbors of an interior vertex are adjacent on C0, and the
        // triangle they span with the center is a face.
        let on: Vec<usize> = (0..v.k).filter(|&j| v.n(j).on_c0()).collect();
        return match on.len() {
            0 | 1 => true,
            2 => (0..v.k).any(|i| v.c(i).is_tri() && v.n(i).on_c0() && v.n(i + 1).on_c0()),
            _ => false,
        };
    }
    true
}

fn l22_4(s: &LocalScenario) -> bool {
    if let Some(o) = face(s).filter(|o| o.len() == 4) {
        return (0..2).all(|i| !(o[i].on_c0() && o[i + 2].on_c0()));
    }
    if let Some(v) = boundary_vertex(s) {
        return (0..v.k).all(|i| !v.c(i).is_quad() || !v.far(i).on_c0());
    }
    if let Some(v) = interior_vertex(s) {
        let c0_neighbors = (0..v.k).filter(|&j| v.n(j).on_c0()).count();
        return (0..v.k).filter(|&i| v.c(i).is_quad()).all(|i| {
            let diag = !(v.n(i).on_c0() && v.n(i + 1).on_c0());
            // The center is diagonal to a C0 vertex: exactly one C0 neighbor.
            let opposite_c0 = !v.far(i).on_c0() || c0_neighbors == 1;
            diag && opposite_c0
        });
    }
    true
}

fn c0_three_single_face(s: &LocalScenario) -> bool {
    let Some(v) = boundary_vertex(s).filter(|v| v.k == 3) else { return true };
    (0..2).filter(|&i| v.c(i).is_tri() || v.c(i).is_quad()).count() <= 1
}

fn not_trivial_c0(s: &LocalScenario) -> bool {
    match s {
        LocalScenario::Outer { degrees } => !degrees.iter().all(|&d| d == 2),
        _ => true,
    }
}

/// The registry, in report order.
pub static PREDICATES: &[Predicate] = &[
    Predicate {
        id: "L2.2-3",
        lemma: "L2.2-3",
        kind: PredicateKind::Lemma,
        statement: "nonadjacent C0 vertices are not adjacent and have no common neighbor off C0",
        holds: l22_3,
    },
    Predicate {
        id: "L2.2-4",
        lemma: "L2.2-4",
        kind: PredicateKind::Lemma,
        statement: "a 4-face has no two diagonal C0 vertices; the diagonal of a C0 vertex on an F4'' face has exactly one C0 neighbor",
        holds: l22_4,
    },
    Predicate {
        id: "L2.3-1",
        lemma: "L2.3-1",
        kind: PredicateKind::Lemma,
        statement: "no interior 3-vertex has two interior 3-neighbors",
        holds: l23_1,
    },
    Predicate { id: "L2.3-2", lemma: "L2.3-2", kind: PredicateKind::Lemma, statement: "no (3,3,4⁻)-face in F3", holds: l23_2 },
    Predicate {
        id: "L2.3-3",
        lemma: "L2.3-3",
        kind: PredicateKind::Lemma,
        statement: "a 4-vertex whose only 3-face is a (3,4,4)-face of F3 has a neighbor off it that is 4⁺ or on C0",
        holds: l23_3,
    },
    Predicate {
        id: "L2.3-4",
        lemma: "L2.3-4",
        kind: PredicateKind::Lemma,
        statement: "the 3-vertex of a (3,4,4)-face of F3 is strong",
        holds: l23_4,
    },
    Predicate {
        id: "no-two-344-triangles-at-4-vertex",
        lemma: "L2.3-5",
        kind: PredicateKind::Lemma,
        statement: "a 4-vertex on a (3,4,4)-face and another face of F3 has a 5⁺-neighbor on the other face",
        holds: l23_5,
    },
    Predicate {
        id: "L2.4-1",
        lemma: "L2.4-1",
        kind: PredicateKind::Lemma,
        statement: "a 5-vertex on two (3,4⁻,5)-faces of F3 has its fifth neighbor 4⁺ or on C0",
        holds: l24_1,
    },
    Predicate {
        id: "L2.4-2",
        lemma: "L2.4-2",
        kind: PredicateKind::Lemma,
        statement: "a 5-vertex on two faces of F3 has at most one bad one",
        holds: l24_2,
    },
    Predicate {
        id: "L2.4-3",
        lemma: "L2.4-3",
        kind: PredicateKind::Lemma,
        statement: "next to a bad (3,4,5)-face, the 3-vertex of another (3,4,5)-face at the same 5-vertex is strong",
        holds: l24_3,
    },
    Predicate {
        id: "L2.4-4",
        lemma: "L2.4-4",
        kind: PredicateKind::Lemma,
        statement: "next to a bad (3,4,5)-face, a (4,4,5)-face at the same 5-vertex has at most one bad 4-vertex",
        holds: l24_4,
    },
    Predicate {
        id: "L2.4-5",
        lemma: "L2.4-5",
        kind: PredicateKind::Lemma,
        statement: "no interior 6-vertex is on three (3,4⁻,6)-faces of F3",
        holds: l24_5,
    },
    Predicate {
        id: "L2.5-1",
        lemma: "L2.5-1",
        kind: PredicateKind::Lemma,
        statement: "no (3,5⁺,5⁺)-face has three weak vertices",
        holds: l25_1,
    },
    Predicate { id: "L2.6-1", lemma: "L2.6-1", kind: PredicateKind::Lemma, statement: "no 4-face in F4'", holds: l26_1 },
    Predicate {
        id: "L2.6-2",
        lemma: "L2.6-2",
        kind: PredicateKind::Lemma,
        statement: "on a face of F4, one of each diagonal pair is 4⁺",
        holds: l26_2,
    },
    Predicate {
        id: "L2.7",
        lemma: "L2.7",
        kind: PredicateKind::Lemma,
        statement: "a bad 4-vertex, or a 5-vertex on a bad (5,4,3)- or a (5,3,3)-face of F3, has 4⁺ diagonals on its 4-faces",
        holds: l27,
    },
    Predicate {
        id: "L2.9-1",
        lemma: "L2.9-1",
        kind: PredicateKind::Lemma,
        statement: "at a 4-vertex, a 4-face with two consecutive 3-vertices v_i,u_i is flanked by 6⁺-faces; a poor 4-vertex is on no (3,3,4,4⁺)-face",
        holds: l29_1,
    },
    Predicate {
        id: "L2.9-2",
        lemma: "L2.9-2",
        kind: PredicateKind::Lemma,
        statement: "two 4-faces sharing an edge at a 4-vertex have a 4⁺ far vertex",
        holds: l29_2,
    },
    Predicate {
        id: "L2.9-3",
        lemma: "L2.9-3",
        kind: PredicateKind::Lemma,
        statement: "two opposite 4-faces at a 4-vertex have a 4⁺ far vertex",
        holds: l29_3,
    },
    Predicate {
        id: "L2.9-4",
        lemma: "L2.9-4",
        kind: PredicateKind::Lemma,
        statement: "a poor 4-vertex has a 5⁺-vertex in each pair of opposite neighbors",
        holds: l29_4,
    },
    Predicate {
        id: "L2.10-1",
        lemma: "L2.10-1",
        kind: PredicateKind::Lemma,
        statement: "a poor 5-vertex has at most two 3-vertices among its far vertices",
        holds: l210_1,
    },
    Predicate {
        id: "L2.10-2",
        lemma: "L2.10-2",
        kind: PredicateKind::Lemma,
        statement: "at a poor 5-vertex, a far 3-vertex u_i forces v_{i-1} or v_{i+2} to be 5⁺",
        holds: l210_2,
    },
    Predicate {
        id: "L2.10-3",
        lemma: "L2.10-3",
        kind: PredicateKind::Lemma,
        statement: "at a poor 5-vertex, a face with a 3-neighbor and a far 3-vertex leaves every other far vertex 4⁺",
        holds: l210_3,
    },
    Predicate {
        id: "L2.10-4",
        lemma: "L2.10-4",
        kind: PredicateKind::Lemma,
        statement: "a (5,4,3,4)-face at a poor 5-vertex has at most one Q4 member",
        holds: l210_4,
    },
    Predicate {
        id: "L2.10-5",
        lemma: "L2.10-5",
        kind: PredicateKind::Lemma,
        statement: "at a poor 5-vertex, 3-vertices v_i,u_i,v_{i+2} force the other neighbors to be 5⁺",
        holds: l210_5,
    },
    Predicate {
        id: "L2.10-6",
        lemma: "L2.10-6",
        kind: PredicateKind::Lemma,
        statement: "on a (5,3,4,4)-face at a poor 5-vertex with both 4-vertices poor, the 4-neighbor is not in Q4",
        holds: l210_6,
    },
    Predicate {
        id: "L3.3",
        lemma: "L3.3",
        kind: PredicateKind::Lemma,
        statement: "a Q4 member shares with the center a 4-face without 3-vertices or a (3,5⁺,4,5⁺)-face",
        holds: l33,
    },
    Predicate {
        id: "Q4-charge-bundle ≤ 1",
        lemma: "L3.3",
        kind: PredicateKind::Lemma,
        statement: "the Q4 members can be assigned to their 4-faces so each face plus its members takes at most 1",
        holds: q4_bundle,
    },
    Predicate {
        id: "weak-5-R2c-reduction",
        lemma: "weak-definition",
        kind: PredicateKind::Definition,
        statement: "a 5-vertex meeting the weak definition is weak",
        holds: weak5_reduction,
    },
    Predicate {
        id: "weak-6-R2c-reduction",
        lemma: "weak-definition",
        kind: PredicateKind::Definition,
        statement: "a 6-vertex meeting the weak definition is weak",
        holds: weak6_reduction,
    },
    Predicate {
        id: "weak-only-by-definition",
        lemma: "weak-definition",
        kind: PredicateKind::Definition,
        statement: "a weak 5- or 6-vertex meets the weak definition",
        holds: weak_needs_definition,
    },
    Predicate {
        id: "c0-3-vertex-one-inner-3-or-4-face",
        lemma: "L3.7",
        kind: PredicateKind::ProofClaim,
        statement: "a 3-vertex of C0 is on at most one inner 3- or 4-face",
        holds: c0_three_single_face,
    },
    Predicate {
        id: "G-is-not-C0",
        lemma: "G=C0",
        kind: PredicateKind::EscapeHatch,
        statement: "not every C0 vertex has degree 2 (otherwise G = C0 and superextension is trivial)",
        holds: not_trivial_c0,
    },
];
