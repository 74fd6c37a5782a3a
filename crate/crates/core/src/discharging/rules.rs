//! The gift amounts, as pure functions of local data.
//!
//! The graph engine and the case enumerator both call these, so a scenario
//! and the concrete neighborhood it was extracted from are charged identically.

use std::fmt;

use super::Charge;
use crate::plane_graph::FaceClass;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    R1_1,
    R1_2,
    R2a,
    R2b,
    R2c,
    R2d,
    R2_2,
    R2_3,
    R3,
    R4,
    R5,
}

impl Rule {
    pub const ALL: [Rule; 11] =
        [Rule::R1_1, Rule::R1_2, Rule::R2a, Rule::R2b, Rule::R2c, Rule::R2d, Rule::R2_2, Rule::R2_3, Rule::R3, Rule::R4, Rule::R5];

    pub fn id(self) -> &'static str {
        match self {
            Rule::R1_1 => "R1.1",
            Rule::R1_2 => "R1.2",
            Rule::R2a => "R2a",
            Rule::R2b => "R2b",
            Rule::R2c => "R2c",
            Rule::R2d => "R2d",
            Rule::R2_2 => "R2.2",
            Rule::R2_3 => "R2.3",
            Rule::R3 => "R3",
            Rule::R4 => "R4",
            Rule::R5 => "R5",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

fn q(n: i64, d: i64) -> Charge {
    Charge::new(n, d)
}

/// A vertex on a face, seen from another vertex of that face. Flags only
/// matter for the degrees they belong to: `bad4` and `poor` for 4-vertices,
/// `weak3` (relative to this face) for 3-vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Occupant {
    pub degree: usize,
    pub bad4: bool,
    pub weak3: bool,
    pub poor: bool,
}

impl Occupant {
    pub fn of_degree(degree: usize) -> Self {
        Occupant { degree, ..Default::default() }
    }
}

fn sorted2(o: [Occupant; 2]) -> [Occupant; 2] {
    if o[0].degree <= o[1].degree {
        o
    } else {
        [o[1], o[0]]
    }
}

/// Degree multiset of a triangle through a vertex of degree `d` is (3,4,4).
pub fn is_344(d: usize, others: [usize; 2]) -> bool {
    let mut a = [d, others[0], others[1]];
    a.sort_unstable();
    a == [3, 4, 4]
}

/// R1.1: interior 4-vertex to an incident F3 face. A (3,4,4)-face gets 5/4;
/// a bad vertex gives 3/4 to its other triangles; otherwise 1.
pub fn r1_1(others: [Occupant; 2], v_bad: bool) -> Charge {
    if is_344(4, [others[0].degree, others[1].degree]) {
        q(5, 4)
    } else if v_bad {
        q(3, 4)
    } else {
        q(1, 1)
    }
}

/// Two 3-vertices consecutive on the face, the vertex after them (not the
/// giver) a 4⁺-vertex. `seq` lists the other three vertices in face order.
fn adjacent_33_then_big(seq: &[Occupant; 3]) -> bool {
    let d = seq.map(|o| o.degree);
    (d[0] == 3 && d[1] == 3 && d[2] >= 4) || (d[1] == 3 && d[2] == 3 && d[0] >= 4)
}

fn degree_counts(seq: &[Occupant; 3]) -> (usize, usize, usize, usize) {
    let low = seq.iter().filter(|o| o.degree < 3).count();
    let three = seq.iter().filter(|o| o.degree == 3).count();
    let four = seq.iter().filter(|o| o.degree == 4).count();
    let big = seq.iter().filter(|o| o.degree >= 5).count();
    (low, three, four, big)
}

/// R1.2: interior 4-vertex to an incident F4 face; `seq` is the other three
/// vertices in face order. Tiers are tried in the order they are listed.
pub fn r1_2(seq: [Occupant; 3], v_rich: bool) -> Charge {
    let (_, three, four, _) = degree_counts(&seq);
    if adjacent_33_then_big(&seq) {
        q(1, 1)
    } else if (three == 1 && four == 2) || v_rich {
        q(2, 3)
    } else {
        q(1, 2)
    }
}

/// R2.1: interior 5⁺-vertex to an incident F3 face with other vertices
/// `others`; `v_weak` is the weak 5-/6-vertex flag. `None` when a vertex of
/// degree below 3 leaves the face outside every clause.
pub fn r2_1(others: [Occupant; 2], v_weak: bool) -> Option<(Rule, Charge)> {
    let [u, w] = sorted2(others);
    match (u.degree, w.degree) {
        (3, 3) => Some((Rule::R2a, q(2, 1))),
        (3, 4) => {
            let (bad, weak) = (w.bad4, u.weak3);
            let amount = match (bad, weak) {
                (true, true) => q(9, 4),
                (false, true) => q(2, 1),
                (true, false) => q(7, 4),
                (false, false) => q(3, 2),
            };
            Some((Rule::R2b, amount))
        }
        (3, d) if d >= 5 => Some((Rule::R2c, if v_weak { q(5, 4) } else { q(7, 4) })),
        (a, _) if a >= 4 => {
            let bad = [u, w].iter().filter(|o| o.degree == 4 && o.bad4).count();
            Some((Rule::R2d, [q(1, 1), q(5, 4), q(3, 2)][bad]))
        }
        _ => None,
    }
}

/// Face is (3,4,4,5⁺) or (3,4,5⁺,4) as seen from its 5⁺-vertex: one 3, two 4s.
pub fn is_light_shape(seq: &[Occupant; 3]) -> bool {
    let (low, three, four, _) = degree_counts(seq);
    low == 0 && three == 1 && four == 2
}

/// Both 4-vertices of a (3,4,4,5⁺)/(3,4,5⁺,4) face are poor.
pub fn is_superlight(seq: &[Occupant; 3]) -> bool {
    is_light_shape(seq) && seq.iter().filter(|o| o.degree == 4).all(|o| o.poor)
}

/// R2.2: interior 5⁺-vertex to an incident F4 face, `seq` as in [`r1_2`].
///
/// The 3/4 tier is read as "exactly one 3-vertex, the rest 4⁺, at least two
/// 5⁺ counting the giver", which also covers (3,5⁺,5⁺,5⁺). `None` for faces
/// that match no tier (two non-adjacent 3-vertices, three 3-vertices, a
/// vertex of degree below 3).
pub fn r2_2(seq: [Occupant; 3]) -> Option<Charge> {
    let (low, three, _, big) = degree_counts(&seq);
    if low > 0 {
        return None;
    }
    if adjacent_33_then_big(&seq) {
        return Some(q(1, 1));
    }
    if is_light_shape(&seq) {
        return Some(if is_superlight(&seq) { q(1, 1) } else { q(5, 6) });
    }
    if three == 1 && big >= 1 {
        return Some(q(3, 4));
    }
    if three == 0 {
        return Some(q(1, 2));
    }
    None
}

/// R2.3: to each member of Q4(v).
pub fn r2_3() -> Charge {
    q(1, 6)
}

/// R3: to each pendant 3-face.
pub fn r3() -> Charge {
    q(1, 2)
}

/// R4: C0-vertex to an incident inner face of the given class.
pub fn r4(class: FaceClass) -> Option<Charge> {
    match (class.degree, class.hits) {
        (3, 1) => Some(q(3, 1)),
        (3, 2) => Some(q(3, 2)),
        (4, 2) => Some(q(1, 1)),
        _ => None,
    }
}

/// R5: C0 to a C0-vertex of degree `d`.
pub fn r5(d: usize) -> Option<Charge> {
    match d {
        2 => Some(q(2, 1)),
        3 => Some(q(3, 2)),
        4 => Some(q(1, 1)),
        5 => Some(q(1, 2)),
        _ => None,
    }
}

/// R5's extra clause: a 7-cycle C0 with exactly six 2-vertices takes 1 from the incident face.
pub fn r5_extra(c0_len: usize, s2: usize) -> Option<Charge> {
    (c0_len == 7 && s2 == 6).then(|| q(1, 1))
}

/// Every amount the rules can move.
pub fn amount_set() -> Vec<Charge> {
    [(1, 6), (1, 2), (2, 3), (3, 4), (5, 6), (1, 1), (5, 4), (3, 2), (7, 4), (2, 1), (9, 4), (3, 1)]
        .iter()
        .map(|&(n, d)| q(n, d))
        .collect()
}
