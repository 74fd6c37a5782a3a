//! Local scenarios around a single charged element, and their final charges.
//!
//! A scenario records exactly what the rules look at: the center's degree and
//! position, the classes of the vertices around it (3, 4, 5, 6⁺ or "on C0")
//! with the role flags the rules read, and the kinds of faces at its corners.
//! [`evaluate`] runs the rules on a scenario; the predicates in
//! [`predicates`] encode the reducibility lemmas as local constraints, and a
//! scenario is admissible when every enabled predicate holds.
//!
//! Every scenario is stored in canonical form: the least representative under
//! rotation and reflection of the corner cycle (reflection only for a vertex
//! on C0, whose outer corner stays last).

mod eval;
mod extract;
pub mod predicates;
mod search;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;


pub use eval::{evaluate, evaluate_with, Flow, ScenarioVerdict};
pub use extract::{scenario_at_c0, scenario_at_face, scenario_at_vertex};
pub use predicates::{Predicate, PredicateKind, Switches, PREDICATES};
pub use search::{enumerate, min_final_charge, verdict_table, MinCharge, ScenarioIter};

/// Largest vertex degree the enumerator accepts as a center.
pub const MAX_CENTER_DEGREE: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CaseError {
    #[error("center degree {degree} exceeds the limit of {limit}")]
    CenterTooLarge { degree: usize, limit: usize },
    #[error("invalid center: {0}")]
    InvalidCenter(String),
    #[error("unknown predicate {0:?}")]
    UnknownPredicate(String),
    #[error("cannot parse scenario: {0}")]
    Parse(String),
    #[error("scenario is not well formed: {0}")]
    Malformed(String),
}

/// Degree class of a vertex next to the center.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Class {
    Three,
    Four,
    Five,
    SixPlus,
    /// Any vertex of C0; its degree does not enter the rules seen from here.
    OnC0,
}

impl Class {
    pub const ALL: [Class; 5] = [Class::Three, Class::Four, Class::Five, Class::SixPlus, Class::OnC0];

    pub fn from_degree(d: usize) -> Option<Class> {
        match d {
            3 => Some(Class::Three),
            4 => Some(Class::Four),
            5 => Some(Class::Five),
            d if d >= 6 => Some(Class::SixPlus),
            _ => None,
        }
    }

    /// Representative degree (6 for 6⁺); `None` on C0.
    pub fn degree(self) -> Option<usize> {
        match self {
            Class::Three => Some(3),
            Class::Four => Some(4),
            Class::Five => Some(5),
            Class::SixPlus => Some(6),
            Class::OnC0 => None,
        }
    }

    pub fn is_big(self) -> bool {
        matches!(self, Class::Five | Class::SixPlus)
    }

    /// Degree at least 4, or on C0.
    pub fn is_4plus_or_c0(self) -> bool {
        self != Class::Three
    }

    fn label(self) -> &'static str {
        match self {
            Class::Three => "3",
            Class::Four => "4",
            Class::Five => "5",
            Class::SixPlus => "6+",
            Class::OnC0 => "C0",
        }
    }
}

/// A vertex near the center with the flags the rules read about it.
///
/// Which flags may be set depends on where the vertex sits; see
/// [`LocalScenario::check`]. Labels: `3w` weak, `3p` pendant, `4b` bad,
/// `4p` poor, `4pq` poor and in the center's Q4 set, `5w`/`6+w` weak.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Occ {
    pub class: Class,
    pub weak: bool,
    pub bad: bool,
    pub poor: bool,
    pub q4: bool,
    pub pendant: bool,
}

impl Occ {
    pub const fn plain(class: Class) -> Occ {
        Occ { class, weak: false, bad: false, poor: false, q4: false, pendant: false }
    }

    pub fn is(&self, c: Class) -> bool {
        self.class == c
    }

    pub fn on_c0(&self) -> bool {
        self.class == Class::OnC0
    }

    fn flagless(&self) -> bool {
        !(self.weak || self.bad || self.poor || self.q4 || self.pendant)
    }

    pub fn label(&self) -> String {
        let mut s = self.class.label().to_string();
        for (on, c) in [(self.weak, 'w'), (self.bad, 'b'), (self.poor, 'p'), (self.q4, 'q'), (self.pendant, 'p')] {
            if on {
                s.push(c);
            }
        }
        // `3p` is pendant, `4p` poor: a class never carries both.
        s
    }
}

impl fmt::Display for Occ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl FromStr for Occ {
    type Err = CaseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || CaseError::Parse(format!("bad vertex label {s:?}"));
        let (class, rest) = if let Some(r) = s.strip_prefix("C0") {
            (Class::OnC0, r)
        } else if let Some(r) = s.strip_prefix("6+") {
            (Class::SixPlus, r)
        } else {
            let c = match s.chars().next().ok_or_else(err)? {
                '3' => Class::Three,
                '4' => Class::Four,
                '5' => Class::Five,
                _ => return Err(err()),
            };
            (c, &s[1..])
        };
        let mut o = Occ::plain(class);
        for ch in rest.chars() {
            match (ch, class) {
                ('w', _) => o.weak = true,
                ('b', _) => o.bad = true,
                ('q', _) => o.q4 = true,
                ('p', Class::Three) => o.pendant = true,
                ('p', _) => o.poor = true,
                _ => return Err(err()),
            }
        }
        Ok(o)
    }
}

/// The face at a corner of a vertex center, between two consecutive neighbors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Corner {
    /// A 3-face (triangle).
    Tri,
    /// A 4-face whose boundary is a cycle; the vertex opposite the center.
    Quad(Occ),
    /// Any other face: a 6⁺-face, or a face whose boundary is not a 3- or 4-cycle.
    Big,
    /// The outer face of a center on C0.
    Outer,
}

impl Corner {
    pub fn is_tri(&self) -> bool {
        matches!(self, Corner::Tri)
    }

    pub fn is_quad(&self) -> bool {
        matches!(self, Corner::Quad(_))
    }

    pub fn far(&self) -> Option<Occ> {
        match self {
            Corner::Quad(o) => Some(*o),
            _ => None,
        }
    }
}

impl fmt::Display for Corner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Corner::Tri => f.write_str("T"),
            Corner::Quad(o) => write!(f, "Q{o}"),
            Corner::Big => f.write_str("B"),
            Corner::Outer => f.write_str("O"),
        }
    }
}

impl FromStr for Corner {
    type Err = CaseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "T" => Ok(Corner::Tri),
            "B" => Ok(Corner::Big),
            "O" => Ok(Corner::Outer),
            _ => match s.strip_prefix('Q') {
                Some(r) => Ok(Corner::Quad(r.parse()?)),
                None => Err(CaseError::Parse(format!("bad corner {s:?}"))),
            },
        }
    }
}

/// A neighbor of a vertex center together with the corner that follows it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Unit {
    pub neighbor: Occ,
    pub corner: Corner,
}

/// What a scenario is centered on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Center {
    /// An inner 3- or 4-face.
    Face(usize),
    /// An interior vertex of the given degree.
    Vertex(usize),
    /// A vertex of C0 of the given degree.
    C0Vertex(usize),
    /// C0 itself, of the given length.
    C0(usize),
}

impl Center {
    /// Rejects centers outside the enumerated ranges.
    pub fn validate(self) -> Result<Center, CaseError> {
        let too_large = |degree| Err(CaseError::CenterTooLarge { degree, limit: MAX_CENTER_DEGREE });
        match self {
            Center::Face(3 | 4) => Ok(self),
            Center::Face(d) => Err(CaseError::InvalidCenter(format!("face:{d} (only 3- and 4-faces)"))),
            Center::Vertex(d) | Center::C0Vertex(d) if d > MAX_CENTER_DEGREE => too_large(d),
            Center::Vertex(d) if d < 3 => Err(CaseError::InvalidCenter(format!("vertex:{d} (interior degree is at least 3)"))),
            Center::C0Vertex(d) if d < 2 => Err(CaseError::InvalidCenter(format!("c0-vertex:{d} (degree is at least 2)"))),
            Center::C0(3 | 7) => Ok(self),
            Center::C0(l) => Err(CaseError::InvalidCenter(format!("c0:{l} (C0 is a 3- or 7-cycle)"))),
            _ => Ok(self),
        }
    }
}

impl fmt::Display for Center {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Center::Face(d) => write!(f, "face:{d}"),
            Center::Vertex(d) => write!(f, "vertex:{d}"),
            Center::C0Vertex(d) => write!(f, "c0-vertex:{d}"),
            Center::C0(l) => write!(f, "c0:{l}"),
        }
    }
}

impl FromStr for Center {
    type Err = CaseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CaseError::InvalidCenter(format!("{s:?} (expected face:K, vertex:K, c0-vertex:K or c0:L)"));
        let (kind, n) = s.split_once(':').ok_or_else(bad)?;
        let n: usize = n.trim().parse().map_err(|_| bad())?;
        let c = match kind.trim() {
            "face" => Center::Face(n),
            "vertex" => Center::Vertex(n),
            "c0-vertex" | "c0vertex" => Center::C0Vertex(n),
            "c0" | "C0" => Center::C0(n),
            _ => return Err(bad()),
        };
        c.validate()
    }
}

/// A local scenario in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LocalScenario {
    /// A 3- or 4-face with its vertices in boundary order.
    Face { occupants: Vec<Occ> },
    /// A vertex with its neighbors in rotation order; `units[i].corner`
    /// lies between neighbor i and neighbor i+1. On C0 the last corner is
    /// the outer face. `weak` is the center's own weak 5-/6-vertex flag.
    Vertex { on_c0: bool, weak: bool, units: Vec<Unit> },
    /// C0 with the sorted degrees of its vertices, 6 standing for 6⁺.
    Outer { degrees: Vec<usize> },
}

fn dihedral<T: Clone + Ord>(items: &[T]) -> Vec<T> {
    let n = items.len();
    let mut best = items.to_vec();
    for r in 0..n {
        let rot: Vec<T> = (0..n).map(|i| items[(r + i) % n].clone()).collect();
        let rev: Vec<T> = (0..n).map(|i| items[(r + n - i) % n].clone()).collect();
        for cand in [rot, rev] {
            if cand < best {
                best = cand;
            }
        }
    }
    best
}

/// Mirror of a vertex unit cycle: neighbor j becomes neighbor -j, and the
/// corner between them follows.
fn reflect_units(u: &[Unit]) -> Vec<Unit> {
    let k = u.len();
    (0..k).map(|j| Unit { neighbor: u[(k - j) % k].neighbor, corner: u[(2 * k - j - 1) % k].corner }).collect()
}

fn rotate_units(u: &[Unit], r: usize) -> Vec<Unit> {
    let k = u.len();
    (0..k).map(|j| u[(r + j) % k]).collect()
}

/// Mirror of a C0-vertex, keeping the outer corner last.
fn reflect_boundary(u: &[Unit]) -> Vec<Unit> {
    let k = u.len();
    (0..k)
        .map(|j| Unit {
            neighbor: u[k - 1 - j].neighbor,
            corner: if j + 1 == k { Corner::Outer } else { u[k - 2 - j].corner },
        })
        .collect()
}

impl LocalScenario {
    pub fn center(&self) -> Center {
        match self {
            LocalScenario::Face { occupants } => Center::Face(occupants.len()),
            LocalScenario::Vertex { on_c0: false, units, .. } => Center::Vertex(units.len()),
            LocalScenario::Vertex { on_c0: true, units, .. } => Center::C0Vertex(units.len()),
            LocalScenario::Outer { degrees } => Center::C0(degrees.len()),
        }
    }

    /// The canonical representative of this scenario's symmetry class.
    pub fn canonical(&self) -> LocalScenario {
        match self {
            LocalScenario::Face { occupants } => LocalScenario::Face { occupants: dihedral(occupants) },
            LocalScenario::Vertex { on_c0: false, weak, units } => {
                let mut best = units.clone();
                for base in [units.clone(), reflect_units(units)] {
                    for r in 0..units.len() {
                        let cand = rotate_units(&base, r);
                        if cand < best {
                            best = cand;
                        }
                    }
                }
                LocalScenario::Vertex { on_c0: false, weak: *weak, units: best }
            }
            LocalScenario::Vertex { on_c0: true, weak, units } => {
                let m = reflect_boundary(units);
                LocalScenario::Vertex { on_c0: true, weak: *weak, units: if m < *units { m } else { units.clone() } }
            }
            LocalScenario::Outer { degrees } => {
                let mut d = degrees.clone();
                d.sort_unstable();
                LocalScenario::Outer { degrees: d }
            }
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical() == *self
    }

    /// Whether the unit cycle is lexicographically least among its images.
    pub(crate) fn units_canonical(on_c0: bool, units: &[Unit]) -> bool {
        if on_c0 {
            return reflect_boundary(units).as_slice() >= units;
        }
        let m = reflect_units(units);
        (0..units.len()).all(|r| {
            let a = (0..units.len()).map(|j| &units[(r + j) % units.len()]);
            let b = (0..units.len()).map(|j| &m[(r + j) % units.len()]);
            a.cmp(units.iter()) != Ordering::Less && b.cmp(units.iter()) != Ordering::Less
        })
    }

    pub fn units(&self) -> &[Unit] {
        match self {
            LocalScenario::Vertex { units, .. } => units,
            _ => &[],
        }
    }

    /// Number of 3-faces of F3 at an interior vertex center.
    pub fn t3(&self) -> usize {
        let v = View::of(self);
        (0..v.k).filter(|&i| v.tri_f(i)).count()
    }

    /// Number of 4-faces of F4 at an interior vertex center.
    pub fn t4(&self) -> usize {
        let v = View::of(self);
        (0..v.k).filter(|&i| v.quad_f(i)).count()
    }

    /// Number of pendant 3-faces of a vertex center.
    pub fn tp(&self) -> usize {
        self.units().iter().filter(|u| u.neighbor.pendant).count()
    }

    /// Checks that the scenario is well formed: sizes, corner adjacencies,
    /// and flags only where they are meaningful and not forced.
    pub fn check(&self) -> Result<(), CaseError> {
        let bad = |m: String| Err(CaseError::Malformed(m));
        match self {
            LocalScenario::Face { occupants } => {
                let n = occupants.len();
                if n != 3 && n != 4 {
                    return bad(format!("a face center has 3 or 4 vertices, not {n}"));
                }
                let interior = occupants.iter().all(|o| !o.on_c0());
                let is344 = n == 3 && sorted_classes(occupants) == [Class::Three, Class::Four, Class::Four];
                for o in occupants {
                    let ok = if !interior {
                        o.flagless()
                    } else {
                        let allowed = match (n, o.class) {
                            (3, Class::Three) | (3, Class::Five) | (3, Class::SixPlus) => !(o.bad || o.poor || o.q4 || o.pendant),
                            (3, Class::Four) => !(o.weak || o.poor || o.q4 || o.pendant) && (!is344 || o.bad),
                            (4, Class::Four) => !(o.weak || o.bad || o.q4 || o.pendant),
                            _ => o.flagless(),
                        };
                        allowed
                    };
                    if !ok {
                        return bad(format!("flag on {o} not allowed here"));
                    }
                }
                Ok(())
            }
            LocalScenario::Outer { degrees } => {
                if degrees.len() != 3 && degrees.len() != 7 {
                    return bad(format!("C0 has length 3 or 7, not {}", degrees.len()));
                }
                if degrees.iter().any(|&d| !(2..=6).contains(&d)) {
                    return bad("C0 degrees lie in 2..=6 (6 meaning 6+)".into());
                }
                Ok(())
            }
            LocalScenario::Vertex { on_c0, weak, units } => {
                let v = View::of(self);
                let k = units.len();
                if *on_c0 {
                    if k < 2 {
                        return bad("a C0-vertex has degree at least 2".into());
                    }
                    if units[k - 1].corner != Corner::Outer || units[..k - 1].iter().any(|u| u.corner == Corner::Outer) {
                        return bad("the outer corner must be the last one, and only it".into());
                    }
                    if !units[0].neighbor.on_c0() || !units[k - 1].neighbor.on_c0() {
                        return bad("the neighbors around the outer corner lie on C0".into());
                    }
                    if *weak {
                        return bad("a C0-vertex has no weak flag".into());
                    }
                } else {
                    if k < 3 {
                        return bad("an interior vertex has degree at least 3".into());
                    }
                    if units.iter().any(|u| u.corner == Corner::Outer) {
                        return bad("an interior vertex has no outer corner".into());
                    }
                    if *weak && !(k == 5 || k == 6) {
                        return bad("only 5- and 6-vertices can be weak".into());
                    }
                }
                for i in 0..k {
                    if v.corner_adjacent_next(i) {
                        let (a, b) = (v.c(i), v.c(i + 1));
                        if (a.is_tri() && (b.is_tri() || b.is_quad())) || (b.is_tri() && a.is_quad()) {
                            return bad(format!("corners {i} and {} share an edge: {a} next to {b}", (i + 1) % k));
                        }
                    }
                }
                let big = !*on_c0 && k >= 5;
                for i in 0..k {
                    let o = v.n(i);
                    let tri_f = v.tri_f(v.prev(i)) || v.tri_f(i);
                    let bb = v.inner_corner(v.prev(i)) && v.inner_corner(i) && v.c(v.prev(i)) == Corner::Big && v.c(i) == Corner::Big;
                    let qq = v.quad_f(v.prev(i)) && v.quad_f(i);
                    let ok = match o.class {
                        Class::Three => {
                            !(o.bad || o.poor || o.q4) && (!o.weak || (big && tri_f)) && (!o.pendant || ((*on_c0 || k >= 4) && bb))
                        }
                        Class::Four => {
                            !(o.weak || o.pendant) && (!o.bad || (big && tri_f)) && (!o.poor || (big && qq)) && (!o.q4 || o.poor)
                        }
                        _ => o.flagless(),
                    };
                    if !ok {
                        return bad(format!("flag on neighbor {i} ({o}) not allowed here"));
                    }
                    if let Corner::Quad(far) = v.c(i) {
                        let ok = far.flagless() || (far.class == Class::Four && far.poor && !(far.weak || far.bad || far.q4 || far.pendant) && big && v.quad_f(i));
                        if !ok {
                            return bad(format!("flag on far vertex of corner {i} ({far}) not allowed here"));
                        }
                    }
                }
                Ok(())
            }
        }
    }
}

fn sorted_classes(o: &[Occ]) -> Vec<Class> {
    let mut c: Vec<Class> = o.iter().map(|x| x.class).collect();
    c.sort_unstable();
    c
}

impl fmt::Display for LocalScenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.center())?;
        match self {
            LocalScenario::Face { occupants } => {
                for o in occupants {
                    write!(f, " {o}")?;
                }
            }
            LocalScenario::Vertex { weak, units, .. } => {
                if *weak {
                    f.write_str(" weak")?;
                }
                f.write_str(" |")?;
                for u in units {
                    write!(f, " {} {}", u.neighbor, u.corner)?;
                }
            }
            LocalScenario::Outer { degrees } => {
                for d in degrees {
                    if *d >= 6 {
                        f.write_str(" 6+")?;
                    } else {
                        write!(f, " {d}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl FromStr for LocalScenario {
    type Err = CaseError;

    /// Parses the `Display` form, e.g. `vertex:5 weak | 3w T 4b B 5 B 4 Q3 6+ B`.
    /// The result is canonicalized and checked.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut toks = s.split_whitespace();
        let center: Center = toks.next().ok_or_else(|| CaseError::Parse("empty scenario".into()))?.parse()?;
        let rest: Vec<&str> = toks.collect();
        let sc = match center {
            Center::Face(_) => LocalScenario::Face { occupants: rest.iter().map(|t| t.parse()).collect::<Result<_, _>>()? },
            Center::C0(_) => LocalScenario::Outer {
                degrees: rest
                    .iter()
                    .map(|t| match *t {
                        "6+" => Ok(6),
                        t => t.parse::<usize>().map_err(|_| CaseError::Parse(format!("bad degree {t:?}"))),
                    })
                    .collect::<Result<_, _>>()?,
            },
            Center::Vertex(_) | Center::C0Vertex(_) => {
                let (weak, rest) = match rest.first() {
                    Some(&"weak") => (true, &rest[1..]),
                    _ => (false, &rest[..]),
                };
                let rest = match rest.first() {
                    Some(&"|") => &rest[1..],
                    _ => return Err(CaseError::Parse("expected '|' before the neighbors".into())),
                };
                if rest.len() % 2 != 0 {
                    return Err(CaseError::Parse("neighbors and corners must alternate".into()));
                }
                let units = rest
                    .chunks(2)
                    .map(|c| Ok(Unit { neighbor: c[0].parse()?, corner: c[1].parse()? }))
                    .collect::<Result<Vec<_>, CaseError>>()?;
                LocalScenario::Vertex { on_c0: matches!(center, Center::C0Vertex(_)), weak, units }
            }
        };
        if sc.center() != center {
            return Err(CaseError::Parse(format!("{center} does not match the listed data")));
        }
        sc.check()?;
        Ok(sc.canonical())
    }
}

/// Index arithmetic over a vertex scenario (empty for other scenarios).
#[derive(Clone, Copy)]
pub(crate) struct View<'a> {
    pub k: usize,
    pub on_c0: bool,
    pub weak: bool,
    pub units: &'a [Unit],
}

impl<'a> View<'a> {
    pub fn of(s: &'a LocalScenario) -> View<'a> {
        match s {
            LocalScenario::Vertex { on_c0, weak, units } => View { k: units.len(), on_c0: *on_c0, weak: *weak, units },
            _ => View { k: 0, on_c0: false, weak: false, units: &[] },
        }
    }

    pub fn n(&self, i: usize) -> Occ {
        self.units[i % self.k].neighbor
    }

    pub fn c(&self, i: usize) -> Corner {
        self.units[i % self.k].corner
    }

    pub fn prev(&self, i: usize) -> usize {
        (i + self.k - 1) % self.k
    }

    pub fn inner_corner(&self, i: usize) -> bool {
        self.c(i) != Corner::Outer
    }

    /// Corners i and i+1 are both inner faces sharing the edge to neighbor i+1.
    pub fn corner_adjacent_next(&self, i: usize) -> bool {
        self.inner_corner(i) && self.inner_corner(i + 1) && self.k >= 2
    }

    /// Vertices of corner i other than the center, in face order:
    /// neighbor i, (far,) neighbor i+1.
    pub fn face_others(&self, i: usize) -> Vec<Occ> {
        match self.c(i) {
            Corner::Tri => vec![self.n(i), self.n(i + 1)],
            Corner::Quad(far) => vec![self.n(i), far, self.n(i + 1)],
            _ => vec![],
        }
    }

    /// Distinct C0 vertices on corner face i (counting the center).
    pub fn hits(&self, i: usize) -> usize {
        self.face_others(i).iter().filter(|o| o.on_c0()).count() + usize::from(self.on_c0)
    }

    pub fn tri_f(&self, i: usize) -> bool {
        self.k > 0 && self.c(i).is_tri() && self.hits(i) == 0
    }

    pub fn quad_f(&self, i: usize) -> bool {
        self.k > 0 && self.c(i).is_quad() && self.hits(i) == 0
    }

    /// Degree classes of corner face i including the center, sorted.
    pub fn face_degrees(&self, i: usize) -> Vec<usize> {
        let mut d: Vec<usize> = self.face_others(i).iter().map(|o| o.class.degree().unwrap_or(usize::MAX)).collect();
        d.push(self.k.min(6));
        d.sort_unstable();
        d
    }
}

#[cfg(test)]
mod tests;
