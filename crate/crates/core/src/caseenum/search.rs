//! Depth-first generation of canonical scenarios, and the minimum search.
//!
//! Scenarios are generated slot by slot in lexicographic order of their
//! stored form (weak flag, then neighbor/corner pairs), so the first
//! canonical scenario reaching the minimum is the canonically least witness.

use std::fmt::Write as _;

use super::eval::{corner_cap, corner_gift, flows_of, initial_charge, neighbor_gift};
use super::predicates::{admissible, PredicateKind, Switches, PREDICATES};
use super::{evaluate_with, CaseError, Center, Class, Corner, LocalScenario, Occ, ScenarioVerdict, Unit, View};
use crate::discharging::rules;
use crate::discharging::Charge;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Slot {
    Weak(bool),
    N(Occ),
    C(Corner),
    D(usize),
}

fn occ(s: &str) -> Occ {
    s.parse().expect("builtin label")
}

fn sorted<T: Ord>(mut v: Vec<T>) -> Vec<T> {
    v.sort();
    v
}

/// Vertex labels allowed next to a vertex center.
fn neighbor_domain(on_c0: bool, k: usize) -> Vec<Occ> {
    let labels: &[&str] = if on_c0 {
        &["3", "3p", "4", "5", "6+", "C0"]
    } else {
        match k {
            3 => &["3", "4", "5", "6+", "C0"],
            4 => &["3", "3p", "4", "5", "6+", "C0"],
            _ => &["3", "3w", "3p", "4", "4b", "4p", "4pq", "5", "6+", "C0"],
        }
    };
    sorted(labels.iter().map(|l| occ(l)).collect())
}

fn corner_domain(on_c0: bool, k: usize) -> Vec<Corner> {
    let fars: &[&str] = if !on_c0 && k >= 5 { &["3", "4", "4p", "5", "6+", "C0"] } else { &["3", "4", "5", "6+", "C0"] };
    let mut v = vec![Corner::Tri, Corner::Big];
    v.extend(fars.iter().map(|l| Corner::Quad(occ(l))));
    sorted(v)
}

fn face_domain() -> Vec<Occ> {
    sorted(["3", "3w", "4", "4b", "4p", "5", "5w", "6+", "6+w", "C0"].iter().map(|l| occ(l)).collect())
}

/// Slot domains for a center, in generation order.
fn domains(center: Center) -> Vec<Vec<Slot>> {
    match center {
        Center::Face(n) => vec![face_domain().into_iter().map(Slot::N).collect(); n],
        Center::C0(l) => vec![(2..=6).map(Slot::D).collect(); l],
        Center::Vertex(k) | Center::C0Vertex(k) => {
            let on_c0 = matches!(center, Center::C0Vertex(_));
            let mut d = Vec::with_capacity(2 * k + 1);
            d.push(if !on_c0 && (k == 5 || k == 6) { vec![Slot::Weak(false), Slot::Weak(true)] } else { vec![Slot::Weak(false)] });
            let nb: Vec<Slot> = neighbor_domain(on_c0, k).into_iter().map(Slot::N).collect();
            let cs: Vec<Slot> = corner_domain(on_c0, k).into_iter().map(Slot::C).collect();
            for j in 0..k {
                if on_c0 && (j == 0 || j == k - 1) {
                    d.push(vec![Slot::N(Occ::plain(Class::OnC0))]);
                } else {
                    d.push(nb.clone());
                }
                d.push(if on_c0 && j == k - 1 { vec![Slot::C(Corner::Outer)] } else { cs.clone() });
            }
            d
        }
    }
}

fn build(center: Center, cur: &[Slot]) -> LocalScenario {
    match center {
        Center::Face(_) => LocalScenario::Face {
            occupants: cur.iter().map(|s| if let Slot::N(o) = s { *o } else { unreachable!() }).collect(),
        },
        Center::C0(_) => LocalScenario::Outer {
            degrees: cur.iter().map(|s| if let Slot::D(d) = s { *d } else { unreachable!() }).collect(),
        },
        Center::Vertex(_) | Center::C0Vertex(_) => {
            let weak = matches!(cur[0], Slot::Weak(true));
            let units = cur[1..]
                .chunks(2)
                .map(|c| match (c[0], c[1]) {
                    (Slot::N(neighbor), Slot::C(corner)) => Unit { neighbor, corner },
                    _ => unreachable!(),
                })
                .collect();
            LocalScenario::Vertex { on_c0: matches!(center, Center::C0Vertex(_)), weak, units }
        }
    }
}

fn kind(c: Corner) -> u8 {
    match c {
        Corner::Tri => 0,
        Corner::Quad(_) => 1,
        Corner::Big => 2,
        Corner::Outer => 3,
    }
}

/// Two inner corners sharing an edge: no 3-face next to a 3- or 4-face.
fn clash(a: u8, b: u8) -> bool {
    (a == 0 && b <= 1) || (b == 0 && a <= 1)
}

/// Flags of a neighbor that its corner kinds already rule out.
fn flags_fit(o: Occ, left: Option<u8>, right: Option<u8>) -> bool {
    let both = |t: u8| left.map_or(true, |l| l == t) && right.map_or(true, |r| r == t);
    let known_both = left.is_some() && right.is_some();
    let any_tri = left == Some(0) || right == Some(0);
    if o.pendant && !both(2) {
        return false;
    }
    if (o.poor) && !both(1) {
        return false;
    }
    if (o.weak || o.bad) && known_both && !any_tri {
        return false;
    }
    true
}

/// Cheap checks on a partial vertex assignment; the full check runs at the leaf.
fn partial_ok(center: Center, cur: &[Slot]) -> bool {
    let k = match center {
        Center::Vertex(k) | Center::C0Vertex(k) => k,
        Center::C0(_) => {
            // Degrees are generated sorted.
            let n = cur.len();
            return n < 2 || matches!((cur[n - 2], cur[n - 1]), (Slot::D(a), Slot::D(b)) if a <= b);
        }
        Center::Face(_) => return true,
    };
    let n = cur.len();
    if n < 2 {
        return true;
    }
    let corner = |j: usize| match cur.get(2 + 2 * j) {
        Some(Slot::C(c)) => Some(kind(*c)),
        _ => None,
    };
    let neighbor = |j: usize| match cur[1 + 2 * j] {
        Slot::N(o) => o,
        _ => unreachable!(),
    };
    if n % 2 == 0 {
        // Just placed N_j.
        let j = (n - 2) / 2;
        let left = if j == 0 { None } else { corner(j - 1) };
        return flags_fit(neighbor(j), left, None);
    }
    // Just placed C_j.
    let j = (n - 3) / 2;
    let cj = corner(j).unwrap();
    if j > 0 {
        let p = corner(j - 1).unwrap();
        if p != 3 && cj != 3 && clash(p, cj) {
            return false;
        }
    }
    let left = if j == 0 { None } else { corner(j - 1) };
    if !flags_fit(neighbor(j), left, Some(cj)) {
        return false;
    }
    if j == k - 1 {
        let c0 = corner(0).unwrap();
        if c0 != 3 && cj != 3 && clash(cj, c0) {
            return false;
        }
        if !flags_fit(neighbor(0), Some(cj), Some(c0)) {
            return false;
        }
    }
    true
}

/// Largest amount any completion can still send out, plus what is already
/// certain; returns a lower bound on the final charge.
fn lower_bound(center: Center, cur: &[Slot]) -> Option<Charge> {
    let (k, on_c0) = match center {
        Center::Vertex(k) => (k, false),
        Center::C0Vertex(k) => (k, true),
        _ => return None,
    };
    // Need N_0 and C_0 placed so the cycle has a fixed start.
    if cur.len() < 3 {
        return None;
    }
    let placeholder = Unit { neighbor: Occ::plain(Class::Five), corner: Corner::Big };
    let mut units = vec![placeholder; k];
    let mut n_set = 0;
    let mut c_set = 0;
    for (j, ch) in cur[1..].chunks(2).enumerate() {
        if let Slot::N(o) = ch[0] {
            units[j].neighbor = o;
            n_set = j + 1;
        }
        if let Some(Slot::C(c)) = ch.get(1) {
            units[j].corner = *c;
            c_set = j + 1;
        }
    }
    let weak = matches!(cur[0], Slot::Weak(true));
    let sc = LocalScenario::Vertex { on_c0, weak, units };
    let v = View::of(&sc);
    let exact_corners = on_c0 || k >= 5;

    let mut out = Charge::from_integer(0);
    for j in 0..n_set {
        if let Some((_, a)) = neighbor_gift(&v, j) {
            out += a;
        }
    }
    for i in 0..c_set {
        let determined = i + 1 < n_set || (i == k - 1 && n_set > 0);
        out += if determined && exact_corners {
            corner_gift(&v, i).map_or(Charge::from_integer(0), |(_, a)| a)
        } else {
            corner_cap(on_c0, k, v.c(i))
        };
    }

    // Best continuation over corner kinds for C_{c_set}..C_{k-1}.
    let cap = |t: u8| match t {
        0 => corner_cap(on_c0, k, Corner::Tri),
        1 => corner_cap(on_c0, k, Corner::Quad(placeholder.neighbor)),
        _ => Charge::from_integer(0),
    };
    let nval = |l: u8, r: u8| {
        if l == 2 && r == 2 && (on_c0 || k >= 4) {
            rules::r3()
        } else if l == 1 && r == 1 && !on_c0 && k >= 5 {
            rules::r2_3()
        } else {
            Charge::from_integer(0)
        }
    };
    let first = kind(v.c(0));
    let mut dp: Vec<(u8, Charge)> = vec![(kind(v.c(c_set - 1)), Charge::from_integer(0))];
    for i in c_set..k {
        let choices: &[u8] = if on_c0 && i == k - 1 { &[3] } else { &[0, 1, 2] };
        let mut next: Vec<(u8, Charge)> = Vec::new();
        for &t in choices {
            let mut best: Option<Charge> = None;
            for &(p, val) in &dp {
                if p != 3 && t != 3 && clash(p, t) {
                    continue;
                }
                let mut x = val + cap(t);
                if i >= n_set {
                    x += nval(p, t);
                }
                if i == k - 1 && t != 3 && first != 3 && clash(t, first) {
                    continue;
                }
                best = Some(best.map_or(x, |b: Charge| b.max(x)));
            }
            if let Some(b) = best {
                next.push((t, b));
            }
        }
        dp = next;
    }
    let future = dp.iter().map(|&(_, x)| x).max().unwrap_or(Charge::from_integer(0));
    let incoming = if on_c0 { rules::r5(k).unwrap_or(Charge::from_integer(0)) } else { Charge::from_integer(0) };
    Some(initial_charge(&sc) + incoming - out - future)
}

/// The generator behind [`enumerate`] and [`min_final_charge`].
struct Dfs {
    center: Center,
    dom: Vec<Vec<Slot>>,
    stack: Vec<usize>,
    cur: Vec<Slot>,
    fresh: bool,
}

impl Dfs {
    fn new(center: Center) -> Dfs {
        Dfs { center, dom: domains(center), stack: Vec::new(), cur: Vec::new(), fresh: true }
    }

    fn ok(&self, prune: &mut impl FnMut(Center, &[Slot]) -> bool) -> bool {
        partial_ok(self.center, &self.cur) && !prune(self.center, &self.cur)
    }

    /// Moves to the next acceptable sibling, popping exhausted levels.
    fn bump(&mut self, prune: &mut impl FnMut(Center, &[Slot]) -> bool) -> bool {
        loop {
            let Some(d) = self.stack.len().checked_sub(1) else { return false };
            self.stack[d] += 1;
            let top = self.stack[d];
            if top < self.dom[d].len() {
                self.cur[d] = self.dom[d][top];
                if self.ok(prune) {
                    return true;
                }
            } else {
                self.stack.pop();
                self.cur.pop();
            }
        }
    }

    fn push(&mut self, prune: &mut impl FnMut(Center, &[Slot]) -> bool) -> bool {
        let d = self.stack.len();
        self.stack.push(0);
        self.cur.push(self.dom[d][0]);
        self.ok(prune) || self.bump(prune)
    }

    /// Next complete slot assignment passing the partial checks.
    fn next_leaf(&mut self, prune: &mut impl FnMut(Center, &[Slot]) -> bool) -> Option<&[Slot]> {
        if self.fresh {
            self.fresh = false;
            if self.dom.is_empty() || !self.push(prune) {
                return None;
            }
        } else if !self.bump(prune) {
            return None;
        }
        while self.stack.len() < self.dom.len() {
            if !self.push(prune) {
                return None;
            }
        }
        Some(&self.cur)
    }
}

fn canonical_leaf(center: Center, cur: &[Slot]) -> Option<LocalScenario> {
    let sc = build(center, cur);
    if sc.check().is_err() {
        return None;
    }
    let canonical = match &sc {
        LocalScenario::Vertex { on_c0, units, .. } => LocalScenario::units_canonical(*on_c0, units),
        _ => sc.is_canonical(),
    };
    canonical.then_some(sc)
}

/// Every well-formed canonical scenario for `center`, in lexicographic
/// order, each with its verdict under `sw`.
pub fn enumerate(center: Center, sw: &Switches) -> Result<ScenarioIter, CaseError> {
    let center = center.validate()?;
    Ok(ScenarioIter { dfs: Dfs::new(center), switches: sw.clone() })
}

pub struct ScenarioIter {
    dfs: Dfs,
    switches: Switches,
}

impl Iterator for ScenarioIter {
    type Item = ScenarioVerdict;

    fn next(&mut self) -> Option<ScenarioVerdict> {
        loop {
            let center = self.dfs.center;
            let leaf = self.dfs.next_leaf(&mut |_, _| false)?;
            if let Some(sc) = canonical_leaf(center, leaf) {
                return Some(evaluate_with(&sc, &self.switches));
            }
        }
    }
}

/// Result of [`min_final_charge`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinCharge {
    pub center: Center,
    /// `None` when no scenario is admissible.
    pub min: Option<Charge>,
    /// The canonically least admissible scenario reaching the minimum.
    pub witness: Option<ScenarioVerdict>,
    /// Negative scenarios excluded only by an escape hatch (such as G = C0).
    pub escapes: Vec<ScenarioVerdict>,
    /// Complete scenarios examined (the rest were pruned).
    pub leaves: u64,
}

impl MinCharge {
    /// Combines two partial results over disjoint parts of the space:
    /// smaller charge wins, ties go to the canonically smaller witness.
    pub fn merge(mut self, other: MinCharge) -> MinCharge {
        let better = match (&self.witness, &other.witness) {
            (_, None) => false,
            (None, Some(_)) => true,
            (Some(a), Some(b)) => (b.final_charge, &b.scenario) < (a.final_charge, &a.scenario),
        };
        if better {
            self.min = other.min;
            self.witness = other.witness;
        }
        self.escapes.extend(other.escapes);
        self.escapes.sort_by(|a, b| a.scenario.cmp(&b.scenario));
        self.escapes.dedup_by(|a, b| a.scenario == b.scenario);
        self.leaves += other.leaves;
        self
    }
}

fn only_escapes(sc: &LocalScenario, sw: &Switches) -> bool {
    let failed: Vec<_> = PREDICATES.iter().filter(|p| sw.is_enabled(p.id) && !p.holds(sc)).collect();
    !failed.is_empty() && failed.iter().all(|p| p.kind == PredicateKind::EscapeHatch)
}

/// The least final charge over admissible scenarios at `center`, found by
/// branch and bound over the same lexicographic generation as [`enumerate`].
pub fn min_final_charge(center: Center, sw: &Switches) -> Result<MinCharge, CaseError> {
    let center = center.validate()?;
    let mut dfs = Dfs::new(center);
    let mut best: Option<(Charge, LocalScenario)> = None;
    let mut escapes = Vec::new();
    let mut leaves = 0u64;
    loop {
        let bound = best.as_ref().map(|b| b.0);
        let mut prune = |c: Center, cur: &[Slot]| match (bound, lower_bound(c, cur)) {
            (Some(b), Some(lb)) => lb >= b,
            _ => false,
        };
        let Some(leaf) = dfs.next_leaf(&mut prune) else { break };
        let Some(sc) = canonical_leaf(center, leaf) else { continue };
        leaves += 1;
        let (charge, _, _) = flows_of(&sc);
        if best.as_ref().is_some_and(|b| charge >= b.0) && charge >= Charge::from_integer(0) {
            continue;
        }
        if admissible(&sc, sw) {
            if best.as_ref().map_or(true, |b| charge < b.0) {
                best = Some((charge, sc));
            }
        } else if charge < Charge::from_integer(0) && only_escapes(&sc, sw) {
            escapes.push(evaluate_with(&sc, sw));
        }
    }
    let witness = best.as_ref().map(|(_, sc)| evaluate_with(sc, sw));
    Ok(MinCharge { center, min: best.map(|b| b.0), witness, escapes, leaves })
}

/// Tab-separated table: scenario, final charge, admissible flag, failed predicates.
pub fn verdict_table(verdicts: impl IntoIterator<Item = ScenarioVerdict>) -> String {
    let mut s = String::from("scenario\tfinal\tadmissible\tfailed\n");
    for v in verdicts {
        let _ = writeln!(
            s,
            "{}\t{}\t{}\t{}",
            v.scenario,
            super::eval::fmt_charge(v.final_charge),
            if v.admissible { "yes" } else { "no" },
            v.failed.join(",")
        );
    }
    s
}
