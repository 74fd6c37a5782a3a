//! Reading the local scenario of a center off a concrete rooted graph.

use super::{Center, Class, Corner, LocalScenario, Occ, Unit};
use crate::discharging::{is_f3, is_f4, RoleTags};
use crate::plane_graph::{Adjacency, RootedPlaneGraph, Vertex};

fn class_of(g: &RootedPlaneGraph, x: Vertex) -> Option<Class> {
    if g.on_outer(x) {
        Some(Class::OnC0)
    } else {
        Class::from_degree(g.base().degree(x))
    }
}

/// Corner kind of face `f` seen from `v`; `far` is the vertex opposite `v`
/// on a 4-face.
fn corner_of(g: &RootedPlaneGraph, f: usize, v: Vertex) -> Option<(Corner, Option<Vertex>)> {
    let b = g.base();
    if f == g.outer_face() {
        return Some((Corner::Outer, None));
    }
    let face = &b.faces()[f];
    if !face.is_cycle() {
        return Some((Corner::Big, None));
    }
    Some(match face.degree() {
        3 => (Corner::Tri, None),
        4 => {
            let p = face.walk.iter().position(|&x| x == v)?;
            let far = face.walk[(p + 2) % 4];
            (Corner::Quad(Occ::plain(class_of(g, far)?)), Some(far))
        }
        _ => (Corner::Big, None),
    })
}

/// The scenario around vertex `v`, or `None` when `v` is outside the scope of
/// the enumeration (degree out of range, an interior 2⁻-vertex nearby, a
/// face met twice, or a configuration the scenario cannot express).
pub fn scenario_at_vertex(g: &RootedPlaneGraph, roles: &RoleTags, v: Vertex) -> Option<LocalScenario> {
    if !g.outer_is_cycle() {
        return None;
    }
    let b = g.base();
    let on_c0 = g.on_outer(v);
    let k = b.degree(v);
    let center = if on_c0 { Center::C0Vertex(k) } else { Center::Vertex(k) };
    center.validate().ok()?;
    let rot = &b.rotation()[v];
    let faces = b.corner_faces(v);
    let mut seen = faces.clone();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != k {
        return None;
    }
    let big = !on_c0 && k >= 5;
    let sender = on_c0 || k >= 4;

    let mut units = Vec::with_capacity(k);
    let mut pendants = 0;
    for i in 0..k {
        let u = rot[i];
        let (corner, far) = corner_of(g, faces[i], v)?;
        let corner = match (corner, far) {
            (Corner::Quad(mut o), Some(x)) => {
                o.poor = big && o.class == Class::Four && is_f4(g, faces[i]) && roles.poor[x];
                Corner::Quad(o)
            }
            (c, _) => c,
        };
        let mut n = Occ::plain(class_of(g, u)?);
        let prev = faces[(i + k - 1) % k];
        let near_f3 = is_f3(g, prev) || is_f3(g, faces[i]);
        match n.class {
            Class::Three => {
                let tri = [prev, faces[i]].into_iter().find(|&f| is_f3(g, f));
                n.weak = big && tri.is_some_and(|f| roles.three_roles.get(&(f, u)).is_some_and(|r| r.weak));
                n.pendant = sender && roles.pendant_faces[v].iter().any(|&f| b.faces()[f].walk.contains(&u));
                pendants += n.pendant as usize;
            }
            Class::Four => {
                n.bad = big && near_f3 && roles.bad4[u];
                n.poor = big && is_f4(g, prev) && is_f4(g, faces[i]) && roles.poor[u];
                n.q4 = big && roles.q4[v].contains(&u);
            }
            _ => {}
        }
        units.push(Unit { neighbor: n, corner });
    }
    if sender && pendants != roles.pendant_faces[v].len() {
        return None;
    }
    if on_c0 {
        let o = units.iter().position(|u| u.corner == Corner::Outer)?;
        units.rotate_left(o + 1);
    }
    let weak = !on_c0 && roles.is_weak_big(v);
    let s = LocalScenario::Vertex { on_c0, weak, units };
    s.check().ok()?;
    Some(s.canonical())
}

/// The scenario of inner face `f`, for 3- and 4-cycles with at most two C0
/// vertices and no interior 2⁻-vertex.
pub fn scenario_at_face(g: &RootedPlaneGraph, roles: &RoleTags, f: usize) -> Option<LocalScenario> {
    let b = g.base();
    if f == g.outer_face() || !b.faces()[f].is_cycle() {
        return None;
    }
    let walk = &b.faces()[f].walk;
    let n = walk.len();
    if n != 3 && n != 4 {
        return None;
    }
    let hits = walk.iter().filter(|&&x| g.on_outer(x)).count();
    if hits > 2 {
        return None;
    }
    let mut occupants = Vec::with_capacity(n);
    for &x in walk {
        let mut o = Occ::plain(class_of(g, x)?);
        if hits == 0 {
            match (n, o.class) {
                (3, Class::Three) => o.weak = roles.three_roles.get(&(f, x)).is_some_and(|r| r.weak),
                (3, Class::Four) => o.bad = roles.bad4[x],
                (3, Class::Five | Class::SixPlus) => o.weak = roles.is_weak_big(x),
                (4, Class::Four) => o.poor = roles.poor[x],
                _ => {}
            }
        }
        occupants.push(o);
    }
    let s = LocalScenario::Face { occupants };
    s.check().ok()?;
    Some(s.canonical())
}

/// The scenario of C0 itself when it is a cycle of length 3 or 7.
pub fn scenario_at_c0(g: &RootedPlaneGraph) -> Option<LocalScenario> {
    if !g.outer_is_cycle() {
        return None;
    }
    let degrees: Vec<usize> = g.outer().iter().map(|&x| g.base().degree(x).min(6)).collect();
    let s = LocalScenario::Outer { degrees };
    s.check().ok()?;
    Some(s.canonical())
}

