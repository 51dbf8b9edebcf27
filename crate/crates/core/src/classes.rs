//! Membership in subc / sep / sepf, non-separating cycles, and the
//! neighbour frame around an outer 2-vertex.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::connectivity::{self, Special};
use crate::plane_graph::{EdgeId, PlaneGraph, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassError {
    #[error("edge set is not a cycle")]
    NotACycle,
    #[error("graph is a subdivision of Θ or K4")]
    SpecialGraph,
    #[error("vertex {0} does not fit the frame")]
    BadVertex(VertexId),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "data", rename_all = "snake_case")]
pub enum Witness {
    NonSeparatingCycle(Vec<EdgeId>),
    FaceWithoutTwoVertex(Vec<EdgeId>),
    BadDegree(VertexId),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub in_subc: bool,
    pub in_sep: bool,
    pub in_sepf: bool,
    pub cyclically_3ec: bool,
    pub witness: Option<Witness>,
}

/// Labels around an outer 2-vertex `u` with neighbours `x` (through the
/// chosen edge) and `y`. `a` and `d` are the neighbours of `y` and `x`
/// that follow them along the outer boundary; `b` and `c` are the third
/// neighbours. When `clockwise` holds the stored rotation at `y` reads
/// `(u, b, a)` and at `x` reads `(u, d, c)`; otherwise both are mirrored.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NeighborFrame {
    pub u: VertexId,
    pub x: VertexId,
    pub y: VertexId,
    pub a: VertexId,
    pub b: VertexId,
    pub c: VertexId,
    pub d: VertexId,
    pub e_ux: EdgeId,
    pub e_uy: EdgeId,
    pub e_ya: EdgeId,
    pub e_yb: EdgeId,
    pub e_xc: EdgeId,
    pub e_xd: EdgeId,
    pub clockwise: bool,
}

impl NeighborFrame {
    /// The three distinctness conditions that hold outside the special graphs.
    pub fn conditions(&self) -> [bool; 3] {
        let abcd = [self.a, self.b, self.c, self.d];
        let c1 = abcd.iter().all(|&z| z != self.x && z != self.y);
        let c2 = [self.a, self.d].iter().all(|z| *z != self.b && *z != self.c);
        let c3 = self.b != self.c || self.a != self.d;
        [c1, c2, c3]
    }
}

/// Edge set forms a single cycle (a 2-cycle counts).
fn cycle_vertices(g: &PlaneGraph, z: &[EdgeId]) -> Result<BTreeSet<VertexId>, ClassError> {
    let set: BTreeSet<EdgeId> = z.iter().copied().collect();
    if set.len() != z.len() || set.len() < 2 {
        return Err(ClassError::NotACycle);
    }
    let mut deg: std::collections::BTreeMap<VertexId, usize> = Default::default();
    for &e in &set {
        let en = g.endpoints(e).ok_or(ClassError::NotACycle)?;
        for v in en {
            *deg.entry(v).or_default() += 1;
        }
    }
    if deg.values().any(|&d| d != 2) || deg.len() != set.len() {
        return Err(ClassError::NotACycle);
    }
    // Connected: walk along the cycle.
    let start = g.endpoints(*set.iter().next().unwrap()).unwrap()[0];
    let others: BTreeSet<EdgeId> = g.edge_ids().difference(&set).copied().collect();
    if g.reachable(start, &others).len() != deg.len() {
        return Err(ClassError::NotACycle);
    }
    Ok(deg.into_keys().collect())
}

pub fn is_separating_cycle(g: &PlaneGraph, z: &[EdgeId]) -> Result<bool, ClassError> {
    cycle_vertices(g, z)?;
    let removed: BTreeSet<EdgeId> = z.iter().copied().collect();
    match g.vertices().next() {
        None => Ok(false),
        Some(s) => Ok(g.reachable(s, &removed).len() != g.vertex_count()),
    }
}

fn face_has_two_vertex(g: &PlaneGraph, f: &crate::plane_graph::Face) -> bool {
    f.boundary.is_empty() || f.boundary.iter().any(|d| g.degree(d.tail) == 2)
}

/// Faces of `g` incident with no 2-vertex, as edge lists.
pub fn faces_without_two_vertex(g: &PlaneGraph) -> Vec<Vec<EdgeId>> {
    g.faces()
        .iter()
        .filter(|f| !face_has_two_vertex(g, f))
        .map(|f| f.boundary.iter().map(|d| d.edge).collect())
        .collect()
}

/// Exhaustive fallback for pieces with a vertex of degree above 3.
fn brute_nonseparating(g: &PlaneGraph) -> Option<Vec<EdgeId>> {
    let ids: Vec<EdgeId> = g.edge_ids().into_iter().collect();
    assert!(ids.len() <= 24, "exhaustive cycle search is limited to small pieces");
    for mask in 1u32..(1u32 << ids.len()) {
        let z: Vec<EdgeId> = (0..ids.len()).filter(|i| mask >> i & 1 == 1).map(|i| ids[i]).collect();
        if let Ok(false) = is_separating_cycle(g, &z) {
            return Some(z);
        }
    }
    None
}

/// A non-separating cycle of the 2-edge-connected (or trivial) piece `h`,
/// found by splitting along cyclic 2-edge-cuts.
fn nonsep_in_piece(h: &PlaneGraph) -> Option<Vec<EdgeId>> {
    let mut stack = vec![h.clone()];
    while let Some(p) = stack.pop() {
        if p.edge_count() == 0 || p.is_cycle() {
            continue;
        }
        if p.max_degree() > 3 {
            if let Some(z) = brute_nonseparating(&p) {
                return Some(z);
            }
            continue;
        }
        match connectivity::first_cyclic_2cut(&p) {
            Some(cut) => {
                let pair = [cut.edges[0], cut.edges[1]];
                stack.push(p.quotient_component(pair, &cut.side1).expect("cyclic cut").0);
                stack.push(p.quotient_component(pair, &cut.side2).expect("cyclic cut").0);
            }
            None => {
                if let Some(f) = p.faces().iter().find(|f| !face_has_two_vertex(&p, f)) {
                    debug_assert!(f.is_cycle, "facial walk of a terminal piece is a cycle");
                    return Some(f.boundary.iter().map(|d| d.edge).collect());
                }
            }
        }
    }
    None
}

/// The 2-edge-connected pieces of `g` (bridges removed), one graph each.
pub fn two_edge_connected_pieces(g: &PlaneGraph) -> Vec<PlaneGraph> {
    let br: Vec<EdgeId> = connectivity::bridges(g).into_iter().collect();
    let rest = g.delete_edges(&br).expect("bridges are edges");
    rest.components()
        .iter()
        .map(|c| rest.component_of(*c.iter().next().unwrap()).unwrap())
        .collect()
}

/// A cycle `Z` with `G - E(Z)` connected, or `None` when every cycle is
/// separating.
pub fn find_nonseparating_cycle(g: &PlaneGraph) -> Option<Vec<EdgeId>> {
    two_edge_connected_pieces(g).iter().find_map(nonsep_in_piece)
}

pub fn is_sep(g: &PlaneGraph) -> bool {
    find_nonseparating_cycle(g).is_none()
}

pub fn classify(g: &PlaneGraph) -> ClassReport {
    let bad_vertex = g.vertices().find(|&v| !(2..=3).contains(&g.degree(v)));
    let in_subc = bad_vertex.is_none() && g.is_connected();
    let nonsep = find_nonseparating_cycle(g);
    let in_sep = nonsep.is_none();
    let faceless = faces_without_two_vertex(g).into_iter().next();
    let in_sepf = in_subc && in_sep && faceless.is_none();
    let witness = if let Some(z) = nonsep {
        Some(Witness::NonSeparatingCycle(z))
    } else if let Some(v) = bad_vertex {
        Some(Witness::BadDegree(v))
    } else {
        faceless.map(Witness::FaceWithoutTwoVertex)
    };
    ClassReport {
        in_subc,
        in_sep,
        in_sepf,
        cyclically_3ec: connectivity::is_cyclically_3ec(g),
        witness,
    }
}

pub fn is_sepf(g: &PlaneGraph) -> bool {
    g.vertices().all(|v| (2..=3).contains(&g.degree(v)))
        && faces_without_two_vertex(g).is_empty()
        && is_sep(g)
}

/// The (2,3)-edges of `b`.
pub fn b23(g: &PlaneGraph, b: &BTreeSet<EdgeId>) -> BTreeSet<EdgeId> {
    b.iter()
        .copied()
        .filter(|&e| {
            g.endpoints(e).is_some_and(|[p, q]| {
                let (dp, dq) = (g.degree(p), g.degree(q));
                dp.min(dq) == 2 && dp.max(dq) == 3
            })
        })
        .collect()
}

pub fn is_sensitive(g: &PlaneGraph, b: &BTreeSet<EdgeId>, v: VertexId) -> bool {
    g.degree(v) == 2 && {
        let bb = b23(g, b);
        g.rotation(v).iter().any(|e| bb.contains(e))
    }
}

pub fn label_neighbor_frame(g: &PlaneGraph, u: VertexId, e: EdgeId) -> Result<NeighborFrame, ClassError> {
    match connectivity::recognize_special(g) {
        Special::ThetaSubdivision | Special::K4Subdivision => return Err(ClassError::SpecialGraph),
        _ => {}
    }
    let bad = Err(ClassError::BadVertex(u));
    if g.degree(u) != 2 || !g.rotation(u).contains(&e) {
        return bad;
    }
    let e_ux = e;
    let e_uy = if g.rotation(u)[0] == e { g.rotation(u)[1] } else { g.rotation(u)[0] };
    let (x, y) = (g.other_end(e_ux, u), g.other_end(e_uy, u));
    if x == y || g.degree(x) != 3 || g.degree(y) != 3 {
        return bad;
    }
    let Some(od) = g.outer_dart() else { return bad };
    let walk = g.face_walk(od);
    let n = walk.len();
    let Some(i) = walk.iter().position(|d| d.tail == u) else { return bad };
    let out = walk[i];
    let inn = walk[(i + n - 1) % n];
    // Walk runs prev -> u -> next.
    let clockwise = out.edge == e_ux;
    let (into_y, out_of_x) = if clockwise {
        // a -> y -> u -> x -> d
        (walk[(i + n - 2) % n], walk[(i + 1) % n])
    } else {
        // d -> x -> u -> y -> a
        (walk[(i + 1) % n], walk[(i + n - 2) % n])
    };
    let _ = inn;
    let (e_ya, a) = if clockwise {
        (into_y.edge, into_y.tail)
    } else {
        (into_y.edge, g.head(into_y))
    };
    let (e_xd, d) = if clockwise {
        (out_of_x.edge, g.head(out_of_x))
    } else {
        (out_of_x.edge, out_of_x.tail)
    };
    let third = |v: VertexId, not: [EdgeId; 2]| g.rotation(v).iter().copied().find(|f| !not.contains(f));
    let (Some(e_yb), Some(e_xc)) = (third(y, [e_uy, e_ya]), third(x, [e_ux, e_xd])) else {
        return bad;
    };
    if e_ya == e_uy || e_xd == e_ux {
        return bad;
    }
    let frame = NeighborFrame {
        u,
        x,
        y,
        a,
        b: g.other_end(e_yb, y),
        c: g.other_end(e_xc, x),
        d,
        e_ux,
        e_uy,
        e_ya,
        e_yb,
        e_xc,
        e_xd,
        clockwise,
    };
    debug_assert_eq!(
        clockwise,
        g.succ_cw(y, e_uy) == e_yb && g.succ_cw(x, e_ux) == e_xd,
        "frame orientation matches the stored rotations"
    );
    Ok(frame)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn separating_cycle_examples() {
        let c4 = generators::cycle(4).unwrap();
        let all: Vec<EdgeId> = c4.edge_ids().into_iter().collect();
        assert!(is_separating_cycle(&c4, &all).unwrap());
        let k4 = generators::k4();
        assert!(!is_separating_cycle(&k4, &[EdgeId(3), EdgeId(4), EdgeId(5)]).unwrap());
        let cube = generators::cube();
        for f in cube.faces() {
            let z: Vec<EdgeId> = f.edges().into_iter().collect();
            assert!(!is_separating_cycle(&cube, &z).unwrap());
        }
        assert_eq!(is_separating_cycle(&k4, &[EdgeId(0), EdgeId(1)]), Err(ClassError::NotACycle));
    }

    #[test]
    fn classify_examples() {
        let bt = classify(&generators::bitriangle());
        assert!(bt.in_sep && !bt.in_sepf);
        assert!(matches!(bt.witness, Some(Witness::FaceWithoutTwoVertex(_))));
        assert!(classify(&generators::k4sd6()).in_sepf);
        let k4 = classify(&generators::k4());
        assert!(!k4.in_sep);
        match k4.witness {
            Some(Witness::NonSeparatingCycle(z)) => assert_eq!(z.len(), 3),
            w => panic!("unexpected witness {w:?}"),
        }
        let theta = generators::theta_subdivision(1, 1, 1).unwrap();
        assert!(!classify(&theta).in_sep);
    }

    #[test]
    fn nonseparating_cycle_examples() {
        let cube = generators::cube();
        let z = find_nonseparating_cycle(&cube).unwrap();
        assert_eq!(z.len(), 4);
        assert!(!is_separating_cycle(&cube, &z).unwrap());
        assert_eq!(find_nonseparating_cycle(&generators::k4sd6()), None);
        assert_eq!(find_nonseparating_cycle(&generators::triangles_with_bridge()), None);
    }

    #[test]
    fn sensitivity() {
        let g = generators::k4sd6();
        let v = g.vertices().find(|&v| g.degree(v) == 2).unwrap();
        let e = g.rotation(v)[0];
        let b = BTreeSet::from([e]);
        assert!(is_sensitive(&g, &b, v));
        assert!(!is_sensitive(&g, &b, g.other_end(e, v)));
        assert!(!is_sensitive(&g, &BTreeSet::new(), v));
    }

    fn reroot_at(g: &PlaneGraph, v: VertexId) -> PlaneGraph {
        let f = g.faces().iter().find(|f| f.vertices().contains(&v)).unwrap().id;
        g.set_outer_face(f).unwrap()
    }

    #[test]
    fn frame_on_cubesd4() {
        let g = generators::cubesd4();
        for m in g.vertices().filter(|&v| g.degree(v) == 2).collect::<Vec<_>>() {
            let h = reroot_at(&g, m);
            for &e in h.rotation(m) {
                let fr = label_neighbor_frame(&h, m, e).unwrap();
                assert_eq!(fr.conditions(), [true; 3]);
                let abcd = BTreeSet::from([fr.a, fr.b, fr.c, fr.d]);
                assert_eq!(abcd.len(), 4);
                assert!(h.outer_boundary_edges().contains(&fr.e_ya));
                assert!(h.outer_boundary_edges().contains(&fr.e_xd));
                // Swapping the chosen edge swaps the roles.
                let other = label_neighbor_frame(&h, m, fr.e_uy).unwrap();
                assert_eq!((other.x, other.c, other.d), (fr.y, fr.b, fr.a));
                assert_eq!((other.y, other.b, other.a), (fr.x, fr.c, fr.d));
                assert_ne!(other.clockwise, fr.clockwise);
            }
        }
        let k = generators::k4sd6();
        let u = k.vertices().find(|&v| k.degree(v) == 2).unwrap();
        assert_eq!(label_neighbor_frame(&k, u, k.rotation(u)[0]), Err(ClassError::SpecialGraph));
    }
}
