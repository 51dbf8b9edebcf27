//! The recursive solver: the cyclically 3-edge-connected case, the cut case
//! and the single-edge corollary.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::classes::{self, Witness};
use crate::connectivity::{self, Special};
use crate::plane_graph::{EdgeId, PlaneGraph, VertexId};
use crate::verify;

use super::{precondition, DecomposeError, Options, TwoDecomposition};

const RED_ZONE: usize = 256 * 1024;
const STACK: usize = 16 * 1024 * 1024;

/// A cyclic 2-edge-cut split at `v`, with both quotients.
#[derive(Clone, Debug)]
pub struct CutSplit {
    pub e1: EdgeId,
    pub e2: EdgeId,
    pub k1: BTreeSet<VertexId>,
    pub k2: BTreeSet<VertexId>,
    pub g1: PlaneGraph,
    pub g2: PlaneGraph,
    pub u1: VertexId,
    pub u2: VertexId,
    pub gstar1: PlaneGraph,
}

impl CutSplit {
    /// Splits `g` along the cyclic 2-edge-cut whose `v`-side is smallest.
    /// With `w` given, `e2` is the cut edge on the outer `vw`-path that
    /// holds the prescribed edges, so `e1` is never prescribed.
    pub fn at(g: &PlaneGraph, b: &BTreeSet<EdgeId>, v: VertexId, w: Option<VertexId>) -> Result<CutSplit, String> {
        let cut = connectivity::min_side_cyclic_2cut(g, v).map_err(|e| e.to_string())?;
        let (c0, c1) = (cut.edges[0], cut.edges[1]);
        let (e1, e2) = match w.and_then(|w| outer_vw_paths(g, v, w)) {
            Some((p1, p2)) if !b.is_empty() => {
                let path = if b.is_subset(&p1) {
                    p1
                } else if b.is_subset(&p2) {
                    p2
                } else {
                    return Err("prescribed edges leave both outer vw-paths".into());
                };
                if path.contains(&c0) {
                    (c1, c0)
                } else {
                    (c0, c1)
                }
            }
            _ if b.contains(&c0) => (c1, c0),
            _ => (c0, c1),
        };
        if b.contains(&e1) {
            return Err(format!("cut edge {e1} is prescribed"));
        }
        let k1 = cut.side_of(v).clone();
        let k2 = cut.other_side(v).clone();
        let (g1, u1) = g.quotient_component([e1, e2], &k2).map_err(|e| e.to_string())?;
        let (g2, u2) = g.quotient_component([e1, e2], &k1).map_err(|e| e.to_string())?;
        let gstar1 = g1.contract_edge(e1, u1).map_err(|e| e.to_string())?;
        Ok(CutSplit { e1, e2, k1, k2, g1, g2, u1, u2, gstar1 })
    }
}

/// Forest = all edges but the smallest non-prescribed one.
pub(crate) fn solve_cycle(g: &PlaneGraph, b: &BTreeSet<EdgeId>) -> Option<TwoDecomposition> {
    let free = g.edge_ids().into_iter().find(|e| !b.contains(e))?;
    let forest = g.edge_ids().into_iter().filter(|&e| e != free).collect();
    Some(TwoDecomposition { forest, matching: BTreeSet::from([free]) })
}

/// Exhaustive search used for the small subdivided Θ and K4 base graphs.
fn brute_force(g: &PlaneGraph, b: &BTreeSet<EdgeId>) -> Option<TwoDecomposition> {
    let ids: Vec<EdgeId> = g.edge_ids().into_iter().collect();
    let verts: BTreeMap<VertexId, usize> = g.vertices().enumerate().map(|(i, v)| (v, i)).collect();
    let ends: Vec<(usize, usize)> = ids
        .iter()
        .map(|&e| {
            let [p, q] = g.endpoints(e).unwrap();
            (verts[&p], verts[&q])
        })
        .collect();
    let forced: u32 = ids.iter().enumerate().filter(|(_, e)| b.contains(e)).map(|(i, _)| 1 << i).sum();
    for mask in 0u32..(1 << ids.len()) {
        if mask & forced != forced {
            continue;
        }
        // Matching part: the complement of the mask.
        let mut used = vec![false; verts.len()];
        let mut ok = true;
        for (i, &(p, q)) in ends.iter().enumerate() {
            if mask >> i & 1 == 0 {
                if used[p] || used[q] {
                    ok = false;
                    break;
                }
                used[p] = true;
                used[q] = true;
            }
        }
        if !ok {
            continue;
        }
        let mut parent: Vec<usize> = (0..verts.len()).collect();
        let find = |p: &mut Vec<usize>, mut x: usize| {
            while p[x] != x {
                x = p[x];
            }
            x
        };
        for (i, &(p, q)) in ends.iter().enumerate() {
            if mask >> i & 1 == 1 {
                let (rp, rq) = (find(&mut parent, p), find(&mut parent, q));
                if rp == rq {
                    ok = false;
                    break;
                }
                parent[rp] = rq;
            }
        }
        if ok {
            let split = |bit: u32| -> BTreeSet<EdgeId> {
                (0..ids.len()).filter(|&i| mask >> i & 1 == bit).map(|i| ids[i]).collect()
            };
            return Some(TwoDecomposition { forest: split(1), matching: split(0) });
        }
    }
    None
}

/// Edges of the forest path between `s` and `t`, if they are connected.
fn forest_path(g: &PlaneGraph, forest: &BTreeSet<EdgeId>, s: VertexId, t: VertexId) -> Option<Vec<EdgeId>> {
    let mut prev: BTreeMap<VertexId, EdgeId> = BTreeMap::new();
    let mut seen = BTreeSet::from([s]);
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        if v == t {
            let mut path = Vec::new();
            let mut cur = t;
            while cur != s {
                let e = prev[&cur];
                path.push(e);
                cur = g.other_end(e, cur);
            }
            return Some(path);
        }
        for &e in g.rotation(v) {
            if !forest.contains(&e) {
                continue;
            }
            let w = g.other_end(e, v);
            if seen.insert(w) {
                prev.insert(w, e);
                queue.push_back(w);
            }
        }
    }
    None
}

fn without(b: &BTreeSet<EdgeId>, drop: &[EdgeId]) -> BTreeSet<EdgeId> {
    b.iter().copied().filter(|e| !drop.contains(e)).collect()
}

fn with(b: &BTreeSet<EdgeId>, add: &[EdgeId]) -> BTreeSet<EdgeId> {
    let mut out = b.clone();
    out.extend(add.iter().copied());
    out
}

/// Corner of the outer walk: the concrete order in which the outer
/// boundary passes `v` and `w`, split into the two `vw`-paths.
fn outer_vw_paths(g: &PlaneGraph, v: VertexId, w: VertexId) -> Option<(BTreeSet<EdgeId>, BTreeSet<EdgeId>)> {
    let walk = g.face_walk(g.outer_dart()?);
    let iv = walk.iter().position(|d| d.tail == v)?;
    let iw = walk.iter().position(|d| d.tail == w)?;
    let n = walk.len();
    let mut p1 = BTreeSet::new();
    let mut i = iv;
    while i != iw {
        p1.insert(walk[i].edge);
        i = (i + 1) % n;
    }
    let mut p2 = BTreeSet::new();
    while i != iv {
        p2.insert(walk[i].edge);
        i = (i + 1) % n;
    }
    Some((p1, p2))
}

pub(crate) struct Solver {
    opts: Options,
}

impl Solver {
    pub(crate) fn new(opts: Options) -> Self {
        Solver { opts }
    }

    pub(crate) fn bug(&self, g: &PlaneGraph, msg: &str) -> DecomposeError {
        DecomposeError::InternalAssertion { message: msg.to_string(), log: g.log().records() }
    }

    /// Failed hypothesis: the caller's fault at depth 0, ours below.
    fn violated(&self, g: &PlaneGraph, depth: usize, msg: String, witness: Option<Witness>) -> DecomposeError {
        if depth == 0 {
            precondition(msg, witness)
        } else {
            self.bug(g, &format!("recursive call hypothesis failed: {msg}"))
        }
    }

    fn check_common(&self, g: &PlaneGraph, b: &BTreeSet<EdgeId>, depth: usize) -> Result<(), DecomposeError> {
        if let Some(v) = g.vertices().find(|&v| !(2..=3).contains(&g.degree(v))) {
            return Err(self.violated(g, depth, format!("vertex {v} has degree {}", g.degree(v)), None));
        }
        if !connectivity::is_two_edge_connected(g) {
            return Err(self.violated(g, depth, "graph is not 2-edge-connected".into(), None));
        }
        if g.is_cycle() {
            return Err(self.violated(g, depth, "graph is a cycle".into(), None));
        }
        if let Some(f) = classes::faces_without_two_vertex(g).into_iter().next() {
            return Err(self.violated(
                g,
                depth,
                "a face has no 2-vertex".into(),
                Some(Witness::FaceWithoutTwoVertex(f)),
            ));
        }
        if let Some(z) = classes::find_nonseparating_cycle(g) {
            return Err(self.violated(
                g,
                depth,
                "graph has a non-separating cycle".into(),
                Some(Witness::NonSeparatingCycle(z)),
            ));
        }
        let outer = g.outer_boundary_edges();
        if let Some(e) = b.iter().find(|e| !outer.contains(e)) {
            return Err(self.violated(g, depth, format!("prescribed edge {e} is not on the outer boundary"), None));
        }
        Ok(())
    }

    pub(crate) fn check_case_a(&self, g: &PlaneGraph, b: &BTreeSet<EdgeId>, depth: usize) -> Result<(), DecomposeError> {
        self.check_common(g, b, depth)?;
        if !connectivity::is_cyclically_3ec(g) {
            return Err(self.violated(g, depth, "graph has a cyclic 2-edge-cut".into(), None));
        }
        let n23 = classes::b23(g, b).len();
        if n23 > 1 {
            return Err(self.violated(g, depth, format!("{n23} prescribed (2,3)-edges"), None));
        }
        Ok(())
    }

    pub(crate) fn check_case_b(
        &self,
        g: &PlaneGraph,
        b: &BTreeSet<EdgeId>,
        v: VertexId,
        w: VertexId,
        depth: usize,
    ) -> Result<(), DecomposeError> {
        self.check_common(g, b, depth)?;
        let fail = |m: String| Err(self.violated(g, depth, m, None));
        let outer_v = g.outer_vertices();
        if v == w || !outer_v.contains(&v) || !outer_v.contains(&w) {
            return fail(format!("{v} and {w} are not distinct outer vertices"));
        }
        if g.degree(v) != 2 {
            return fail(format!("{v} is not a 2-vertex"));
        }
        let classes = connectivity::cut_classes(g);
        let mut any_cyclic = false;
        for class in &classes {
            let (sv, sw) = (class.segment_of(v).unwrap(), class.segment_of(w).unwrap());
            for i in 0..class.edges.len() {
                for j in (i + 1)..class.edges.len() {
                    if class.is_cyclic_pair(i, j) {
                        any_cyclic = true;
                        let in_arc = |s: usize| s > i && s <= j;
                        if in_arc(sv) == in_arc(sw) {
                            return fail(format!(
                                "cyclic cut {{{}, {}}} does not separate {v} from {w}",
                                class.edges[i], class.edges[j]
                            ));
                        }
                    }
                }
            }
        }
        if !any_cyclic {
            return fail("graph has no cyclic 2-edge-cut".into());
        }
        let Some((p1, p2)) = outer_vw_paths(g, v, w) else {
            return fail("outer walk misses v or w".into());
        };
        if !b.is_subset(&p1) && !b.is_subset(&p2) {
            return fail("prescribed edges do not lie on one vw-path of the outer boundary".into());
        }
        if classes::is_sensitive(g, b, v) {
            let outer: BTreeSet<_> = g.face_walk(g.outer_dart().unwrap()).into_iter().collect();
            let inner = g.darts().find(|d| d.tail == v && !outer.contains(d));
            let ok = inner.is_some_and(|d| {
                g.face_walk(d).iter().any(|x| x.tail != v && g.degree(x.tail) == 2)
            });
            if !ok {
                return fail(format!("sensitive {v} has no other 2-vertex on its inner face"));
            }
        }
        for z in g.vertices() {
            if z != v && z != w && classes::is_sensitive(g, b, z) && !g.neighbors(z).any(|n| n == w) {
                return fail(format!("sensitive vertex {z} is neither {w} nor adjacent to it"));
            }
        }
        Ok(())
    }

    fn validate_output(
        &self,
        g: &PlaneGraph,
        d: &TwoDecomposition,
        b: &BTreeSet<EdgeId>,
        what: &str,
    ) -> Result<(), DecomposeError> {
        if self.opts.validate {
            let rep = verify::check_2d(g, d, Some(b));
            if !rep.ok {
                return Err(self.bug(g, &format!("{what}: {:?}", rep.violations)));
            }
        }
        Ok(())
    }

    /// Cyclically 3-edge-connected case, at most one prescribed (2,3)-edge.
    pub(crate) fn case_a(&self, g: &PlaneGraph, b: &BTreeSet<EdgeId>, depth: usize) -> Result<TwoDecomposition, DecomposeError> {
        stacker::maybe_grow(RED_ZONE, STACK, || self.case_a_inner(g, b, depth))
    }

    fn case_a_inner(&self, g: &PlaneGraph, b: &BTreeSet<EdgeId>, depth: usize) -> Result<TwoDecomposition, DecomposeError> {
        if self.opts.validate && depth > 0 {
            self.check_case_a(g, b, depth)?;
        }
        // Contract (2,2)-edges one by one; each comes back as a forest edge.
        let mut h = g.clone();
        let mut bh = b.clone();
        let mut contracted = Vec::new();
        while !h.is_cycle() {
            let f = h.edges().find(|&(_, [p, q])| h.degree(p) == 2 && h.degree(q) == 2).map(|(e, en)| (e, en[0]));
            let Some((f, keep)) = f else { break };
            h = h.contract_edge(f, keep).map_err(|e| self.bug(&h, &e.to_string()))?;
            bh.remove(&f);
            contracted.push(f);
        }
        let mut d = if h.is_cycle() {
            solve_cycle(&h, &bh).ok_or_else(|| self.bug(&h, "prescribed set covers a cycle"))?
        } else {
            self.case_a_core(&h, &bh, depth)?
        };
        d.forest.extend(contracted);
        self.validate_output(g, &d, b, "case (a) output")?;
        Ok(d)
    }

    fn case_a_core(&self, g: &PlaneGraph, b: &BTreeSet<EdgeId>, depth: usize) -> Result<TwoDecomposition, DecomposeError> {
        match connectivity::recognize_special(g) {
            Special::ThetaSubdivision | Special::K4Subdivision => {
                return brute_force(g, b).ok_or_else(|| self.bug(g, "no decomposition of a special base graph"));
            }
            _ => {}
        }
        let mut b = b.clone();
        let b23 = classes::b23(g, &b);
        let e = match b23.iter().next() {
            Some(&e) => e,
            None => {
                let outer = g.outer_vertices();
                let u = outer
                    .iter()
                    .copied()
                    .find(|&v| g.degree(v) == 2)
                    .ok_or_else(|| self.bug(g, "outer face has no 2-vertex"))?;
                let e = *g.rotation(u).iter().min().unwrap();
                b.insert(e);
                e
            }
        };
        let [p, q] = g.endpoints(e).unwrap();
        let u = if g.degree(p) == 2 { p } else { q };
        let fr = classes::label_neighbor_frame(g, u, e).map_err(|err| self.bug(g, &err.to_string()))?;
        if self.opts.validate && fr.conditions() != [true; 3] {
            return Err(self.bug(g, &format!("neighbour frame degenerate: {fr:?}")));
        }
        // G' = (G - u) with yb contracted into y.
        let g1 = g
            .delete_vertex(u)
            .and_then(|h| h.contract_edge(fr.e_yb, fr.y))
            .map_err(|err| self.bug(g, &err.to_string()))?;
        let b1 = with(&without(&b, &[fr.e_ux, fr.e_uy, fr.e_yb]), &[fr.e_ya]);
        let lift = |mut d: TwoDecomposition, extra: &[EdgeId]| {
            d.forest.extend([fr.e_yb, fr.e_ux]);
            d.forest.extend(extra.iter().copied());
            d.matching.insert(fr.e_uy);
            d
        };
        let d = if connectivity::is_cyclically_3ec(&g1) && !g1.is_cycle() {
            let b1_23 = classes::b23(&g1, &b1);
            if b1_23.len() <= 1 {
                lift(self.case_a(&g1, &b1, depth + 1)?, &[])
            } else {
                if b1_23 != BTreeSet::from([fr.e_ya, fr.e_xd]) {
                    return Err(self.bug(&g1, &format!("unexpected prescribed (2,3)-edges {b1_23:?}")));
                }
                if g.degree(fr.c) == 3 {
                    let g2 = g1.contract_edge(fr.e_xc, fr.x).map_err(|err| self.bug(&g1, &err.to_string()))?;
                    lift(self.case_a(&g2, &b1, depth + 1)?, &[fr.e_xc])
                } else {
                    let b2 = without(&b1, &[fr.e_xd]);
                    let TwoDecomposition { mut forest, mut matching } = lift(self.case_a(&g1, &b2, depth + 1)?, &[]);
                    if !forest.contains(&fr.e_xd) {
                        let [s, t] = g.endpoints(fr.e_xd).unwrap();
                        match forest_path(g, &forest, s, t) {
                            None => {
                                forest.insert(fr.e_xd);
                                matching.remove(&fr.e_xd);
                            }
                            Some(path) => {
                                let at_c: Vec<EdgeId> = g.rotation(fr.c).to_vec();
                                let in_cycle = |x: &EdgeId| path.contains(x) || *x == fr.e_xd;
                                if !at_c.iter().all(in_cycle) {
                                    return Err(self.bug(g, "swap cycle misses an edge at c"));
                                }
                                forest.insert(fr.e_xd);
                                forest.remove(&fr.e_xc);
                                matching.remove(&fr.e_xd);
                                matching.insert(fr.e_xc);
                            }
                        }
                    }
                    TwoDecomposition { forest, matching }
                }
            }
        } else if g1.is_cycle() {
            let d = solve_cycle(&g1, &b1).ok_or_else(|| self.bug(&g1, "prescribed set covers a cycle"))?;
            lift(d, &[])
        } else {
            lift(self.case_b(&g1, &b1, fr.x, fr.y, depth + 1)?, &[])
        };
        self.validate_output(g, &d, &b, "frame reduction output")?;
        Ok(d)
    }

    /// Case with a cyclic 2-edge-cut and the pair `(v, w)`.
    pub(crate) fn case_b(
        &self,
        g: &PlaneGraph,
        b: &BTreeSet<EdgeId>,
        v: VertexId,
        w: VertexId,
        depth: usize,
    ) -> Result<TwoDecomposition, DecomposeError> {
        stacker::maybe_grow(RED_ZONE, STACK, || self.case_b_inner(g, b, v, w, depth))
    }

    fn case_b_inner(
        &self,
        g: &PlaneGraph,
        b: &BTreeSet<EdgeId>,
        v: VertexId,
        w: VertexId,
        depth: usize,
    ) -> Result<TwoDecomposition, DecomposeError> {
        if self.opts.validate && depth > 0 {
            self.check_case_b(g, b, v, w, depth)?;
        }
        let sp = CutSplit::at(g, b, v, Some(w)).map_err(|m| self.bug(g, &m))?;
        if !sp.k2.contains(&w) {
            return Err(self.bug(g, "minimal cut does not separate v from w"));
        }
        let (e1, e2) = (sp.e1, sp.e2);
        let e_g1 = sp.g1.edge_ids();
        let b1: BTreeSet<EdgeId> = b.intersection(&e_g1).copied().collect();
        let e_g2 = sp.g2.edge_ids();
        let b2: BTreeSet<EdgeId> = b.intersection(&e_g2).copied().collect();
        let star_has_faces = classes::faces_without_two_vertex(&sp.gstar1).is_empty();
        let (d1, d2) = if star_has_faces {
            let mut d1 = self.case_a(&sp.gstar1, &with(&b1, &[e2]), depth + 1)?;
            d1.forest.insert(e1);
            let b2m = without(&b2, &[e2]);
            let d2 = if connectivity::has_cyclic_2cut(&sp.g2) {
                self.case_b(&sp.g2, &b2m, sp.u2, w, depth + 1)?
            } else {
                self.case_a(&sp.g2, &b2m, depth + 1)?
            };
            (d1, d2)
        } else {
            let b1p = with(&b1, &[e2]);
            let d1 = if classes::is_sensitive(&sp.g1, &b1p, v) {
                let bb = classes::b23(&sp.g1, &b1p);
                let vv = *sp.g1.rotation(v).iter().find(|e| bb.contains(e)).unwrap();
                let h = sp.g1.contract_edge(vv, v).map_err(|err| self.bug(&sp.g1, &err.to_string()))?;
                let mut d = self.case_a(&h, &without(&b1p, &[vv]), depth + 1)?;
                d.forest.insert(vv);
                d
            } else {
                self.case_a(&sp.g1, &b1p, depth + 1)?
            };
            let b2p = with(&b2, &[e2]);
            let d2 = if connectivity::has_cyclic_2cut(&sp.g2) {
                self.case_b(&sp.g2, &b2p, sp.u2, w, depth + 1)?
            } else if classes::b23(&sp.g2, &b2p).len() <= 1 {
                self.case_a(&sp.g2, &b2p, depth + 1)?
            } else {
                let h = sp.g2.contract_edge(e2, sp.u2).map_err(|err| self.bug(&sp.g2, &err.to_string()))?;
                let mut d = self.case_a(&h, &without(&b2p, &[e2]), depth + 1)?;
                d.forest.insert(e2);
                d
            };
            (d1, d2)
        };
        let d = merge(d1, d2);
        self.validate_output(g, &d, b, "cut case merge")?;
        Ok(d)
    }

    /// A decomposition with `e` in the forest for a 2-edge-connected graph
    /// whose cycles all separate.
    pub(crate) fn corollary(&self, g: &PlaneGraph, e: EdgeId, depth: usize) -> Result<TwoDecomposition, DecomposeError> {
        stacker::maybe_grow(RED_ZONE, STACK, || self.corollary_inner(g, e, depth))
    }

    fn corollary_inner(&self, g: &PlaneGraph, e: EdgeId, depth: usize) -> Result<TwoDecomposition, DecomposeError> {
        let be = BTreeSet::from([e]);
        if g.is_cycle() {
            return solve_cycle(g, &be).ok_or_else(|| self.bug(g, "cycle without a free edge"));
        }
        let g = if g.outer_boundary_edges().contains(&e) {
            g.clone()
        } else {
            let tail = g.endpoints(e).unwrap()[0];
            g.set_outer_dart(crate::plane_graph::Dart { edge: e, tail }).unwrap()
        };
        if connectivity::is_cyclically_3ec(&g) {
            return self.case_a(&g, &be, depth + 1);
        }
        let cut = connectivity::first_cyclic_2cut(&g).ok_or_else(|| self.bug(&g, "no cyclic cut found"))?;
        let (c0, c1) = (cut.edges[0], cut.edges[1]);
        let (mut e1, mut e2) = if e == c1 { (c1, c0) } else { (c0, c1) };
        // The side kept whole in g1 holds e.
        let [p, _] = g.endpoints(e).unwrap();
        let keep = if cut.edges.contains(&e) { cut.side1.clone() } else { cut.side_of(p).clone() };
        let other: BTreeSet<VertexId> = g.vertices().filter(|x| !keep.contains(x)).collect();
        let (g1, _) = g.quotient_component([c0, c1], &other).map_err(|err| self.bug(&g, &err.to_string()))?;
        let (g2, _) = g.quotient_component([c0, c1], &keep).map_err(|err| self.bug(&g, &err.to_string()))?;
        let d1 = self.corollary(&g1, e, depth + 1)?;
        if !d1.forest.contains(&e1) {
            std::mem::swap(&mut e1, &mut e2);
        }
        if !d1.forest.contains(&e1) {
            return Err(self.bug(&g1, "both cut edges in the matching"));
        }
        let _ = e2;
        let d2 = self.corollary(&g2, e1, depth + 1)?;
        let d = merge(d1, d2);
        self.validate_output(&g, &d, &be, "corollary merge")?;
        Ok(d)
    }
}

/// Union of forests; matching edges that landed in either forest are dropped.
fn merge(d1: TwoDecomposition, d2: TwoDecomposition) -> TwoDecomposition {
    let forest: BTreeSet<EdgeId> = d1.forest.union(&d2.forest).copied().collect();
    let matching = d1.matching.union(&d2.matching).copied().filter(|e| !forest.contains(e)).collect();
    TwoDecomposition { forest, matching }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn cycle_solver_avoids_prescribed() {
        let c = generators::cycle(4).unwrap();
        let d = solve_cycle(&c, &BTreeSet::from([EdgeId(0)])).unwrap();
        assert_eq!(d.matching, BTreeSet::from([EdgeId(1)]));
        let all = c.edge_ids();
        assert!(solve_cycle(&c, &all).is_none());
    }

    #[test]
    fn brute_force_on_x_gadget_parts() {
        let k = generators::k4sd6();
        let d = brute_force(&k, &BTreeSet::new()).unwrap();
        assert!(verify::check_2d(&k, &d, None).ok);
        assert!(brute_force(&generators::k4(), &BTreeSet::new()).is_none());
    }

    #[test]
    fn cut_split_on_bitriangle_like_chain() {
        let g = generators::two_cut_chain(2).unwrap();
        let sp = CutSplit::at(&g, &BTreeSet::new(), VertexId(0), None).unwrap();
        assert_eq!(sp.k1.len(), 4);
        assert_eq!(sp.g1.degree(sp.u1), 2);
        assert_eq!(sp.g1.vertex_count(), 5);
        assert_eq!(sp.gstar1.vertex_count(), 4);
        assert!(sp.g2.has_vertex(sp.u2));
    }

    #[test]
    fn forest_path_finds_route() {
        let c = generators::cycle(5).unwrap();
        let f: BTreeSet<EdgeId> = [0, 1, 2, 3].map(EdgeId).into();
        let p = forest_path(&c, &f, VertexId(0), VertexId(4)).unwrap();
        assert_eq!(p.len(), 4);
    }
}
