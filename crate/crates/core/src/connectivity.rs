//! Bridges, 2-edge-cuts, cyclic cuts and recognition of the base shapes
//! (cycles, subdivided Θ and K4).
//!
//! Two non-bridge edges `e`, `f` form a 2-edge-cut exactly when every cycle
//! uses both or neither. Giving each non-tree edge of a spanning tree a random
//! 64-bit label and each tree edge the XOR of the labels of the non-tree edges
//! covering it, that happens (up to hash collisions) iff the labels agree.
//! Each label class is then verified structurally (removing the `k` class
//! edges must leave `k` segments arranged in a ring); if that fails the
//! classes are recomputed exactly.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::plane_graph::{EdgeId, PlaneGraph, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConnError {
    #[error("graph has a bridge ({0})")]
    HasBridge(EdgeId),
    #[error("edges do not form a 2-edge-cut")]
    NotACut,
    #[error("graph has no cyclic 2-edge-cut")]
    NoCyclicCut,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeCut {
    pub edges: Vec<EdgeId>,
    pub side1: BTreeSet<VertexId>,
    pub side2: BTreeSet<VertexId>,
    pub cyclic: bool,
}

impl EdgeCut {
    pub fn side_of(&self, v: VertexId) -> &BTreeSet<VertexId> {
        if self.side1.contains(&v) {
            &self.side1
        } else {
            &self.side2
        }
    }

    pub fn other_side(&self, v: VertexId) -> &BTreeSet<VertexId> {
        if self.side1.contains(&v) {
            &self.side2
        } else {
            &self.side1
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Special {
    Cycle,
    ThetaSubdivision,
    K4Subdivision,
    None,
}

/// One piece of the graph left after removing all edges of a cut class.
#[derive(Clone, Debug)]
pub struct Segment {
    pub vertices: BTreeSet<VertexId>,
    /// The segment contains a cycle.
    pub cyclic: bool,
}

/// A maximal set of edges any two of which form a 2-edge-cut. `edges[i]`
/// joins `segments[i]` to `segments[(i + 1) % k]`.
#[derive(Clone, Debug)]
pub struct CutClass {
    pub edges: Vec<EdgeId>,
    pub segments: Vec<Segment>,
}

impl CutClass {
    fn len(&self) -> usize {
        self.edges.len()
    }

    /// Segment indices of the arc cut off by edges `i < j` that starts
    /// right after edge `i`.
    fn arc(&self, i: usize, j: usize) -> std::ops::RangeInclusive<usize> {
        (i + 1)..=j
    }

    fn side_vertices(&self, range: impl Iterator<Item = usize>) -> BTreeSet<VertexId> {
        range.flat_map(|s| self.segments[s % self.len()].vertices.iter().copied()).collect()
    }

    /// The cut formed by edges `i != j` of this class.
    pub fn cut(&self, i: usize, j: usize) -> EdgeCut {
        let (i, j) = (i.min(j), i.max(j));
        let k = self.len();
        let a = self.side_vertices(self.arc(i, j));
        let b = self.side_vertices((j + 1)..=(i + k));
        let cyc_a = self.arc(i, j).any(|s| self.segments[s].cyclic);
        let cyc_b = ((j + 1)..=(i + k)).any(|s| self.segments[s % k].cyclic);
        let mut edges = vec![self.edges[i], self.edges[j]];
        edges.sort();
        let (side1, side2) = if a.first() < b.first() { (a, b) } else { (b, a) };
        EdgeCut { edges, side1, side2, cyclic: cyc_a && cyc_b }
    }

    /// Sizes and cyclicity of the two arcs cut off by edges `i < j`:
    /// `(|arc after i|, cyclic, |other arc|, cyclic)`.
    pub fn arc_stats(&self, i: usize, j: usize) -> (usize, bool, usize, bool) {
        let (i, j) = (i.min(j), i.max(j));
        let mut st = (0, false, 0, false);
        for (s, seg) in self.segments.iter().enumerate() {
            if s > i && s <= j {
                st.0 += seg.vertices.len();
                st.1 |= seg.cyclic;
            } else {
                st.2 += seg.vertices.len();
                st.3 |= seg.cyclic;
            }
        }
        st
    }

    pub fn is_cyclic_pair(&self, i: usize, j: usize) -> bool {
        let st = self.arc_stats(i, j);
        st.1 && st.3
    }

    pub fn segment_of(&self, v: VertexId) -> Option<usize> {
        self.segments.iter().position(|s| s.vertices.contains(&v))
    }
}

/// Bridges of a (possibly disconnected) graph, via iterative low-link.
pub fn bridges(g: &PlaneGraph) -> BTreeSet<EdgeId> {
    let mut disc: HashMap<VertexId, usize> = HashMap::new();
    let mut low: HashMap<VertexId, usize> = HashMap::new();
    let mut out = BTreeSet::new();
    let mut t = 0;
    for root in g.vertices() {
        if disc.contains_key(&root) {
            continue;
        }
        // (vertex, edge used to enter, next rotation index)
        let mut stack: Vec<(VertexId, Option<EdgeId>, usize)> = vec![(root, None, 0)];
        disc.insert(root, t);
        low.insert(root, t);
        t += 1;
        while let Some(&mut (v, parent_edge, ref mut idx)) = stack.last_mut() {
            let rot = g.rotation(v);
            if *idx < rot.len() {
                let e = rot[*idx];
                *idx += 1;
                if Some(e) == parent_edge {
                    continue;
                }
                let w = g.other_end(e, v);
                if let Some(&dw) = disc.get(&w) {
                    let lv = low[&v].min(dw);
                    low.insert(v, lv);
                } else {
                    disc.insert(w, t);
                    low.insert(w, t);
                    t += 1;
                    stack.push((w, Some(e), 0));
                }
            } else {
                stack.pop();
                if let (Some(pe), Some(&(p, _, _))) = (parent_edge, stack.last()) {
                    let lv = low[&v];
                    if lv > disc[&p] {
                        out.insert(pe);
                    }
                    let lp = low[&p].min(lv);
                    low.insert(p, lp);
                }
            }
        }
    }
    out
}

pub fn is_two_edge_connected(g: &PlaneGraph) -> bool {
    g.is_connected() && bridges(g).is_empty()
}

/// Edges that are bridges of `g - removed` (the edges of `removed` excluded).
fn bridges_without(g: &PlaneGraph, removed: EdgeId) -> BTreeSet<EdgeId> {
    bridges(&g.delete_edges(&[removed]).expect("edge present"))
}

fn xor_labels(g: &PlaneGraph, seed: u64) -> BTreeMap<EdgeId, u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut parent: HashMap<VertexId, EdgeId> = HashMap::new();
    let mut order = Vec::with_capacity(g.vertex_count());
    let mut seen: BTreeSet<VertexId> = BTreeSet::new();
    let mut tree: BTreeSet<EdgeId> = BTreeSet::new();
    for root in g.vertices() {
        if !seen.insert(root) {
            continue;
        }
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &e in g.rotation(v) {
                let w = g.other_end(e, v);
                if seen.insert(w) {
                    parent.insert(w, e);
                    tree.insert(e);
                    queue.push_back(w);
                }
            }
        }
    }
    let mut label: BTreeMap<EdgeId, u64> = BTreeMap::new();
    let mut acc: HashMap<VertexId, u64> = HashMap::new();
    for (e, [a, b]) in g.edges() {
        if !tree.contains(&e) {
            let x: u64 = rng.random();
            label.insert(e, x);
            *acc.entry(a).or_default() ^= x;
            *acc.entry(b).or_default() ^= x;
        }
    }
    for &v in order.iter().rev() {
        if let Some(&pe) = parent.get(&v) {
            let x = acc.get(&v).copied().unwrap_or(0);
            label.insert(pe, x);
            let p = g.other_end(pe, v);
            *acc.entry(p).or_default() ^= x;
        }
    }
    label
}

/// Arranges the pieces left by removing `class` into a ring, or `None` if
/// the class is not a genuine cut class.
fn build_class(g: &PlaneGraph, class: &[EdgeId]) -> Option<CutClass> {
    let removed: BTreeSet<EdgeId> = class.iter().copied().collect();
    let k = class.len();
    let mut seg_of: HashMap<VertexId, usize> = HashMap::new();
    let mut segs: Vec<BTreeSet<VertexId>> = Vec::new();
    for &e in class {
        for v in g.endpoints(e).unwrap() {
            if seg_of.contains_key(&v) {
                continue;
            }
            let comp = g.reachable(v, &removed);
            for &x in &comp {
                seg_of.insert(x, segs.len());
            }
            segs.push(comp);
        }
    }
    let covered: usize = segs.iter().map(BTreeSet::len).sum();
    if segs.len() != k || covered != g.vertex_count() {
        return None;
    }
    // Incidence of class edges on segments.
    let mut at: Vec<Vec<EdgeId>> = vec![Vec::new(); k];
    for &e in class {
        let [a, b] = g.endpoints(e).unwrap();
        let (sa, sb) = (seg_of[&a], seg_of[&b]);
        if sa == sb {
            return None;
        }
        at[sa].push(e);
        at[sb].push(e);
    }
    if at.iter().any(|l| l.len() != 2) {
        return None;
    }
    // Walk the ring starting from segment 0.
    let mut order_segs = vec![0usize];
    let mut order_edges = Vec::with_capacity(k);
    let mut cur = 0usize;
    let mut via = at[0][0];
    for _ in 0..k {
        order_edges.push(via);
        let [a, b] = g.endpoints(via).unwrap();
        let next = if seg_of[&a] == cur { seg_of[&b] } else { seg_of[&a] };
        if order_edges.len() == k {
            if next != 0 {
                return None;
            }
            break;
        }
        order_segs.push(next);
        via = if at[next][0] == via { at[next][1] } else { at[next][0] };
        cur = next;
    }
    let distinct: BTreeSet<usize> = order_segs.iter().copied().collect();
    if distinct.len() != k {
        return None;
    }
    // Count edges inside each segment to detect cycles.
    let mut inner_edges = vec![0usize; k];
    for (e, [a, _]) in g.edges() {
        if !removed.contains(&e) {
            inner_edges[seg_of[&a]] += 1;
        }
    }
    let segments = order_segs
        .iter()
        .map(|&s| Segment { cyclic: inner_edges[s] >= segs[s].len(), vertices: segs[s].clone() })
        .collect();
    Some(CutClass { edges: order_edges, segments })
}

fn exact_classes(g: &PlaneGraph, br: &BTreeSet<EdgeId>) -> Vec<Vec<EdgeId>> {
    let mut assigned: BTreeSet<EdgeId> = BTreeSet::new();
    let mut out = Vec::new();
    for (e, _) in g.edges() {
        if br.contains(&e) || assigned.contains(&e) {
            continue;
        }
        let partners: Vec<EdgeId> =
            bridges_without(g, e).into_iter().filter(|f| !br.contains(f)).collect();
        if partners.is_empty() {
            continue;
        }
        let mut class = vec![e];
        class.extend(partners);
        class.sort();
        assigned.extend(class.iter().copied());
        out.push(class);
    }
    out
}

/// All cut classes of size at least two. The graph may have bridges: they
/// never join a class, and the classes describe the 2-edge-cuts in the
/// inclusion-minimal sense.
pub fn cut_classes(g: &PlaneGraph) -> Vec<CutClass> {
    let br = bridges(g);
    let labels = xor_labels(g, 0x5eed_c0ff_ee00_0001 ^ g.edge_count() as u64);
    let mut groups: BTreeMap<u64, Vec<EdgeId>> = BTreeMap::new();
    for (&e, &l) in &labels {
        if l != 0 && !br.contains(&e) {
            groups.entry(l).or_default().push(e);
        }
    }
    let mut raw: Vec<Vec<EdgeId>> = groups.into_values().filter(|c| c.len() >= 2).collect();
    raw.sort();
    let built: Option<Vec<CutClass>> = raw.iter().map(|c| build_class(g, c)).collect();
    match built {
        Some(classes) => classes,
        None => exact_classes(g, &br)
            .iter()
            .map(|c| build_class(g, c).expect("exact cut class forms a ring"))
            .collect(),
    }
}

/// Every 2-edge-cut of a bridgeless connected graph, sorted by edge ids.
pub fn two_edge_cuts(g: &PlaneGraph) -> Result<Vec<EdgeCut>, ConnError> {
    if let Some(&b) = bridges(g).iter().next() {
        return Err(ConnError::HasBridge(b));
    }
    let mut cuts: Vec<EdgeCut> = Vec::new();
    for class in cut_classes(g) {
        for i in 0..class.len() {
            for j in (i + 1)..class.len() {
                cuts.push(class.cut(i, j));
            }
        }
    }
    cuts.sort_by(|a, b| a.edges.cmp(&b.edges));
    Ok(cuts)
}

/// Decides whether the 2-edge-cut `edges` is cyclic. The shortcut "no side
/// is a path" settles most cases; otherwise the sides are examined directly.
pub fn is_cyclic_cut(g: &PlaneGraph, edges: [EdgeId; 2]) -> Result<bool, ConnError> {
    let (side1, side2) = cut_sides(g, edges)?;
    let removed: BTreeSet<EdgeId> = edges.into_iter().collect();
    let is_path = |side: &BTreeSet<VertexId>| {
        let mut inner = 0;
        for &v in side {
            let d = g.rotation(v).iter().filter(|e| !removed.contains(e)).count();
            if d > 2 {
                return false;
            }
            inner += d;
        }
        inner / 2 + 1 == side.len()
    };
    if !is_path(&side1) && !is_path(&side2) {
        return Ok(true);
    }
    Ok(side_has_cycle(g, &side1, &removed) && side_has_cycle(g, &side2, &removed))
}

fn side_has_cycle(g: &PlaneGraph, side: &BTreeSet<VertexId>, removed: &BTreeSet<EdgeId>) -> bool {
    let inner: usize = g
        .edges()
        .filter(|(e, en)| !removed.contains(e) && side.contains(&en[0]) && side.contains(&en[1]))
        .count();
    inner >= side.len()
}

/// The two components of `G - edges`, or `NotACut` if the pair is not an
/// inclusion-minimal edge cut.
pub fn cut_sides(
    g: &PlaneGraph,
    edges: [EdgeId; 2],
) -> Result<(BTreeSet<VertexId>, BTreeSet<VertexId>), ConnError> {
    let [e1, e2] = edges;
    let (Some(en1), Some(en2)) = (g.endpoints(e1), g.endpoints(e2)) else {
        return Err(ConnError::NotACut);
    };
    if e1 == e2 {
        return Err(ConnError::NotACut);
    }
    let removed = BTreeSet::from([e1, e2]);
    let a = g.reachable(en1[0], &removed);
    let b = g.reachable(en1[1], &removed);
    let crosses = |en: [VertexId; 2]| a.contains(&en[0]) != a.contains(&en[1]);
    if a.contains(&en1[1]) || a.len() + b.len() != g.vertex_count() || !crosses(en2) {
        return Err(ConnError::NotACut);
    }
    Ok((a, b))
}

/// True iff there is no cyclic bridge and no cyclic 2-edge-cut.
pub fn is_cyclically_3ec(g: &PlaneGraph) -> bool {
    first_cyclic_2cut(g).is_none() && cyclic_bridge(g).is_none()
}

/// A bridge whose removal leaves a cycle on both sides.
pub fn cyclic_bridge(g: &PlaneGraph) -> Option<EdgeId> {
    for b in bridges(g) {
        let removed = BTreeSet::from([b]);
        let [x, y] = g.endpoints(b).unwrap();
        let sx = g.reachable(x, &removed);
        let sy = g.reachable(y, &removed);
        if side_has_cycle(g, &sx, &removed) && side_has_cycle(g, &sy, &removed) {
            return Some(b);
        }
    }
    None
}

/// The cyclic 2-edge-cut with the smallest edge pair, if any.
pub fn first_cyclic_2cut(g: &PlaneGraph) -> Option<EdgeCut> {
    let mut best: Option<(Vec<EdgeId>, usize, usize, usize)> = None;
    let classes = cut_classes(g);
    for (ci, class) in classes.iter().enumerate() {
        for i in 0..class.len() {
            for j in (i + 1)..class.len() {
                let mut pair = vec![class.edges[i], class.edges[j]];
                pair.sort();
                if best.as_ref().is_some_and(|b| b.0 <= pair) || !class.is_cyclic_pair(i, j) {
                    continue;
                }
                best = Some((pair, ci, i, j));
            }
        }
    }
    best.map(|(_, ci, i, j)| classes[ci].cut(i, j))
}

pub fn has_cyclic_2cut(g: &PlaneGraph) -> bool {
    cut_classes(g).iter().any(|c| {
        let k = c.len();
        (0..k).any(|i| ((i + 1)..k).any(|j| c.is_cyclic_pair(i, j)))
    })
}

/// Among all cyclic 2-edge-cuts, one whose side containing `v` has the
/// fewest vertices; ties go to the smallest sorted edge pair.
pub fn min_side_cyclic_2cut(g: &PlaneGraph, v: VertexId) -> Result<EdgeCut, ConnError> {
    let classes = cut_classes(g);
    let mut best: Option<((usize, Vec<EdgeId>), usize, usize, usize)> = None;
    for (ci, class) in classes.iter().enumerate() {
        let k = class.len();
        let sv = class.segment_of(v).expect("every vertex lies in a segment");
        for i in 0..k {
            for j in (i + 1)..k {
                let (na, ca, nb, cb) = class.arc_stats(i, j);
                if !(ca && cb) {
                    continue;
                }
                let size = if sv > i && sv <= j { na } else { nb };
                let mut pair = vec![class.edges[i], class.edges[j]];
                pair.sort();
                let key = (size, pair);
                if best.as_ref().is_none_or(|b| key < b.0) {
                    best = Some((key, ci, i, j));
                }
            }
        }
    }
    best.map(|(_, ci, i, j)| classes[ci].cut(i, j)).ok_or(ConnError::NoCyclicCut)
}

/// Recognizes cycles and subdivisions of Θ and K4 among graphs with all
/// degrees in {2, 3}.
pub fn recognize_special(g: &PlaneGraph) -> Special {
    if !g.is_connected() || g.vertices().any(|v| !(2..=3).contains(&g.degree(v))) {
        return Special::None;
    }
    if g.vertices().all(|v| g.degree(v) == 2) {
        return Special::Cycle;
    }
    let branch: Vec<VertexId> = g.vertices().filter(|&v| g.degree(v) == 3).collect();
    let mut links: BTreeMap<(VertexId, VertexId), usize> = BTreeMap::new();
    let mut used: BTreeSet<EdgeId> = BTreeSet::new();
    for &s in &branch {
        for &e0 in g.rotation(s) {
            if used.contains(&e0) {
                continue;
            }
            // Follow the thread of 2-vertices.
            let (mut cur, mut e) = (s, e0);
            loop {
                used.insert(e);
                let nxt = g.other_end(e, cur);
                if g.degree(nxt) == 3 {
                    if nxt == s {
                        return Special::None;
                    }
                    *links.entry((s.min(nxt), s.max(nxt))).or_default() += 1;
                    break;
                }
                let rot = g.rotation(nxt);
                e = if rot[0] == e { rot[1] } else { rot[0] };
                cur = nxt;
            }
        }
    }
    match branch.len() {
        2 if links.len() == 1 && links.values().all(|&m| m == 3) => Special::ThetaSubdivision,
        4 if links.len() == 6 && links.values().all(|&m| m == 1) => Special::K4Subdivision,
        _ => Special::None,
    }
}

/// The multigraph obtained by suppressing every 2-vertex.
pub fn suppress_all(g: &PlaneGraph) -> PlaneGraph {
    let mut h = g.clone();
    loop {
        let next = h.vertices().find(|&v| {
            h.degree(v) == 2 && {
                let r = h.rotation(v);
                h.other_end(r[0], v) != h.other_end(r[1], v) && !h.is_parallel(r[0].min(r[1]))
            }
        });
        match next {
            Some(v) => h = h.suppress_two_vertex(v).expect("suppressible"),
            None => return h,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn e(i: u32) -> EdgeId {
        EdgeId(i)
    }

    /// Exact reference: all minimal 2-edge-cuts by brute force.
    fn naive_cuts(g: &PlaneGraph) -> Vec<(Vec<EdgeId>, bool)> {
        let ids: Vec<EdgeId> = g.edge_ids().into_iter().collect();
        let mut out = Vec::new();
        for i in 0..ids.len() {
            for j in (i + 1)..ids.len() {
                if let Ok((a, b)) = cut_sides(g, [ids[i], ids[j]]) {
                    let rm = BTreeSet::from([ids[i], ids[j]]);
                    let single = |x: EdgeId| !g.delete_edges(&[x]).unwrap().is_connected();
                    if single(ids[i]) || single(ids[j]) {
                        continue;
                    }
                    out.push((vec![ids[i], ids[j]], side_has_cycle(g, &a, &rm) && side_has_cycle(g, &b, &rm)));
                }
            }
        }
        out
    }

    #[test]
    fn bridge_examples() {
        assert!(bridges(&generators::cycle(4).unwrap()).is_empty());
        let tt = generators::triangles_with_bridge();
        assert_eq!(bridges(&tt).len(), 1);
        let cube = generators::cube();
        let open = cube.delete_edges(&[e(4), e(5), e(6), e(7)]).unwrap();
        assert_eq!(bridges(&open), BTreeSet::from([e(8), e(9), e(10), e(11)]));
    }

    #[test]
    fn cuts_of_small_fixtures() {
        let c4 = generators::cycle(4).unwrap();
        let cuts = two_edge_cuts(&c4).unwrap();
        assert_eq!(cuts.len(), 6);
        assert!(cuts.iter().all(|c| !c.cyclic));
        let bt = generators::bitriangle();
        let cuts = two_edge_cuts(&bt).unwrap();
        let link = cuts.iter().find(|c| c.edges == vec![e(6), e(7)]).unwrap();
        assert!(link.cyclic);
        assert_eq!(cuts.iter().filter(|c| c.cyclic).count(), 1);
        let k4sd6 = generators::k4sd6();
        assert!(two_edge_cuts(&k4sd6).unwrap().iter().all(|c| !c.cyclic));
        assert!(matches!(
            two_edge_cuts(&generators::triangles_with_bridge()),
            Err(ConnError::HasBridge(_))
        ));
    }

    #[test]
    fn cut_enumeration_matches_naive() {
        for seed in 0..40 {
            let g = generators::random_planar_subcubic(4 + (seed as usize % 14), seed).unwrap();
            if !bridges(&g).is_empty() {
                continue;
            }
            let mut fast: Vec<(Vec<EdgeId>, bool)> =
                two_edge_cuts(&g).unwrap().into_iter().map(|c| (c.edges, c.cyclic)).collect();
            fast.sort();
            assert_eq!(fast, naive_cuts(&g), "seed {seed}");
        }
    }

    #[test]
    fn cyclic_cut_answers() {
        let bt = generators::bitriangle();
        assert!(is_cyclic_cut(&bt, [e(6), e(7)]).unwrap());
        let c6 = generators::cycle(6).unwrap();
        assert!(!is_cyclic_cut(&c6, [e(0), e(3)]).unwrap());
        let k = generators::k4sd6();
        let v = k.vertices().find(|&v| k.degree(v) == 2).unwrap();
        let r = k.rotation(v);
        assert!(!is_cyclic_cut(&k, [r[0], r[1]]).unwrap());
        assert_eq!(is_cyclic_cut(&bt, [e(0), e(1)]), Err(ConnError::NotACut));
    }

    #[test]
    fn cyclic_connectivity() {
        assert!(is_cyclically_3ec(&generators::k4sd6()));
        assert!(!is_cyclically_3ec(&generators::bitriangle()));
        assert!(is_cyclically_3ec(&generators::cubesd4()));
        assert!(is_cyclically_3ec(&generators::cycle(5).unwrap()));
        assert!(!is_cyclically_3ec(&generators::triangles_with_bridge()));
    }

    #[test]
    fn min_side_cut() {
        let bt = generators::bitriangle();
        let cut = min_side_cyclic_2cut(&bt, VertexId(0)).unwrap();
        assert_eq!(cut.edges, vec![e(6), e(7)]);
        assert_eq!(cut.side_of(VertexId(0)).len(), 3);
        assert_eq!(min_side_cyclic_2cut(&generators::k4sd6(), VertexId(0)), Err(ConnError::NoCyclicCut));
        // In a chain of squares the cut nearest the end square wins.
        let chain = generators::two_cut_chain(3).unwrap();
        let cut = min_side_cyclic_2cut(&chain, VertexId(0)).unwrap();
        assert_eq!(cut.side_of(VertexId(0)).len(), 4);
    }

    #[test]
    fn special_shapes() {
        assert_eq!(recognize_special(&generators::cycle(7).unwrap()), Special::Cycle);
        assert_eq!(
            recognize_special(&generators::theta_subdivision(1, 1, 2).unwrap()),
            Special::ThetaSubdivision
        );
        assert_eq!(recognize_special(&generators::k4sd6()), Special::K4Subdivision);
        assert_eq!(recognize_special(&generators::cubesd4()), Special::None);
        assert_eq!(recognize_special(&generators::k4()), Special::K4Subdivision);
    }
}
