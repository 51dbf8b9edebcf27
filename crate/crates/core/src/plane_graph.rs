//! Plane multigraphs stored as rotation systems.
//!
//! A [`PlaneGraph`] is an immutable value: every surgery returns a new graph
//! and leaves the receiver untouched. Rotations are stored clockwise. Faces
//! are traced with the rule `next(t -> h) = h -> succ_cw(h, edge)`, which walks
//! every bounded face of a straight-line drawing counterclockwise and the
//! outer face clockwise.
//!
//! Edge ids are never renumbered, and a merged vertex keeps the survivor's
//! id, so an edge set computed on a derived graph can be read directly as an
//! edge set of the graph it was derived from.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u32);

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A directed edge-end: `edge` traversed away from `tail`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Dart {
    pub edge: EdgeId,
    pub tail: VertexId,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub id: usize,
    /// The facial walk. Empty only for the single face of an isolated vertex.
    pub boundary: Vec<Dart>,
    /// True when the walk repeats no vertex.
    pub is_cycle: bool,
}

impl Face {
    pub fn edges(&self) -> BTreeSet<EdgeId> {
        self.boundary.iter().map(|d| d.edge).collect()
    }

    pub fn vertices(&self) -> BTreeSet<VertexId> {
        self.boundary.iter().map(|d| d.tail).collect()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("rotation is not symmetric at edge {0}")]
    NonSymmetric(EdgeId),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("edge {0} is a loop")]
    LoopPresent(EdgeId),
    #[error("rotation traces {faces} faces, a sphere embedding needs {expected}")]
    EulerViolation { faces: usize, expected: usize },
    #[error("graph is not planar")]
    NonPlanar,
    #[error("unknown face {0}")]
    UnknownFace(usize),
    #[error("edge {0} is parallel to another edge and cannot be contracted")]
    ParallelEdgeContraction(EdgeId),
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("vertex {0} does not have degree 2")]
    NotTwoVertex(VertexId),
    #[error("both edges at vertex {0} lead to the same neighbour")]
    IdenticalNeighbours(VertexId),
    #[error("edges {0} and {1} do not form a 2-edge-cut")]
    NotACut(EdgeId, EdgeId),
    #[error("vertex set is not a component of the graph minus the cut")]
    NotAComponent,
    #[error("vertex {0} is not an endpoint of edge {1}")]
    NotAnEndpoint(VertexId, EdgeId),
}

/// One recorded surgery. Replaying the records of a [`SurgeryLog`] in order
/// on the original graph reproduces the derived graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum Surgery {
    Contract { edge: EdgeId, survivor: VertexId },
    SuppressTwoVertex { vertex: VertexId },
    DeleteVertex { vertex: VertexId },
    DeleteEdges { edges: Vec<EdgeId> },
    Quotient { cut: [EdgeId; 2], side: Vec<VertexId>, vertex: VertexId },
    Subdivide { edge: EdgeId, vertex: VertexId, new_edge: EdgeId },
    KeepComponent { vertex: VertexId },
    SetOuter { dart: Option<Dart> },
    AddEdge { corners: [Dart; 2], edge: EdgeId },
    AddPendant { vertex: VertexId, before: Option<EdgeId>, leaf: VertexId, edge: EdgeId },
}

#[derive(Debug)]
struct LogNode {
    record: Surgery,
    prev: Option<Arc<LogNode>>,
    len: usize,
}

/// Persistent (shared-tail) list of surgeries; cloning is O(1).
#[derive(Clone, Debug, Default)]
pub struct SurgeryLog {
    head: Option<Arc<LogNode>>,
}

impl SurgeryLog {
    fn push(&self, record: Surgery) -> SurgeryLog {
        let len = self.len() + 1;
        SurgeryLog { head: Some(Arc::new(LogNode { record, prev: self.head.clone(), len })) }
    }

    pub fn len(&self) -> usize {
        self.head.as_ref().map_or(0, |n| n.len)
    }

    pub fn is_empty(&self) -> bool {
        self.head.is_none()
    }

    /// Records in application order.
    pub fn records(&self) -> Vec<Surgery> {
        let mut out = Vec::with_capacity(self.len());
        let mut cur = self.head.as_ref();
        while let Some(node) = cur {
            out.push(node.record.clone());
            cur = node.prev.as_ref();
        }
        out.reverse();
        out
    }

    pub fn replay(&self, original: &PlaneGraph) -> Result<PlaneGraph, GraphError> {
        replay(original, &self.records())
    }
}

/// Applies `records` to `original` in order.
pub fn replay(original: &PlaneGraph, records: &[Surgery]) -> Result<PlaneGraph, GraphError> {
    let mut g = original.clone();
    for r in records {
        g = match r {
            Surgery::Contract { edge, survivor } => g.contract_edge(*edge, *survivor)?,
            Surgery::SuppressTwoVertex { vertex } => g.suppress_two_vertex(*vertex)?,
            Surgery::DeleteVertex { vertex } => g.delete_vertex(*vertex)?,
            Surgery::DeleteEdges { edges } => g.delete_edges(edges)?,
            Surgery::Quotient { cut, side, .. } => {
                let side: BTreeSet<VertexId> = side.iter().copied().collect();
                g.quotient_component([cut[0], cut[1]], &side)?.0
            }
            Surgery::Subdivide { edge, .. } => g.subdivide_edge(*edge)?.0,
            Surgery::KeepComponent { vertex } => g.component_of(*vertex)?,
            Surgery::AddEdge { corners, .. } => g.add_edge_in_face(corners[0], corners[1])?.0,
            Surgery::AddPendant { vertex, before, .. } => g.add_pendant(*vertex, *before)?.0,
            Surgery::SetOuter { dart } => {
                let mut h = g.clone();
                h.outer = *dart;
                h.log = g.log.push(r.clone());
                h
            }
        };
    }
    Ok(g)
}

/// Connected-or-not plane multigraph without loops.
#[derive(Clone, Debug)]
pub struct PlaneGraph {
    ends: BTreeMap<EdgeId, [VertexId; 2]>,
    rotation: BTreeMap<VertexId, Vec<EdgeId>>,
    outer: Option<Dart>,
    log: SurgeryLog,
}

impl PartialEq for PlaneGraph {
    /// Same vertices, edges, rotations and outer face; the log is ignored.
    fn eq(&self, other: &Self) -> bool {
        self.ends == other.ends
            && self.rotation == other.rotation
            && self.outer_face_edge_darts() == other.outer_face_edge_darts()
    }
}

impl PlaneGraph {
    /// Builds a graph from clockwise `(edge, neighbour)` lists, one per vertex.
    /// The outer face defaults to the first traced face.
    pub fn build_from_rotation(
        spec: &[(VertexId, Vec<(EdgeId, VertexId)>)],
    ) -> Result<PlaneGraph, GraphError> {
        let mut ends: BTreeMap<EdgeId, [VertexId; 2]> = BTreeMap::new();
        let mut seen: HashMap<EdgeId, Vec<(VertexId, VertexId)>> = HashMap::new();
        let mut rotation = BTreeMap::new();
        for (v, list) in spec {
            for &(e, w) in list {
                if w == *v {
                    return Err(GraphError::LoopPresent(e));
                }
                seen.entry(e).or_default().push((*v, w));
            }
            rotation.insert(*v, list.iter().map(|&(e, _)| e).collect::<Vec<_>>());
        }
        if rotation.len() != spec.len() {
            return Err(GraphError::NonSymmetric(EdgeId(u32::MAX)));
        }
        for (e, occ) in &seen {
            match occ.as_slice() {
                [(v1, w1), (v2, w2)] if v1 == w2 && v2 == w1 => {
                    if v1 == v2 {
                        return Err(GraphError::LoopPresent(*e));
                    }
                    ends.insert(*e, [*v1.min(v2), *v1.max(v2)]);
                }
                [(v1, w1), (v2, _)] if v1 == v2 && w1 == v1 => return Err(GraphError::LoopPresent(*e)),
                _ => return Err(GraphError::NonSymmetric(*e)),
            }
        }
        for w in seen.values().flat_map(|o| o.iter().map(|p| p.1)) {
            if !rotation.contains_key(&w) {
                return Err(GraphError::UnknownVertex(w));
            }
        }
        let mut g = PlaneGraph { ends, rotation, outer: None, log: SurgeryLog::default() };
        g.normalize();
        if !g.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let faces = g.faces();
        let expected = 2 + g.edge_count() - g.vertex_count();
        if faces.len() != expected {
            return Err(GraphError::EulerViolation { faces: faces.len(), expected });
        }
        g.outer = faces.first().and_then(|f| f.boundary.first().copied());
        Ok(g)
    }

    /// Unchecked constructor used by surgeries and embedders.
    pub(crate) fn from_parts(
        ends: BTreeMap<EdgeId, [VertexId; 2]>,
        rotation: BTreeMap<VertexId, Vec<EdgeId>>,
        outer: Option<Dart>,
    ) -> PlaneGraph {
        let mut g = PlaneGraph { ends, rotation, outer, log: SurgeryLog::default() };
        g.normalize();
        if g.outer.is_none_or(|d| !g.dart_valid(d)) {
            g.outer = g.first_dart();
        }
        g
    }

    fn normalize(&mut self) {
        for list in self.rotation.values_mut() {
            if let Some(pos) = list.iter().enumerate().min_by_key(|(_, e)| **e).map(|(i, _)| i) {
                list.rotate_left(pos);
            }
        }
        for en in self.ends.values_mut() {
            if en[0] > en[1] {
                en.swap(0, 1);
            }
        }
    }

    fn first_dart(&self) -> Option<Dart> {
        self.ends.iter().next().map(|(&e, en)| Dart { edge: e, tail: en[0] })
    }

    fn dart_valid(&self, d: Dart) -> bool {
        self.ends.get(&d.edge).is_some_and(|en| en.contains(&d.tail))
    }

    // ---------------------------------------------------------------- queries

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.ends.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.rotation.keys().copied()
    }

    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, [VertexId; 2])> + '_ {
        self.ends.iter().map(|(&e, &en)| (e, en))
    }

    pub fn edge_ids(&self) -> BTreeSet<EdgeId> {
        self.ends.keys().copied().collect()
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.rotation.contains_key(&v)
    }

    pub fn has_edge(&self, e: EdgeId) -> bool {
        self.ends.contains_key(&e)
    }

    pub fn endpoints(&self, e: EdgeId) -> Option<[VertexId; 2]> {
        self.ends.get(&e).copied()
    }

    /// Endpoint of `e` other than `v`. Panics if `e` is unknown.
    pub fn other_end(&self, e: EdgeId, v: VertexId) -> VertexId {
        let [a, b] = self.ends[&e];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rotation.get(&v).map_or(0, Vec::len)
    }

    /// Clockwise incident edges of `v` (starting at the smallest id).
    pub fn rotation(&self, v: VertexId) -> &[EdgeId] {
        self.rotation.get(&v).map_or(&[], Vec::as_slice)
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.rotation(v).iter().map(move |&e| self.other_end(e, v))
    }

    pub fn max_vertex_id(&self) -> Option<VertexId> {
        self.rotation.keys().next_back().copied()
    }

    pub fn max_edge_id(&self) -> Option<EdgeId> {
        self.ends.keys().next_back().copied()
    }

    pub fn edges_between(&self, u: VertexId, v: VertexId) -> Vec<EdgeId> {
        self.rotation(u).iter().copied().filter(|&e| self.other_end(e, u) == v).collect()
    }

    /// True when another edge joins the same two endpoints.
    pub fn is_parallel(&self, e: EdgeId) -> bool {
        let [a, b] = self.ends[&e];
        self.edges_between(a, b).len() > 1
    }

    pub fn has_parallel_edges(&self) -> bool {
        self.ends.keys().any(|&e| self.is_parallel(e))
    }

    pub fn log(&self) -> &SurgeryLog {
        &self.log
    }

    /// The dart identifying the outer face (`None` for an edgeless graph).
    pub fn outer_dart(&self) -> Option<Dart> {
        self.outer
    }

    pub fn head(&self, d: Dart) -> VertexId {
        self.other_end(d.edge, d.tail)
    }

    pub fn reverse(&self, d: Dart) -> Dart {
        Dart { edge: d.edge, tail: self.head(d) }
    }

    /// Next dart of the facial walk containing `d`.
    pub fn next_in_face(&self, d: Dart) -> Dart {
        let h = self.head(d);
        let rot = &self.rotation[&h];
        let pos = rot.iter().position(|&e| e == d.edge).expect("dart edge missing from rotation");
        Dart { edge: rot[(pos + 1) % rot.len()], tail: h }
    }

    /// Clockwise successor of `e` around `v`.
    pub fn succ_cw(&self, v: VertexId, e: EdgeId) -> EdgeId {
        let rot = &self.rotation[&v];
        let pos = rot.iter().position(|&x| x == e).expect("edge not at vertex");
        rot[(pos + 1) % rot.len()]
    }

    /// Clockwise predecessor of `e` around `v`.
    pub fn pred_cw(&self, v: VertexId, e: EdgeId) -> EdgeId {
        let rot = &self.rotation[&v];
        let pos = rot.iter().position(|&x| x == e).expect("edge not at vertex");
        rot[(pos + rot.len() - 1) % rot.len()]
    }

    pub fn darts(&self) -> impl Iterator<Item = Dart> + '_ {
        self.ends
            .iter()
            .flat_map(|(&e, en)| [Dart { edge: e, tail: en[0] }, Dart { edge: e, tail: en[1] }])
    }

    /// Facial walk starting at `d`.
    pub fn face_walk(&self, d: Dart) -> Vec<Dart> {
        let mut walk = vec![d];
        let mut cur = self.next_in_face(d);
        while cur != d {
            walk.push(cur);
            cur = self.next_in_face(cur);
        }
        walk
    }

    /// All faces, in a deterministic order: darts are visited by edge id,
    /// then faces of isolated vertices are appended.
    pub fn faces(&self) -> Vec<Face> {
        let mut seen: HashMap<Dart, ()> = HashMap::with_capacity(2 * self.edge_count());
        let mut faces = Vec::new();
        for d in self.darts() {
            if seen.contains_key(&d) {
                continue;
            }
            let walk = self.face_walk(d);
            for &x in &walk {
                seen.insert(x, ());
            }
            let distinct: BTreeSet<VertexId> = walk.iter().map(|x| x.tail).collect();
            let is_cycle = distinct.len() == walk.len();
            faces.push(Face { id: faces.len(), boundary: walk, is_cycle });
        }
        for (&v, rot) in &self.rotation {
            if rot.is_empty() {
                faces.push(Face { id: faces.len(), boundary: Vec::new(), is_cycle: false });
                let _ = v;
            }
        }
        faces
    }

    pub fn face_of_dart(&self, d: Dart) -> Face {
        Face { id: usize::MAX, is_cycle: false, boundary: self.face_walk(d) }
            .with_cycle_flag()
    }

    /// Index of the outer face within [`faces`](Self::faces).
    pub fn outer_face_id(&self) -> usize {
        match self.outer {
            None => 0,
            Some(d) => {
                self.faces().iter().position(|f| f.boundary.contains(&d)).expect("outer dart traced")
            }
        }
    }

    pub fn outer_face(&self) -> Face {
        match self.outer {
            None => Face { id: 0, boundary: Vec::new(), is_cycle: false },
            Some(d) => {
                let mut f = self.face_of_dart(d);
                f.id = self.outer_face_id();
                f
            }
        }
    }

    fn outer_face_edge_darts(&self) -> BTreeSet<Dart> {
        self.outer.map(|d| self.face_walk(d).into_iter().collect()).unwrap_or_default()
    }

    pub fn outer_boundary_edges(&self) -> BTreeSet<EdgeId> {
        self.outer.map(|d| self.face_walk(d).iter().map(|x| x.edge).collect()).unwrap_or_default()
    }

    pub fn outer_vertices(&self) -> BTreeSet<VertexId> {
        match self.outer {
            Some(d) => self.face_walk(d).iter().map(|x| x.tail).collect(),
            None => self.rotation.keys().copied().collect(),
        }
    }

    pub fn is_connected(&self) -> bool {
        match self.rotation.keys().next() {
            None => true,
            Some(&s) => self.reachable(s, &BTreeSet::new()).len() == self.vertex_count(),
        }
    }

    /// Vertices reachable from `s` avoiding the edges in `removed`.
    pub fn reachable(&self, s: VertexId, removed: &BTreeSet<EdgeId>) -> BTreeSet<VertexId> {
        let mut seen = BTreeSet::from([s]);
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &e in self.rotation(v) {
                if removed.contains(&e) {
                    continue;
                }
                let w = self.other_end(e, v);
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<BTreeSet<VertexId>> {
        let mut out = Vec::new();
        let mut done = BTreeSet::new();
        for v in self.vertices() {
            if done.contains(&v) {
                continue;
            }
            let comp = self.reachable(v, &BTreeSet::new());
            done.extend(comp.iter().copied());
            out.push(comp);
        }
        out
    }

    /// True for a connected 2-regular graph (including the 2-cycle).
    pub fn is_cycle(&self) -> bool {
        self.vertex_count() >= 2
            && self.rotation.values().all(|r| r.len() == 2)
            && self.is_connected()
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.vertex_count()
    }

    pub fn max_degree(&self) -> usize {
        self.rotation.values().map(Vec::len).max().unwrap_or(0)
    }

    // --------------------------------------------------------------- surgeries

    fn derived(
        &self,
        ends: BTreeMap<EdgeId, [VertexId; 2]>,
        rotation: BTreeMap<VertexId, Vec<EdgeId>>,
        record: Surgery,
        map_dart: impl Fn(Dart) -> Option<Dart>,
    ) -> PlaneGraph {
        let mut g = PlaneGraph { ends, rotation, outer: None, log: self.log.push(record) };
        g.normalize();
        if let Some(d0) = self.outer {
            for d in self.face_walk(d0) {
                if let Some(nd) = map_dart(d) {
                    if g.dart_valid(nd) {
                        g.outer = Some(nd);
                        break;
                    }
                }
            }
        }
        if g.outer.is_none() {
            g.outer = g.first_dart();
        }
        g
    }

    pub fn set_outer_face(&self, f: usize) -> Result<PlaneGraph, GraphError> {
        let faces = self.faces();
        let face = faces.get(f).ok_or(GraphError::UnknownFace(f))?;
        let dart = face.boundary.first().copied();
        let mut g = self.clone();
        g.outer = dart;
        g.log = self.log.push(Surgery::SetOuter { dart });
        Ok(g)
    }

    /// Re-roots so that the face on the given dart becomes the outer face.
    pub fn set_outer_dart(&self, d: Dart) -> Result<PlaneGraph, GraphError> {
        if !self.dart_valid(d) {
            return Err(GraphError::UnknownEdge(d.edge));
        }
        let mut g = self.clone();
        g.outer = Some(d);
        g.log = self.log.push(Surgery::SetOuter { dart: Some(d) });
        Ok(g)
    }

    /// Contracts `e` into `survivor`. Parallel edges created by the
    /// contraction are kept; contracting a parallel edge is refused.
    pub fn contract_edge(&self, e: EdgeId, survivor: VertexId) -> Result<PlaneGraph, GraphError> {
        let [a, b] = self.endpoints(e).ok_or(GraphError::UnknownEdge(e))?;
        if survivor != a && survivor != b {
            return Err(GraphError::NotAnEndpoint(survivor, e));
        }
        if self.is_parallel(e) {
            return Err(GraphError::ParallelEdgeContraction(e));
        }
        let s = survivor;
        let r = if s == a { b } else { a };
        Ok(self.contract_unchecked(e, s, r, Surgery::Contract { edge: e, survivor: s }))
    }

    fn contract_unchecked(&self, e: EdgeId, s: VertexId, r: VertexId, record: Surgery) -> PlaneGraph {
        let after = |v: VertexId| -> Vec<EdgeId> {
            let rot = &self.rotation[&v];
            let pos = rot.iter().position(|&x| x == e).unwrap();
            (1..rot.len()).map(|i| rot[(pos + i) % rot.len()]).collect()
        };
        let mut merged = after(s);
        let from_r = after(r);
        merged.extend(from_r.iter().copied());
        let mut rotation = self.rotation.clone();
        rotation.remove(&r);
        rotation.insert(s, merged);
        let mut ends = self.ends.clone();
        ends.remove(&e);
        for f in from_r {
            let en = ends.get_mut(&f).unwrap();
            for x in en.iter_mut() {
                if *x == r {
                    *x = s;
                }
            }
        }
        self.derived(ends, rotation, record, |d| {
            if d.edge == e {
                None
            } else if d.tail == r {
                Some(Dart { edge: d.edge, tail: s })
            } else {
                Some(d)
            }
        })
    }

    pub fn delete_vertex(&self, v: VertexId) -> Result<PlaneGraph, GraphError> {
        let rot = self.rotation.get(&v).ok_or(GraphError::UnknownVertex(v))?;
        let gone: BTreeSet<EdgeId> = rot.iter().copied().collect();
        let mut rotation = self.rotation.clone();
        rotation.remove(&v);
        for list in rotation.values_mut() {
            list.retain(|e| !gone.contains(e));
        }
        let mut ends = self.ends.clone();
        ends.retain(|e, _| !gone.contains(e));
        Ok(self.derived(ends, rotation, Surgery::DeleteVertex { vertex: v }, |d| {
            (!gone.contains(&d.edge)).then_some(d)
        }))
    }

    /// Deletes a set of edges; vertices are retained and the result may be
    /// disconnected.
    pub fn delete_edges(&self, edges: &[EdgeId]) -> Result<PlaneGraph, GraphError> {
        for &e in edges {
            if !self.has_edge(e) {
                return Err(GraphError::UnknownEdge(e));
            }
        }
        let gone: BTreeSet<EdgeId> = edges.iter().copied().collect();
        let mut rotation = self.rotation.clone();
        for list in rotation.values_mut() {
            list.retain(|e| !gone.contains(e));
        }
        let mut ends = self.ends.clone();
        ends.retain(|e, _| !gone.contains(e));
        let record = Surgery::DeleteEdges { edges: gone.iter().copied().collect() };
        Ok(self.derived(ends, rotation, record, |d| (!gone.contains(&d.edge)).then_some(d)))
    }

    /// Suppresses the 2-vertex `v`: its smaller-id edge is contracted into
    /// the neighbour at the far end, so `v` disappears.
    pub fn suppress_two_vertex(&self, v: VertexId) -> Result<PlaneGraph, GraphError> {
        let rot = self.rotation.get(&v).ok_or(GraphError::UnknownVertex(v))?;
        if rot.len() != 2 {
            return Err(GraphError::NotTwoVertex(v));
        }
        let (n0, n1) = (self.other_end(rot[0], v), self.other_end(rot[1], v));
        if n0 == n1 {
            return Err(GraphError::IdenticalNeighbours(v));
        }
        let e = rot[0].min(rot[1]);
        let s = self.other_end(e, v);
        if self.is_parallel(e) {
            return Err(GraphError::ParallelEdgeContraction(e));
        }
        Ok(self.contract_unchecked(e, s, v, Surgery::SuppressTwoVertex { vertex: v }))
    }

    /// Inserts a new 2-vertex into `e`. The half at the smaller endpoint
    /// keeps the id `e`; the other half gets a fresh id.
    pub fn subdivide_edge(&self, e: EdgeId) -> Result<(PlaneGraph, VertexId, EdgeId), GraphError> {
        let [a, b] = self.endpoints(e).ok_or(GraphError::UnknownEdge(e))?;
        let m = VertexId(self.max_vertex_id().map_or(0, |v| v.0 + 1));
        let f = EdgeId(self.max_edge_id().map_or(0, |x| x.0 + 1));
        let mut ends = self.ends.clone();
        ends.insert(e, [a, m]);
        ends.insert(f, [m, b]);
        let mut rotation = self.rotation.clone();
        for x in rotation.get_mut(&b).unwrap().iter_mut() {
            if *x == e {
                *x = f;
            }
        }
        rotation.insert(m, vec![e, f]);
        let record = Surgery::Subdivide { edge: e, vertex: m, new_edge: f };
        let g = self.derived(ends, rotation, record, |d| {
            Some(if d.edge == e && d.tail == b { Dart { edge: f, tail: b } } else { d })
        });
        Ok((g, m, f))
    }

    /// Replaces the component `side` of `G - cut` by a single vertex incident
    /// with both cut edges. The new vertex reuses the smallest id in `side`.
    pub fn quotient_component(
        &self,
        cut: [EdgeId; 2],
        side: &BTreeSet<VertexId>,
    ) -> Result<(PlaneGraph, VertexId), GraphError> {
        let [e1, e2] = cut;
        let not_cut = GraphError::NotACut(e1, e2);
        let (Some(en1), Some(en2)) = (self.endpoints(e1), self.endpoints(e2)) else {
            return Err(not_cut);
        };
        if e1 == e2 || !self.is_connected() {
            return Err(not_cut);
        }
        let removed = BTreeSet::from([e1, e2]);
        let start = en1[0];
        let comp_a = self.reachable(start, &removed);
        if comp_a.len() == self.vertex_count() {
            return Err(not_cut);
        }
        let comp_b = self.reachable(en1[1], &removed);
        if comp_a.len() + comp_b.len() != self.vertex_count() && !comp_b.contains(&start) {
            return Err(not_cut);
        }
        // Both edges must cross; otherwise the pair is not minimal.
        let crosses = |en: [VertexId; 2]| comp_a.contains(&en[0]) != comp_a.contains(&en[1]);
        if !crosses(en1) || !crosses(en2) || comp_a.len() + comp_b.len() != self.vertex_count() {
            return Err(not_cut);
        }
        if *side != comp_a && *side != comp_b {
            return Err(GraphError::NotAComponent);
        }
        let u = *side.iter().next().unwrap();
        let mut rotation = self.rotation.clone();
        rotation.retain(|v, _| !side.contains(v));
        rotation.insert(u, vec![e1, e2]);
        let mut ends = self.ends.clone();
        ends.retain(|e, en| *e == e1 || *e == e2 || !side.contains(&en[0]));
        for e in [e1, e2] {
            for x in ends.get_mut(&e).unwrap().iter_mut() {
                if side.contains(x) {
                    *x = u;
                }
            }
        }
        let record = Surgery::Quotient {
            cut,
            side: side.iter().copied().collect(),
            vertex: u,
        };
        let inner = |d: Dart| d.edge != e1 && d.edge != e2 && side.contains(&d.tail);
        let g = self.derived(ends, rotation, record, |d| {
            if inner(d) {
                None
            } else if side.contains(&d.tail) {
                Some(Dart { edge: d.edge, tail: u })
            } else {
                Some(d)
            }
        });
        Ok((g, u))
    }

    /// The component containing `v`, as a graph with the induced rotation.
    pub fn component_of(&self, v: VertexId) -> Result<PlaneGraph, GraphError> {
        if !self.has_vertex(v) {
            return Err(GraphError::UnknownVertex(v));
        }
        let comp = self.reachable(v, &BTreeSet::new());
        let mut rotation = self.rotation.clone();
        rotation.retain(|x, _| comp.contains(x));
        let mut ends = self.ends.clone();
        ends.retain(|_, en| comp.contains(&en[0]));
        Ok(self.derived(ends, rotation, Surgery::KeepComponent { vertex: v }, |d| {
            comp.contains(&d.tail).then_some(d)
        }))
    }

    /// Adds an edge between the tails of two darts of the same face. The new
    /// edge enters each rotation just before the dart's edge, splitting the
    /// face in two.
    pub fn add_edge_in_face(&self, at_v: Dart, at_w: Dart) -> Result<(PlaneGraph, EdgeId), GraphError> {
        for d in [at_v, at_w] {
            if !self.dart_valid(d) {
                return Err(GraphError::UnknownEdge(d.edge));
            }
        }
        let (v, w) = (at_v.tail, at_w.tail);
        if v == w {
            return Err(GraphError::LoopPresent(EdgeId(u32::MAX)));
        }
        if !self.face_walk(at_v).contains(&at_w) {
            return Err(GraphError::UnknownFace(usize::MAX));
        }
        let f = EdgeId(self.max_edge_id().map_or(0, |x| x.0 + 1));
        let mut rotation = self.rotation.clone();
        for d in [at_v, at_w] {
            let list = rotation.get_mut(&d.tail).unwrap();
            let pos = list.iter().position(|&x| x == d.edge).unwrap();
            list.insert(pos, f);
        }
        let mut ends = self.ends.clone();
        ends.insert(f, [v.min(w), v.max(w)]);
        let record = Surgery::AddEdge { corners: [at_v, at_w], edge: f };
        Ok((self.derived(ends, rotation, record, Some), f))
    }

    /// Hangs a new leaf off `v`, placing the edge just before `before` in
    /// the rotation (anywhere when `v` is isolated).
    pub fn add_pendant(
        &self,
        v: VertexId,
        before: Option<EdgeId>,
    ) -> Result<(PlaneGraph, VertexId, EdgeId), GraphError> {
        if !self.has_vertex(v) {
            return Err(GraphError::UnknownVertex(v));
        }
        let leaf = VertexId(self.max_vertex_id().map_or(0, |x| x.0 + 1));
        let f = EdgeId(self.max_edge_id().map_or(0, |x| x.0 + 1));
        let mut rotation = self.rotation.clone();
        let list = rotation.get_mut(&v).unwrap();
        match before {
            Some(b) => {
                let pos = list.iter().position(|&x| x == b).ok_or(GraphError::NotAnEndpoint(v, b))?;
                list.insert(pos, f);
            }
            None => list.push(f),
        }
        rotation.insert(leaf, vec![f]);
        let mut ends = self.ends.clone();
        ends.insert(f, [v.min(leaf), v.max(leaf)]);
        let record = Surgery::AddPendant { vertex: v, before, leaf, edge: f };
        Ok((self.derived(ends, rotation, record, Some), leaf, f))
    }

    /// Mirror image: every rotation reversed. Faces are the same edge sets.
    pub fn mirrored(&self) -> PlaneGraph {
        let mut rotation = self.rotation.clone();
        for list in rotation.values_mut() {
            list.reverse();
        }
        let outer = self.outer.map(|d| self.reverse(d));
        PlaneGraph::from_parts(self.ends.clone(), rotation, outer)
    }

    /// Clockwise `(edge, neighbour)` lists, the inverse of
    /// [`build_from_rotation`](Self::build_from_rotation).
    pub fn rotation_spec(&self) -> Vec<(VertexId, Vec<(EdgeId, VertexId)>)> {
        self.rotation
            .iter()
            .map(|(&v, rot)| (v, rot.iter().map(|&e| (e, self.other_end(e, v))).collect()))
            .collect()
    }

    /// Forgets the surgery history, making this graph a new origin.
    pub fn detached(&self) -> PlaneGraph {
        let mut g = self.clone();
        g.log = SurgeryLog::default();
        g
    }
}

impl Face {
    fn with_cycle_flag(mut self) -> Face {
        let distinct: BTreeSet<VertexId> = self.boundary.iter().map(|d| d.tail).collect();
        self.is_cycle = !self.boundary.is_empty() && distinct.len() == self.boundary.len();
        self
    }
}

/// Builds a plane graph from a straight-line drawing. Rotations are the
/// neighbours sorted clockwise by angle; the outer face is the face with
/// negative signed area. Edge `i` of `edges` gets id `i`.
pub fn from_drawing(coords: &[(f64, f64)], edges: &[(usize, usize)]) -> Result<PlaneGraph, GraphError> {
    let mut incident: Vec<Vec<(f64, EdgeId, VertexId)>> = vec![Vec::new(); coords.len()];
    for (i, &(a, b)) in edges.iter().enumerate() {
        let e = EdgeId(i as u32);
        let ang = |p: usize, q: usize| (coords[q].1 - coords[p].1).atan2(coords[q].0 - coords[p].0);
        incident[a].push((ang(a, b), e, VertexId(b as u32)));
        incident[b].push((ang(b, a), e, VertexId(a as u32)));
    }
    let spec: Vec<_> = incident
        .into_iter()
        .enumerate()
        .map(|(v, mut list)| {
            list.sort_by(|x, y| y.0.partial_cmp(&x.0).unwrap());
            (VertexId(v as u32), list.into_iter().map(|(_, e, w)| (e, w)).collect())
        })
        .collect();
    let g = PlaneGraph::build_from_rotation(&spec)?;
    let area = |f: &Face| -> f64 {
        f.boundary
            .iter()
            .map(|d| {
                let p = coords[d.tail.0 as usize];
                let q = coords[g.head(*d).0 as usize];
                p.0 * q.1 - q.0 * p.1
            })
            .sum()
    };
    let faces = g.faces();
    let outer = faces
        .iter()
        .min_by(|x, y| area(x).partial_cmp(&area(y)).unwrap())
        .map(|f| f.id)
        .unwrap_or(0);
    Ok(g.set_outer_face(outer)?.detached())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: u32) -> VertexId {
        VertexId(i)
    }
    fn e(i: u32) -> EdgeId {
        EdgeId(i)
    }

    /// C_n with vertex i joined to i+1 by edge i.
    fn cycle(n: u32) -> PlaneGraph {
        let spec: Vec<_> = (0..n)
            .map(|i| {
                let prev = (i + n - 1) % n;
                (v(i), vec![(e(i), v((i + 1) % n)), (e(prev), v(prev))])
            })
            .collect();
        PlaneGraph::build_from_rotation(&spec).unwrap()
    }

    fn k4() -> PlaneGraph {
        from_drawing(
            &[(0.0, 0.0), (0.0, 2.0), (2.0, -1.0), (-2.0, -1.0)],
            &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)],
        )
        .unwrap()
    }

    fn theta() -> PlaneGraph {
        PlaneGraph::build_from_rotation(&[
            (v(0), vec![(e(0), v(1)), (e(1), v(1)), (e(2), v(1))]),
            (v(1), vec![(e(2), v(0)), (e(1), v(0)), (e(0), v(0))]),
        ])
        .unwrap()
    }

    #[test]
    fn c4_has_two_faces() {
        let g = cycle(4);
        assert_eq!((g.vertex_count(), g.edge_count(), g.faces().len()), (4, 4, 2));
        assert!(g.faces().iter().all(|f| f.is_cycle && f.boundary.len() == 4));
    }

    #[test]
    fn k4_has_four_faces() {
        assert_eq!(k4().faces().len(), 4);
    }

    #[test]
    fn theta_has_three_faces() {
        assert_eq!(theta().faces().len(), 3);
    }

    #[test]
    fn swapped_k4_rotation_is_rejected() {
        let mut spec = k4().rotation_spec();
        spec[0].1.swap(0, 1);
        match PlaneGraph::build_from_rotation(&spec) {
            Err(GraphError::EulerViolation { faces, expected }) => {
                assert_eq!(expected, 4);
                assert_eq!(faces, 2);
            }
            other => panic!("expected EulerViolation, got {other:?}"),
        }
    }

    #[test]
    fn build_errors() {
        let loop_spec = vec![(v(0), vec![(e(0), v(0))])];
        assert!(matches!(PlaneGraph::build_from_rotation(&loop_spec), Err(GraphError::LoopPresent(_))));
        let asym = vec![(v(0), vec![(e(0), v(1))]), (v(1), vec![(e(1), v(0))])];
        assert!(matches!(PlaneGraph::build_from_rotation(&asym), Err(GraphError::NonSymmetric(_))));
        let disc = vec![
            (v(0), vec![(e(0), v(1))]),
            (v(1), vec![(e(0), v(0))]),
            (v(2), vec![(e(1), v(3))]),
            (v(3), vec![(e(1), v(2))]),
        ];
        assert_eq!(PlaneGraph::build_from_rotation(&disc).unwrap_err(), GraphError::Disconnected);
    }

    #[test]
    fn drawing_puts_outer_face_outside() {
        // K4 drawn with vertex 0 in the middle: outer face avoids vertex 0.
        let g = k4();
        assert!(!g.outer_vertices().contains(&v(0)));
        assert_eq!(g.outer_boundary_edges(), BTreeSet::from([e(3), e(4), e(5)]));
    }

    #[test]
    fn set_outer_face_roundtrip() {
        let g = cycle(4);
        let inner = 1 - g.outer_face_id();
        let h = g.set_outer_face(inner).unwrap();
        assert_eq!(h.outer_face_id(), inner);
        assert_eq!(h.outer_boundary_edges().len(), 4);
        assert_eq!(g.faces(), h.faces());
        assert_eq!(g.set_outer_face(7).unwrap_err(), GraphError::UnknownFace(7));
    }

    #[test]
    fn contraction_of_c4_gives_c3() {
        let h = cycle(4).contract_edge(e(0), v(0)).unwrap();
        assert!(h.is_cycle());
        assert_eq!((h.vertex_count(), h.edge_count(), h.faces().len()), (3, 3, 2));
        assert!(h.has_edge(e(1)) && !h.has_edge(e(0)));
        assert_eq!(h.endpoints(e(1)), Some([v(0), v(2)]));
    }

    #[test]
    fn parallel_contraction_refused() {
        assert_eq!(theta().contract_edge(e(1), v(0)).unwrap_err(), GraphError::ParallelEdgeContraction(e(1)));
        assert_eq!(cycle(4).contract_edge(e(9), v(0)).unwrap_err(), GraphError::UnknownEdge(e(9)));
    }

    #[test]
    fn contraction_keeps_parallel_edges() {
        // Contracting a triangle edge of K4 yields a multigraph.
        let h = k4().contract_edge(e(3), v(1)).unwrap();
        assert!(h.has_parallel_edges());
        assert_eq!(h.vertex_count() + h.faces().len(), h.edge_count() + 2);
    }

    #[test]
    fn deletions() {
        let p4 = cycle(4).delete_edges(&[e(0)]).unwrap();
        assert!(p4.is_tree());
        let star = k4().delete_edges(&[e(3), e(4), e(5)]).unwrap();
        assert!(star.is_connected());
        assert_eq!(star.degree(v(0)), 3);
        let k = k4().delete_vertex(v(0)).unwrap();
        assert!(k.is_cycle());
        assert_eq!(k4().delete_vertex(v(9)).unwrap_err(), GraphError::UnknownVertex(v(9)));
    }

    #[test]
    fn suppression() {
        let c3 = cycle(4).suppress_two_vertex(v(2)).unwrap();
        assert!(c3.is_cycle() && c3.vertex_count() == 3 && !c3.has_vertex(v(2)));
        let two = PlaneGraph::build_from_rotation(&[
            (v(0), vec![(e(0), v(1)), (e(1), v(1))]),
            (v(1), vec![(e(1), v(0)), (e(0), v(0))]),
        ])
        .unwrap();
        assert_eq!(two.suppress_two_vertex(v(0)).unwrap_err(), GraphError::IdenticalNeighbours(v(0)));
        assert_eq!(k4().suppress_two_vertex(v(0)).unwrap_err(), GraphError::NotTwoVertex(v(0)));
        let (x, m, _) = theta().subdivide_edge(e(0)).unwrap();
        let back = x.suppress_two_vertex(m).unwrap();
        assert_eq!((back.vertex_count(), back.edge_count(), back.faces().len()), (2, 3, 3));
    }

    #[test]
    fn quotient_of_c4_side() {
        let g = cycle(4);
        // Removing edges 0 (0-1) and 2 (2-3) leaves {1,2} and {3,0}.
        let (h, u) = g.quotient_component([e(0), e(2)], &BTreeSet::from([v(1), v(2)])).unwrap();
        assert_eq!(u, v(1));
        assert!(h.is_cycle());
        assert_eq!((h.vertex_count(), h.edge_count()), (3, 3));
        assert_eq!(h.vertex_count() + h.faces().len(), h.edge_count() + 2);
        assert_eq!(
            g.quotient_component([e(0), e(1)], &BTreeSet::from([v(1)])).unwrap().0.vertex_count(),
            4
        );
        assert!(matches!(
            k4().quotient_component([e(0), e(1)], &BTreeSet::from([v(0)])),
            Err(GraphError::NotACut(..))
        ));
        assert_eq!(
            g.quotient_component([e(0), e(2)], &BTreeSet::from([v(1)])).unwrap_err(),
            GraphError::NotAComponent
        );
    }

    #[test]
    fn log_replay_reproduces_derived_graph() {
        let g = k4();
        let h = g
            .contract_edge(e(0), v(0))
            .unwrap()
            .delete_edges(&[e(4)])
            .unwrap()
            .subdivide_edge(e(1))
            .unwrap()
            .0;
        assert_eq!(h.log().len(), 3);
        assert_eq!(h.log().replay(&g).unwrap(), h);
    }

    #[test]
    fn mirror_preserves_face_edge_sets() {
        let g = k4();
        let a: BTreeSet<_> = g.faces().iter().map(Face::edges).collect();
        let b: BTreeSet<_> = g.mirrored().faces().iter().map(Face::edges).collect();
        assert_eq!(a, b);
        assert_eq!(g.mirrored().outer_boundary_edges(), g.outer_boundary_edges());
    }
}
