//! Forest + matching decompositions with prescribed edges, the bridge
//! induction on top of them, cycle peeling for the tree + 2-regular +
//! matching split, and the gadget reduction between the two problems.
//!
//! All recursion works on derived [`PlaneGraph`] values whose edge ids are
//! those of the input, so lifting a decomposition back is a matter of set
//! arithmetic on ids.

mod gadget;
mod theorem;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classes::{self, Witness};
use crate::connectivity;
use crate::plane_graph::{EdgeId, PlaneGraph, Surgery, VertexId};

pub use gadget::{gadget_expand, gadget_extract, Attachment, GadgetMap};
pub use theorem::CutSplit;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoDecomposition {
    pub forest: BTreeSet<EdgeId>,
    pub matching: BTreeSet<EdgeId>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreeDecomposition {
    pub tree: BTreeSet<EdgeId>,
    pub two_regular: BTreeSet<EdgeId>,
    pub matching: BTreeSet<EdgeId>,
}

/// Prescribed edges on the outer boundary.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PrescribedSet {
    pub edges: BTreeSet<EdgeId>,
}

impl PrescribedSet {
    pub fn new(edges: impl IntoIterator<Item = EdgeId>) -> Self {
        PrescribedSet { edges: edges.into_iter().collect() }
    }

    /// The (2,3)-edges among the prescribed ones.
    pub fn b23(&self, g: &PlaneGraph) -> BTreeSet<EdgeId> {
        classes::b23(g, &self.edges)
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseBContext {
    pub v: VertexId,
    pub w: VertexId,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DecomposeError {
    #[error("precondition violated: {reason}")]
    PreconditionViolated { reason: String, witness: Option<Witness> },
    #[error("internal assertion failed: {message}")]
    InternalAssertion { message: String, log: Vec<Surgery> },
    #[error("input graph is not planar")]
    NonPlanarInput,
    #[error("input graph is disconnected")]
    Disconnected,
    #[error("vertex {0} has a degree outside the allowed range")]
    BadDegrees(VertexId),
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),
}

pub(crate) fn precondition(reason: impl Into<String>, witness: Option<Witness>) -> DecomposeError {
    DecomposeError::PreconditionViolated { reason: reason.into(), witness }
}

/// Knobs shared by the recursive solvers.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Options {
    /// Re-check the hypotheses of every recursive call and the validity of
    /// every lifted decomposition.
    pub validate: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options { validate: cfg!(debug_assertions) }
    }
}

/// Lifts a decomposition of `H/e` (contracted into the 2-vertex end of `e`)
/// to `H`: `e` joins the forest and the matching is the rest of `E(H)`.
pub fn lift_contraction(
    h: &PlaneGraph,
    d: &TwoDecomposition,
    e: EdgeId,
) -> Result<TwoDecomposition, DecomposeError> {
    let [r, s] = h.endpoints(e).ok_or_else(|| precondition(format!("unknown edge {e}"), None))?;
    if h.degree(r) != 2 && h.degree(s) != 2 {
        return Err(precondition("contracted edge has no 2-vertex end", None));
    }
    let mut forest = d.forest.clone();
    forest.insert(e);
    let matching: BTreeSet<EdgeId> = h.edge_ids().difference(&forest).copied().collect();
    let out = TwoDecomposition { forest, matching };
    let rep = crate::verify::check_2d(h, &out, None);
    if !rep.ok {
        return Err(DecomposeError::InternalAssertion {
            message: format!("lifted decomposition invalid: {:?}", rep.violations),
            log: h.log().records(),
        });
    }
    Ok(out)
}

/// A decomposition whose forest contains `b`, under the hypotheses of
/// either case: `ctx` absent means `g` is cyclically 3-edge-connected with
/// at most one prescribed (2,3)-edge; `ctx = (v, w)` selects the cut case.
pub fn b_two_decompose(
    g: &PlaneGraph,
    b: &PrescribedSet,
    ctx: Option<CaseBContext>,
) -> Result<TwoDecomposition, DecomposeError> {
    b_two_decompose_with(g, b, ctx, Options::default())
}

pub fn b_two_decompose_with(
    g: &PlaneGraph,
    b: &PrescribedSet,
    ctx: Option<CaseBContext>,
    opts: Options,
) -> Result<TwoDecomposition, DecomposeError> {
    let g = g.detached();
    let s = theorem::Solver::new(opts);
    // Entry hypotheses are always checked: they are user input.
    let entry = theorem::Solver::new(Options { validate: true });
    match ctx {
        None => entry.check_case_a(&g, &b.edges, 0)?,
        Some(c) => entry.check_case_b(&g, &b.edges, c.v, c.w, 0)?,
    }
    match ctx {
        None => s.case_a(&g, &b.edges, 0),
        Some(c) => s.case_b(&g, &b.edges, c.v, c.w, 0),
    }
}

/// A decomposition whose forest contains `e`, for 2-edge-connected `g` in
/// which every cycle is separating.
pub fn e_two_decompose(g: &PlaneGraph, e: EdgeId) -> Result<TwoDecomposition, DecomposeError> {
    e_two_decompose_with(g, e, Options::default())
}

pub fn e_two_decompose_with(g: &PlaneGraph, e: EdgeId, opts: Options) -> Result<TwoDecomposition, DecomposeError> {
    let g = g.detached();
    if !g.has_edge(e) {
        return Err(precondition(format!("unknown edge {e}"), None));
    }
    if !connectivity::is_two_edge_connected(&g) {
        return Err(precondition("graph is not 2-edge-connected", None));
    }
    if let Some(v) = g.vertices().find(|&v| g.degree(v) > 3) {
        return Err(DecomposeError::BadDegrees(v));
    }
    if let Some(z) = classes::find_nonseparating_cycle(&g) {
        return Err(precondition("graph has a non-separating cycle", Some(Witness::NonSeparatingCycle(z))));
    }
    theorem::Solver::new(opts).corollary(&g, e, 0)
}

/// Spanning tree + matching for a connected subcubic plane graph in which
/// every cycle is separating.
pub fn two_decompose(g: &PlaneGraph) -> Result<TwoDecomposition, DecomposeError> {
    two_decompose_with(g, Options::default())
}

pub fn two_decompose_with(g: &PlaneGraph, opts: Options) -> Result<TwoDecomposition, DecomposeError> {
    let g = g.detached();
    if !g.is_connected() {
        return Err(DecomposeError::Disconnected);
    }
    if let Some(v) = g.vertices().find(|&v| g.degree(v) > 3) {
        return Err(DecomposeError::BadDegrees(v));
    }
    if let Some(z) = classes::find_nonseparating_cycle(&g) {
        return Err(precondition("graph has a non-separating cycle", Some(Witness::NonSeparatingCycle(z))));
    }
    let solver = theorem::Solver::new(opts);
    let mut forest = connectivity::bridges(&g);
    let mut matching = BTreeSet::new();
    for piece in classes::two_edge_connected_pieces(&g) {
        if piece.edge_count() == 0 {
            continue;
        }
        let d = if piece.is_cycle() {
            theorem::solve_cycle(&piece, &BTreeSet::new())
                .ok_or_else(|| solver.bug(&piece, "cycle piece without a free edge"))?
        } else {
            solver.corollary(&piece, preferred_edge(&piece), 0)?
        };
        forest.extend(d.forest);
        matching.extend(d.matching);
    }
    let d = extend_to_spanning_tree(&g, TwoDecomposition { forest, matching });
    if opts.validate {
        let rep = crate::verify::check_2d(&g, &d, None);
        if !rep.ok || !crate::verify::is_spanning_tree(&g, &d.forest) {
            return Err(solver.bug(&g, &format!("final decomposition invalid: {:?}", rep.violations)));
        }
    }
    Ok(d)
}

/// Smallest (2,3)-edge on the outer boundary, else any (2,3)-edge, else
/// the smallest edge.
fn preferred_edge(g: &PlaneGraph) -> EdgeId {
    let all = g.edge_ids();
    let b23 = classes::b23(g, &all);
    let outer = g.outer_boundary_edges();
    b23.intersection(&outer)
        .next()
        .or_else(|| b23.iter().next())
        .or_else(|| all.iter().next())
        .copied()
        .expect("piece has edges")
}

/// Moves matching edges joining different forest components into the
/// forest, which makes the forest a spanning tree of a connected graph.
fn extend_to_spanning_tree(g: &PlaneGraph, d: TwoDecomposition) -> TwoDecomposition {
    let index: std::collections::BTreeMap<VertexId, usize> =
        g.vertices().enumerate().map(|(i, v)| (v, i)).collect();
    let mut parent: Vec<usize> = (0..index.len()).collect();
    fn root(p: &mut [usize], mut v: usize) -> usize {
        while p[v] != v {
            p[v] = p[p[v]];
            v = p[v];
        }
        v
    }
    for &e in &d.forest {
        let [a, b] = g.endpoints(e).unwrap();
        let (ra, rb) = (root(&mut parent, index[&a]), root(&mut parent, index[&b]));
        parent[ra] = rb;
    }
    let TwoDecomposition { mut forest, mut matching } = d;
    for e in matching.clone() {
        let [a, b] = g.endpoints(e).unwrap();
        let (ra, rb) = (root(&mut parent, index[&a]), root(&mut parent, index[&b]));
        if ra != rb {
            parent[ra] = rb;
            forest.insert(e);
            matching.remove(&e);
        }
    }
    TwoDecomposition { forest, matching }
}

/// Spanning tree + 2-regular subgraph + matching for any connected
/// subcubic plane graph: non-separating cycles are peeled off until none is
/// left and the remainder is split into tree and matching.
pub fn three_decompose(g: &PlaneGraph) -> Result<ThreeDecomposition, DecomposeError> {
    three_decompose_with(g, Options::default())
}

pub fn three_decompose_with(g: &PlaneGraph, opts: Options) -> Result<ThreeDecomposition, DecomposeError> {
    let g = g.detached();
    if !g.is_connected() {
        return Err(DecomposeError::Disconnected);
    }
    if let Some(v) = g.vertices().find(|&v| g.degree(v) > 3) {
        return Err(DecomposeError::BadDegrees(v));
    }
    let mut rest = g.clone();
    let mut two_regular = BTreeSet::new();
    while let Some(z) = classes::find_nonseparating_cycle(&rest) {
        rest = rest.delete_edges(&z).expect("cycle edges exist");
        debug_assert!(rest.is_connected(), "peeling keeps the graph connected");
        two_regular.extend(z);
    }
    let d = two_decompose_with(&rest, opts)?;
    let out = ThreeDecomposition { tree: d.forest, two_regular, matching: d.matching };
    if opts.validate {
        let rep = crate::verify::check_3d(&g, &out);
        if !rep.ok {
            return Err(DecomposeError::InternalAssertion {
                message: format!("three-way split invalid: {:?}", rep.violations),
                log: rest.log().records(),
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::verify::{check_2d, check_3d, is_spanning_tree, oracle_b2d};

    #[test]
    fn lift_over_c4() {
        let c4 = generators::cycle(4).unwrap();
        let c3 = c4.contract_edge(EdgeId(0), VertexId(0)).unwrap();
        let d = TwoDecomposition {
            forest: BTreeSet::from([EdgeId(1), EdgeId(2)]),
            matching: BTreeSet::from([EdgeId(3)]),
        };
        assert!(check_2d(&c3, &d, None).ok);
        let up = lift_contraction(&c4, &d, EdgeId(0)).unwrap();
        assert!(is_spanning_tree(&c4, &up.forest));
    }

    #[test]
    fn lift_over_k4sd6_oracle() {
        let h = generators::k4sd6();
        for e in h.edge_ids() {
            let [p, q] = h.endpoints(e).unwrap();
            let r = if h.degree(p) == 2 { p } else { q };
            let small = h.contract_edge(e, r).unwrap();
            let d = oracle_b2d(&small, &BTreeSet::new()).unwrap().unwrap();
            let up = lift_contraction(&h, &d, e).unwrap();
            assert!(check_2d(&h, &up, Some(&BTreeSet::from([e]))).ok);
        }
    }

    #[test]
    fn special_and_frame_paths() {
        let k = generators::k4sd6();
        let outer = k.outer_boundary_edges();
        let b = PrescribedSet::new([*outer.iter().next().unwrap()]);
        let d = b_two_decompose(&k, &b, None).unwrap();
        assert!(check_2d(&k, &d, Some(&b.edges)).ok);
        let c = generators::cubesd4();
        for &e in &c.outer_boundary_edges() {
            let b = PrescribedSet::new([e]);
            let d = b_two_decompose(&c, &b, None).unwrap();
            assert!(check_2d(&c, &d, Some(&b.edges)).ok);
        }
    }

    #[test]
    fn bitriangle_is_rejected_by_case_a_but_has_an_e_decomposition() {
        let bt = generators::bitriangle();
        assert!(matches!(
            b_two_decompose(&bt, &PrescribedSet::default(), None),
            Err(DecomposeError::PreconditionViolated { .. })
        ));
        let d = e_two_decompose(&bt, EdgeId(2)).unwrap();
        assert!(check_2d(&bt, &d, Some(&BTreeSet::from([EdgeId(2)]))).ok);
        let c5 = generators::cycle(5).unwrap();
        let d = e_two_decompose(&c5, EdgeId(3)).unwrap();
        assert!(d.forest.contains(&EdgeId(3)) && d.matching.len() == 1);
        let c = generators::cubesd4();
        let e33 = c
            .edge_ids()
            .into_iter()
            .find(|&e| c.endpoints(e).unwrap().iter().all(|&v| c.degree(v) == 3))
            .unwrap();
        let d = e_two_decompose(&c, e33).unwrap();
        assert!(check_2d(&c, &d, Some(&BTreeSet::from([e33]))).ok);
    }

    #[test]
    fn two_decompose_examples() {
        let c4 = generators::cycle(4).unwrap();
        let d = two_decompose(&c4).unwrap();
        assert_eq!((d.forest.len(), d.matching.len()), (3, 1));
        let open = generators::cube().delete_edges(&[EdgeId(4), EdgeId(5), EdgeId(6), EdgeId(7)]).unwrap();
        let d = two_decompose(&open).unwrap();
        assert_eq!((d.forest.len(), d.matching.len()), (7, 1));
        assert!(d.matching.iter().all(|e| e.0 < 4));
        let tree = generators::random_connected_subcubic(9, 3).unwrap();
        let tree = tree.delete_edges(&[]).unwrap();
        if tree.is_tree() {
            assert!(two_decompose(&tree).unwrap().matching.is_empty());
        }
        match two_decompose(&generators::cube()) {
            Err(DecomposeError::PreconditionViolated { witness: Some(Witness::NonSeparatingCycle(z)), .. }) => {
                assert_eq!(z.len(), 4)
            }
            other => panic!("expected witness, got {other:?}"),
        }
    }

    #[test]
    fn three_decompose_examples() {
        let k4 = generators::k4();
        let d = three_decompose(&k4).unwrap();
        assert!(check_3d(&k4, &d).ok);
        assert_eq!((d.tree.len(), d.two_regular.len(), d.matching.len()), (3, 3, 0));
        let cube = generators::cube();
        let d = three_decompose(&cube).unwrap();
        assert!(check_3d(&cube, &d).ok);
        assert_eq!((d.tree.len(), d.two_regular.len(), d.matching.len()), (7, 4, 1));
        let k = generators::k4sd6();
        let d = three_decompose(&k).unwrap();
        assert!(d.two_regular.is_empty() && check_3d(&k, &d).ok);
    }
}
