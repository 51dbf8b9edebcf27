//! Checkers and exhaustive oracles. Nothing here calls into the decomposition
//! code, so the two can vouch for each other.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::decompose::{ThreeDecomposition, TwoDecomposition};
use crate::plane_graph::{EdgeId, PlaneGraph, VertexId};

pub const B2D_BUDGET: usize = 14;
pub const SEP_BUDGET: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {0} vertices, above the oracle budget of {1}")]
    BudgetExceeded(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    UnknownEdge,
    NotAPartition,
    ForestHasCycle,
    NotAMatching,
    NotSpanning,
    PrescribedNotInForest,
    NotTwoRegular,
    EdgeCount,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub edges: Vec<EdgeId>,
    pub vertices: Vec<VertexId>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl CheckReport {
    fn push(&mut self, kind: ViolationKind, edges: Vec<EdgeId>, vertices: Vec<VertexId>) {
        self.violations.push(Violation { kind, edges, vertices });
    }

    fn finish(mut self) -> Self {
        self.ok = self.violations.is_empty();
        self
    }
}

/// Union-find over vertex ids.
struct Dsu {
    parent: BTreeMap<VertexId, VertexId>,
}

impl Dsu {
    fn new(vs: impl Iterator<Item = VertexId>) -> Self {
        Dsu { parent: vs.map(|v| (v, v)).collect() }
    }

    fn find(&mut self, v: VertexId) -> VertexId {
        let mut r = v;
        while self.parent[&r] != r {
            r = self.parent[&r];
        }
        let mut c = v;
        while self.parent[&c] != r {
            let n = self.parent[&c];
            self.parent.insert(c, r);
            c = n;
        }
        r
    }

    fn union(&mut self, a: VertexId, b: VertexId) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent.insert(ra, rb);
        true
    }
}

fn check_ids(g: &PlaneGraph, parts: &[&BTreeSet<EdgeId>], rep: &mut CheckReport) {
    let mut seen: BTreeMap<EdgeId, usize> = BTreeMap::new();
    for p in parts {
        for &e in p.iter() {
            *seen.entry(e).or_default() += 1;
        }
    }
    let unknown: Vec<EdgeId> = seen.keys().copied().filter(|&e| !g.has_edge(e)).collect();
    if !unknown.is_empty() {
        rep.push(ViolationKind::UnknownEdge, unknown, vec![]);
    }
    let twice: Vec<EdgeId> = seen.iter().filter(|(_, &c)| c > 1).map(|(&e, _)| e).collect();
    let missing: Vec<EdgeId> = g.edges().map(|(e, _)| e).filter(|e| !seen.contains_key(e)).collect();
    if !twice.is_empty() || !missing.is_empty() {
        rep.push(ViolationKind::NotAPartition, [twice, missing].concat(), vec![]);
    }
}

fn check_forest(g: &PlaneGraph, forest: &BTreeSet<EdgeId>, rep: &mut CheckReport) -> usize {
    let mut dsu = Dsu::new(g.vertices());
    let mut bad = Vec::new();
    let mut merged = 0;
    for &e in forest {
        if let Some([a, b]) = g.endpoints(e) {
            if dsu.union(a, b) {
                merged += 1;
            } else {
                bad.push(e);
            }
        }
    }
    if !bad.is_empty() {
        rep.push(ViolationKind::ForestHasCycle, bad, vec![]);
    }
    merged
}

fn check_matching(g: &PlaneGraph, m: &BTreeSet<EdgeId>, rep: &mut CheckReport) {
    let mut used: BTreeMap<VertexId, EdgeId> = BTreeMap::new();
    let mut clash = BTreeSet::new();
    let mut at = BTreeSet::new();
    for &e in m {
        if let Some(en) = g.endpoints(e) {
            for v in en {
                if let Some(&f) = used.get(&v) {
                    clash.insert(e);
                    clash.insert(f);
                    at.insert(v);
                } else {
                    used.insert(v, e);
                }
            }
        }
    }
    if !clash.is_empty() {
        rep.push(ViolationKind::NotAMatching, clash.into_iter().collect(), at.into_iter().collect());
    }
}

/// Checks a forest + matching decomposition, and `b` inside the forest when
/// given. If the forest has `|V| - 1` edges it must also span.
pub fn check_2d(g: &PlaneGraph, d: &TwoDecomposition, b: Option<&BTreeSet<EdgeId>>) -> CheckReport {
    let mut rep = CheckReport::default();
    check_ids(g, &[&d.forest, &d.matching], &mut rep);
    let merged = check_forest(g, &d.forest, &mut rep);
    if d.forest.len() + 1 == g.vertex_count() && merged != d.forest.len() && g.is_connected() {
        rep.push(ViolationKind::NotSpanning, vec![], vec![]);
    }
    check_matching(g, &d.matching, &mut rep);
    if let Some(b) = b {
        let out: Vec<EdgeId> = b.iter().copied().filter(|e| !d.forest.contains(e)).collect();
        if !out.is_empty() {
            rep.push(ViolationKind::PrescribedNotInForest, out, vec![]);
        }
    }
    rep.finish()
}

/// True when the forest of `d` is a spanning tree of connected `g`.
pub fn is_spanning_tree(g: &PlaneGraph, forest: &BTreeSet<EdgeId>) -> bool {
    let mut rep = CheckReport::default();
    check_forest(g, forest, &mut rep) + 1 == g.vertex_count() && rep.violations.is_empty()
}

pub fn check_3d(g: &PlaneGraph, d: &ThreeDecomposition) -> CheckReport {
    let mut rep = CheckReport::default();
    check_ids(g, &[&d.tree, &d.two_regular, &d.matching], &mut rep);
    let merged = check_forest(g, &d.tree, &mut rep);
    if merged + 1 != g.vertex_count() {
        rep.push(ViolationKind::NotSpanning, vec![], vec![]);
    }
    let mut deg: BTreeMap<VertexId, usize> = BTreeMap::new();
    for &e in &d.two_regular {
        if let Some(en) = g.endpoints(e) {
            for v in en {
                *deg.entry(v).or_default() += 1;
            }
        }
    }
    let odd: Vec<VertexId> = deg.iter().filter(|(_, &k)| k != 2).map(|(&v, _)| v).collect();
    if !odd.is_empty() {
        rep.push(ViolationKind::NotTwoRegular, vec![], odd);
    }
    check_matching(g, &d.matching, &mut rep);
    let expected = g.edge_count() as i64 - (g.vertex_count() as i64 - 1) - d.two_regular.len() as i64;
    if d.matching.len() as i64 != expected {
        rep.push(ViolationKind::EdgeCount, vec![], vec![]);
    }
    rep.finish()
}

/// Exhaustive search for a forest containing `b` whose complement is a
/// matching. Edges are decided one at a time (forest or matching) with
/// union-find and matching conflicts pruning the branches.
pub fn oracle_b2d(g: &PlaneGraph, b: &BTreeSet<EdgeId>) -> Result<Option<TwoDecomposition>, OracleError> {
    let n = g.vertex_count();
    if n > B2D_BUDGET {
        return Err(OracleError::BudgetExceeded(n, B2D_BUDGET));
    }
    let index: BTreeMap<VertexId, usize> = g.vertices().enumerate().map(|(i, v)| (v, i)).collect();
    // Prescribed edges first so conflicts surface early.
    let mut edges: Vec<(EdgeId, usize, usize)> =
        g.edges().map(|(e, [a, c])| (e, index[&a], index[&c])).collect();
    edges.sort_by_key(|(e, _, _)| (!b.contains(e), *e));
    struct Search<'a> {
        edges: &'a [(EdgeId, usize, usize)],
        b: &'a BTreeSet<EdgeId>,
        parent: Vec<usize>,
        matched: Vec<bool>,
        forest: Vec<EdgeId>,
        matching: Vec<EdgeId>,
    }
    fn root(p: &[usize], mut v: usize) -> usize {
        while p[v] != v {
            v = p[v];
        }
        v
    }
    impl Search<'_> {
        fn go(&mut self, i: usize) -> bool {
            if i == self.edges.len() {
                return true;
            }
            let (e, a, c) = self.edges[i];
            let (ra, rc) = (root(&self.parent, a), root(&self.parent, c));
            if ra != rc {
                self.parent[ra] = rc;
                self.forest.push(e);
                if self.go(i + 1) {
                    return true;
                }
                self.forest.pop();
                self.parent[ra] = ra;
            }
            if !self.b.contains(&e) && !self.matched[a] && !self.matched[c] {
                self.matched[a] = true;
                self.matched[c] = true;
                self.matching.push(e);
                if self.go(i + 1) {
                    return true;
                }
                self.matching.pop();
                self.matched[a] = false;
                self.matched[c] = false;
            }
            false
        }
    }
    // More edges than a spanning forest plus a perfect matching can hold.
    if g.edge_count() > n.saturating_sub(1) + n / 2 {
        return Ok(None);
    }
    let mut s = Search {
        edges: &edges,
        b,
        parent: (0..n).collect(),
        matched: vec![false; n],
        forest: Vec::new(),
        matching: Vec::new(),
    };
    if s.go(0) {
        Ok(Some(TwoDecomposition {
            forest: s.forest.into_iter().collect(),
            matching: s.matching.into_iter().collect(),
        }))
    } else {
        Ok(None)
    }
}

/// Every cycle of a multigraph, as sorted edge lists.
pub fn all_cycles(g: &PlaneGraph) -> Vec<Vec<EdgeId>> {
    let mut found: BTreeSet<Vec<EdgeId>> = BTreeSet::new();
    let verts: Vec<VertexId> = g.vertices().collect();
    for &s in &verts {
        // Paths from s through vertices larger than s.
        let mut path_e: Vec<EdgeId> = Vec::new();
        let mut on_path: BTreeSet<VertexId> = BTreeSet::from([s]);
        fn dfs(
            g: &PlaneGraph,
            s: VertexId,
            v: VertexId,
            path_e: &mut Vec<EdgeId>,
            on_path: &mut BTreeSet<VertexId>,
            found: &mut BTreeSet<Vec<EdgeId>>,
        ) {
            for &e in g.rotation(v) {
                if path_e.last() == Some(&e) {
                    continue;
                }
                let w = g.other_end(e, v);
                if w == s && !path_e.is_empty() {
                    let mut z = path_e.clone();
                    z.push(e);
                    z.sort();
                    found.insert(z);
                } else if w > s && !on_path.contains(&w) {
                    on_path.insert(w);
                    path_e.push(e);
                    dfs(g, s, w, path_e, on_path, found);
                    path_e.pop();
                    on_path.remove(&w);
                }
            }
        }
        dfs(g, s, s, &mut path_e, &mut on_path, &mut found);
    }
    found.into_iter().collect()
}

fn connected_without(g: &PlaneGraph, removed: &BTreeSet<EdgeId>) -> bool {
    let mut dsu = Dsu::new(g.vertices());
    let mut comps = g.vertex_count();
    for (e, [a, b]) in g.edges() {
        if !removed.contains(&e) && dsu.union(a, b) {
            comps -= 1;
        }
    }
    comps <= 1
}

/// True iff every cycle of `g` is separating, by listing all cycles.
pub fn oracle_sep(g: &PlaneGraph) -> Result<bool, OracleError> {
    oracle_nonseparating_cycle(g).map(|z| z.is_none())
}

/// Some non-separating cycle found by exhaustive listing.
pub fn oracle_nonseparating_cycle(g: &PlaneGraph) -> Result<Option<Vec<EdgeId>>, OracleError> {
    let n = g.vertex_count();
    if n > SEP_BUDGET {
        return Err(OracleError::BudgetExceeded(n, SEP_BUDGET));
    }
    Ok(all_cycles(g).into_iter().find(|z| connected_without(g, &z.iter().copied().collect())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn set(ids: &[u32]) -> BTreeSet<EdgeId> {
        ids.iter().map(|&i| EdgeId(i)).collect()
    }

    fn two(f: &[u32], m: &[u32]) -> TwoDecomposition {
        TwoDecomposition { forest: set(f), matching: set(m) }
    }

    #[test]
    fn check_2d_examples() {
        let c4 = generators::cycle(4).unwrap();
        assert!(check_2d(&c4, &two(&[0, 1, 2], &[3]), None).ok);
        let rep = check_2d(&c4, &two(&[0, 1, 2, 3], &[]), None);
        assert!(!rep.ok);
        assert_eq!(rep.violations[0].kind, ViolationKind::ForestHasCycle);
        assert!(!check_2d(&c4, &two(&[0, 1], &[2, 3]), None).ok);
        assert!(!check_2d(&c4, &two(&[0, 1, 2], &[3]), Some(&set(&[3]))).ok);
        // Witness decomposition of the bitriangle with edge a3a1 prescribed.
        let bt = generators::bitriangle();
        let w = two(&[2, 0, 7, 3, 5], &[1, 6, 4]);
        assert!(check_2d(&bt, &w, Some(&set(&[2]))).ok);
    }

    #[test]
    fn check_3d_examples() {
        let k4 = generators::k4();
        let good = ThreeDecomposition { tree: set(&[0, 1, 2]), two_regular: set(&[3, 4, 5]), matching: set(&[]) };
        assert!(check_3d(&k4, &good).ok);
        // Hamiltonian path 1-2-0-3 leaves 0-1, 2-3, 3-1 which share vertices.
        let path = ThreeDecomposition { tree: set(&[3, 1, 2]), two_regular: set(&[]), matching: set(&[0, 4, 5]) };
        let rep = check_3d(&k4, &path);
        assert!(rep.violations.iter().any(|v| v.kind == ViolationKind::NotAMatching));
        let short = ThreeDecomposition { tree: set(&[0, 1, 2]), two_regular: set(&[]), matching: set(&[3]) };
        let rep = check_3d(&k4, &short);
        assert!(rep.violations.iter().any(|v| v.kind == ViolationKind::EdgeCount));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(oracle_b2d(&generators::k4(), &BTreeSet::new()).unwrap(), None);
        let k = generators::k4sd6();
        for e in k.edge_ids() {
            let d = oracle_b2d(&k, &BTreeSet::from([e])).unwrap().unwrap();
            assert!(check_2d(&k, &d, Some(&BTreeSet::from([e]))).ok);
        }
        let big = generators::two_cut_chain(3).unwrap();
        assert!(matches!(oracle_b2d(&big, &BTreeSet::new()), Err(OracleError::BudgetExceeded(16, 14))));
    }

    #[test]
    fn sep_oracle_examples() {
        assert!(oracle_sep(&generators::bitriangle()).unwrap());
        assert_eq!(all_cycles(&generators::bitriangle()).len(), 6);
        assert!(!oracle_sep(&generators::k4()).unwrap());
        assert!(!oracle_sep(&generators::theta_subdivision(1, 1, 1).unwrap()).unwrap());
        assert_eq!(all_cycles(&generators::theta_subdivision(1, 1, 1).unwrap()).len(), 3);
        assert_eq!(all_cycles(&generators::k4()).len(), 7);
        assert_eq!(all_cycles(&generators::cube()).len(), 28);
    }
}
