//! Catalog-wide property checks, shared by the `sweep` command and the
//! acceptance test target. Instances are fanned out over rayon and the
//! failures are collected in instance order.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::catalog;
use crate::classes;
use crate::connectivity::{self, Special};
use crate::decompose::{self, gadget_expand, gadget_extract, Options};
use crate::generators;
use crate::io::encode_graph6;
use crate::plane_graph::{EdgeId, PlaneGraph};
use crate::verify;

#[derive(Clone, Debug, Serialize)]
pub struct CriterionReport {
    pub id: u8,
    pub title: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
    pub note: String,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CriterionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn line(&self) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let mut s = format!(
            "criterion {} [{status}] {}: {} checked, {} failures, {:.1}s",
            self.id,
            self.title,
            self.checked,
            self.failures.len(),
            self.elapsed.as_secs_f64()
        );
        if !self.note.is_empty() {
            s.push_str(&format!(" ({})", self.note));
        }
        if let Some(f) = self.failures.first() {
            s.push_str(&format!("; first failure: {f}"));
        }
        s
    }
}

fn report(id: u8, title: &'static str, start: Instant, checked: usize, failures: Vec<String>) -> CriterionReport {
    CriterionReport { id, title, checked, failures, note: String::new(), elapsed: start.elapsed() }
}

/// Failures of `check` over `items`, in item order, tagged with graph6.
fn collect<T: Sync>(items: &[T], graph: impl Fn(&T) -> &PlaneGraph + Sync, check: impl Fn(&T) -> Vec<String> + Sync) -> Vec<String> {
    items
        .par_iter()
        .flat_map_iter(|it| {
            let tag = encode_graph6(graph(it));
            check(it).into_iter().map(move |m| format!("{tag}: {m}"))
        })
        .collect()
}

fn sep_members(graphs: &[PlaneGraph]) -> Vec<&PlaneGraph> {
    graphs.par_iter().filter(|g| classes::is_sep(g)).collect()
}

/// Every connected subcubic planar graph with at most `max_n` vertices, in
/// the embedding found by the embedder.
pub fn catalog(max_n: usize) -> Vec<PlaneGraph> {
    catalog::subcubic(max_n).par_iter().map(|g| g.embed()).collect()
}

fn all_degrees_2_or_3(g: &PlaneGraph) -> bool {
    g.vertices().all(|v| (2..=3).contains(&g.degree(v)))
}

/// Two-decompositions of sep members are valid with a spanning tree.
pub fn catalog_soundness(graphs: &[PlaneGraph]) -> CriterionReport {
    let start = Instant::now();
    let members = sep_members(graphs);
    let failures = collect(&members, |g| g, |g| match decompose::two_decompose(g) {
        Err(e) => vec![e.to_string()],
        Ok(d) => {
            let rep = verify::check_2d(g, &d, None);
            let mut out = Vec::new();
            if !rep.ok {
                out.push(format!("{:?}", rep.violations));
            }
            if !verify::is_spanning_tree(g, &d.forest) {
                out.push("forest is not a spanning tree".into());
            }
            out
        }
    });
    report(1, "catalog soundness of two_decompose", start, members.len(), failures)
}

/// The matching part is empty exactly for trees.
pub fn tree_sharpness(graphs: &[PlaneGraph]) -> CriterionReport {
    let start = Instant::now();
    let members = sep_members(graphs);
    let failures = collect(&members, |g| g, |g| match decompose::two_decompose(g) {
        Err(e) => vec![e.to_string()],
        Ok(d) if d.matching.is_empty() != g.is_tree() => {
            vec![format!("tree = {}, matching = {:?}", g.is_tree(), d.matching)]
        }
        Ok(_) => vec![],
    });
    report(2, "matching empty iff tree", start, members.len(), failures)
}

/// Every edge of every 2-edge-connected sep member is put in the forest by
/// `e_two_decompose`, and the oracle agrees a decomposition exists.
pub fn single_edge_coverage(graphs: &[PlaneGraph]) -> CriterionReport {
    let start = Instant::now();
    let members: Vec<&PlaneGraph> = sep_members(graphs)
        .into_iter()
        .filter(|g| g.edge_count() > 0 && connectivity::is_two_edge_connected(g))
        .collect();
    let pairs: Vec<(&PlaneGraph, EdgeId)> =
        members.iter().flat_map(|g| g.edge_ids().into_iter().map(move |e| (*g, e))).collect();
    let failures = collect(&pairs, |p| p.0, |&(g, e)| {
        let b = BTreeSet::from([e]);
        let mut out = Vec::new();
        match decompose::e_two_decompose(g, e) {
            Err(err) => out.push(format!("edge {e}: {err}")),
            Ok(d) => {
                if !d.forest.contains(&e) || !verify::check_2d(g, &d, Some(&b)).ok {
                    out.push(format!("edge {e}: invalid output"));
                }
            }
        }
        match verify::oracle_b2d(g, &b) {
            Ok(Some(_)) => {}
            Ok(None) => out.push(format!("edge {e}: oracle finds no decomposition")),
            Err(err) => out.push(format!("edge {e}: {err}")),
        }
        out
    });
    report(3, "single-edge coverage with oracle agreement", start, pairs.len(), failures)
}

/// A sepf graph with two prescribed (2,3)-edges on one face and no
/// decomposition. Returns the graph and `B`.
pub fn find_tight_instance(graphs: &[PlaneGraph]) -> Option<(PlaneGraph, BTreeSet<EdgeId>)> {
    graphs
        .par_iter()
        .filter(|g| all_degrees_2_or_3(g) && classes::is_sepf(g))
        .find_map_first(|g| {
            for face in g.faces() {
                let on_face = face.edges();
                let b23: Vec<EdgeId> = classes::b23(g, &on_face).into_iter().collect();
                for i in 0..b23.len() {
                    for j in (i + 1)..b23.len() {
                        let b = BTreeSet::from([b23[i], b23[j]]);
                        if let Ok(None) = verify::oracle_b2d(g, &b) {
                            return Some((g.clone(), b));
                        }
                    }
                }
            }
            None
        })
}

pub fn tightness_control(graphs: &[PlaneGraph]) -> CriterionReport {
    let start = Instant::now();
    let candidates = graphs.iter().filter(|g| all_degrees_2_or_3(g)).count();
    let found = find_tight_instance(graphs);
    let failures = if found.is_some() { vec![] } else { vec!["no instance without a decomposition".into()] };
    let mut r = report(4, "two prescribed (2,3)-edges can be infeasible", start, candidates, failures);
    if let Some((g, b)) = found {
        r.note = format!("example {} with B = {b:?}", encode_graph6(&g));
    }
    r
}

/// Cubic planar graphs up to `max_n` vertices plus the named fixtures.
pub fn cubic_instances(max_n: usize) -> Vec<PlaneGraph> {
    let mut out = vec![generators::k4(), generators::prism(), generators::cube()];
    out.extend(catalog::cubic_up_to(max_n).par_iter().map(|g| g.embed()).collect::<Vec<_>>());
    out
}

pub fn cubic_three_decompose(graphs: &[PlaneGraph]) -> CriterionReport {
    let start = Instant::now();
    let failures = collect(graphs, |g| g, |g| match decompose::three_decompose(g) {
        Err(e) => vec![e.to_string()],
        Ok(d) => {
            let rep = verify::check_3d(g, &d);
            let mut out = Vec::new();
            if !rep.ok {
                out.push(format!("{:?}", rep.violations));
            }
            if d.two_regular.is_empty() {
                out.push("empty 2-regular part".into());
            }
            out
        }
    });
    report(5, "three_decompose on cubic planar graphs", start, graphs.len(), failures)
}

pub fn class_equivalence(graphs: &[PlaneGraph]) -> CriterionReport {
    let start = Instant::now();
    let failures = collect(graphs, |g| g, |g| {
        let mut out = Vec::new();
        let oracle = match verify::oracle_sep(g) {
            Ok(x) => x,
            Err(e) => return vec![e.to_string()],
        };
        if classes::classify(g).in_sep != oracle {
            out.push(format!("classify says {}, oracle {oracle}", !oracle));
        }
        match classes::find_nonseparating_cycle(g) {
            None if !oracle => out.push("no cycle found on a graph outside sep".into()),
            Some(z) if oracle => out.push(format!("cycle {z:?} reported on a sep graph")),
            Some(z) => {
                if classes::is_separating_cycle(g, &z) != Ok(false) {
                    out.push(format!("reported cycle {z:?} is not a non-separating cycle"));
                }
            }
            None => {}
        }
        out
    });
    report(6, "class test agrees with cycle enumeration", start, graphs.len(), failures)
}

/// Random sep graphs with degrees in {2, 3} and at most `max_n` vertices.
pub fn random_sep_instances(count: usize, max_n: usize, seed: u64) -> Vec<PlaneGraph> {
    let mut out = Vec::new();
    let mut s = seed;
    while out.len() < count {
        let n = 3 + (s % (max_n as u64 - 5)) as usize;
        if let Ok(g) = generators::random_sep(n, s) {
            if g.vertex_count() <= max_n && g.vertices().all(|v| g.degree(v) >= 2) {
                out.push(g);
            }
        }
        s += 1;
    }
    out
}

pub fn gadget_round_trip(graphs: &[PlaneGraph]) -> CriterionReport {
    let start = Instant::now();
    let failures = collect(graphs, |g| g, |h| {
        let run = || -> Result<(), String> {
            let (g, map) = gadget_expand(h).map_err(|e| e.to_string())?;
            let d3 = decompose::three_decompose(&g).map_err(|e| e.to_string())?;
            let d = gadget_extract(&g, &map, &d3).map_err(|e| e.to_string())?;
            let rep = verify::check_2d(h, &d, None);
            if rep.ok {
                Ok(())
            } else {
                Err(format!("{:?}", rep.violations))
            }
        };
        run().err().into_iter().collect()
    });
    report(7, "gadget round trip", start, graphs.len(), failures)
}

/// Runs with recursion checks when `opts.validate` is set.
pub fn scale_smoke(g: &PlaneGraph, budget: Duration, opts: Options) -> CriterionReport {
    let start = Instant::now();
    let mut failures = Vec::new();
    match decompose::two_decompose_with(g, opts) {
        Err(e) => failures.push(e.to_string()),
        Ok(d) => {
            let rep = verify::check_2d(g, &d, None);
            if !rep.ok {
                failures.push(format!("{:?}", rep.violations));
            }
        }
    }
    let mut r = report(8, "scale smoke test", start, 1, failures);
    if r.elapsed > budget {
        r.failures.push(format!("took {:.1}s, budget {:.0}s", r.elapsed.as_secs_f64(), budget.as_secs_f64()));
    }
    r.note = format!("n = {}", g.vertex_count());
    r
}

/// Lemma-level properties over the catalog and over the multigraphs
/// obtained from it by suppressing 2-vertices.
pub fn lemma_suite(graphs: &[PlaneGraph]) -> CriterionReport {
    let start = Instant::now();
    let mut pool: Vec<PlaneGraph> = graphs.iter().filter(|g| all_degrees_2_or_3(g)).cloned().collect();
    let suppressed: Vec<PlaneGraph> = pool
        .par_iter()
        .map(connectivity::suppress_all)
        .filter(|h| all_degrees_2_or_3(h) && h.vertex_count() >= 2)
        .collect();
    pool.extend(suppressed);
    let failures = collect(&pool, |g| g, |g| {
        let mut out = Vec::new();
        out.extend(check_cyclic_cut_lemma(g));
        out.extend(check_bridge_parallel_lemma(g));
        out.extend(check_suppression_observation(g));
        out.extend(check_face_lemma(g));
        out.extend(check_frame_lemma(g));
        out
    });
    report(9, "lemma suite", start, pool.len(), failures)
}

/// A 2-edge-cut with no path component is cyclic.
pub fn check_cyclic_cut_lemma(g: &PlaneGraph) -> Vec<String> {
    if !connectivity::is_two_edge_connected(g) {
        return vec![];
    }
    let Ok(cuts) = connectivity::two_edge_cuts(g) else { return vec!["two_edge_cuts failed".into()] };
    let mut out = Vec::new();
    for cut in cuts {
        let removed: BTreeSet<EdgeId> = cut.edges.iter().copied().collect();
        let is_path = |side: &BTreeSet<_>| {
            let inner = g.edges().filter(|(e, [a, b])| !removed.contains(e) && side.contains(a) && side.contains(b)).count();
            inner + 1 == side.len() && side.iter().all(|v| g.degree(*v) - g.rotation(*v).iter().filter(|e| removed.contains(e)).count() <= 2)
        };
        if !is_path(&cut.side1) && !is_path(&cut.side2) && connectivity::is_cyclic_cut(g, [cut.edges[0], cut.edges[1]]) != Ok(true)
        {
            out.push(format!("cyclic cut: cut {:?} has no path side but is not cyclic", cut.edges));
        }
    }
    out
}

/// Cyclically 3-edge-connected graphs are bridgeless, and parallel edges
/// only occur in 2-cycles and Θ-subdivisions.
pub fn check_bridge_parallel_lemma(g: &PlaneGraph) -> Vec<String> {
    if !connectivity::is_cyclically_3ec(g) {
        return vec![];
    }
    let mut out = Vec::new();
    if !connectivity::bridges(g).is_empty() {
        out.push("bridges and parallels: cyclically 3-ec graph with a bridge".into());
    }
    let two_cycle = g.vertex_count() == 2 && g.edge_count() == 2;
    if g.has_parallel_edges() && !two_cycle && connectivity::recognize_special(g) != Special::ThetaSubdivision {
        out.push("bridges and parallels: parallel edges outside 2-cycles and theta subdivisions".into());
    }
    out
}

/// Cyclically 3-edge-connected graphs are cycles or subdivide a 3-edge-
/// connected cubic graph.
pub fn check_suppression_observation(g: &PlaneGraph) -> Vec<String> {
    if !connectivity::is_cyclically_3ec(g) || g.is_cycle() {
        return vec![];
    }
    let h = connectivity::suppress_all(g);
    let cubic = h.vertices().all(|v| h.degree(v) == 3);
    let three_ec = connectivity::bridges(&h).is_empty() && connectivity::two_edge_cuts(&h).is_ok_and(|c| c.is_empty());
    if cubic && three_ec {
        vec![]
    } else {
        vec![format!("suppression: suppressed graph cubic = {cubic}, 3-edge-connected = {three_ec}")]
    }
}

/// Faces all touching 2-vertices force sep; for cyclically 3-edge-connected
/// graphs the converse holds too.
pub fn check_face_lemma(g: &PlaneGraph) -> Vec<String> {
    let Ok(sep) = verify::oracle_sep(g) else { return vec![] };
    let all_faces = classes::faces_without_two_vertex(g).is_empty();
    let mut out = Vec::new();
    if all_faces && !sep {
        out.push("faces: every face has a 2-vertex but a cycle is non-separating".into());
    }
    if connectivity::is_cyclically_3ec(g) && sep != all_faces {
        out.push(format!("faces: cyclically 3-ec with sep = {sep}, faces with 2-vertices = {all_faces}"));
    }
    out
}

/// The neighbour frame conditions hold around every 2-vertex with two
/// distinct 3-vertex neighbours, for every choice of outer face.
pub fn check_frame_lemma(g: &PlaneGraph) -> Vec<String> {
    if !connectivity::is_cyclically_3ec(g) || g.is_cycle() || connectivity::recognize_special(g) != Special::None {
        return vec![];
    }
    let mut out = Vec::new();
    for face in g.faces() {
        let Ok(h) = g.set_outer_face(face.id) else { continue };
        for u in h.outer_vertices() {
            if h.degree(u) != 2 {
                continue;
            }
            let nb: Vec<_> = h.neighbors(u).collect();
            if nb[0] == nb[1] || h.degree(nb[0]) != 3 || h.degree(nb[1]) != 3 {
                continue;
            }
            for &e in h.rotation(u) {
                match classes::label_neighbor_frame(&h, u, e) {
                    Ok(fr) if fr.conditions() == [true; 3] => {}
                    Ok(fr) => out.push(format!("neighbour frame: frame at {u} fails {:?}", fr.conditions())),
                    Err(err) => out.push(format!("neighbour frame: frame at {u}: {err}")),
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub max_n: usize,
    pub cubic_max_n: usize,
    pub random_instances: usize,
    pub random_max_n: usize,
    pub chain_length: usize,
    pub seed: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig { max_n: 10, cubic_max_n: 12, random_instances: 100, random_max_n: 20, chain_length: 84, seed: 0 }
    }
}

/// Runs all nine checks.
pub fn run_all(cfg: &SweepConfig) -> Vec<CriterionReport> {
    let graphs = catalog(cfg.max_n);
    let cubic = cubic_instances(cfg.cubic_max_n);
    let random = random_sep_instances(cfg.random_instances, cfg.random_max_n, cfg.seed);
    let chain = generators::two_cut_chain(cfg.chain_length).expect("chain length is positive");
    vec![
        catalog_soundness(&graphs),
        tree_sharpness(&graphs),
        single_edge_coverage(&graphs),
        tightness_control(&graphs),
        cubic_three_decompose(&cubic),
        class_equivalence(&graphs),
        gadget_round_trip(&random),
        scale_smoke(&chain, Duration::from_secs(60), Options::default()),
        lemma_suite(&graphs),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_passes() {
        let cfg = SweepConfig { max_n: 6, cubic_max_n: 8, random_instances: 10, random_max_n: 12, chain_length: 5, seed: 1 };
        for r in run_all(&cfg) {
            if r.id == 4 {
                continue;
            }
            assert!(r.passed(), "{}", r.line());
        }
    }

    #[test]
    fn criterion_lines_mention_status() {
        let r = report(3, "x", Instant::now(), 2, vec!["bad".into()]);
        assert!(r.line().contains("[FAIL]"));
        assert!(r.line().contains("first failure: bad"));
    }
}
