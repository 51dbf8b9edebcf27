//! Structural facts the decomposition relies on, checked over every
//! catalog graph with degrees in {2, 3} and over their suppressions.

use std::sync::OnceLock;

use plane_decomp::connectivity;
use plane_decomp::plane_graph::PlaneGraph;
use plane_decomp::sweep;

fn pool() -> &'static [PlaneGraph] {
    static POOL: OnceLock<Vec<PlaneGraph>> = OnceLock::new();
    POOL.get_or_init(|| {
        let ok = |g: &PlaneGraph| g.vertices().all(|v| (2..=3).contains(&g.degree(v)));
        let mut out: Vec<PlaneGraph> = sweep::catalog(9).into_iter().filter(ok).collect();
        let suppressed: Vec<PlaneGraph> =
            out.iter().map(connectivity::suppress_all).filter(|h| ok(h) && h.vertex_count() >= 2).collect();
        out.extend(suppressed);
        out
    })
}

fn assert_clean(check: fn(&PlaneGraph) -> Vec<String>) {
    let failures: Vec<String> = pool().iter().flat_map(check).collect();
    assert!(failures.is_empty(), "{} failures, first: {}", failures.len(), failures[0]);
}

#[test]
fn pool_is_nontrivial() {
    assert!(pool().len() > 300);
    assert!(pool().iter().any(|g| g.has_parallel_edges()));
}

#[test]
fn two_edge_cuts_without_path_side_are_cyclic() {
    assert_clean(sweep::check_cyclic_cut_lemma);
}

#[test]
fn cyclically_3ec_graphs_have_no_bridges_and_few_parallels() {
    assert_clean(sweep::check_bridge_parallel_lemma);
}

#[test]
fn suppression_of_cyclically_3ec_graphs_is_3ec_cubic() {
    assert_clean(sweep::check_suppression_observation);
}

#[test]
fn faces_with_two_vertices_and_sep_agree() {
    assert_clean(sweep::check_face_lemma);
}

#[test]
fn neighbour_frames_are_distinct() {
    assert_clean(sweep::check_frame_lemma);
}
