//! Exhaustive catalogs of small connected planar graphs, up to isomorphism.
//!
//! Every connected graph has a vertex whose removal keeps it connected (a
//! leaf of a spanning tree), so level `n` is obtained from level `n - 1` by
//! adding one vertex joined to 1..=3 vertices of spare degree. Planarity is
//! closed under vertex deletion, so nonplanar graphs are dropped as soon as
//! they appear. Duplicates are bucketed by a Weisfeiler-Lehman hash and then
//! resolved by an exact isomorphism test.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};

use petgraph::algo::is_isomorphic;
use petgraph::graph::UnGraph;

use crate::embed::compute_embedding;
use crate::plane_graph::PlaneGraph;

pub const MAX_VERTICES: usize = 16;

/// A simple graph on at most 16 vertices as adjacency bitmasks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SmallGraph {
    adj: Vec<u16>,
}

impl SmallGraph {
    pub fn single_vertex() -> Self {
        SmallGraph { adj: vec![0] }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Edges `(i, j)` with `i < j`, in increasing order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for j in 0..self.n() {
            for i in 0..j {
                if self.adj[i] >> j & 1 == 1 {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Sum over vertices of `3 - degree`.
    pub fn deficiency(&self) -> usize {
        (0..self.n()).map(|v| 3 - self.degree(v)).sum()
    }

    fn with_vertex(&self, nbrs: u16) -> SmallGraph {
        let k = self.n();
        let mut adj = self.adj.clone();
        for (v, a) in adj.iter_mut().enumerate() {
            if nbrs >> v & 1 == 1 {
                *a |= 1 << k;
            }
        }
        adj.push(nbrs);
        SmallGraph { adj }
    }

    pub fn embed(&self) -> PlaneGraph {
        compute_embedding(self.n(), &self.edges()).expect("catalog graphs are connected and planar")
    }

    fn is_planar(&self) -> bool {
        compute_embedding(self.n(), &self.edges()).is_ok()
    }

    fn to_petgraph(&self) -> UnGraph<(), ()> {
        let edges: Vec<(u32, u32)> = self.edges().into_iter().map(|(a, b)| (a as u32, b as u32)).collect();
        let mut g = UnGraph::<(), ()>::with_capacity(self.n(), edges.len());
        for _ in 0..self.n() {
            g.add_node(());
        }
        g.extend_with_edges(edges);
        g
    }

    fn wl_hash(&self) -> u64 {
        let n = self.n();
        let mut color: Vec<u64> = (0..n).map(|v| self.degree(v) as u64).collect();
        for _ in 0..3 {
            color = (0..n)
                .map(|v| {
                    let mut nb: Vec<u64> = (0..n).filter(|&w| self.adj[v] >> w & 1 == 1).map(|w| color[w]).collect();
                    nb.sort_unstable();
                    let mut h = DefaultHasher::new();
                    (color[v], nb).hash(&mut h);
                    h.finish()
                })
                .collect();
        }
        color.sort_unstable();
        let mut h = DefaultHasher::new();
        color.hash(&mut h);
        h.finish()
    }
}

/// Isomorphism-class deduplication.
#[derive(Default)]
struct Classes {
    buckets: HashMap<u64, Vec<(SmallGraph, UnGraph<(), ()>)>>,
    order: Vec<SmallGraph>,
}

impl Classes {
    fn insert(&mut self, g: SmallGraph) {
        let bucket = self.buckets.entry(g.wl_hash()).or_default();
        let pg = g.to_petgraph();
        if bucket.iter().any(|(_, other)| is_isomorphic(other, &pg)) {
            return;
        }
        bucket.push((g.clone(), pg));
        self.order.push(g);
    }
}

/// Sets of at most three vertices, all of degree < 3, as bitmasks.
fn attachment_sets(g: &SmallGraph) -> Vec<u16> {
    let open: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) < 3).collect();
    let mut out = Vec::new();
    for (i, &a) in open.iter().enumerate() {
        out.push(1 << a);
        for (j, &b) in open.iter().enumerate().skip(i + 1) {
            out.push(1 << a | 1 << b);
            for &c in &open[j + 1..] {
                out.push(1 << a | 1 << b | 1 << c);
            }
        }
    }
    out
}

fn grow(level: &[SmallGraph], keep: impl Fn(&SmallGraph) -> bool) -> Vec<SmallGraph> {
    let mut classes = Classes::default();
    for g in level {
        for s in attachment_sets(g) {
            let h = g.with_vertex(s);
            if keep(&h) && h.is_planar() {
                classes.insert(h);
            }
        }
    }
    classes.order
}

/// `levels[k]` holds the connected subcubic planar graphs on `k` vertices,
/// one per isomorphism class (`levels[0]` is empty).
pub fn subcubic_levels(max_n: usize) -> Vec<Vec<SmallGraph>> {
    assert!(max_n <= MAX_VERTICES, "catalog supports at most {MAX_VERTICES} vertices");
    let mut levels = vec![Vec::new()];
    if max_n == 0 {
        return levels;
    }
    levels.push(vec![SmallGraph::single_vertex()]);
    for _ in 2..=max_n {
        let next = grow(levels.last().unwrap(), |_| true);
        levels.push(next);
    }
    levels
}

/// All connected subcubic planar graphs with `1..=max_n` vertices.
pub fn subcubic(max_n: usize) -> Vec<SmallGraph> {
    subcubic_levels(max_n).into_iter().flatten().collect()
}

/// Connected cubic planar simple graphs on exactly `n` vertices. A graph
/// on `k` vertices can only grow into one when its deficiency is at most
/// `3 (n - k)`, since each later vertex removes at most three.
pub fn cubic(n: usize) -> Vec<SmallGraph> {
    assert!(n <= MAX_VERTICES, "catalog supports at most {MAX_VERTICES} vertices");
    if n < 4 || n % 2 == 1 {
        return Vec::new();
    }
    let mut level = vec![SmallGraph::single_vertex()];
    for k in 2..=n {
        level = grow(&level, |h| h.deficiency() <= 3 * (n - k));
    }
    level
}

/// Cubic planar graphs with at most `max_n` vertices.
pub fn cubic_up_to(max_n: usize) -> Vec<SmallGraph> {
    (4..=max_n).step_by(2).flat_map(cubic).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        // Connected graphs with max degree 3: 1, 1, 2, 6, 10, 29 for n = 1..6,
        // minus K3,3 on six vertices.
        let levels = subcubic_levels(6);
        let counts: Vec<usize> = levels.iter().skip(1).map(Vec::len).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 10, 28]);
    }

    #[test]
    fn cubic_counts() {
        // Connected planar cubic simple graphs: 1, 1, 3, 9 on 4, 6, 8, 10 vertices.
        let counts: Vec<usize> = [4, 6, 8, 10].into_iter().map(|n| cubic(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 3, 9]);
        for g in cubic(8) {
            assert!((0..8).all(|v| g.degree(v) == 3));
            assert_eq!(g.embed().faces().len(), 6);
        }
    }
}
