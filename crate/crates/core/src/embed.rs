//! Planarity test and sphere embedding for abstract multigraphs.
//!
//! Each biconnected block is embedded by the path-addition method of
//! Demoucron, Malgrange and Pertuiset (quadratic, fine at our sizes); the
//! block rotations are concatenated at cut vertices and parallel edges are
//! laid next to their representative.

use std::collections::{BTreeMap, HashMap, VecDeque};

use crate::plane_graph::{EdgeId, GraphError, PlaneGraph, VertexId};

/// Embeds the graph on vertices `0..n` whose `k`-th edge `edges[k]` gets id
/// `k`. Fails with `NonPlanar`, `Disconnected` or `LoopPresent`.
pub fn compute_embedding(n: usize, edges: &[(usize, usize)]) -> Result<PlaneGraph, GraphError> {
    if n == 0 {
        return Err(GraphError::Disconnected);
    }
    for (k, &(u, v)) in edges.iter().enumerate() {
        if u == v {
            return Err(GraphError::LoopPresent(EdgeId(k as u32)));
        }
        if u >= n || v >= n {
            return Err(GraphError::UnknownVertex(VertexId(u.max(v) as u32)));
        }
    }
    // One representative per vertex pair; the others are laid beside it.
    let mut rep: HashMap<(usize, usize), usize> = HashMap::new();
    let mut twins: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut simple: Vec<usize> = Vec::new();
    for (k, &(u, v)) in edges.iter().enumerate() {
        let key = (u.min(v), u.max(v));
        match rep.get(&key) {
            Some(&r) => twins.entry(r).or_default().push(k),
            None => {
                rep.insert(key, k);
                simple.push(k);
            }
        }
    }
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for &k in &simple {
        let (u, v) = edges[k];
        adj[u].push((v, k));
        adj[v].push((u, k));
    }
    if !connected(&adj) {
        return Err(GraphError::Disconnected);
    }
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); n];
    for block in blocks(&adj) {
        if block.len() == 1 {
            let (u, v) = edges[block[0]];
            rotation[u].push(block[0]);
            rotation[v].push(block[0]);
            continue;
        }
        for (v, order) in embed_block(edges, &block)? {
            rotation[v].extend(order);
        }
    }
    for (&r, ts) in &twins {
        let (u, v) = edges[r];
        let pu = rotation[u].iter().position(|&x| x == r).unwrap();
        for (i, &t) in ts.iter().enumerate() {
            rotation[u].insert(pu + 1 + i, t);
        }
        let pv = rotation[v].iter().position(|&x| x == r).unwrap();
        for &t in ts {
            rotation[v].insert(pv, t);
        }
    }
    let spec: Vec<(VertexId, Vec<(EdgeId, VertexId)>)> = rotation
        .iter()
        .enumerate()
        .map(|(v, list)| {
            let out = list
                .iter()
                .map(|&k| {
                    let (a, b) = edges[k];
                    (EdgeId(k as u32), VertexId(if a == v { b } else { a } as u32))
                })
                .collect();
            (VertexId(v as u32), out)
        })
        .collect();
    PlaneGraph::build_from_rotation(&spec)
}

/// Embeds a `PlaneGraph`'s underlying abstract graph afresh, keeping ids.
pub fn reembed(g: &PlaneGraph) -> Result<PlaneGraph, GraphError> {
    let verts: Vec<VertexId> = g.vertices().collect();
    let index: BTreeMap<VertexId, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let ids: Vec<EdgeId> = g.edge_ids().into_iter().collect();
    let pairs: Vec<(usize, usize)> = ids
        .iter()
        .map(|&e| {
            let [a, b] = g.endpoints(e).unwrap();
            (index[&a], index[&b])
        })
        .collect();
    let h = compute_embedding(verts.len(), &pairs)?;
    let spec: Vec<(VertexId, Vec<(EdgeId, VertexId)>)> = h
        .rotation_spec()
        .into_iter()
        .map(|(v, list)| {
            let list = list.into_iter().map(|(e, w)| (ids[e.0 as usize], verts[w.0 as usize])).collect();
            (verts[v.0 as usize], list)
        })
        .collect();
    PlaneGraph::build_from_rotation(&spec)
}

fn connected(adj: &[Vec<(usize, usize)>]) -> bool {
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &(w, _) in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == adj.len()
}

/// Edge sets of the biconnected blocks (iterative Hopcroft-Tarjan).
fn blocks(adj: &[Vec<(usize, usize)>]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut out = Vec::new();
    let mut estack: Vec<usize> = Vec::new();
    let mut time = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, parent edge, next adjacency index)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(top) = stack.last_mut() {
            let (v, pe, i) = *top;
            if i < adj[v].len() {
                top.2 += 1;
                let (w, k) = adj[v][i];
                if k == pe {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    estack.push(k);
                    stack.push((w, k, 0));
                } else if disc[w] < disc[v] {
                    estack.push(k);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut block = Vec::new();
                        while let Some(k) = estack.pop() {
                            block.push(k);
                            if k == pe {
                                break;
                            }
                        }
                        out.push(block);
                    }
                }
            }
        }
    }
    out
}

/// Rotation (as edge indices) at every vertex of a simple biconnected
/// block with at least two edges.
fn embed_block(edges: &[(usize, usize)], block: &[usize]) -> Result<Vec<(usize, Vec<usize>)>, GraphError> {
    let mut local: BTreeMap<usize, usize> = BTreeMap::new();
    for &k in block {
        let (u, v) = edges[k];
        let next = local.len();
        local.entry(u).or_insert(next);
        let next = local.len();
        local.entry(v).or_insert(next);
    }
    let global: Vec<usize> = {
        let mut g = vec![0; local.len()];
        for (&v, &i) in &local {
            g[i] = v;
        }
        g
    };
    let n = local.len();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut edge_of: HashMap<(usize, usize), usize> = HashMap::new();
    for &k in block {
        let (u, v) = (local[&edges[k].0], local[&edges[k].1]);
        adj[u].push(v);
        adj[v].push(u);
        edge_of.insert((u.min(v), u.max(v)), k);
    }
    let key = |a: usize, b: usize| (a.min(b), a.max(b));

    let cycle = find_cycle(&adj);
    let mut in_h = vec![false; n];
    let mut h_edges: std::collections::HashSet<(usize, usize)> = Default::default();
    for i in 0..cycle.len() {
        in_h[cycle[i]] = true;
        h_edges.insert(key(cycle[i], cycle[(i + 1) % cycle.len()]));
    }
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle.iter().rev().copied().collect()];

    while h_edges.len() < block.len() {
        // Fragments: attachments plus a path between two of them.
        let mut fragments: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
        for v in 0..n {
            if !in_h[v] {
                continue;
            }
            for &w in &adj[v] {
                if in_h[w] && v < w && !h_edges.contains(&key(v, w)) {
                    fragments.push((vec![v, w], vec![v, w]));
                }
            }
        }
        let mut comp = vec![usize::MAX; n];
        for s in 0..n {
            if in_h[s] || comp[s] != usize::MAX {
                continue;
            }
            let id = s;
            let mut members = vec![s];
            comp[s] = id;
            let mut i = 0;
            let mut attach = std::collections::BTreeSet::new();
            while i < members.len() {
                let v = members[i];
                i += 1;
                for &w in &adj[v] {
                    if in_h[w] {
                        attach.insert(w);
                    } else if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
            }
            let attach: Vec<usize> = attach.into_iter().collect();
            let path = component_path(&adj, &in_h, &comp, id, attach[0]);
            fragments.push((attach, path));
        }
        let mut best: Option<(usize, usize, usize)> = None;
        for (fi, (attach, _)) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&f| attach.iter().all(|a| faces[f].contains(a)))
                .collect();
            if admissible.is_empty() {
                return Err(GraphError::NonPlanar);
            }
            if best.is_none_or(|b| admissible.len() < b.1) {
                best = Some((fi, admissible.len(), admissible[0]));
            }
            if admissible.len() == 1 {
                break;
            }
        }
        let (fi, _, f) = best.expect("fragments exist while edges remain");
        let path = &fragments[fi].1;
        let face = faces.swap_remove(f);
        let (a, b) = (path[0], *path.last().unwrap());
        let ia = face.iter().position(|&x| x == a).unwrap();
        let ib = face.iter().position(|&x| x == b).unwrap();
        let len = face.len();
        let walk = |from: usize, to: usize| {
            let mut out = vec![face[from]];
            let mut i = from;
            while i != to {
                i = (i + 1) % len;
                out.push(face[i]);
            }
            out
        };
        let interior = &path[1..path.len() - 1];
        let mut f1 = walk(ia, ib);
        f1.extend(interior.iter().rev());
        let mut f2 = walk(ib, ia);
        f2.extend(interior.iter());
        faces.push(f1);
        faces.push(f2);
        for w in path.windows(2) {
            in_h[w[0]] = true;
            in_h[w[1]] = true;
            h_edges.insert(key(w[0], w[1]));
        }
    }

    // Along every face p -> v -> n, the edge vn follows vp clockwise at v.
    let mut succ: Vec<HashMap<usize, usize>> = vec![HashMap::new(); n];
    for face in &faces {
        let len = face.len();
        for i in 0..len {
            let (p, v, nx) = (face[i], face[(i + 1) % len], face[(i + 2) % len]);
            succ[v].insert(p, nx);
        }
    }
    let mut out = Vec::with_capacity(n);
    for v in 0..n {
        let start = adj[v][0];
        let mut order = vec![edge_of[&key(v, start)]];
        let mut cur = succ[v][&start];
        while cur != start {
            order.push(edge_of[&key(v, cur)]);
            cur = succ[v][&cur];
        }
        if order.len() != adj[v].len() {
            return Err(GraphError::NonPlanar);
        }
        out.push((global[v], order));
    }
    Ok(out)
}

fn find_cycle(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    let mut stack = vec![0];
    depth[0] = 0;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if depth[w] == usize::MAX {
                depth[w] = depth[v] + 1;
                parent[w] = v;
                stack.push(w);
            } else if w != parent[v] && parent[w] != v {
                // Non-tree edge: climb both ends to their common ancestor.
                let (mut x, mut y) = (v, w);
                let (mut left, mut right) = (vec![x], vec![y]);
                while x != y {
                    if depth[x] >= depth[y] {
                        x = parent[x];
                        left.push(x);
                    } else {
                        y = parent[y];
                        right.push(y);
                    }
                }
                right.pop();
                left.extend(right.into_iter().rev());
                return left;
            }
        }
    }
    unreachable!("a block with two or more edges has a cycle")
}

/// A path from attachment `a` through component `id` to another attachment.
fn component_path(adj: &[Vec<usize>], in_h: &[bool], comp: &[usize], id: usize, a: usize) -> Vec<usize> {
    let mut prev: HashMap<usize, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    for &w in &adj[a] {
        if !in_h[w] && comp[w] == id && !prev.contains_key(&w) {
            prev.insert(w, a);
            queue.push_back(w);
        }
    }
    while let Some(v) = queue.pop_front() {
        if let Some(&b) = adj[v].iter().find(|&&b| in_h[b] && b != a) {
            let mut path = vec![b, v];
            let mut cur = v;
            while cur != a {
                cur = prev[&cur];
                path.push(cur);
            }
            path.reverse();
            return path;
        }
        for &w in &adj[v] {
            if !in_h[w] && !prev.contains_key(&w) {
                prev.insert(w, v);
                queue.push_back(w);
            }
        }
    }
    unreachable!("a fragment of a biconnected block has two attachments")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Vec<(usize, usize)> {
        (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j))).collect()
    }

    /// Exhaustive search over all rotation systems for a genus-0 one.
    fn brute_planar(n: usize, edges: &[(usize, usize)]) -> bool {
        let mut inc: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (k, &(u, v)) in edges.iter().enumerate() {
            inc[u].push(k);
            inc[v].push(k);
        }
        fn perms(rest: &[usize]) -> Vec<Vec<usize>> {
            if rest.is_empty() {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for i in 0..rest.len() {
                let mut r = rest.to_vec();
                let x = r.remove(i);
                for mut p in perms(&r) {
                    p.insert(0, x);
                    out.push(p);
                }
            }
            out
        }
        let choices: Vec<Vec<Vec<usize>>> = inc
            .iter()
            .map(|l| {
                if l.is_empty() {
                    return vec![vec![]];
                }
                perms(&l[1..]).into_iter().map(|mut p| {
                    p.insert(0, l[0]);
                    p
                }).collect()
            })
            .collect();
        let mut idx = vec![0; n];
        loop {
            let spec: Vec<(VertexId, Vec<(EdgeId, VertexId)>)> = (0..n)
                .map(|v| {
                    let list = choices[v][idx[v]]
                        .iter()
                        .map(|&k| {
                            let (a, b) = edges[k];
                            (EdgeId(k as u32), VertexId(if a == v { b } else { a } as u32))
                        })
                        .collect();
                    (VertexId(v as u32), list)
                })
                .collect();
            if PlaneGraph::build_from_rotation(&spec).is_ok() {
                return true;
            }
            let mut i = 0;
            loop {
                if i == n {
                    return false;
                }
                idx[i] += 1;
                if idx[i] < choices[i].len() {
                    break;
                }
                idx[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn classical_examples() {
        let k4 = compute_embedding(4, &complete(4)).unwrap();
        assert_eq!(k4.faces().len(), 4);
        assert_eq!(compute_embedding(5, &complete(5)), Err(GraphError::NonPlanar));
        let k33: Vec<(usize, usize)> = (0..3).flat_map(|i| (3..6).map(move |j| (i, j))).collect();
        assert_eq!(compute_embedding(6, &k33), Err(GraphError::NonPlanar));
        let cube = crate::generators::cube();
        let again = reembed(&cube).unwrap();
        assert_eq!(again.faces().len(), 6);
        assert!(!brute_planar(5, &complete(5)));
        assert!(!brute_planar(6, &k33));
    }

    #[test]
    fn errors_and_multigraphs() {
        assert_eq!(compute_embedding(3, &[(0, 1)]), Err(GraphError::Disconnected));
        assert_eq!(compute_embedding(2, &[(0, 0)]), Err(GraphError::LoopPresent(EdgeId(0))));
        let theta = compute_embedding(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(theta.faces().len(), 3);
        let single = compute_embedding(1, &[]).unwrap();
        assert_eq!(single.vertex_count(), 1);
        // Two triangles sharing a vertex, plus a pendant path.
        let bow = compute_embedding(6, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0), (4, 5)]).unwrap();
        assert_eq!(bow.faces().len(), 3);
    }

    #[test]
    fn agrees_with_rotation_search_on_small_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut nonplanar = 0;
        for _ in 0..150 {
            let n = rng.random_range(4..=6);
            let all = complete(n);
            let edges: Vec<(usize, usize)> = all.into_iter().filter(|_| rng.random_bool(0.7)).collect();
            let mut adj = vec![Vec::new(); n];
            for (k, &(u, v)) in edges.iter().enumerate() {
                adj[u].push((v, k));
                adj[v].push((u, k));
            }
            let work: usize = adj.iter().map(|l| (1..l.len().max(1)).product::<usize>()).product();
            if edges.is_empty() || !connected(&adj) || work > 20_000 {
                continue;
            }
            let fast = compute_embedding(n, &edges);
            let slow = brute_planar(n, &edges);
            assert_eq!(fast.is_ok(), slow, "{edges:?}");
            if let Err(e) = fast {
                assert_eq!(e, GraphError::NonPlanar);
                nonplanar += 1;
            }
        }
        assert!(nonplanar > 0);
    }
}
