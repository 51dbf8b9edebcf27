//! Named fixtures and seeded random plane graphs.

use std::collections::BTreeSet;

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::classes;
use crate::plane_graph::{from_drawing, Dart, EdgeId, PlaneGraph, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("unknown generator {0}")]
    Unknown(String),
}

fn bad(msg: impl Into<String>) -> GenError {
    GenError::BadParams(msg.into())
}

/// C_n; `cycle(2)` is the 2-cycle multigraph.
pub fn cycle(n: usize) -> Result<PlaneGraph, GenError> {
    if n < 2 {
        return Err(bad("a cycle needs at least 2 vertices"));
    }
    let n32 = n as u32;
    let spec: Vec<_> = (0..n32)
        .map(|i| {
            let prev = (i + n32 - 1) % n32;
            let next = (i + 1) % n32;
            (VertexId(i), vec![(EdgeId(i), VertexId(next)), (EdgeId(prev), VertexId(prev))])
        })
        .collect();
    Ok(PlaneGraph::build_from_rotation(&spec).expect("cycle rotation is valid"))
}

/// K4 drawn with vertex 0 in the middle; edges (0,1),(0,2),(0,3),(1,2),(2,3),(3,1).
pub fn k4() -> PlaneGraph {
    from_drawing(
        &[(0.0, 0.0), (0.0, 2.0), (2.0, -1.0), (-2.0, -1.0)],
        &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)],
    )
    .unwrap()
}

/// Triangular prism: outer triangle edges 0-2, inner 3-5, spokes 6-8.
pub fn prism() -> PlaneGraph {
    from_drawing(
        &[(0.0, 0.0), (4.0, 0.0), (2.0, 4.0), (1.5, 1.0), (2.5, 1.0), (2.0, 2.5)],
        &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
    )
    .unwrap()
}

/// The 3-cube: outer square edges 0-3, inner square 4-7, spokes 8-11
/// (spoke `8 + j` joins outer vertex `j` to inner vertex `4 + j`).
pub fn cube() -> PlaneGraph {
    from_drawing(
        &[
            (0.0, 0.0),
            (3.0, 0.0),
            (3.0, 3.0),
            (0.0, 3.0),
            (1.0, 1.0),
            (2.0, 1.0),
            (2.0, 2.0),
            (1.0, 2.0),
        ],
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (4, 5),
            (5, 6),
            (6, 7),
            (7, 4),
            (0, 4),
            (1, 5),
            (2, 6),
            (3, 7),
        ],
    )
    .unwrap()
}

/// Cube with each listed edge subdivided once.
pub fn cube_sd(edges: &[u32]) -> Result<PlaneGraph, GenError> {
    let mut g = cube();
    let distinct: BTreeSet<u32> = edges.iter().copied().collect();
    for &e in &distinct {
        if e > 11 {
            return Err(bad(format!("cube has no edge {e}")));
        }
        g = g.subdivide_edge(EdgeId(e)).unwrap().0;
    }
    Ok(g.detached())
}

/// Cube with a 2-vertex on every face.
pub fn cubesd4() -> PlaneGraph {
    cube_sd(&[0, 6, 9, 11]).unwrap()
}

/// Two triangles a1a2a3 (vertices 0,1,2) and b1b2b3 (3,4,5) joined by
/// a1b1 (edge 6) and a2b2 (edge 7).
pub fn bitriangle() -> PlaneGraph {
    from_drawing(
        &[(1.0, 2.0), (1.0, 0.0), (0.0, 1.0), (2.0, 2.0), (2.0, 0.0), (3.0, 1.0)],
        &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4)],
    )
    .unwrap()
}

/// Two triangles joined by a single edge (edge 6).
pub fn triangles_with_bridge() -> PlaneGraph {
    from_drawing(
        &[(0.0, 0.0), (1.0, 1.0), (0.0, 2.0), (3.0, 1.0), (4.0, 0.0), (4.0, 2.0)],
        &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (1, 3)],
    )
    .unwrap()
}

fn subdivide_times(mut g: PlaneGraph, e: EdgeId, times: usize) -> PlaneGraph {
    for _ in 0..times {
        g = g.subdivide_edge(e).unwrap().0;
    }
    g
}

/// Θ with its three threads of lengths `l1, l2, l3` (each at least 1).
/// The outer face runs along the first and third thread.
pub fn theta_subdivision(l1: usize, l2: usize, l3: usize) -> Result<PlaneGraph, GenError> {
    if l1.min(l2).min(l3) == 0 {
        return Err(bad("thread lengths must be positive"));
    }
    let (s, t) = (VertexId(0), VertexId(1));
    let mut g = PlaneGraph::build_from_rotation(&[
        (s, vec![(EdgeId(0), t), (EdgeId(1), t), (EdgeId(2), t)]),
        (t, vec![(EdgeId(2), s), (EdgeId(1), s), (EdgeId(0), s)]),
    ])
    .unwrap();
    let outer = g.faces().iter().find(|f| f.edges() == BTreeSet::from([EdgeId(0), EdgeId(2)])).unwrap().id;
    g = g.set_outer_face(outer).unwrap();
    for (e, l) in [(0, l1), (1, l2), (2, l3)] {
        g = subdivide_times(g, EdgeId(e), l - 1);
    }
    Ok(g.detached())
}

/// K4 with its edges (0,1),(0,2),(0,3),(1,2),(2,3),(3,1) replaced by
/// threads of the given lengths.
pub fn k4_subdivision(lengths: &[usize]) -> Result<PlaneGraph, GenError> {
    if lengths.len() != 6 || lengths.contains(&0) {
        return Err(bad("need six positive thread lengths"));
    }
    let mut g = k4();
    for (i, &l) in lengths.iter().enumerate() {
        g = subdivide_times(g, EdgeId(i as u32), l - 1);
    }
    Ok(g.detached())
}

pub fn k4sd6() -> PlaneGraph {
    k4_subdivision(&[2; 6]).unwrap()
}

/// A row of `k` squares, consecutive squares linked by two threads of
/// length 2; every pair of linking edges is a cyclic 2-edge-cut. Has
/// `6k - 2` vertices.
pub fn two_cut_chain(k: usize) -> Result<PlaneGraph, GenError> {
    if k == 0 {
        return Err(bad("chain needs at least one square"));
    }
    let mut coords = Vec::new();
    for i in 0..k {
        let x = 3.0 * i as f64;
        coords.extend([(x, 1.0), (x, 0.0), (x + 1.0, 1.0), (x + 1.0, 0.0)]);
    }
    for i in 0..k - 1 {
        let x = 3.0 * i as f64 + 2.0;
        coords.extend([(x, 1.0), (x, 0.0)]);
    }
    let mut edges = Vec::new();
    for i in 0..k {
        let (p, q, r, s) = (4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3);
        edges.extend([(p, r), (r, s), (s, q), (q, p)]);
    }
    for i in 0..k - 1 {
        let (up, lo) = (4 * k + 2 * i, 4 * k + 2 * i + 1);
        edges.extend([(4 * i + 2, up), (up, 4 * (i + 1)), (4 * i + 3, lo), (lo, 4 * (i + 1) + 1)]);
    }
    Ok(from_drawing(&coords, &edges).unwrap())
}

fn two_vertices_on_face(g: &PlaneGraph, walk: &[Dart]) -> Vec<Dart> {
    walk.iter().copied().filter(|d| g.degree(d.tail) <= 2).collect()
}

/// Tries a chord inside some face between two nonadjacent vertices of
/// degree at most 2.
fn random_chord(g: &PlaneGraph, rng: &mut ChaCha8Rng) -> Option<PlaneGraph> {
    let faces = g.faces();
    for _ in 0..8 {
        let f = faces.choose(rng)?;
        let cand = two_vertices_on_face(g, &f.boundary);
        if cand.len() < 2 {
            continue;
        }
        let a = *cand.choose(rng)?;
        let b = *cand.choose(rng)?;
        if a.tail == b.tail || g.neighbors(a.tail).any(|x| x == b.tail) {
            continue;
        }
        // A vertex appearing twice on the walk must keep a single corner.
        return g.add_edge_in_face(a, b).ok().map(|x| x.0);
    }
    None
}

fn random_subdivision(g: &PlaneGraph, rng: &mut ChaCha8Rng) -> PlaneGraph {
    let edges: Vec<EdgeId> = g.edge_ids().into_iter().collect();
    g.subdivide_edge(*edges.choose(rng).unwrap()).unwrap().0
}

/// Two edges of one face subdivided and the new vertices joined.
fn random_handle(g: &PlaneGraph, rng: &mut ChaCha8Rng) -> Option<PlaneGraph> {
    let faces = g.faces();
    let f = faces.choose(rng)?;
    if f.boundary.len() < 2 {
        return None;
    }
    let i = rng.random_range(0..f.boundary.len());
    let mut j = rng.random_range(0..f.boundary.len());
    if i == j {
        j = (j + 1) % f.boundary.len();
    }
    let (d1, d2) = (f.boundary[i], f.boundary[j]);
    if d1.edge == d2.edge {
        return None;
    }
    let (h, m1, _) = g.subdivide_edge(d1.edge).ok()?;
    let (h, m2, _) = h.subdivide_edge(d2.edge).ok()?;
    // Find darts leaving m1 and m2 on the face that came from f.
    let walk = h.face_walk(h.darts().find(|d| d.tail == m1)?);
    let walk = if walk.iter().any(|d| d.tail == m2) {
        walk
    } else {
        h.face_walk(h.darts().filter(|d| d.tail == m1).nth(1)?)
    };
    let a = *walk.iter().find(|d| d.tail == m1)?;
    let b = *walk.iter().find(|d| d.tail == m2)?;
    h.add_edge_in_face(a, b).ok().map(|x| x.0)
}

/// Connected plane graph with all degrees in {2, 3} and exactly `n`
/// vertices (`n >= 3`), reproducible from `seed`.
pub fn random_planar_subcubic(n: usize, seed: u64) -> Result<PlaneGraph, GenError> {
    if n < 3 {
        return Err(bad("need n >= 3"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = cycle(3).unwrap();
    let mut stall = 0;
    while g.vertex_count() < n {
        let roll = rng.random_range(0..10);
        let next = if roll < 4 {
            Some(random_subdivision(&g, &mut rng))
        } else if roll < 7 && g.vertex_count() + 2 <= n {
            random_handle(&g, &mut rng)
        } else {
            random_chord(&g, &mut rng)
        };
        match next {
            Some(h) if h.max_degree() <= 3 => {
                g = h;
                stall = 0;
            }
            _ => {
                stall += 1;
                if stall > 50 {
                    g = random_subdivision(&g, &mut rng);
                }
            }
        }
    }
    // Spend a few chords on the final size so that cubic vertices appear.
    for _ in 0..n {
        if let Some(h) = random_chord(&g, &mut rng) {
            if h.max_degree() <= 3 {
                g = h;
            }
        }
    }
    Ok(g.detached())
}

/// Connected subcubic plane graph with exactly `n >= 1` vertices that may
/// contain leaves and bridges.
pub fn random_connected_subcubic(n: usize, seed: u64) -> Result<PlaneGraph, GenError> {
    if n == 0 {
        return Err(bad("need n >= 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = PlaneGraph::build_from_rotation(&[(VertexId(0), vec![])]).unwrap();
    while g.vertex_count() < n {
        let roll = rng.random_range(0..10);
        let next = if roll < 4 || g.edge_count() == 0 {
            let open: Vec<VertexId> = g.vertices().filter(|&v| g.degree(v) < 3).collect();
            open.choose(&mut rng).and_then(|&v| {
                let before = g.rotation(v).choose(&mut rng).copied();
                g.add_pendant(v, before).ok().map(|x| x.0)
            })
        } else if roll < 7 {
            Some(random_subdivision(&g, &mut rng))
        } else {
            random_chord(&g, &mut rng)
        };
        if let Some(h) = next {
            if h.max_degree() <= 3 {
                g = h;
            }
        }
    }
    for _ in 0..rng.random_range(0..=n) {
        if let Some(h) = random_chord(&g, &mut rng) {
            if h.max_degree() <= 3 {
                g = h;
            }
        }
    }
    Ok(g.detached())
}

/// Connected subcubic plane graph in which every cycle is separating.
/// Starts from a random graph on `n` vertices and subdivides an edge of a
/// non-separating cycle until none is left, so the result may be larger
/// than `n`.
pub fn random_sep(n: usize, seed: u64) -> Result<PlaneGraph, GenError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9);
    let mut g = if seed % 2 == 0 {
        random_planar_subcubic(n.max(3), seed)?
    } else {
        random_connected_subcubic(n.max(1), seed)?
    };
    while let Some(z) = classes::find_nonseparating_cycle(&g) {
        let e = *z.choose(&mut rng).unwrap();
        g = g.subdivide_edge(e).unwrap().0;
    }
    Ok(g.detached())
}

fn parse_list(params: &str) -> Result<Vec<usize>, GenError> {
    if params.trim().is_empty() {
        return Ok(Vec::new());
    }
    params
        .split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|_| bad(format!("not a number: {p}"))))
        .collect()
}

/// Builds a generator by name, as used on the command line.
pub fn by_name(name: &str, params: &str, seed: u64) -> Result<PlaneGraph, GenError> {
    let p = parse_list(params)?;
    let arg = |i: usize| p.get(i).copied().ok_or_else(|| bad(format!("{name} needs more parameters")));
    match name {
        "cycle" => cycle(arg(0)?),
        "k4" => Ok(k4()),
        "prism" => Ok(prism()),
        "cube" => Ok(cube()),
        "cube_sd" => cube_sd(&p.iter().map(|&x| x as u32).collect::<Vec<_>>()),
        "cubesd4" => Ok(cubesd4()),
        "bitriangle" => Ok(bitriangle()),
        "theta_subdivision" => theta_subdivision(arg(0)?, arg(1)?, arg(2)?),
        "k4_subdivision" => k4_subdivision(&p),
        "k4sd6" => Ok(k4sd6()),
        "two_cut_chain" => two_cut_chain(arg(0)?),
        "random_planar_subcubic" => random_planar_subcubic(arg(0)?, seed),
        "random_connected_subcubic" => random_connected_subcubic(arg(0)?, seed),
        "random_sep" => random_sep(arg(0)?, seed),
        _ => Err(GenError::Unknown(name.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::classify;
    use crate::connectivity::{recognize_special, Special};

    fn euler_ok(g: &PlaneGraph) -> bool {
        g.is_connected() && g.vertex_count() + g.faces().len() == g.edge_count() + 2
    }

    #[test]
    fn fixture_sizes() {
        let x = theta_subdivision(1, 1, 2).unwrap();
        assert_eq!(x.vertices().filter(|&v| x.degree(v) == 2).count(), 1);
        let k = k4sd6();
        assert_eq!((k.vertex_count(), k.edge_count()), (10, 12));
        assert!(classify(&k).in_sepf);
        let bt = classify(&bitriangle());
        assert!(bt.in_sep && !bt.in_sepf);
        assert_eq!(cube().faces().len(), 6);
        assert_eq!(two_cut_chain(84).unwrap().vertex_count(), 502);
        assert!(cycle(1).is_err());
        assert!(k4_subdivision(&[1, 2, 0, 1, 1, 1]).is_err());
    }

    #[test]
    fn cubesd4_has_two_vertex_on_every_face() {
        let g = cubesd4();
        assert!(g.faces().iter().all(|f| f.boundary.iter().any(|d| g.degree(d.tail) == 2)));
        assert_eq!(recognize_special(&g), Special::None);
    }

    #[test]
    fn random_generators_are_valid_and_reproducible() {
        for seed in 0..30 {
            for n in [3, 7, 12, 25] {
                let g = random_planar_subcubic(n, seed).unwrap();
                assert_eq!(g.vertex_count(), n);
                assert!(euler_ok(&g) && g.max_degree() <= 3);
                assert!(g.vertices().all(|v| g.degree(v) >= 2));
                assert_eq!(g, random_planar_subcubic(n, seed).unwrap());
                let h = random_connected_subcubic(n, seed).unwrap();
                assert_eq!(h.vertex_count(), n);
                assert!(euler_ok(&h) && h.max_degree() <= 3);
            }
            let s = random_sep(10, seed).unwrap();
            assert!(euler_ok(&s) && classify(&s).in_sep);
        }
    }

    #[test]
    fn by_name_dispatch() {
        assert_eq!(by_name("k4_subdivision", "2,2,2,2,2,2", 0).unwrap(), k4sd6());
        assert_eq!(by_name("nope", "", 0), Err(GenError::Unknown("nope".into())));
        assert!(by_name("cycle", "", 0).is_err());
    }
}
