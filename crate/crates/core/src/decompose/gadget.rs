//! Reduction from subcubic graphs to cubic ones: every 2-vertex gets a
//! pendant copy of X (Θ with one edge subdivided once) through a bridge.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::plane_graph::{EdgeId, PlaneGraph, VertexId};
use crate::verify;

use super::{DecomposeError, ThreeDecomposition, TwoDecomposition};

/// One gadget copy hung off the 2-vertex `host`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Attachment {
    pub host: VertexId,
    pub connector: EdgeId,
    /// The subdivision vertex of X, the far end of the connector.
    pub m: VertexId,
    pub s: VertexId,
    pub t: VertexId,
    /// `[st1, st2, sm, mt]`.
    pub gadget_edges: [EdgeId; 4],
}

#[derive(Clone, Debug)]
pub struct GadgetMap {
    pub host: PlaneGraph,
    pub attachments: Vec<Attachment>,
}

impl GadgetMap {
    pub fn connectors(&self) -> BTreeSet<EdgeId> {
        self.attachments.iter().map(|a| a.connector).collect()
    }
}

/// Expands `h` into a cubic graph. Each 2-vertex adds three vertices and
/// five edges; edge and vertex ids of `h` are kept.
pub fn gadget_expand(h: &PlaneGraph) -> Result<(PlaneGraph, GadgetMap), DecomposeError> {
    if !h.is_connected() {
        return Err(DecomposeError::Disconnected);
    }
    if let Some(v) = h.vertices().find(|&v| !(2..=3).contains(&h.degree(v))) {
        return Err(DecomposeError::BadDegrees(v));
    }
    let mut spec = h.rotation_spec();
    let mut next_v = h.max_vertex_id().map_or(0, |v| v.0 + 1);
    let mut next_e = h.max_edge_id().map_or(0, |e| e.0 + 1);
    let mut fresh_v = || {
        next_v += 1;
        VertexId(next_v - 1)
    };
    let mut attachments = Vec::new();
    let mut extra = Vec::new();
    for (v, list) in spec.iter_mut() {
        if list.len() != 2 {
            continue;
        }
        let (m, s, t) = (fresh_v(), fresh_v(), fresh_v());
        let [conn, st1, st2, sm, mt] = std::array::from_fn(|i| EdgeId(next_e + i as u32));
        next_e += 5;
        list.insert(1, (conn, m));
        extra.push((m, vec![(conn, *v), (mt, t), (sm, s)]));
        extra.push((s, vec![(sm, m), (st1, t), (st2, t)]));
        extra.push((t, vec![(mt, m), (st2, s), (st1, s)]));
        attachments.push(Attachment { host: *v, connector: conn, m, s, t, gadget_edges: [st1, st2, sm, mt] });
    }
    spec.extend(extra);
    let g = PlaneGraph::build_from_rotation(&spec)
        .map_err(|e| DecomposeError::InvalidDecomposition(format!("gadget expansion failed: {e}")))?;
    let g = match h.outer_dart() {
        Some(d) => g.set_outer_dart(d).unwrap_or(g),
        None => g,
    };
    Ok((g, GadgetMap { host: h.clone(), attachments }))
}

/// Restricts a tree + 2-regular + matching split of the expanded graph to
/// the host: tree edges of the host form the forest, the rest the matching.
pub fn gadget_extract(
    g: &PlaneGraph,
    map: &GadgetMap,
    d3: &ThreeDecomposition,
) -> Result<TwoDecomposition, DecomposeError> {
    let rep = verify::check_3d(g, d3);
    if !rep.ok {
        return Err(DecomposeError::InvalidDecomposition(format!(
            "not a valid decomposition of the expanded graph: {:?}",
            rep.violations
        )));
    }
    let host_edges = map.host.edge_ids();
    let forest: BTreeSet<EdgeId> = d3.tree.intersection(&host_edges).copied().collect();
    let matching = host_edges.difference(&forest).copied().collect();
    let d = TwoDecomposition { forest, matching };
    let rep = verify::check_2d(&map.host, &d, None);
    if !rep.ok {
        return Err(DecomposeError::InvalidDecomposition(format!(
            "restriction to the host is not a decomposition: {:?}",
            rep.violations
        )));
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity;
    use crate::decompose::three_decompose;
    use crate::generators;

    #[test]
    fn expansion_sizes() {
        let (g, map) = gadget_expand(&generators::cycle(3).unwrap()).unwrap();
        assert_eq!(g.vertex_count(), 12);
        assert!(g.vertices().all(|v| g.degree(v) == 3));
        let br = connectivity::bridges(&g);
        assert_eq!(br, map.connectors());
        let (g, _) = gadget_expand(&generators::k4sd6()).unwrap();
        assert_eq!(g.vertex_count(), 28);
        let k4 = generators::k4();
        let (g, map) = gadget_expand(&k4).unwrap();
        assert_eq!(g, k4);
        assert!(map.attachments.is_empty());
    }

    #[test]
    fn round_trip_c4() {
        let h = generators::cycle(4).unwrap();
        let (g, map) = gadget_expand(&h).unwrap();
        let d3 = three_decompose(&g).unwrap();
        let d = gadget_extract(&g, &map, &d3).unwrap();
        assert!(verify::check_2d(&h, &d, None).ok);
    }

    #[test]
    fn corrupted_connector_rejected() {
        let h = generators::cycle(4).unwrap();
        let (g, map) = gadget_expand(&h).unwrap();
        let mut d3 = three_decompose(&g).unwrap();
        let c = map.attachments[0].connector;
        d3.tree.remove(&c);
        d3.matching.insert(c);
        assert!(matches!(gadget_extract(&g, &map, &d3), Err(DecomposeError::InvalidDecomposition(_))));
    }

    #[test]
    fn bad_degree_rejected() {
        let h = generators::triangles_with_bridge();
        let (p, _, _) = h.add_pendant(VertexId(0), None).unwrap();
        assert!(matches!(gadget_expand(&p), Err(DecomposeError::BadDegrees(_))));
    }
}
