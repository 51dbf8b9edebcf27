use std::sync::OnceLock;

use proptest::prelude::*;

use plane_decomp::plane_graph::PlaneGraph;
use plane_decomp::sweep;

use plane_decomp::decompose;
use plane_decomp::generators;
use plane_decomp::io::{emit_rot, parse_rot, AnyDecomposition, Document};
use plane_decomp::verify;

fn cubic() -> &'static [PlaneGraph] {
    static CUBIC: OnceLock<Vec<PlaneGraph>> = OnceLock::new();
    CUBIC.get_or_init(|| sweep::cubic_instances(12))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rot_text_round_trips(n in 3usize..40, seed in any::<u64>()) {
        let g = generators::random_planar_subcubic(n, seed).unwrap();
        let h = parse_rot(&emit_rot(&g)).unwrap();
        prop_assert_eq!(h.rotation_spec(), g.rotation_spec());
        prop_assert_eq!(h.outer_dart(), g.outer_dart());
    }

    #[test]
    fn random_sep_graphs_decompose(n in 3usize..40, seed in any::<u64>()) {
        let g = generators::random_sep(n, seed).unwrap();
        let d = decompose::two_decompose(&g).unwrap();
        prop_assert!(verify::check_2d(&g, &d, None).ok);
        prop_assert!(verify::is_spanning_tree(&g, &d.forest));
    }

    #[test]
    fn documents_round_trip(n in 3usize..25, seed in any::<u64>()) {
        let g = generators::random_sep(n, seed).unwrap();
        let d = decompose::two_decompose(&g).unwrap();
        let doc = Document::new(&g, AnyDecomposition::Two(d.clone()));
        let back = Document::from_json(&doc.to_json()).unwrap();
        prop_assert_eq!(back.graph.to_graph().unwrap().rotation_spec(), g.rotation_spec());
        prop_assert_eq!(back.decomposition, AnyDecomposition::Two(d));
    }

    #[test]
    fn cubic_graphs_three_decompose(pick in any::<usize>(), face in any::<usize>(), mirror in any::<bool>()) {
        let all = cubic();
        let g = &all[pick % all.len()];
        let g = g.set_outer_face(face % g.faces().len()).unwrap();
        let g = if mirror { g.mirrored() } else { g };
        let d = decompose::three_decompose(&g).unwrap();
        prop_assert!(verify::check_3d(&g, &d).ok);
    }
}
