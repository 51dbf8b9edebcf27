use plane_decomp::decompose::{e_two_decompose_with, two_decompose_with, Options};
use plane_decomp::{classes, connectivity, generators, verify};

const VALIDATE: Options = Options { validate: true };

#[test]
fn two_decompose_random_sep() {
    for n in 3..30 {
        for seed in 0..40 {
            let g = generators::random_sep(n, seed).unwrap();
            let d = two_decompose_with(&g, VALIDATE).unwrap_or_else(|e| panic!("n={n} seed={seed}: {e:?}"));
            let rep = verify::check_2d(&g, &d, None);
            assert!(rep.ok, "n={n} seed={seed}: {:?}", rep.violations);
            assert!(verify::is_spanning_tree(&g, &d.forest));
        }
    }
}

#[test]
fn every_edge_of_random_bridgeless_sep() {
    let mut tried = 0;
    for n in 4..24 {
        for seed in 0..30 {
            let g = generators::random_sep(n, seed).unwrap();
            if !connectivity::is_two_edge_connected(&g) || g.max_degree() > 3 || !classes::is_sep(&g) {
                continue;
            }
            tried += 1;
            for e in g.edge_ids() {
                let d = e_two_decompose_with(&g, e, VALIDATE)
                    .unwrap_or_else(|err| panic!("n={n} seed={seed} e={e}: {err:?}"));
                assert!(d.forest.contains(&e));
            }
        }
    }
    assert!(tried > 20, "only {tried} bridgeless samples");
}
