"""Quick end-to-end check of the Python bindings.

Build and install first:

    pip install --no-build-isolation ./crates/python
"""

import plane_decomp_py as pd


def main():
    k4 = pd.PlaneGraph.from_graph6("C~")
    assert (k4.vertex_count, k4.edge_count) == (4, 6)
    assert len(k4.faces()) == 4

    # Every triangle of K4 leaves a single vertex behind.
    cls = k4.classify()
    assert not cls["in_sep"] and cls["witness"]["kind"] == "non_separating_cycle", cls
    t = k4.three_decompose()
    assert k4.check_3d(t)["ok"]

    h = pd.PlaneGraph.generate("k4sd6")
    assert h.classify()["in_sep"]
    d = h.two_decompose()
    assert h.check_2d(d)["ok"]
    assert len(d.forest) == h.vertex_count - 1

    for e, _, _ in h.edges():
        de = h.e_two_decompose(e)
        assert e in de.forest
        assert h.check_2d(de, [e])["ok"]
    assert h.oracle_b2d([0]) is not None

    # The cube has non-separating cycles, so it is outside the class.
    cube = pd.PlaneGraph.generate("cube")
    assert not cube.is_sep()
    try:
        cube.two_decompose()
    except pd.PreconditionError:
        pass
    else:
        raise AssertionError("cube should be rejected")
    t = cube.three_decompose()
    assert cube.check_3d(t)["ok"]

    # A broken decomposition is reported, not accepted.
    bad = pd.TwoDecomposition(d.forest[:-1], d.matching + d.forest[-1:])
    assert not h.check_2d(bad)["ok"]

    g = pd.PlaneGraph.generate("random_sep", "60", seed=3)
    back = pd.PlaneGraph.parse(g.to_rot())
    assert back.edges() == g.edges()
    d = g.two_decompose()
    assert g.check_2d(d)["ok"]

    print("smoke test ok:", h, g)


if __name__ == "__main__":
    main()
