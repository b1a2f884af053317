"""Smoke test for the doublestar Python module.

Build and install first:

    pip install --no-build-isolation ./crates/py
"""

import json

import doublestar as ds


def main():
    a5 = ds.Group.named("alternating 5")
    assert a5.order() == 60
    p = ds.Permutation("(1 2 3)", 5)
    assert p in a5
    assert str(p.then(p.inverse())) == "(1)"

    k5 = ds.Graph.catalog("complete 5")
    assert (k5.vertex_count(), k5.valency()) == (5, 4)

    pi = ds.DoubleStarGraph(
        k5,
        a5,
        3,
        [["1", "5"], ["1", "4"], ["1", "3"]],
        [["5", "1"], ["5", "2"], ["5", "3"]],
    )
    g = pi.graph()
    assert (g.vertex_count(), g.valency(), g.is_connected()) == (20, 3, True)
    assert pi.self_paired() and pi.is_x_symmetric()
    assert pi.coset_isomorphism() is not None

    params = pi.params()
    assert (params["v"], params["k"], params["r"], params["b"], params["d"]) == (4, 3, 3, 4, 1)
    series = pi.refinement_series()
    assert series["m"] == 1
    assert all(c["status"] == "PASS" for c in series["checks"])

    again = ds.Graph.from_graph6(g.to_graph6())
    assert g.isomorphism(again) is not None

    o3 = ds.Graph.catalog("odd 3")
    orbits = ds.search(o3, ds.Graph.catalog_group("odd 3"), 1, 2)
    assert any(o["x_symmetric"] for o in orbits)

    report = ds.verify_paper("example-2")
    assert report["status"] == "PASS"

    code, report = ds.run_instance(json.dumps({"task": "analyze", "graph": {"catalog": "complete 5"}}))
    assert code == 0 and report["status"] == "PASS"

    try:
        ds.Permutation("(1 9)", 5)
    except ValueError:
        pass
    else:
        raise AssertionError("out-of-range cycle accepted")

    print("python smoke test: ok")


if __name__ == "__main__":
    main()
