import pytest

import _cluscat as cl


def test_roots_a3_tau_orbits():
    r = cl.roots("A", 3)
    assert len(r["roots"]) == 9
    assert sorted(len(o) for o in r["tau_orbits"]) == [3, 6]


def test_universal_seed_a2_shape():
    s = cl.universal_seed("A", 2)
    assert s["n"] == 2 and s["m"] == 5
    assert s["frozen"] == ["p(a1)", "p(a2)", "p(a1+a2)", "p(-a1)", "p(-a2)"]
    assert len(s["b"]) == 7
    # initial variables carry the negative simple roots
    assert s["cluster_roots"] == ["x(-a1)", "x(-a2)"]


def test_pentagon_mutation():
    s = cl.mutate("A", 2, [1, 2, 1, 2, 1])
    assert len(s["relations"]) == 5
    assert s["cluster_roots"] == ["x(-a2)", "x(-a1)"]


def test_exchange_graph_counts():
    eg = cl.exchange_graph("A", 2)
    assert eg["seeds"] == 5
    assert len(eg["edges"]) == 5
    assert len(eg["variables"]) == 5
    eg = cl.exchange_graph("A", 3)
    assert eg["seeds"] == 14
    assert len(eg["variables"]) == 9


def test_exchange_graph_budget():
    with pytest.raises(RuntimeError):
        cl.exchange_graph("A", 3, budget=3)


def test_orbit_quiver_a2():
    oq = cl.orbit_quiver("A", 2)
    assert len(oq["vertices"]) == 10
    assert oq["non_frozen"] == 5
    labels = {v["label"] for v in oq["vertices"]}
    assert "X(-a1)" in labels and "P(a1+a2)" in labels
    assert oq["dot"].startswith("digraph")


def test_ext1_exchange_pair():
    assert cl.ext1_dim("A", 2, "X(-a1)", "X(a1)") == 1
    assert cl.ext1_dim("A", 2, "X(-a1)", "X(-a2)") == 0
    assert cl.ext1_dim("A", 2, "P(a1)", "X(a1)") == 0


def test_bad_input_raises():
    with pytest.raises(ValueError):
        cl.universal_seed("Q", 2)
    with pytest.raises(ValueError):
        cl.orbit_quiver("A", 2, config=[(1, 0)])  # not admissible


def test_verify_a2_passes():
    v = cl.verify("A", 2)
    assert v["pass"] is True
    names = [c["name"] for c in v["checks"]]
    assert "hom-table oracle matches the universal seed" in names
    assert v["report"].strip().endswith("PASS")
