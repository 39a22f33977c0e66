import json

import pytest

import critgraph as cg


def test_graph_and_solver():
    k5 = cg.complete_graph(5)
    assert k5.num_vertices == 5
    assert k5.num_edges == 10
    r = cg.mvc(k5)
    assert r["status"] == "exact"
    assert r["size"] == 4
    assert cg.is_cover(k5, r["cover"])
    g = cg.Graph(3, [(0, 1), (1, 2)])
    assert g.edges() == [(0, 1), (1, 2)]
    assert cg.parse_dimacs(cg.write_dimacs(g)) == g
    assert cg.greedy_solve(g) == [1]


def test_criticality():
    assert cg.is_critical(cg.cycle_graph(7))["verdict"] == "critical"
    v = cg.is_critical(cg.cycle_graph(8))
    assert v["verdict"] == "reducible"
    assert v["witness_edge"] is not None
    with pytest.raises(ValueError):
        cg.is_critical(cg.Graph(4, [(0, 1), (2, 3)]))


def test_alpha_and_circulants():
    assert cg.lexmin_alpha(7, 4) == [(3, 1), (2, 2)]
    assert cg.alpha_edge_lower_bound(7, 4) == 5
    assert cg.max_edges(10, 6) == 39
    assert cg.cnd_mvc_size(15, 3) == 12
    assert cg.cnd_is_critical(15, 3)
    csv = cg.circulant_search(degree=6, n_min=4, n_max=8)
    assert csv.startswith("n,offsets,verdict,c,m,nodes\n4,1 2 3,critical")


def test_generator_round_trip(tmp_path):
    b = cg.generate_hard(40, k=1.5, seed=5)
    assert b.cover_is_optimal
    assert len(b.cover) == b.ell
    assert cg.mvc(b.graph)["size"] == b.ell
    assert cg.verify_bundle(b)["ok"]
    side = json.loads(b.sidecar_json())
    assert side["params"]["n"] == 40
    assert side["cover"] == [v + 1 for v in b.cover]
    b.write(str(tmp_path / "inst"))
    back = cg.read_bundle(str(tmp_path / "inst"))
    assert back.graph == b.graph
    assert back.sidecar_json() == b.sidecar_json()
    assert cg.generate_hard(40, k=1.5, seed=5).graph == b.graph
    with pytest.raises(cg.InfeasibleError):
        cg.generate_hard(10, m=46, ell=9)


def test_baselines():
    s = cg.generate_structureless(20, 40, 12, seed=3)
    assert s.bound_kind == "upper"
    assert cg.mvc(s.graph)["size"] <= 12
    w = cg.generate_witzel(2, 3, 7, seed=1)
    assert w.bound == 4
    assert w.graph.num_edges == 7
