import pytest

import cycleprefix
from cycleprefix import Network


def test_basic_instance():
    g = Network(4, 4)
    assert (g.delta, g.dee, g.r) == (4, 4, 0)
    assert g.vertex_count == 120
    assert g.origin == "1234"
    assert len(g.out_neighbors("1234")) == 4
    assert sorted(g.in_neighbors("1234")) == sorted(set(g.in_neighbors("1234")))


def test_distance_matches_bfs():
    g = Network(5, 4)
    for y in ["2134", "1325", "5432", "4321"]:
        assert g.distance("1234", y) == g.bfs_distance("1234", y)


def test_shortest_path():
    g = Network(8, 8)
    path = g.shortest_path("47285136", "82164753")
    assert len(path) == 5
    assert path[0] == "47285136" and path[-1] == "82164753"
    assert all(g.has_arc(a, b) for a, b in zip(path, path[1:]))


def test_deleted_rotation_routing():
    g = Network(4, 4, 1)
    assert g.diameter() == 5
    assert len(g.restricted_route("1234", "5214")) == 6
    assert g.count_geodesics("1234", "5214") == len(g.geodesics("1234", "5214"))
    with pytest.raises(cycleprefix.Error):
        g.reach_walk("1234", "1234")

    h = Network(5, 5, 1)
    assert len(h.reach_walk("12345", "12345")) == 7
    assert h.exact_k_reachable(6)


def test_container():
    g = Network(5, 4)
    paths = g.container("1325", "1234")
    assert len(paths) == 5
    assert max(len(p) - 1 for p in paths) == 6
    diag = g.verify_container("1325", "1234")
    assert diag["valid"] and diag["width"] == 5 and diag["shared_vertex"] is None
    assert g.menger_disjoint_count("1325", "1234") == 5


def test_char_triple():
    assert Network(6, 6).char_triple("531624") == (3, 6, 6)


def test_errors():
    g = Network(4, 4)
    with pytest.raises(cycleprefix.Error) as info:
        g.shortest_path("1234", "1234")
    assert info.value.kind == "same-vertex"
    with pytest.raises(ValueError):
        g.distance("1234", "1123")
    with pytest.raises(cycleprefix.Error):
        Network(3, 5)


def test_cli_in_process():
    code, out, _ = cycleprefix.run_cli(["params", "--delta", "4", "--dee", "4", "--format", "jsonl"])
    assert code == 0
    assert '"vertices":120' in out
    code, _, err = cycleprefix.run_cli(["route", "1234"])
    assert code == 2
