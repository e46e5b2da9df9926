"""Smoke tests for the python bindings. The heavy verification lives in the
C++ suites; here we check the bindings expose the main operations faithfully."""

import json

import pytest

import estar


def test_graph_construction():
    g = estar.build_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert g.n == 3
    assert g.m == 3
    assert g.degree(0) == 2
    with pytest.raises(ValueError):
        estar.build_graph(2, [(0, 0)])


def test_gstar_is_the_paper_graph():
    g = estar.gstar()
    assert (g.n, g.m) == (9, 14)
    assert estar.is_triangle_free(g)
    assert estar.is_bad(g)


def test_circulant_facts():
    c11 = estar.circulant(11, [1, 3])
    assert c11.m == 22
    assert estar.is_triangle_free(c11)
    assert estar.has_perfect_matching(c11) is None
    assert not estar.is_k_extendable(c11, 2)
    c4 = estar.circulant(4, [1])
    assert estar.is_k_extendable(c4, 2)


def test_line_complement_and_stable_sets():
    c6 = estar.circulant(6, [1])
    h = estar.line_complement(c6)
    mss = estar.maximal_stable_sets(h)
    assert len(mss) == 6
    assert all(len(s) == 2 for s in mss)
    assert estar.strong_cliques(h)  # perfect matchings exist
    assert not estar.is_general_partition(h)  # C6 is not 2-extendable


def test_strong_equistarability_decision():
    g = estar.gstar()
    cert = json.loads(estar.decide_strong_equistarability(g))
    assert cert["verdict"] == "not-strongly-equistarable"
    assert cert["kernel_dimension"] == 5
    assert cert["forced_subset"]["value"] == "1/2"
    assert sorted(map(tuple, cert["forced_subset"]["edges"])) == [(1, 9), (3, 7)]


def test_certificate_round_trip():
    g = estar.gstar()
    cert = estar.badness_certificate(g)
    ok, detail = estar.verify_certificate(cert)
    assert ok, detail
    mutated = json.loads(cert)
    mutated["witnesses"][0]["chord"] = [5, 8]
    ok, detail = estar.verify_certificate(json.dumps(mutated))
    assert not ok


def test_check_property():
    g = estar.gstar()
    code, message, cert = estar.check_property(g, "bad")
    assert code == 0
    assert json.loads(cert)["kind"] == "badness"
    c9 = estar.circulant(9, [1])
    code, message, cert = estar.check_property(c9, "bad")
    assert code == 1


def test_edge_list_round_trip():
    g = estar.gstar()
    text = estar.write_edge_list(g)
    back = estar.parse_edge_list(text)
    assert back.edges == g.edges
    assert "1 -- 2" in estar.to_dot(g)


def test_gallery_names():
    names = estar.gallery_names()
    assert "gstar" in names
    assert "line-complement:circulant-11-1-3" in names
