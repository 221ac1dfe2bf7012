import random

import pytest

from interarr.arrangement import make_arrangement, make_family
from interarr.poly import IntPolynomial, f_to_h, is_palindromic
from interarr.arrangement import f_polynomial, f_vector, chamber_count
from interarr.topegraph import (BaseNotAChamberError, build_tope_graph, direct,
                                dump_tope_graph, h_via_indegree,
                                h_via_separation)


def test_single_hyperplane_graph():
    g = build_tope_graph(make_arrangement(1, [(1,)]))
    assert len(g.vertices) == 2 and len(g.edges) == 1
    dg = direct(g, "+")
    assert dg.edges == ((g.vertices.index("+"), g.vertices.index("-"), 0),)
    assert h_via_indegree(g) == IntPolynomial((1, 1))


def test_b2_is_an_octagon():
    g = build_tope_graph(make_family("b", 2))
    assert len(g.vertices) == 8 and len(g.edges) == 8
    assert set(g.degree_sequence()) == {2}
    h = h_via_indegree(g)
    assert h == IntPolynomial((1, 6, 1))


def test_d3_simplicial_degrees():
    g = build_tope_graph(make_family("d", 3))
    assert len(g.vertices) == 24
    assert set(g.degree_sequence()) == {3}


def test_direct_unique_source_and_antipode():
    g = build_tope_graph(make_family("d", 3))
    for base in (g.vertices[0], g.vertices[7]):
        dg = direct(g, base)
        indeg = dg.in_degrees()
        assert indeg.count(0) == 1
        assert indeg[dg.vertices.index(base)] == 0
        anti = "".join("-" if c == "+" else "+" for c in base)
        assert indeg[dg.vertices.index(anti)] == 3
        assert sum(indeg) == len(g.edges)


def test_direct_rejects_non_chamber():
    g = build_tope_graph(make_family("b", 2))
    with pytest.raises(BaseNotAChamberError):
        direct(g, "+0+-")
    with pytest.raises(BaseNotAChamberError):
        direct(g, "++--")


def test_h_examples():
    assert h_via_indegree(make_family("d", 3)) == IntPolynomial((1, 11, 11, 1))
    assert h_via_indegree(make_family("b", 3)) == IntPolynomial((1, 23, 23, 1))


def test_method_agreement_family():
    cases = [("a", 3, None), ("b", 2, None), ("b", 3, None), ("b", 4, None),
             ("d", 3, None), ("d", 4, None)]
    cases += [("dns", 4, s) for s in range(5)]
    for fam, n, s in cases:
        a = make_family(fam, n, s)
        g = build_tope_graph(a)
        h1 = h_via_indegree(g)
        h2 = h_via_separation(g)
        h3 = f_to_h(f_polynomial(f_vector(a)))
        assert h1 == h2 == h3, (fam, n, s)
        assert is_palindromic(h1)
        assert h1(1) == chamber_count(a)


def test_base_independence_all_bases_d3():
    g = build_tope_graph(make_family("d", 3))
    values = {h_via_indegree(g, v) for v in g.vertices}
    assert len(values) == 1
    values_sep = {h_via_separation(g, v) for v in g.vertices}
    assert values_sep == values


def test_base_independence_sampled_b4():
    g = build_tope_graph(make_family("b", 4))
    rng = random.Random(2)
    picks = rng.sample(range(len(g.vertices)), 10)
    values = {h_via_indegree(g, g.vertices[i]) for i in picks}
    assert len(values) == 1


def test_sep_of_base_and_antipode():
    g = build_tope_graph(make_family("d", 3))
    base = g.vertices[0]
    dg = direct(g, base)
    indeg = dg.in_degrees()
    assert indeg[g.vertices.index(base)] == 0  # contributes the constant 1


def test_dump_format():
    g = build_tope_graph(make_arrangement(1, [(1,)]))
    lines = dump_tope_graph(g).strip().split("\n")
    assert lines[0] in ("+", "-") and lines[1] in ("+", "-")
    i, j, h = lines[2].split()
    assert h == "0" and {lines[int(i)], lines[int(j)]} == {"+", "-"}
