import itertools
from fractions import Fraction

import pytest

import cherrylab as cl


def rainbow(n):
    c = cl.Coloring(n)
    for i, (u, v) in enumerate(itertools.combinations(range(1, n + 1), 2)):
        c.set(u, v, i)
    return c


def test_cherries_match_degree_sum():
    t = cl.build_tree("cube", 27)
    degs = [t.degree(v) for v in range(1, t.order + 1)]
    assert cl.count_cherries(t) == sum(d * (d - 1) // 2 for d in degs)
    assert cl.count_cherries(t) == 81 + (27 - 9) // 2


def test_budget_is_exact():
    total = Fraction(cl.lll_budget("proper", "560")["total"])
    assert total == Fraction(3307, 15996)
    assert total < Fraction(1, 4)
    assert Fraction(cl.lll_budget("rainbow", "1512")["total"]) < Fraction(1, 4)


def test_threshold():
    assert cl.threshold("shearer-proper", 8960, r=16)["k"] == 2


def test_partition_coloring_blocks_radius_two_trees():
    p9 = cl.partition_coloring(9)
    rep = cl.boundedness_report(p9)
    assert (rep["k_local"], rep["k_global"]) == (3, 9)
    assert cl.radius2_spanning_tree_search(p9)["status"] == "none"
    assert cl.radius2_spanning_tree_search(rainbow(9))["status"] == "found"


def test_embed_returns_verified_map():
    g = cl.random_tree(40, 3, seed=2)
    c = cl.random_bounded_coloring(40, 2, "local", seed=2)
    out = cl.embed(g, c, seed=5)
    assert out["success"]
    assert sorted(out["map"]) == list(range(1, 41))
    assert cl.check_copy(c, g, out["map"], "proper")
    assert cl.embed(g, c, seed=5, threads=3)["map"] == out["map"]


def test_brute_force_and_block_check():
    mono = cl.Coloring(5, 0)
    path = cl.Graph(3, [(1, 2), (2, 3)])
    assert cl.brute_force_embed(path, mono)["status"] == "none"
    c4 = cl.Graph(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
    assert cl.rainbow_block_check(cl.lex_block_coloring(16, 1), c4, [1, 2, 3, 4], 3)["status"] == "none"


def test_clique_extraction():
    with pytest.raises(cl.ThresholdViolation):
        cl.find_clique_p(cl.partition_coloring(9), 16, 3)
    res = cl.find_clique_p(rainbow(600), 1, 1, bound="global", seed=3)
    assert len(res["P"]) == res["target"] == 2


def test_text_round_trip_and_errors():
    c = cl.partition_coloring(12)
    text = cl.coloring_to_text(c)
    assert cl.coloring_to_text(cl.coloring_from_text(text)) == text
    with pytest.raises(cl.ParseError, match="line 2"):
        cl.graph_from_text("p graph 3 1\ne 2 2\n")
