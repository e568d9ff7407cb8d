"""Smoke tests for the python bindings."""

from fractions import Fraction

import pytest

import shoda


def frac(s):
    num, den = s.split("/")
    return Fraction(int(num), int(den))


def test_group_loading():
    g = shoda.group("builtin:symmetric(3)")
    assert g.order == 6
    assert len(g) == 6
    assert not g.abelian
    assert g.mul(0, 3) == 3
    assert g.label(0) == "1"
    with pytest.raises(shoda.MalformedSpec):
        shoda.group("builtin:nope")
    with pytest.raises(shoda.CapExceeded):
        shoda.group("builtin:paper-ex1", max_order=100)


def test_inline_spec():
    g = shoda.group('{"kind":"permutation","degree":4,"generators":[[1,0,2,3],[1,2,3,0]]}')
    assert g.order == 24


def test_normal_subgroups_of_the_order_54_example():
    g = shoda.group("builtin:paper-ex2")
    normals = shoda.normal_subgroups(g)
    assert len(normals) == 8
    assert [len(n) for n in normals] == [1, 3, 9, 9, 9, 9, 27, 54]
    assert shoda.is_in_class(g)


def test_tree_shapes():
    g = shoda.group("builtin:paper-ex2")
    t = shoda.tree(g, "0")  # the trivial normal subgroup
    heights = sorted(n["depth"] for n in t["nodes"] if n["shoda_leaf"])
    assert heights == [3, 3]
    dot = shoda.tree_dot(g, "0")
    assert dot.count("->") == 3
    # a selector through generator words
    t7 = shoda.tree(g, "gens:d")
    assert len(t7["nodes"]) == 1


def test_pairs_and_alpha():
    g = shoda.group("builtin:paper-ex2")
    pairs = shoda.pairs(g)
    assert len(pairs) == 8
    assert all(frac(p["alpha"]) == 1 for p in pairs)
    assert all(p["good"] for p in pairs)
    assert sum(1 for p in pairs if p["strong"]) == 8


def test_components_dimensions():
    g = shoda.group("builtin:paper-ex2")
    report = shoda.components(g)
    assert report["dimension_sum"] == 54
    dims = sorted(c["dimension"] for c in report["components"])
    assert dims == [1, 1, 4, 4, 4, 4, 18, 18]


def test_verify_passes():
    g = shoda.group("builtin:symmetric(3)")
    report = shoda.verify(g)
    assert report["passed"]
    assert report["distinct_pcis"] == 3
    assert report["rank_sum"] == 6
