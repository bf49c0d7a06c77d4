import itertools

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from dendroidal.dset import all_faces
from dendroidal.percolation import (PercolationError, downset, enumerate_schemes, face_key,
                                    linearize, maximal_scheme, minimal_scheme, percolation_step,
                                    project_black, project_white, scheme_mono, tensor)
from dendroidal.trees import Tree, corolla, enumerate_trees, eta, linear

# Hasse diagram of the 14 schemes as drawn, T1 on top
FIGURE = [(1, 2), (2, 3), (2, 6), (2, 4), (3, 7), (3, 5), (6, 7), (6, 9), (4, 9), (4, 5),
          (7, 10), (7, 8), (5, 10), (9, 10), (9, 12), (8, 11), (10, 13), (10, 11), (12, 13),
          (11, 14), (13, 14)]

SMALL = [t for t in enumerate_trees(2, 2)]


def test_example_count_and_extremes(perc_pair):
    s, t = perc_pair
    p = enumerate_schemes(s, t)
    assert len(p.schemes) == 14
    assert p.minimum() == [0] and len(p.maximum()) == 1
    assert p.schemes[0] == minimal_scheme(s, t)
    assert p.schemes[p.maximum()[0]].key() == maximal_scheme(s, t).key()


def test_example_hasse_matches_figure(perc_pair):
    p = enumerate_schemes(*perc_pair)
    g = nx.DiGraph([(i + 1, j + 1) for i, j in p.covering])
    assert len(p.covering) == len(FIGURE)
    assert nx.is_isomorphic(g, nx.DiGraph(FIGURE))


def test_covering_is_one_step(perc_pair):
    s, t = perc_pair
    p = enumerate_schemes(s, t)
    index = {q.key(): k for k, q in enumerate(p.schemes)}
    again = {(k, index[r.key()]) for k, q in enumerate(p.schemes)
             for r in percolation_step(q, s, t)}
    assert again == set(p.covering)
    # one step moves exactly one black vertex down: white count changes by arity - 1
    for i, j in p.covering:
        wi = sum(1 for c in p.schemes[i].colour.values() if c == "white")
        wj = sum(1 for c in p.schemes[j].colour.values() if c == "white")
        assert wj >= wi


def test_linearize(perc_pair):
    p = enumerate_schemes(*perc_pair)
    order = linearize(p)
    assert order[0] == p.schemes[0]
    assert order[-1] == p.schemes[p.maximum()[0]]
    pos = {q.key(): k for k, q in enumerate(order)}
    assert all(pos[p.schemes[i].key()] < pos[p.schemes[j].key()] for i, j in p.covering)
    assert linearize(p) == order


def test_unit():
    for t in SMALL + [corolla(3)]:
        assert len(enumerate_schemes(eta("x"), t).schemes) == 1
        assert len(enumerate_schemes(t, eta("x")).schemes) == 1


@pytest.mark.parametrize("m,n", [(1, 1), (1, 2), (2, 2), (2, 3), (3, 1)])
def test_corollas_give_two_schemes(m, n):
    p = enumerate_schemes(corolla(m), corolla(n))
    assert len(p.schemes) == 2
    assert p.covering == [(0, 1)]
    assert linearize(p) == p.schemes


def test_minimal_of_c1c1_steps_to_maximal():
    s = t = corolla(1)
    nxt = percolation_step(minimal_scheme(s, t), s, t)
    assert [q.key() for q in nxt] == [maximal_scheme(s, t).key()]
    assert percolation_step(maximal_scheme(s, t), s, t) == []


def test_white_stump_percolates():
    # a white stump has no inputs to check, so the black corolla can slide under it
    s, t = corolla(0), corolla(2)
    nxt = percolation_step(minimal_scheme(s, t), s, t)
    assert [q.key() for q in nxt] == [maximal_scheme(s, t).key()]
    assert len(enumerate_schemes(s, t).schemes) == 2


def _renamed(t: Tree, tag: str) -> Tree:
    return Tree(tag + t.root, [(tuple(tag + e for e in v.inputs), tag + v.output)
                               for v in t.vertices])


def test_symmetry_of_counts():
    trees = enumerate_trees(3, 2)
    for s, t in itertools.product(trees, trees):
        if len(s.vertices) + len(t.vertices) > 4:
            continue
        a = len(enumerate_schemes(s, t).schemes)
        b = len(enumerate_schemes(_renamed(t, "y"), _renamed(s, "x")).schemes)
        assert a == b


NO_STUMPS = [t for t in enumerate_trees(3, 2) if all(v.inputs for v in t.vertices)]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(NO_STUMPS), st.sampled_from(NO_STUMPS))
def test_projections_recover_factors(s, t):
    verts_s = {(v.output, v.inputs) for v in s.vertices}
    verts_t = {(v.output, v.inputs) for v in t.vertices}
    for p in enumerate_schemes(s, t).schemes:
        assert project_white(p) == verts_s
        assert project_black(p) == verts_t


def test_black_stump_absorbs_white_vertices():
    p = enumerate_schemes(corolla(1), corolla(0))
    top = p.schemes[p.maximum()[0]]
    assert project_white(top) == set()
    assert [v.inputs for v in top.tree.vertices] == [()]


def test_scheme_mono(perc_pair):
    s, t = perc_pair
    for p in enumerate_schemes(s, t).schemes:
        m = scheme_mono(p)
        assert len(set(m.values())) == len(m)
        assert set(m) == set(p.tree.edges)


def test_face_inclusion_detects_faces():
    s, t = corolla(2), corolla(1)
    for p in enumerate_schemes(s, t).schemes:
        fs = all_faces(p.tree)
        keys = {face_key(f) for f in fs}
        for f in fs:
            for g in fs:
                assert (downset(f) <= downset(g)) == (face_key(f) in
                                                      {face_key(h) for h in all_faces(g)})
        assert downset(p.tree) == keys


def test_tensor_unit_counts():
    t = Tree("a", [(("b", "c"), "a"), (("d",), "b")])
    x = tensor(eta("u"), t, 3, 2)
    from dendroidal.dset import Representable
    r = Representable(t, 3, 2)
    for shape in enumerate_trees(3, 2):
        assert len(x.dendrices(shape)) == len(r.dendrices(shape))


def test_tensor_colours(perc_pair):
    s, t = perc_pair
    assert len(tensor(s, t, 1, 2).dendrices(eta("0"))) == len(s.edges) * len(t.edges)


def _monotone(n, k):
    return sum(1 for xs in itertools.product(range(k + 1), repeat=n + 1)
               if list(xs) == sorted(xs))


def test_c1_tensor_c1_is_a_square():
    x = tensor(corolla(1), corolla(1), 4, 3)
    for n in range(4):
        assert len(x.dendrices(linear(n))) == _monotone(n, 1) ** 2
    for k in (0, 2, 3):
        assert x.dendrices(corolla(k)) == []


def test_bad_names():
    bad = Tree("a|b", [(("c",), "a|b")])
    with pytest.raises(PercolationError, match="bad-edge-name"):
        enumerate_schemes(bad, corolla(1))


def test_dot_and_json(perc_pair):
    p = enumerate_schemes(*perc_pair)
    assert p.to_dot().count("->") == 21
    js = p.to_json()
    assert len(js["schemes"]) == 14 and len(js["covering"]) == 21
