import pytest
from hypothesis import given, settings, strategies as st

from dendroidal import omega
from dendroidal.corpus import commutative_fixture, standard_operads
from dendroidal.dset import (Cosk1Graph, DendroidalSet, DSetError, FilteredDSet, IShriek,
                             NerveDSet, Representable, StandardSimplex, boundary, dset_from_json,
                             dset_to_json, horn, hom_into, hom_into_oracle, in_skeleton,
                             is_degenerate, is_normal, materialize, nondegenerate, representable,
                             simplicial_boundary, simplicial_horn, simplicial_sieve, skeletal_pushout_check,
                             skeleton, skeleton_oracle, table_from_json, table_to_json)
from dendroidal.operad import build_operad, omega_operad
from dendroidal.trees import Tree, corolla, degree, enumerate_trees, eta, linear

SHAPES = enumerate_trees(3, 3)


class SwapQuotient(DendroidalSet):
    """Ω[C_2] with each arrow identified with its composite with the leaf swap."""

    def __init__(self):
        super().__init__()
        self.rep = Representable(corolla(2), 3, 3)
        c = corolla(2)
        self.swap = [a for a in omega.automorphisms(c) if a != omega.identity(c)][0]
        self.bound, self.valence = 3, 3

    def _canon(self, a):
        return min(a, omega.compose(self.swap, a), key=lambda b: b.edge_map)

    def _dendrices(self, t):
        return sorted({self._canon(a) for a in self.rep.dendrices(t)}, key=lambda b: b.edge_map)

    def act(self, g, a):
        return self._canon(omega.compose(a, g))


def test_representable_counts(t2):
    assert len(representable(eta("0")).dendrices(eta("0"))) == 1
    assert len(representable(t2).dendrices(eta("x"))) == len(t2.edges)


def test_representable_matches_simplex():
    for n in range(4):
        rep = Representable(linear(n), 4, 3)
        simp = IShriek(StandardSimplex(n), 4, 3)
        for m in range(5):
            assert len(rep.dendrices(linear(m))) == len(simp.dendrices(linear(m)))


def test_nerve_of_tree_operad_is_representable():
    for t in enumerate_trees(2, 2):
        n = NerveDSet(omega_operad(t), 3, 3)
        r = Representable(t, 3, 3)
        for s in SHAPES:
            assert len(n.dendrices(s)) == len(r.dendrices(s))


def test_functoriality():
    x = NerveDSet(omega_operad(Tree("a", [(("b", "c"), "a"), (("d",), "b")])), 3, 3)
    for s in enumerate_trees(2, 2):
        for t in enumerate_trees(2, 2):
            for f in omega.arrows_between(s, t):
                for d in x.dendrices(t):
                    assert x.act(omega.identity(t), d) == d
                for u in enumerate_trees(1, 2):
                    for g in omega.arrows_between(u, s):
                        for d in x.dendrices(t):
                            assert x.act(omega.compose(f, g), d) == x.act(g, x.act(f, d))


def test_boundary_sieves(t2):
    assert len(boundary(corolla(3)).maximal) == 4
    assert len(boundary(t2).maximal) == 4
    with pytest.raises(DSetError, match="eta-has-no-boundary"):
        boundary(eta("0"))


def test_horn_sieves(t2):
    h = horn(t2, {"b"})
    assert len(h.maximal) == 3
    assert not any(m == omega.inner_face(t2, "b") for m in h.maximal)
    outer = horn(t2, set(t2.inner_edges))
    assert {m.source for m in outer.maximal} == {f.source for k, _, f in omega.faces(t2)
                                                 if k == "outer"}
    for bad in (set(), {"e"}):
        with pytest.raises(DSetError, match="bad-horn-spec"):
            horn(t2, bad)


def test_simplicial_sieves_agree():
    for n in range(1, 5):
        t = linear(n)
        assert simplicial_sieve(t, simplicial_boundary(n)).same_as(boundary(t))
        for k in range(1, n):
            assert simplicial_sieve(t, simplicial_horn(n, k)).same_as(horn(t, {str(k)}))


def test_hom_from_eta_is_yoneda():
    x = NerveDSet(commutative_fixture(), 3, 3)
    assert len(hom_into(eta("0"), x)) == len(x.dendrices(eta("0")))


@pytest.mark.parametrize("name", ["Omega(C2)", "Omega(i2)", "com", "Z/2"])
def test_hom_into_horn_matches_naturality_oracle(name):
    p = dict(standard_operads())[name]
    x = NerveDSet(p, 3, 3)
    for t in enumerate_trees(3, 2):
        for e in t.inner_edges:
            h = horn(t, {e})
            fams = hom_into(h, x)
            assert len(fams) == hom_into_oracle(h, x, 3, 2)
            for fam in fams:
                fillers = [d for d in x.dendrices(t)
                           if tuple(x.act(m, d) for m in h.maximal) == fam]
                assert len(fillers) == 1


def test_skeleton_matches_oracle():
    x = NerveDSet(commutative_fixture(), 3, 3)
    for n in range(3):
        sk = skeleton(x, n)
        for t in enumerate_trees(3, 2):
            assert set(sk.dendrices(t)) == skeleton_oracle(x, t, n)


def test_skeleton_filtration():
    x = Representable(linear(2), 3, 3)
    assert all(len(skeleton(x, 2).dendrices(t)) == len(x.dendrices(t)) for t in SHAPES)
    for t in SHAPES:
        sizes = [len(skeleton(x, n).dendrices(t)) for n in range(4)]
        assert sizes == sorted(sizes) and sizes[-1] == len(x.dendrices(t))
    with pytest.raises(DSetError, match="skeleton-above-bound"):
        skeleton(x, 9)


def test_skeleton_of_simplicial():
    s = IShriek(StandardSimplex(2), 3, 3)
    for n in range(3):
        for m in range(4):
            want = [x for x in StandardSimplex(2).simplices(m) if len(set(x)) <= n + 1]
            got = skeleton(s, n).dendrices(linear(m))
            assert sorted(got) == sorted(want)


def test_degeneracy_detection():
    x = NerveDSet(commutative_fixture(), 3, 3)
    t = linear(2)
    for v in ("1", "2"):
        s = omega.degeneracy(t, v)
        for y in x.dendrices(s.target):
            assert is_degenerate(x, t, x.act(s, y))[0]
    rep = Representable(linear(2), 3, 3)
    assert not is_degenerate(rep, t, omega.identity(t))[0]
    for d in x.dendrices(t):
        unit_vertex = any(op == x.operad.unit(d.colour(v)) for v, op in d.ops)
        assert is_degenerate(x, t, d)[0] == unit_vertex


def test_normality():
    for name, p in standard_operads():
        x = NerveDSet(p, 3, 3)
        ok, witness = is_normal(x)
        assert ok == (name not in ("com", "com-twisted")), name
    ok, (t, d, a) = is_normal(NerveDSet(commutative_fixture(), 3, 3))
    assert t == corolla(2) and omega.is_iso(a)
    assert is_normal(IShriek(Cosk1Graph(["p", "q"]), 3, 3))[0]


def test_one_colour_commutative_is_not_normal():
    p = build_operad(["x"], {"m": (("x", "x"), "x")}, sym={("m", (1, 0)): "m"})
    p.arity_cap = 2
    x = NerveDSet(p, 1, 2)
    ok, (t, _, _) = is_normal(x, 1)
    assert not ok and t == corolla(2)


def test_pushout_check():
    rep = Representable(corolla(2), 3, 3)
    assert all(skeletal_pushout_check(rep, n) for n in range(4))
    q = SwapQuotient()
    assert not is_normal(q, 2)[0]
    assert not skeletal_pushout_check(q, 1, 2)


def test_filtered_is_a_subpresheaf():
    x = NerveDSet(omega_operad(corolla(2)), 2, 2)
    d = x.dendrices(corolla(2))[0]
    f = FilteredDSet(x, corolla(2), d)
    assert d not in f.dendrices(corolla(2))
    for t in enumerate_trees(2, 2):
        for s in enumerate_trees(2, 2):
            for a in omega.arrows_between(s, t):
                for y in f.dendrices(t):
                    assert f.act(a, y) in f.dendrices(s)


def test_table_round_trip():
    x = materialize(NerveDSet(commutative_fixture(), 2, 2))
    back = table_from_json(table_to_json(x))
    for t in enumerate_trees(2, 2):
        assert back.dendrices(t) == x.dendrices(t)
    y = dset_from_json(dset_to_json(x))
    assert y.counts() == x.counts()
    with pytest.raises(DSetError, match="malformed-dset-json"):
        dset_from_json({"kind": "nerve"})


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(enumerate_trees(2, 2)), st.sampled_from(enumerate_trees(2, 2)))
def test_table_agrees_with_nerve(s, t):
    x = NerveDSet(commutative_fixture(), 2, 2)
    tab = materialize(x)
    for a in omega.arrows_between(s, t):
        ids = {d: k for k, d in enumerate(x.dendrices(t))}
        sids = {d: k for k, d in enumerate(x.dendrices(s))}
        for d, k in ids.items():
            assert tab.act(a, k) == sids[x.act(a, d)]
