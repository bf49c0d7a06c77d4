import pytest

from dendroidal import omega
from dendroidal.dset import FilteredDSet, NerveDSet, horn, hom_into
from dendroidal.grothendieck import (CartesianPoset, DendroidalDiagram, GrothendieckError,
                                     TotalDendrex, constant_diagram, integrate,
                                     integrate_fill_horn, relabel, swap_diagram,
                                     terminal_poset, two_chain)
from dendroidal.kan import check_inner_kan, fill_horn
from dendroidal.operad import omega_operad
from dendroidal.trees import corolla, enumerate_trees, linear

SHAPES = enumerate_trees(2, 2)


def _nerve(t, bound=2, valence=2):
    return NerveDSet(omega_operad(t), bound, valence)


def _face_arrows(t):
    """Every composite of elementary faces into ``t``, identity included."""
    out = {t: omega.identity(t)}
    frontier = [omega.identity(t)]
    while frontier:
        nxt = []
        for a in frontier:
            for _, _, f in omega.faces(a.source) if a.source.vertices else []:
                if f.source not in out:
                    out[f.source] = omega.compose(a, f)
                    nxt.append(out[f.source])
        frontier = nxt
    return list(out.values())


def _oracle_count(d, t):
    """Pairs (t, u) such that every face of u comes from the component at its
    own in-object; checked face by face without recursion."""
    base = d.base
    nerve = NerveDSet(base.operad(), 2, 2)

    def inn(tree, b):
        leaves = tree.leaves if tree.vertices else (tree.root,)
        return base.meet(tuple(b.colour(l) for l in leaves))

    n = 0
    for b in nerve.dendrices(t):
        a = inn(t, b)
        x = d.components[a]
        for u in x.dendrices(t):
            ok = True
            for f in _face_arrows(t):
                b2 = nerve.act(f, b)
                a2 = inn(f.source, b2)
                target = x.act(f, u)
                r = d.restrict(a, a2)
                if not any(r(f.source, z) == target
                           for z in d.components[a2].dendrices(f.source)):
                    ok = False
                    break
            n += ok
    return n


def test_posets():
    assert two_chain().validate() == []
    diamond = CartesianPoset(["b", "l", "r", "t"], [("b", "l"), ("b", "r"), ("l", "t"), ("r", "t")])
    assert diamond.validate() == []
    assert diamond.meet(("l", "r")) == "b" and diamond.top == "t"
    with pytest.raises(GrothendieckError, match="no-terminal-object"):
        CartesianPoset(["a", "b"], [])
    bowtie = CartesianPoset(["c", "d", "a", "b", "t"],
                            [("c", "a"), ("c", "b"), ("d", "a"), ("d", "b"), ("a", "t"), ("b", "t")])
    with pytest.raises(GrothendieckError, match="no-product"):
        bowtie.meet(("a", "b"))
    assert bowtie.validate()


def test_cartesian_operad_is_thin():
    p = two_chain().operad()
    assert p.exists(("0", "1"), "0") and p.exists(("1", "1"), "1")
    assert not p.exists(("1", "1"), "0")
    assert p.exists((), "1") and not p.exists((), "0")


def test_terminal_index_recovers_component():
    x = _nerve(corolla(2))
    g = integrate(constant_diagram(terminal_poset(), x))
    for t in SHAPES:
        assert len(g.dendrices(t)) == len(x.dendrices(t))


def test_constant_diagram_is_a_product():
    x = _nerve(linear(2))
    d = constant_diagram(two_chain(), x)
    g = integrate(d)
    for t in SHAPES:
        assert len(g.dendrices(t)) == len(g.base_nerve.dendrices(t)) * len(x.dendrices(t))


def test_swap_matches_face_by_face_oracle():
    d = swap_diagram(2, 2)
    g = integrate(d)
    for t in SHAPES:
        assert len(g.dendrices(t)) == _oracle_count(d, t)


def test_swap_audit_and_functoriality():
    d = swap_diagram(2, 2)
    assert d.audit(2, 2) == []
    g = integrate(d)
    for s in SHAPES:
        for t in SHAPES:
            for a in omega.arrows_between(s, t):
                for x in g.dendrices(t):
                    y = g.act(a, x)
                    assert y in g.dendrices(s)
                    assert g.project(y) == g.base_nerve.act(a, g.project(x))


def test_audit_catches_broken_naturality():
    d = swap_diagram(2, 2)
    sw = d.restrictions[("0", "1")]
    half = lambda t, x: sw(t, x) if not t.vertices else x  # noqa: E731
    bad = DendroidalDiagram(d.base, d.components, {("0", "1"): half})
    assert any("not natural" in p for p in bad.audit(2, 2))


def test_non_injective_restriction():
    base = two_chain()
    top = NerveDSet(omega_operad(corolla(2)), 2, 2)
    one = NerveDSet(terminal_poset().operad(), 2, 2)
    squash = relabel({"0": "*", "1": "*", "2": "*"})
    d = DendroidalDiagram(base, {"0": one, "1": top}, {("0", "1"): squash})
    assert any("not injective" in p for p in d.audit(2, 2))
    with pytest.raises(GrothendieckError, match="restriction-not-injective"):
        for t in SHAPES:
            integrate(d).dendrices(t)


def test_missing_pieces():
    x = _nerve(corolla(1))
    with pytest.raises(GrothendieckError, match="missing-component"):
        DendroidalDiagram(two_chain(), {"0": x}, {})
    d = DendroidalDiagram(two_chain(), {"0": x, "1": x}, {})
    with pytest.raises(GrothendieckError, match="missing-restriction"):
        d.restrict("0", "1")
    with pytest.raises(GrothendieckError, match="no-arrow"):
        d.restrict("1", "0")


def test_swap_integral_is_strict_kan_small():
    g = integrate(swap_diagram(2, 2))
    rep = check_inner_kan(g, strict=True, bound=2, valence=2)
    assert rep.checked_horns > 0 and rep.strict


def test_fibrewise_filler_agrees():
    g = integrate(swap_diagram(3, 2))
    for t in enumerate_trees(3, 2):
        for e in t.inner_edges[:1]:
            h = horn(t, {e})
            for fam in hom_into(h, g)[:6]:
                d = integrate_fill_horn(g, h, fam, check=False)
                assert fill_horn(g, h, fam) == [d]


def test_filler_needs_kan_components():
    x = _nerve(linear(2))
    top = [y for y in x.dendrices(linear(2)) if len({c for _, c in y.colours}) == 3][0]
    broken = FilteredDSet(x, linear(2), top)
    d = constant_diagram(terminal_poset(), broken)
    g = integrate(d)
    h = horn(linear(2), {"1"})
    with pytest.raises(GrothendieckError, match="component-not-kan"):
        integrate_fill_horn(g, h, hom_into(h, g)[0])


def test_total_dendrex_fields():
    g = integrate(swap_diagram(2, 2))
    d = g.dendrices(corolla(2))[0]
    assert isinstance(d, TotalDendrex)
    assert g.in_object(corolla(2), d.base) in ("0", "1")
