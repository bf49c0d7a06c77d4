import itertools
import math

import pytest

from dendroidal.corpus import standard_operads
from dendroidal.omega import arrows_between
from dendroidal.operad import (ColoredOperad, OperadError, build_operad, hom_operads,
                               identity_map, is_operad_map, is_sigma_free, isomorphisms,
                               omega_map, omega_operad, omega_ops_oracle, operad_from_json,
                               operad_to_json, planar_omega_operad, symmetrize, to_table,
                               validate)
from dendroidal.trees import Signature, corolla, enumerate_trees, eta, linear, subtree_of_signature


def test_sample_generators(t2):
    p = omega_operad(t2)
    assert p.exists(("b", "c", "d"), "a")
    assert p.exists(("e", "f"), "b")
    assert p.exists((), "d")
    assert not p.exists(("c",), "a")


def test_eta_operad():
    q = to_table(omega_operad(eta("0")))
    assert q.colours == ("0",) and list(q.ops) == [q.units["0"]]


def test_op_count_matches_oracle(t2):
    assert len(omega_operad(t2).all_ops(len(t2.edges))) == omega_ops_oracle(t2)


def count_by_subtrees(t):
    """Subtrees times orderings of their leaves, plus units."""
    n = len(t.edges)
    for e in t.edges:
        for k in range(len(t.edges)):
            for leaves in itertools.combinations(t.edges, k):
                if leaves == (e,):
                    continue
                if subtree_of_signature(t, (leaves, e)) is not None:
                    n += math.factorial(k)
    return n


@pytest.mark.parametrize("t", enumerate_trees(3, 3), ids=str)
def test_op_counts_small_trees(t):
    assert len(omega_operad(t).all_ops(len(t.edges))) == count_by_subtrees(t)


def test_omega_operads_validate():
    for t in enumerate_trees(3, 2):
        assert validate(omega_operad(t)) == []


def test_validate_reports_broken_unit():
    p = build_operad(["x"], {"m": (("x", "x"), "x")}, symmetric=False)
    p.compose_table[("1_x", 1, "m")] = "1_x"
    errs = validate(p)
    assert errs and all("m" in e for e in errs)


def test_symmetrize_planar_tree_operad(t2):
    for t in (corolla(2), linear(2), t2):
        sym = symmetrize(planar_omega_operad(t))
        assert validate(sym, 3) == []
        assert isomorphisms(sym, omega_operad(t))


def test_symmetrize_counts():
    p = build_operad(["x"], {"u": (("x",), "x")},
                     compose={("u", 1, "u"): "u"}, symmetric=False)
    assert len(symmetrize(p).ops) == len(p.ops)
    q = build_operad(["a", "b", "c", "d"], {"m": (("a", "b", "c"), "d")}, symmetric=False)
    want = sum(math.factorial(len(s.inputs)) for s in q.ops.values())
    assert len(symmetrize(q).ops) == want
    with pytest.raises(OperadError, match="already-symmetric"):
        symmetrize(symmetrize(q))


def test_sigma_free_detection(com):
    assert not is_sigma_free(com)
    assert is_sigma_free(to_table(omega_operad(corolla(2))))


def test_hom_from_eta():
    for _, q in standard_operads():
        assert len(hom_operads(omega_operad(eta("0")), q)) == len(q.colours)


def test_hom_from_corolla_counts_operations():
    for name, q in standard_operads():
        for n in range(3):
            maps = hom_operads(omega_operad(corolla(n)), q, max_arity=3)
            ops_n = [a for a, s in q.ops.items() if len(s.inputs) == n]
            assert len(maps) == len(ops_n), name


def test_hom_contains_identity():
    for _, q in standard_operads():
        assert identity_map(q) in hom_operads(q, q)


def test_omega_functorial():
    ts = enumerate_trees(2, 2)
    for s in ts:
        for t in ts:
            for a in arrows_between(s, t):
                f = omega_map(a)
                ps, pt = omega_operad(s), omega_operad(t)
                for op in ps.all_ops(len(s.edges)):
                    img = f(op)
                    assert pt.exists(img.inputs, img.output)


def test_found_maps_are_maps():
    for name, q in standard_operads()[:6]:
        for m in hom_operads(omega_operad(linear(2)), q, max_arity=3):
            p = to_table(omega_operad(linear(2)), 3)
            assert is_operad_map(p, q, m.colours, m.ops), name


def test_json_round_trip():
    for _, q in standard_operads():
        back = operad_from_json(operad_to_json(q))
        assert back.ops == q.ops and back.compose_table == q.compose_table
        assert back.sym == q.sym
    with pytest.raises(OperadError, match="malformed-operad-json"):
        operad_from_json({"colours": ["x"]})
