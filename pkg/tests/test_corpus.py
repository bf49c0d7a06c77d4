from dendroidal.corpus import (PERCOLATION_S, PERCOLATION_T, SAMPLE_TREE, corpus, map_names,
                               standard_operads)
from dendroidal.operad import is_operad_map, is_sigma_free, validate
from dendroidal.trees import corolla, eta, linear


def test_budget_zero_is_the_fixed_core():
    b = corpus(0, 0)
    assert [t for _, t in b.trees] == [eta("0"), corolla(1), corolla(2), linear(2), SAMPLE_TREE]
    assert b.tensor_pairs == [(PERCOLATION_S, PERCOLATION_T)]
    assert b.operads == [] and b.maps == []


def test_same_seed_same_digest():
    assert corpus(7, 2).digest() == corpus(7, 2).digest()
    assert corpus(0, 0).digest() == corpus(0, 0).digest()


def test_operads_validate():
    b = corpus(0, 2)
    assert len(b.operads) >= 10
    for name, p in b.operads:
        assert validate(p, 3) == [], name


def test_sigma_freeness():
    ops = dict(standard_operads())
    assert not is_sigma_free(ops["com"])
    assert not is_sigma_free(ops["com-twisted"])
    assert is_sigma_free(ops["Symm(pair)"])
    assert is_sigma_free(ops["Omega(T2)"])
    b = corpus(0, 2)
    assert len(b.sigma_free()) == len(b.operads) - 2


def test_maps_are_operad_maps():
    b = corpus(0, 2)
    assert len(map_names(b)) == len(b.maps)
    for src, tgt, m in b.maps:
        p, q = b.operad(src), b.operad(tgt)
        assert is_operad_map(p, q, m.colours, m.ops), (src, tgt)
