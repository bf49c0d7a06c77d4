"""Seeded fixture bundles: trees, finite operads, operad maps and diagrams."""
from __future__ import annotations

import hashlib
import json
import random
from dataclasses import dataclass, field

from .operad import (ColoredOperad, OperadMap, build_operad, hom_operads, identity_map,
                     is_sigma_free, omega_operad, operad_to_json, planar_omega_operad,
                     symmetrize, to_table)
from .trees import Tree, corolla, enumerate_trees, eta, linear, to_json

ARITY = 3

SAMPLE_TREE = Tree("a", [(("b", "c", "d"), "a"), (("e", "f"), "b"), ((), "d")])
PERCOLATION_S = Tree("r", [(("e",), "r"), (("l1", "l2"), "e")])
PERCOLATION_T = Tree("1", [(("2", "4"), "1"), (("3",), "2"), (("5",), "4")])


def commutative_fixture() -> ColoredOperad:
    """One binary operation fixed by the transposition."""
    return build_operad(["a", "b"], {"m": (("a", "a"), "b")}, sym={("m", (1, 0)): "m"},
                        name="com")


def twisted_commutative() -> ColoredOperad:
    """``com`` plus an involution on the output colour."""
    return build_operad(
        ["a", "b"],
        {"m": (("a", "a"), "b"), "n": (("a", "a"), "b"), "u": (("b",), "b")},
        compose={("u", 1, "m"): "n", ("u", 1, "n"): "m", ("u", 1, "u"): "1_b"},
        sym={("m", (1, 0)): "m", ("n", (1, 0)): "n"},
        name="com-twisted")


def involution() -> ColoredOperad:
    return build_operad(["x"], {"g": (("x",), "x")}, compose={("g", 1, "g"): "1_x"},
                        name="Z/2")


def swapped_pair() -> ColoredOperad:
    """Free symmetric operad on one operation with two distinct input colours."""
    planar = build_operad(["a", "b", "c"], {"p": (("a", "b"), "c")}, symmetric=False,
                          name="pair")
    return symmetrize(planar, "Symm(pair)")


def standard_operads() -> list:
    ops = [
        ("Omega(eta)", to_table(omega_operad(eta("0")), ARITY)),
        ("Omega(C0)", to_table(omega_operad(corolla(0)), ARITY)),
        ("Omega(C1)", to_table(omega_operad(corolla(1)), ARITY)),
        ("Omega(C2)", to_table(omega_operad(corolla(2)), ARITY)),
        ("Omega(i2)", to_table(omega_operad(linear(2)), ARITY)),
        ("Omega(T2)", to_table(omega_operad(SAMPLE_TREE), ARITY)),
        ("Symm(planar C2)", symmetrize(planar_omega_operad(corolla(2)))),
        ("Symm(pair)", swapped_pair()),
        ("Z/2", involution()),
        ("com", commutative_fixture()),
        ("com-twisted", twisted_commutative()),
    ]
    return ops


@dataclass
class Bundle:
    trees: list = field(default_factory=list)       # (name, Tree)
    operads: list = field(default_factory=list)     # (name, ColoredOperad)
    maps: list = field(default_factory=list)        # (source name, target name, OperadMap)
    tensor_pairs: list = field(default_factory=list)  # (S, T)

    def operad(self, name: str) -> ColoredOperad:
        return dict(self.operads)[name]

    def sigma_free(self) -> list:
        return [(n, p) for n, p in self.operads if is_sigma_free(p)]

    def to_json(self) -> dict:
        return {
            "trees": [[n, to_json(t)] for n, t in self.trees],
            "operads": [[n, operad_to_json(p)] for n, p in self.operads],
            "maps": [[a, b, [list(map(str, x)) for x in m.colour_map],
                      [list(map(str, x)) for x in m.op_map]] for a, b, m in self.maps],
            "tensor_pairs": [[to_json(s), to_json(t)] for s, t in self.tensor_pairs],
        }

    def digest(self) -> str:
        blob = json.dumps(self.to_json(), sort_keys=True).encode()
        return hashlib.sha256(blob).hexdigest()


MAP_PAIRS = [("Omega(C2)", "com"), ("Omega(i2)", "Z/2"), ("Omega(C1)", "Omega(i2)"),
             ("Omega(C2)", "Omega(T2)"), ("com", "com-twisted"), ("Omega(C2)", "Symm(pair)")]


def corpus(seed: int = 0, budget: int = 0) -> Bundle:
    """Deterministic fixtures.  ``budget`` adds that many random trees (and
    their tree operads) on top of the fixed core."""
    b = Bundle()
    b.trees = [("eta", eta("0")), ("C1", corolla(1)), ("C2", corolla(2)), ("i2", linear(2)),
               ("T2", SAMPLE_TREE)]
    b.tensor_pairs = [(PERCOLATION_S, PERCOLATION_T)]
    if budget == 0:
        return b
    rng = random.Random(seed)
    pool = enumerate_trees(3, 3)
    b.operads = standard_operads()
    for k in range(budget):
        t = rng.choice(pool)
        b.trees.append(("random%d" % k, t))
        b.operads.append(("Omega(random%d)" % k, to_table(omega_operad(t), ARITY)))
    ops = dict(b.operads)
    for name, p in b.operads:
        b.maps.append((name, name, identity_map(p)))
    for src, tgt in MAP_PAIRS:
        found = hom_operads(ops[src], ops[tgt], max_arity=ARITY)
        rng.shuffle(found)
        b.maps.extend((src, tgt, m) for m in found[:2])
    return b


def map_names(b: Bundle) -> list:
    return ["%s -> %s" % (a, c) for a, c, _ in b.maps]


__all__ = ["Bundle", "corpus", "standard_operads", "commutative_fixture", "involution",
           "twisted_commutative", "swapped_pair", "SAMPLE_TREE", "PERCOLATION_S",
           "PERCOLATION_T", "OperadMap", "map_names"]
