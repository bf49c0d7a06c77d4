"""Percolation schemes for the tensor product of two representables.

Edges of a scheme are named ``"a|x"`` for an edge ``a`` of the white tree
``s`` and an edge ``x`` of the black tree ``t``.  White vertices copy a
vertex of ``s`` at a fixed ``t``-colour; black vertices copy a vertex of
``t`` at a fixed ``s``-colour.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .dset import NerveDSet, all_faces
from .operad import ThinOperad
from .trees import Signature, Tree, Vertex, subtree_leaves

SEP = "|"


class PercolationError(ValueError):
    pass


def pair(a: str, x: str) -> str:
    return a + SEP + x


def split(e: str) -> tuple:
    a, x = e.split(SEP)
    return a, x


def _check_names(t: Tree):
    if any(SEP in e for e in t.edges):
        raise PercolationError("bad-edge-name")


@dataclass(frozen=True)
class PercolationScheme:
    tree: Tree
    colours: tuple  # sorted (vertex output, "white" | "black")

    @property
    def colour(self) -> dict:
        return dict(self.colours)

    def key(self) -> frozenset:
        c = self.colour
        return frozenset((v.output, frozenset(v.inputs), c[v.output]) for v in self.tree.vertices)

    def sort_key(self) -> str:
        c = self.colour
        return json.dumps(sorted([v.output, sorted(v.inputs), c[v.output]]
                                 for v in self.tree.vertices))

    def edge_label(self, e: str) -> tuple:
        return split(e)

    def to_json(self) -> dict:
        c = self.colour
        return {"root": self.tree.root,
                "vertices": [{"inputs": list(v.inputs), "output": v.output,
                              "colour": c[v.output]} for v in self.tree.vertices]}

    def to_dot(self, name: str = "scheme") -> str:
        c = self.colour
        lines = ["digraph %s {" % name, "  rankdir=BT;", '  root [shape=point];']
        for v in self.tree.vertices:
            style = "filled" if c[v.output] == "black" else "solid"
            lines.append('  "v_%s" [label="", shape=circle, style=%s];' % (v.output, style))
        for e in self.tree.edges:
            below = self.tree.vertex_below(e)
            dst = '"v_%s"' % below.output if below is not None else "root"
            if self.tree.has_vertex(e):
                src = '"v_%s"' % e
            else:
                src = '"leaf_%s"' % e
                lines.append('  %s [shape=point];' % src)
            lines.append('  %s -> %s [label="%s"];' % (src, dst, e))
        lines.append("}")
        return "\n".join(lines)


def _scheme(root: str, verts: list) -> PercolationScheme:
    tree = Tree(root, [Vertex(tuple(i), o) for i, o, _ in verts])
    return PercolationScheme(tree, tuple(sorted((o, c) for _, o, c in verts)))


def _tops(t: Tree) -> tuple:
    # η has no leaves, but a copy of the other factor still sits on its edge
    return t.leaves if t.vertices else (t.root,)


def minimal_scheme(s: Tree, t: Tree) -> PercolationScheme:
    """Copies of ``t`` stacked on every leaf of a copy of ``s``."""
    _check_names(s)
    _check_names(t)
    r = t.root
    verts = [([pair(a, r) for a in v.inputs], pair(v.output, r), "white") for v in s.vertices]
    for b in _tops(s):
        verts += [([pair(b, x) for x in w.inputs], pair(b, w.output), "black")
                  for w in t.vertices]
    return _scheme(pair(s.root, r), verts)


def maximal_scheme(s: Tree, t: Tree) -> PercolationScheme:
    """Copies of ``s`` stacked on every leaf of a copy of ``t``."""
    r = s.root
    verts = [([pair(r, x) for x in w.inputs], pair(r, w.output), "black") for w in t.vertices]
    for y in _tops(t):
        verts += [([pair(a, y) for a in v.inputs], pair(v.output, y), "white")
                  for v in s.vertices]
    return _scheme(pair(r, t.root), verts)


def percolation_step(p: PercolationScheme, s: Tree, t: Tree) -> list:
    """All schemes obtained by moving one black vertex below a white one."""
    tree, col = p.tree, p.colour
    out = []
    for v in tree.vertex_order():
        if col[v] != "white":
            continue
        b, y = split(v)
        if not t.has_vertex(y):
            continue
        vin = tree.vertex(v).inputs
        if any(not tree.has_vertex(z) or col[z] != "black" for z in vin):
            continue
        w = t.vertex(y)
        sv = s.vertex(b)
        new = []
        drop = set(vin) | {v}
        for u in tree.vertices:
            if u.output not in drop:
                new.append((u.inputs, u.output, col[u.output]))
        new.append(([pair(b, x) for x in w.inputs], pair(b, y), "black"))
        for x in w.inputs:
            new.append(([pair(a, x) for a in sv.inputs], pair(b, x), "white"))
        out.append(_scheme(tree.root, new))
    return out


@dataclass
class SchemePoset:
    schemes: list      # in discovery order, minimum first
    covering: list     # (i, j): schemes[j] is one step from schemes[i]

    def minimum(self) -> list:
        targets = {j for _, j in self.covering}
        return [i for i in range(len(self.schemes)) if i not in targets]

    def maximum(self) -> list:
        sources = {i for i, _ in self.covering}
        return [i for i in range(len(self.schemes)) if i not in sources]

    def to_dot(self, name: str = "schemes") -> str:
        lines = ["digraph %s {" % name]
        for k in range(len(self.schemes)):
            lines.append('  T%d [label="T%d"];' % (k + 1, k + 1))
        for i, j in sorted(self.covering):
            lines.append("  T%d -> T%d;" % (i + 1, j + 1))
        lines.append("}")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {"schemes": [p.to_json() for p in self.schemes],
                "covering": [list(c) for c in sorted(self.covering)]}


def enumerate_schemes(s: Tree, t: Tree) -> SchemePoset:
    start = minimal_scheme(s, t)
    index = {start.key(): 0}
    schemes = [start]
    cover = set()
    k = 0
    while k < len(schemes):
        for q in percolation_step(schemes[k], s, t):
            key = q.key()
            if key not in index:
                index[key] = len(schemes)
                schemes.append(q)
            cover.add((k, index[key]))
        k += 1
    return SchemePoset(schemes, sorted(cover))


def linearize(poset: SchemePoset) -> list:
    """Topological order with ties broken by the canonical labelled form."""
    n = len(poset.schemes)
    indeg = [0] * n
    succ = {i: [] for i in range(n)}
    for i, j in poset.covering:
        succ[i].append(j)
        indeg[j] += 1
    ready = [i for i in range(n) if indeg[i] == 0]
    order = []
    while ready:
        ready.sort(key=lambda i: poset.schemes[i].sort_key())
        i = ready.pop(0)
        order.append(i)
        for j in succ[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                ready.append(j)
    if len(order) != n:
        raise PercolationError("not-a-poset")
    return [poset.schemes[i] for i in order]


def project_white(p: PercolationScheme) -> set:
    """Vertex signatures of the white tree read off from white vertices."""
    col = p.colour
    return {(split(v.output)[0], tuple(split(z)[0] for z in v.inputs))
            for v in p.tree.vertices if col[v.output] == "white"}


def project_black(p: PercolationScheme) -> set:
    col = p.colour
    return {(split(v.output)[1], tuple(split(z)[1] for z in v.inputs))
            for v in p.tree.vertices if col[v.output] == "black"}


# tensor product as a thin operad -------------------------------------------------------
def face_key(t: Tree) -> tuple:
    """Labelled face identity: root and unordered vertex signatures."""
    return (t.root, frozenset((v.output, frozenset(v.inputs)) for v in t.vertices))


def downset(t: Tree) -> frozenset:
    return frozenset(face_key(f) for f in all_faces(t))


class TensorOperad(ThinOperad):
    """The operad whose nerve is the tensor of two representables,
    presented by the subtree signatures of all percolation schemes."""

    def __init__(self, s: Tree, t: Tree):
        self.s = s
        self.t = t
        self.poset = enumerate_schemes(s, t)
        self.colours = tuple(pair(a, x) for a in s.edges for x in t.edges)
        self.name = "Omega(%s)(x)Omega(%s)" % (s.root, t.root)
        sigs = set()
        for p in self.poset.schemes:
            for e in p.tree.edges:
                for leaves in subtree_leaves(p.tree, e):
                    sigs.add((frozenset(leaves), e))
        self._sigs = sigs
        by = {}
        for ins, out in sigs:
            by.setdefault((out, len(ins)), []).append(ins)
        self._by = by

    def exists(self, ins, out):
        if len(ins) == 1 and ins[0] == out:
            return True
        return len(set(ins)) == len(ins) and (frozenset(ins), out) in self._sigs

    def ops_with(self, output, arity):
        import itertools
        res = set()
        for ins in self._by.get((output, arity), ()):
            for perm in itertools.permutations(sorted(ins)):
                res.add(Signature(perm, output))
        if arity == 1:
            res.add(Signature((output,), output))
        return sorted(res)


def tensor(s: Tree, t: Tree, bound: int = 4, valence: int = 3) -> NerveDSet:
    op = TensorOperad(s, t)
    x = NerveDSet(op, bound, valence, name="Omega[%s](x)Omega[%s]" % (s.root, t.root))
    return x


def tensor_dendrices(s: Tree, t: Tree, shape: Tree) -> list:
    return tensor(s, t).dendrices(shape)


def scheme_mono(p: PercolationScheme) -> dict:
    """Edge-level embedding of a scheme: each edge goes to its own pair colour."""
    return {e: split(e) for e in p.tree.edges}
