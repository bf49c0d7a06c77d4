"""Finite rooted planar trees with named edges.

A tree is a root edge plus a set of vertices.  Each vertex has an ordered
list of input edges and a single output edge, so a vertex is identified by
its output edge throughout the package.  The single-edge tree has no
vertices; vertices without inputs (stumps) are allowed.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple


class TreeError(ValueError):
    """Raised with a short machine-readable tag as its message."""


class Vertex(NamedTuple):
    inputs: tuple
    output: str


class Signature(NamedTuple):
    inputs: tuple
    output: str


@dataclass(frozen=True)
class Tree:
    """Immutable planar rooted tree.

    Parameters
    ----------
    root : str
        Name of the root (output) edge.
    vertices : iterable of Vertex or (inputs, output) pairs
        Planar order is the order of each vertex's input list.

    Examples
    --------
    >>> t = Tree("a", [(("b", "c"), "a")])
    >>> t.leaves
    ('b', 'c')
    """

    root: str
    vertices: tuple = ()
    _below: dict = field(default=None, init=False, repr=False, compare=False, hash=False)
    _above: dict = field(default=None, init=False, repr=False, compare=False, hash=False)
    _edges: tuple = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        verts = []
        for v in self.vertices:
            ins, out = (v.inputs, v.output) if isinstance(v, Vertex) else v
            verts.append(Vertex(tuple(str(x) for x in ins), str(out)))
        verts.sort(key=lambda v: v.output)
        object.__setattr__(self, "root", str(self.root))
        object.__setattr__(self, "vertices", tuple(verts))
        above = {}
        below = {}
        for v in verts:
            if v.output in above:
                raise TreeError("duplicate-output")
            above[v.output] = v
            for x in v.inputs:
                if x in below:
                    raise TreeError("edge-input-twice")
                below[x] = v
        if self.root in below:
            raise TreeError("root-is-input")
        for v in verts:
            if v.output != self.root and v.output not in below:
                raise TreeError("disconnected")
        object.__setattr__(self, "_above", above)
        object.__setattr__(self, "_below", below)
        order = []
        stack = [self.root]
        seen = set()
        while stack:
            e = stack.pop()
            if e in seen:
                raise TreeError("cycle")
            seen.add(e)
            order.append(e)
            if e in above:
                stack.extend(reversed(above[e].inputs))
        if len(order) != len(below) + 1:
            raise TreeError("disconnected")
        object.__setattr__(self, "_edges", tuple(order))

    # structure -----------------------------------------------------------
    @property
    def edges(self) -> tuple:
        """Edges in planar preorder, root first."""
        return self._edges

    @property
    def leaves(self) -> tuple:
        if not self.vertices:
            return ()
        return tuple(e for e in self._edges if e not in self._above)

    @property
    def inner_edges(self) -> tuple:
        return tuple(e for e in self._edges if e in self._above and e in self._below)

    def vertex(self, out: str) -> Vertex:
        return self._above[out]

    def vertex_above(self, e: str):
        return self._above.get(e)

    def vertex_below(self, e: str):
        return self._below.get(e)

    def has_vertex(self, out: str) -> bool:
        return out in self._above

    def vertex_order(self) -> tuple:
        """Vertex names (output edges) in planar preorder."""
        return tuple(e for e in self._edges if e in self._above)

    def is_leaf(self, e: str) -> bool:
        return bool(self.vertices) and e not in self._above

    def is_inner(self, e: str) -> bool:
        return e in self._above and e in self._below

    def is_eta(self) -> bool:
        return not self.vertices

    def is_linear(self) -> bool:
        return all(len(v.inputs) == 1 for v in self.vertices)

    def top_vertices(self) -> tuple:
        return tuple(o for o in self.vertex_order()
                     if not any(x in self._above for x in self._above[o].inputs))

    def inner_attached(self, out: str) -> tuple:
        v = self._above[out]
        res = [x for x in v.inputs if x in self._above]
        if out != self.root:
            res.append(out)
        return tuple(res)

    def edges_above(self, e: str) -> tuple:
        """All edges at or above ``e`` in planar preorder."""
        res = []
        stack = [e]
        while stack:
            x = stack.pop()
            res.append(x)
            if x in self._above:
                stack.extend(reversed(self._above[x].inputs))
        return tuple(res)

    def leaves_above(self, e: str) -> tuple:
        return tuple(x for x in self.edges_above(e) if x not in self._above)

    def path_to_root(self, e: str) -> tuple:
        res = [e]
        while res[-1] in self._below:
            res.append(self._below[res[-1]].output)
        return tuple(res)

    def rename(self, mapping: dict) -> "Tree":
        m = lambda x: mapping.get(x, x)
        return Tree(m(self.root), [Vertex(tuple(m(x) for x in v.inputs), m(v.output))
                                   for v in self.vertices])

    def __str__(self):
        return "Tree(%s)" % json.dumps(to_json(self), sort_keys=True)

    __repr__ = __str__


def eta(name: str = "0") -> Tree:
    return Tree(name, ())


def corolla(n: int, root: str = "0") -> Tree:
    """C_n with root ``0`` and leaves ``1..n``."""
    return Tree(root, [(tuple(str(i) for i in range(1, n + 1)), root)])


def linear(n: int) -> Tree:
    """The linear tree with edges 0..n, leaf 0 and root n."""
    return Tree(str(n), [((str(k - 1),), str(k)) for k in range(1, n + 1)])


# JSON / DOT -------------------------------------------------------------
def to_json(t: Tree) -> dict:
    return {"root": t.root,
            "vertices": [{"inputs": list(t.vertex(o).inputs), "output": o}
                         for o in t.vertex_order()]}


def from_json(obj) -> Tree:
    if isinstance(obj, str):
        obj = json.loads(obj)
    try:
        return Tree(obj["root"], [(tuple(v["inputs"]), v["output"])
                                  for v in obj.get("vertices", [])])
    except (KeyError, TypeError) as exc:
        raise TreeError("malformed-tree-json: %s" % exc) from None


def to_dot(t: Tree, name: str = "tree") -> str:
    """DOT rendering with leaves on top and the root at the bottom."""
    lines = ["digraph %s {" % name, "  rankdir=BT;", "  node [shape=point];"]
    lines.append('  "root_end" [shape=none,label=""];')
    for o in t.vertex_order():
        lines.append('  "v_%s" [shape=circle,label="",width=0.15];' % o)
    for e in t.edges:
        top = "v_%s" % e if t.has_vertex(e) else "leaf_%s" % e
        if not t.has_vertex(e):
            lines.append('  "%s" [shape=none,label=""];' % top)
        bot = t.vertex_below(e)
        bottom = "v_%s" % bot.output if bot is not None else "root_end"
        lines.append('  "%s" -> "%s" [dir=none,label="%s"];' % (top, bottom, e))
    lines.append("}")
    return "\n".join(lines)


# basic operations -------------------------------------------------------
def degree(t: Tree) -> int:
    return len(t.vertices)


def classify_edges(t: Tree) -> dict:
    if t.is_eta():
        return {"root": {t.root}, "leaves": set(), "inner": set()}
    return {"root": {t.root}, "leaves": set(t.leaves), "inner": set(t.inner_edges)}


def _fresh(name: str, used: set) -> str:
    cand = name
    while cand in used:
        cand += "'"
    return cand


def graft(t: Tree, leaf: str, s: Tree) -> Tree:
    """Graft ``s`` onto the leaf ``leaf`` of ``t``.

    Colliding edge names of ``s`` receive primes until they are fresh; the
    renaming depends only on the two inputs.
    """
    if t.is_eta():
        if leaf != t.root:
            raise TreeError("not-a-leaf")
    elif not t.is_leaf(leaf):
        raise TreeError("not-a-leaf")
    used = set(t.edges)
    mapping = {s.root: leaf}
    for e in s.edges[1:]:
        new = _fresh(e, used)
        used.add(new)
        mapping[e] = new
    s2 = s.rename(mapping)
    return Tree(t.root, list(t.vertices) + list(s2.vertices))


def subtree_leaves(t: Tree, e: str) -> list:
    """Leaf tuples (planar order) of every subtree of ``t`` rooted at ``e``.

    The unit subtree on ``e`` alone contributes ``(e,)``.
    """
    def rec(x):
        opts = [(x,)]
        v = t.vertex_above(x)
        if v is not None:
            parts = [rec(y) for y in v.inputs]
            for combo in itertools.product(*parts):
                opts.append(tuple(itertools.chain.from_iterable(combo)))
        return opts
    return rec(e)


def _walk(t: Tree, root: str, leafset: frozenset):
    """Return (vertices, inner) of the subtree with given root and leaf set."""
    verts = []
    inner = set()
    reached = []
    stack = [root]
    while stack:
        x = stack.pop()
        if x in leafset:
            reached.append(x)
            continue
        v = t.vertex_above(x)
        if v is None:
            return None
        if x != root:
            inner.add(x)
        verts.append(v)
        stack.extend(v.inputs)
    if sorted(reached) != sorted(leafset):
        return None
    return verts, inner


def subtree_of_signature(t: Tree, sig) -> tuple | None:
    """The subtree with root ``sig.output`` and leaf set ``sig.inputs``.

    Returns ``(subtree, inner_edges)`` or ``None`` if no such subtree exists.
    """
    ins, out = tuple(sig[0]), sig[1]
    if len(set(ins)) != len(ins):
        return None
    if out not in t.edges or any(x not in t.edges for x in ins):
        return None
    if ins == (out,):
        return Tree(out, ()), frozenset()
    if out in ins:
        return None
    res = _walk(t, out, frozenset(ins))
    if res is None:
        return None
    verts, inner = res
    return Tree(out, verts), frozenset(inner)


def signature_compose(t: Tree, sigma, rho, i: int) -> Signature:
    """``sigma ∘_i rho`` with ``i`` counted from 1."""
    s_in, s_out = tuple(sigma[0]), sigma[1]
    r_in, r_out = tuple(rho[0]), rho[1]
    if not 1 <= i <= len(s_in) or s_in[i - 1] != r_out:
        raise TreeError("graft-mismatch")
    return Signature(s_in[:i - 1] + r_in + s_in[i:], s_out)


# canonical forms --------------------------------------------------------
def _code(t: Tree, e: str):
    v = t.vertex_above(e)
    if v is None:
        return (0,)
    return (1, tuple(sorted(_code(t, x) for x in v.inputs)))


def tree_code(t: Tree):
    """Isomorphism invariant that ignores names and planar order."""
    return _code(t, t.root)


def canonical_form(t: Tree) -> tuple:
    """Return ``(canonical_tree, iso)`` with ``iso`` mapping edges of ``t``.

    Children are sorted by their AHU code and edges renamed ``0, 1, ...``
    in the resulting preorder.  Ties between equal codes are broken by the
    input order of ``t``; any choice gives the same canonical tree.
    """
    codes = {}
    for e in reversed(t.edges):
        codes[e] = _code_memo(t, e, codes)
    iso = {}
    verts = []
    counter = itertools.count()
    stack = [t.root]
    order = []
    while stack:
        e = stack.pop()
        iso[e] = str(next(counter))
        order.append(e)
        v = t.vertex_above(e)
        if v is not None:
            kids = sorted(range(len(v.inputs)), key=lambda k: (codes[v.inputs[k]], k))
            stack.extend(reversed([v.inputs[k] for k in kids]))
    for e in order:
        v = t.vertex_above(e)
        if v is not None:
            kids = sorted(range(len(v.inputs)), key=lambda k: (codes[v.inputs[k]], k))
            verts.append((tuple(iso[v.inputs[k]] for k in kids), iso[e]))
    return Tree(iso[t.root], verts), iso


def _code_memo(t, e, codes):
    v = t.vertex_above(e)
    if v is None:
        return (0,)
    return (1, tuple(sorted(codes[x] for x in v.inputs)))


def isomorphic(s: Tree, t: Tree) -> bool:
    return tree_code(s) == tree_code(t)


def _from_code(code) -> Tree:
    verts = []
    counter = itertools.count()

    def build(c):
        name = str(next(counter))
        if c[0] == 1:
            kids = [build(k) for k in c[1]]
            verts.append((tuple(kids), name))
        return name
    root = build(code)
    return Tree(root, verts)


def _codes_by_size(max_vertices: int, max_valence: int) -> dict:
    by_n = {0: [(0,)]}
    for n in range(1, max_vertices + 1):
        found = set()
        pool = [(c, k) for k in range(n) for c in by_n[k]]
        for arity in range(0, max_valence + 1):
            for combo in itertools.combinations_with_replacement(range(len(pool)), arity):
                if sum(pool[j][1] for j in combo) != n - 1:
                    continue
                found.add((1, tuple(sorted(pool[j][0] for j in combo))))
        by_n[n] = sorted(found)
    return by_n


def enumerate_trees(max_vertices: int, max_valence: int) -> list:
    """All trees up to isomorphism with bounded degree and valence.

    Ordered by degree, then by AHU code.

    >>> [degree(t) for t in enumerate_trees(1, 2)]
    [0, 1, 1, 1]
    """
    by_n = _codes_by_size(max_vertices, max_valence)
    out = []
    for n in range(0, max_vertices + 1):
        for c in by_n[n]:
            out.append(canonical_form(_from_code(c))[0])
    return out


def trees_equal(s: Tree, t: Tree) -> bool:
    return s == t


def vertex_signature(t: Tree, out: str) -> Signature:
    v = t.vertex(out)
    return Signature(v.inputs, v.output)


def max_valence(t: Tree) -> int:
    return max((len(v.inputs) for v in t.vertices), default=0)


def subtree_edges(t: Tree, root: str, leaves: Iterable[str]) -> tuple:
    res = subtree_of_signature(t, (tuple(leaves), root))
    return None if res is None else res[0].edges
