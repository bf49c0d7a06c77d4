"""Degree-bounded dendroidal sets.

A dendroidal set answers two questions: which dendrices live on a tree,
and how an arrow of trees acts on them.  Backends:

* :class:`NerveDSet` computes dendrices of an operad's nerve as labellings
  of a planar representative (edges get colours, vertices get operations).
* :class:`Representable` and :class:`Sieve` use arrows into a fixed tree.
* :class:`TableDSet` stores explicit tables on canonical trees and routes
  every other tree through its canonical isomorphism.
* :class:`IShriek` extends a simplicial set by emptiness off linear trees.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import NamedTuple

from . import omega
from .omega import OmegaArrow, arrows_between, compose, faces, identity
from .operad import Operad
from .trees import (Tree, TreeError, canonical_form, degree, enumerate_trees,
                    from_json, max_valence, subtree_of_signature, to_json)


class DSetError(ValueError):
    pass


class Labelling(NamedTuple):
    colours: tuple  # sorted (edge, colour)
    ops: tuple      # sorted (vertex, operation)

    def colour(self, e):
        return dict(self.colours)[e]

    def op(self, v):
        return dict(self.ops)[v]


class DendroidalSet:
    """Base class; subclasses implement ``_dendrices`` and ``act``."""

    bound = 4
    valence = 3
    name = "X"

    def __init__(self):
        self._cache = {}

    def dendrices(self, t: Tree) -> list:
        res = self._cache.get(t)
        if res is None:
            res = self._dendrices(t)
            self._cache[t] = res
        return res

    def _dendrices(self, t: Tree) -> list:
        raise NotImplementedError

    def act(self, a: OmegaArrow, x):
        raise NotImplementedError

    def shapes(self, bound: int | None = None, valence: int | None = None) -> list:
        b = self.bound if bound is None else bound
        v = self.valence if valence is None else valence
        return enumerate_trees(b, v)

    def counts(self, bound: int | None = None) -> dict:
        return {json.dumps(to_json(t), sort_keys=True): len(self.dendrices(t))
                for t in self.shapes(bound)}


# nerves ------------------------------------------------------------------------
class NerveDSet(DendroidalSet):
    """Nerve of an operad; a dendrex is an operad map from the tree operad,
    recorded as a labelling of the given planar tree."""

    def __init__(self, operad: Operad, bound: int = 4, valence: int = 3, name: str = ""):
        super().__init__()
        self.operad = operad
        self.bound = bound
        self.valence = valence
        self.name = name or "N(%s)" % getattr(operad, "name", "")
        self._eval_cache = {}

    def _dendrices(self, t):
        P = self.operad
        if t.is_eta():
            return [Labelling(((t.root, c),), ()) for c in P.colours]
        order = t.vertex_order()
        out = []

        def rec(k, cols, ops):
            if k == len(order):
                out.append(Labelling(tuple(sorted(cols.items())), tuple(sorted(ops.items()))))
                return
            v = t.vertex(order[k])
            for op in P.ops_with(cols[v.output], len(v.inputs)):
                s = P.signature(op)
                ops[v.output] = op
                for x, c in zip(v.inputs, s.inputs):
                    cols[x] = c
                rec(k + 1, cols, ops)
            ops.pop(v.output, None)

        for c in P.colours:
            rec(0, {t.root: c}, {})
        return out

    def evaluate(self, t: Tree, x: Labelling, ins: tuple, out: str):
        """Operation assigned by ``x`` to the subtree with leaves ``ins`` and root ``out``."""
        P = self.operad
        cols = dict(x.colours)
        if len(ins) == 1 and ins[0] == out:
            return P.unit(cols[out])
        sub = subtree_of_signature(t, (ins, out))
        if sub is None:
            raise DSetError("not-a-subtree")
        ops = dict(x.ops)
        leafset = set(ins)

        def val(y):
            if y in leafset:
                return None
            op = ops[y]
            v = t.vertex(y)
            for k in range(len(v.inputs) - 1, -1, -1):
                child = val(v.inputs[k])
                if child is not None:
                    op = P.compose(op, k + 1, child)
                    if op is None:
                        raise DSetError("composite-undefined")
            return op

        op = val(out)
        planar = sub[0].leaves if sub[0].vertices else ()
        perm = tuple(planar.index(z) for z in ins)
        if perm != tuple(range(len(perm))):
            op = P.act(op, perm)
        return op

    def act(self, a, x):
        key = (a, x)
        res = self._eval_cache.get(key)
        if res is not None:
            return res
        cols = dict(x.colours)
        ncols = tuple(sorted((e, cols[a(e)]) for e in a.source.edges))
        nops = []
        for v in a.source.vertices:
            ins = tuple(a(z) for z in v.inputs)
            nops.append((v.output, self.evaluate(a.target, x, ins, a(v.output))))
        res = Labelling(ncols, tuple(sorted(nops)))
        self._eval_cache[key] = res
        return res

    def apply_map(self, f, x: Labelling) -> Labelling:
        """Push a labelling along an operad map given as (colour dict, op dict)."""
        cmap, omap = f
        return Labelling(tuple(sorted((e, cmap[c]) for e, c in x.colours)),
                         tuple(sorted((v, omap[o]) for v, o in x.ops)))


def nerve(operad: Operad, bound: int = 4, valence: int = 3) -> NerveDSet:
    return NerveDSet(operad, bound, valence)


# representables and sieves ------------------------------------------------------
class Representable(DendroidalSet):
    def __init__(self, tree: Tree, bound: int = 4, valence: int = 3):
        super().__init__()
        self.tree = tree
        self.bound = bound
        self.valence = valence
        self.name = "Omega[%s]" % tree.root

    def _dendrices(self, t):
        return arrows_between(t, self.tree)

    def act(self, a, x):
        return compose(x, a)


def representable(t: Tree, bound: int = 4, valence: int = 3) -> Representable:
    return Representable(t, bound, valence)


def factors_through(a: OmegaArrow, m: OmegaArrow):
    """The arrow ``g`` with ``m ∘ g == a`` when ``m`` is a mono, else ``None``."""
    inv = {y: x for x, y in m.edge_map}
    try:
        g = OmegaArrow(a.source, m.source, {e: inv[a(e)] for e in a.source.edges})
    except KeyError:
        return None
    return g if omega.is_valid(g) else None


class Sieve(Representable):
    """Subobject of a representable given by monos into its tree."""

    def __init__(self, tree: Tree, maximal, bound: int = 4, valence: int = 3, name=""):
        super().__init__(tree, bound, valence)
        self.maximal = tuple(maximal)
        self.name = name or "Sieve[%s]" % tree.root

    def contains(self, a: OmegaArrow) -> bool:
        return any(factors_through(a, m) is not None for m in self.maximal)

    def _dendrices(self, t):
        return [a for a in arrows_between(t, self.tree) if self.contains(a)]

    def maximal_trees(self) -> list:
        return [m.source for m in self.maximal]

    def same_as(self, other: "Sieve", bound: int | None = None, valence: int | None = None) -> bool:
        if self.tree != other.tree:
            return False
        for s in self.shapes(bound, valence):
            if set(self.dendrices(s)) != set(other.dendrices(s)):
                return False
        return True


def full_sieve(t: Tree) -> Sieve:
    return Sieve(t, [identity(t)], name="Omega[%s]" % t.root)


def boundary(t: Tree) -> Sieve:
    if t.is_eta():
        raise DSetError("eta-has-no-boundary")
    return Sieve(t, [f for _, _, f in faces(t)], name="boundary")


def horn(t: Tree, edges) -> Sieve:
    """Union of all faces except the inner faces at ``edges``."""
    edges = set(edges)
    if not edges or any(not t.is_inner(e) for e in edges):
        raise DSetError("bad-horn-spec")
    keep = [f for kind, name, f in faces(t) if not (kind == "inner" and name in edges)]
    return Sieve(t, keep, name="horn%s" % sorted(edges))


def outer_horn(t: Tree) -> Sieve:
    return horn(t, t.inner_edges)


# face posets and maps out of sieves -------------------------------------------------
_FACE_CACHE = {}


def all_faces(t: Tree) -> list:
    """Every face of ``t`` (iterated codimension-one faces), ``t`` first."""
    res = _FACE_CACHE.get(t)
    if res is not None:
        return res
    seen = {t: None}
    frontier = [t]
    while frontier:
        nxt = []
        for f in frontier:
            for _, _, a in faces(f):
                if a.source not in seen:
                    seen[a.source] = None
                    nxt.append(a.source)
        frontier = nxt
    res = list(seen)
    _FACE_CACHE[t] = res
    return res


def inclusion(sub: Tree, t: Tree) -> OmegaArrow:
    return OmegaArrow(sub, t, {e: e for e in sub.edges})


_SUBFACE_CACHE = {}


def is_subface(sub: Tree, t: Tree) -> bool:
    key = (sub, t)
    res = _SUBFACE_CACHE.get(key)
    if res is None:
        res = set(sub.edges) <= set(t.edges) and omega.is_valid(inclusion(sub, t))
        _SUBFACE_CACHE[key] = res
    return res


def _common_maximal(fa: Tree, fb: Tree, pool: list) -> list:
    common = [g for g in pool if is_subface(g, fa) and is_subface(g, fb)]
    return [g for g in common if not any(h != g and is_subface(g, h) for h in common)]


_STRUCTURE_CACHE = {}


def _sieve_structure(tree: Tree, maximal: tuple):
    key = (tree, maximal)
    res = _STRUCTURE_CACHE.get(key)
    if res is not None:
        return res
    tops = [omega.image_tree(m) for m in maximal]
    fixes = [omega.OmegaArrow(m.source, t, m.mapping) for m, t in zip(maximal, tops)]
    pool = all_faces(tree)
    pairs = {}
    for i in range(len(tops)):
        for j in range(i):
            pairs[(i, j)] = [(inclusion(g, tops[i]), inclusion(g, tops[j]))
                             for g in _common_maximal(tops[i], tops[j], pool)]
    res = (tops, fixes, pairs)
    _STRUCTURE_CACHE[key] = res
    return res


def hom_into(a, x: DendroidalSet) -> list:
    """All maps from a sieve (or representable) into ``x``.

    A map is a tuple of dendrices, one per maximal face (in order), that
    agree on every common face of each pair.
    """
    if isinstance(a, Tree):
        a = full_sieve(a)
    if not isinstance(a, Sieve):
        raise DSetError("unsupported-domain")
    tops, fixes, pairs = _sieve_structure(a.tree, a.maximal)
    k = len(tops)
    cands = [x.dendrices(t) for t in tops]
    out = []
    chosen = []

    def rec(i):
        if i == k:
            out.append(tuple(x.act(fx, c) for fx, c in zip(fixes, chosen)))
            return
        for c in cands[i]:
            ok = True
            for j in range(i):
                for gi, gj in pairs[(i, j)]:
                    if x.act(gi, c) != x.act(gj, chosen[j]):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                chosen.append(c)
                rec(i + 1)
                chosen.pop()

    rec(0)
    return out


def restrict_to(a: Sieve, x: DendroidalSet, d) -> tuple:
    """The family a dendrex on the sieve's tree induces on its maximal faces."""
    return tuple(x.act(m, d) for m in a.maximal)


def hom_into_oracle(a: Sieve, x: DendroidalSet, bound: int, valence: int) -> int:
    """Count maps by checking naturality on every dendrex up to ``bound``."""
    tops = a.maximal
    shapes = enumerate_trees(bound, valence)
    elements = {s: a.dendrices(s) for s in shapes}
    count = 0
    for fam in itertools.product(*[x.dendrices(m.source) for m in tops]):
        value = {}
        ok = True
        for s in shapes:
            for d in elements[s]:
                vals = set()
                for m, xm in zip(tops, fam):
                    g = factors_through(d, m)
                    if g is not None:
                        vals.add(x.act(g, xm))
                if len(vals) != 1:
                    ok = False
                    break
                value[(s, d)] = vals.pop()
            if not ok:
                break
        if ok:
            for s in shapes:
                for s2 in shapes:
                    for beta in arrows_between(s2, s):
                        for d in elements[s]:
                            if x.act(beta, value[(s, d)]) != value[(s2, compose(d, beta))]:
                                ok = False
                                break
                        if not ok:
                            break
                    if not ok:
                        break
                if not ok:
                    break
        if ok:
            count += 1
    return count


# tables -----------------------------------------------------------------------------
def _canon(t: Tree):
    return canonical_form(t)


class TableDSet(DendroidalSet):
    """Explicit finite presheaf on canonical trees.

    ``cells`` maps each canonical tree to its list of dendrex ids and
    ``actions`` maps ``(source, target, edge_map)`` of arrows between
    canonical trees to ``{id: id}``.
    """

    def __init__(self, cells: dict, actions: dict, bound: int, valence: int, name="table"):
        super().__init__()
        self.cells = cells
        self.actions = actions
        self.bound = bound
        self.valence = valence
        self.name = name

    def _dendrices(self, t):
        c, _ = _canon(t)
        return list(self.cells.get(c, ()))

    def act(self, a, x):
        cs, iso_s = _canon(a.source)
        ct, iso_t = _canon(a.target)
        em = tuple(sorted((iso_s[e], iso_t[a(e)]) for e in a.source.edges))
        try:
            return self.actions[(cs, ct, em)][x]
        except KeyError:
            raise DSetError("action-outside-table") from None


def materialize(x: DendroidalSet, bound: int | None = None, valence: int | None = None,
                name: str = "") -> TableDSet:
    b = x.bound if bound is None else bound
    v = x.valence if valence is None else valence
    shapes = enumerate_trees(b, v)
    cells = {}
    ids = {}
    for s in shapes:
        ds = x.dendrices(s)
        ids[s] = {d: k for k, d in enumerate(ds)}
        cells[s] = list(range(len(ds)))
    actions = {}
    for s in shapes:
        for t in shapes:
            for a in arrows_between(s, t):
                tab = {}
                for d, k in ids[t].items():
                    tab[k] = ids[s][x.act(a, d)]
                actions[(s, t, a.edge_map)] = tab
    return TableDSet(cells, actions, b, v, name or x.name)


def table_to_json(x: TableDSet) -> dict:
    shapes = list(x.cells)
    index = {s: k for k, s in enumerate(shapes)}
    return {
        "kind": "table",
        "name": x.name,
        "bound": x.bound,
        "valence": x.valence,
        "shapes": [{"tree": to_json(s), "dendrices": x.cells[s]} for s in shapes],
        "actions": [{"source": index[s], "target": index[t], "edge_map": dict(em),
                     "table": {str(k): v for k, v in tab.items()}}
                    for (s, t, em), tab in x.actions.items()],
    }


def table_from_json(obj) -> TableDSet:
    shapes = [from_json(s["tree"]) for s in obj["shapes"]]
    cells = {s: list(c["dendrices"]) for s, c in zip(shapes, obj["shapes"])}
    actions = {}
    for a in obj["actions"]:
        s, t = shapes[a["source"]], shapes[a["target"]]
        em = tuple(sorted(a["edge_map"].items()))
        actions[(s, t, em)] = {int(k): v for k, v in a["table"].items()}
    return TableDSet(cells, actions, obj["bound"], obj["valence"], obj.get("name", "table"))


def dset_to_json(x: DendroidalSet) -> dict:
    """Summary plus full tables."""
    tab = x if isinstance(x, TableDSet) else materialize(x)
    return table_to_json(tab)


def dset_from_json(obj) -> DendroidalSet:
    from .operad import operad_from_json
    if isinstance(obj, str):
        obj = json.loads(obj)
    kind = obj.get("kind", "table")
    try:
        if kind == "nerve":
            return NerveDSet(operad_from_json(obj["operad"]), obj.get("bound", 4),
                             obj.get("valence", 3))
        if kind == "representable":
            return Representable(from_json(obj["tree"]), obj.get("bound", 4),
                                 obj.get("valence", 3))
        return table_from_json(obj)
    except (KeyError, TypeError, ValueError, TreeError) as exc:
        raise DSetError("malformed-dset-json: %s" % exc) from None


# wrappers ------------------------------------------------------------------------
class FilteredDSet(DendroidalSet):
    """The largest subpresheaf of ``base`` avoiding a given dendrex."""

    def __init__(self, base: DendroidalSet, shape: Tree, removed):
        super().__init__()
        self.base = base
        self.shape = shape
        self.removed = removed
        self.bound = base.bound
        self.valence = base.valence
        self.name = "%s minus one dendrex" % base.name

    def _keeps(self, t, y):
        for a in arrows_between(self.shape, t):
            if self.base.act(a, y) == self.removed:
                return False
        return True

    def _dendrices(self, t):
        return [y for y in self.base.dendrices(t) if self._keeps(t, y)]

    def act(self, a, x):
        return self.base.act(a, x)


# degeneracy, skeleta, normality ---------------------------------------------------
def degeneracy_section(t: Tree, v: str) -> OmegaArrow:
    d = omega.degeneracy(t, v)
    return OmegaArrow(d.target, t, {e: e for e in d.target.edges})


def is_degenerate(x: DendroidalSet, t: Tree, d):
    """Return ``(True, (sigma, y))`` with ``sigma* y == d`` or ``(False, None)``."""
    for v in t.vertex_order():
        if len(t.vertex(v).inputs) != 1:
            continue
        sig = omega.degeneracy(t, v)
        y = x.act(degeneracy_section(t, v), d)
        if x.act(sig, y) == d:
            return True, (sig, y)
    return False, None


def nondegenerate(x: DendroidalSet, t: Tree) -> list:
    return [d for d in x.dendrices(t) if not is_degenerate(x, t, d)[0]]


def _collapse(t: Tree, verts) -> tuple:
    """Degeneracy composite collapsing ``verts`` and a section of it."""
    sig = identity(t)
    sec = identity(t)
    cur = t
    alias = {}
    for v in verts:
        # the vertex above a collapsed one takes over its output name
        v = alias.get(v, v)
        (x,) = cur.vertex(v).inputs
        alias = {k: (v if w == x else w) for k, w in alias.items()}
        alias[x] = v
        s = omega.degeneracy(cur, v)
        sc = degeneracy_section(cur, v)
        sig = compose(s, sig)
        sec = compose(sec, sc)
        cur = s.target
    return sig, sec


def in_skeleton(x: DendroidalSet, t: Tree, d, n: int) -> bool:
    """Whether ``d`` is a degeneracy of a dendrex of degree at most ``n``."""
    k = degree(t)
    if k <= n:
        return True
    unary = [v for v in t.vertex_order() if len(t.vertex(v).inputs) == 1]
    for r in range(k - n, len(unary) + 1):
        for verts in itertools.combinations(unary, r):
            sig, sec = _collapse(t, verts)
            if x.act(sig, x.act(sec, d)) == d:
                return True
    return False


class Skeleton(DendroidalSet):
    def __init__(self, base: DendroidalSet, n: int):
        super().__init__()
        if n > base.bound:
            raise DSetError("skeleton-above-bound")
        self.base = base
        self.n = n
        self.bound = base.bound
        self.valence = base.valence
        self.name = "Sk_%d(%s)" % (n, base.name)

    def _dendrices(self, t):
        return [d for d in self.base.dendrices(t) if in_skeleton(self.base, t, d, self.n)]

    def act(self, a, x):
        return self.base.act(a, x)


def skeleton(x: DendroidalSet, n: int) -> Skeleton:
    return Skeleton(x, n)


def skeleton_oracle(x: DendroidalSet, t: Tree, n: int) -> set:
    """Sk_n at ``t`` as the union of images of non-degenerate low-degree dendrices."""
    res = set()
    for s in enumerate_trees(n, max(x.valence, max_valence(t))):
        for d in nondegenerate(x, s):
            for a in arrows_between(t, s):
                res.add(x.act(a, d))
    return res


def is_normal(x: DendroidalSet, bound: int | None = None):
    """``(True, None)`` or ``(False, (tree, dendrex, automorphism))``."""
    for t in x.shapes(bound):
        autos = [a for a in omega.automorphisms(t) if a != identity(t)]
        if not autos:
            continue
        for d in nondegenerate(x, t):
            for a in autos:
                if x.act(a, d) == d:
                    return False, (t, d, a)
    return True, None


def _in_boundary(beta: OmegaArrow) -> bool:
    t = beta.target
    if t.is_eta():
        return False
    return any(factors_through(beta, f) is not None for _, _, f in faces(t))


def skeletal_pushout_check(x: DendroidalSet, n: int, bound: int | None = None) -> bool:
    """Check that Sk_n is obtained from Sk_{n-1} by attaching representables
    along their boundaries, by chasing elements on every shape up to the bound."""
    if n < 0:
        raise DSetError("n-must-be-nonnegative")
    b = x.bound if bound is None else bound
    shapes = x.shapes(b)
    cells = []
    for t in shapes:
        if degree(t) != n:
            continue
        # one cell per automorphism orbit of non-degenerate dendrices
        autos = omega.automorphisms(t)
        seen = set()
        for d in nondegenerate(x, t):
            if d in seen:
                continue
            seen.update(x.act(a, d) for a in autos)
            cells.append((t, d))
    for u in shapes:
        new = {}
        for t, d in cells:
            for beta in arrows_between(u, t):
                if _in_boundary(beta):
                    continue
                y = x.act(beta, d)
                if in_skeleton(x, u, y, n - 1):
                    return False
                if y in new:
                    return False
                new[y] = (t, d, beta)
        for y in x.dendrices(u):
            if in_skeleton(x, u, y, n) and not in_skeleton(x, u, y, n - 1) and y not in new:
                return False
    return True


# simplicial sets and their extension ------------------------------------------------
class SimplicialSet:
    """Finite simplicial set: ``simplices(n)`` and ``act(theta, x)`` where
    ``theta`` is a monotone map ``[m] -> [n]`` given as a tuple."""

    def simplices(self, n: int) -> list:
        raise NotImplementedError

    def act(self, theta: tuple, x):
        raise NotImplementedError


def monotone_maps(m: int, n: int) -> list:
    return [tuple(c) for c in itertools.combinations_with_replacement(range(n + 1), m + 1)]


class StandardSimplex(SimplicialSet):
    def __init__(self, n: int):
        self.n = n

    def simplices(self, m):
        return monotone_maps(m, self.n)

    def act(self, theta, x):
        return tuple(x[k] for k in theta)


class SubSimplex(SimplicialSet):
    """Subcomplex of a standard simplex given by a predicate on images."""

    def __init__(self, n: int, keep):
        self.n = n
        self.keep = keep

    def simplices(self, m):
        return [x for x in monotone_maps(m, self.n) if self.keep(frozenset(x))]

    def act(self, theta, x):
        return tuple(x[k] for k in theta)


def simplicial_horn(n: int, k: int) -> SubSimplex:
    rest = frozenset(range(n + 1)) - {k}
    return SubSimplex(n, lambda img: not rest <= img)


def simplicial_boundary(n: int) -> SubSimplex:
    full = frozenset(range(n + 1))
    return SubSimplex(n, lambda img: img != full)


class Cosk1Graph(SimplicialSet):
    """The 1-coskeleton of a reflexive graph with ``labels`` parallel edges
    between any two vertices; label 0 on a loop is the degenerate edge."""

    def __init__(self, vertices, labels: int = 2):
        self.vertices = tuple(vertices)
        self.labels = labels

    def simplices(self, m):
        pairs = [(i, j) for i in range(m + 1) for j in range(i + 1, m + 1)]
        out = []
        for vs in itertools.product(self.vertices, repeat=m + 1):
            for lab in itertools.product(range(self.labels), repeat=len(pairs)):
                out.append((vs, lab))
        return out

    def act(self, theta, x):
        vs, lab = x
        n = len(vs) - 1
        pairs = {(i, j): k for k, (i, j) in enumerate(
            (i, j) for i in range(n + 1) for j in range(i + 1, n + 1))}
        m = len(theta) - 1
        nl = []
        for i in range(m + 1):
            for j in range(i + 1, m + 1):
                a, b = theta[i], theta[j]
                nl.append(0 if a == b else lab[pairs[(a, b)]])
        return tuple(vs[k] for k in theta), tuple(nl)


def linear_order(t: Tree) -> tuple:
    """Edges of a linear tree from the leaf down to the root."""
    if t.is_eta():
        return (t.root,)
    return t.path_to_root(t.leaves[0])


def is_linear_tree(t: Tree) -> bool:
    return t.is_eta() or (t.is_linear() and len(t.leaves) == 1)


class IShriek(DendroidalSet):
    """A simplicial set viewed as a dendroidal set (empty off linear trees)."""

    def __init__(self, s: SimplicialSet, bound: int = 4, valence: int = 3, name: str = ""):
        super().__init__()
        self.s = s
        self.bound = bound
        self.valence = valence
        self.name = name or "i_!(S)"

    def _dendrices(self, t):
        if not is_linear_tree(t):
            return []
        return list(self.s.simplices(degree(t)))

    def act(self, a, x):
        src = linear_order(a.source)
        pos = {e: k for k, e in enumerate(linear_order(a.target))}
        theta = tuple(pos[a(e)] for e in src)
        return self.s.act(theta, x)


def simplicial_sieve(t: Tree, s: SubSimplex) -> Sieve:
    """The sieve on a linear tree whose linear dendrices are the simplices of ``s``."""
    order = linear_order(t)
    maxes = []
    n = len(order) - 1
    for m in range(n, -1, -1):
        for x in s.simplices(m):
            if len(set(x)) != len(x):
                continue
            if any(set(x) < set(y) for y in maxes):
                continue
            maxes.append(x)
    arrows = []
    for x in maxes:
        lt = Tree(order[x[-1]], [((order[x[k - 1]],), order[x[k]]) for k in range(1, len(x))])
        arrows.append(inclusion(lt, t))
    return Sieve(t, arrows, name="simplicial")
