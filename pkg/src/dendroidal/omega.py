"""Arrows between trees, stored extensionally as edge maps."""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

from .trees import (Tree, TreeError, Vertex, from_json, subtree_leaves,
                    subtree_of_signature, to_json)


class OmegaError(ValueError):
    pass


@dataclass(frozen=True)
class OmegaArrow:
    source: Tree
    target: Tree
    edge_map: tuple  # sorted (source edge, target edge) pairs
    _d: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        em = self.edge_map
        if isinstance(em, dict):
            em = em.items()
        em = tuple(sorted((str(a), str(b)) for a, b in em))
        object.__setattr__(self, "edge_map", em)
        object.__setattr__(self, "_d", dict(em))

    def __call__(self, e: str) -> str:
        return self._d[e]

    @property
    def mapping(self) -> dict:
        return dict(self._d)

    def image(self) -> frozenset:
        return frozenset(self._d.values())

    def __repr__(self):
        return "OmegaArrow(%s -> %s, %s)" % (self.source.root, self.target.root,
                                             dict(self.edge_map))


def arrow(source: Tree, target: Tree, emap: dict, check: bool = True) -> OmegaArrow:
    a = OmegaArrow(source, target, emap)
    if check:
        if set(a._d) != set(source.edges) or not set(a._d.values()) <= set(target.edges):
            raise OmegaError("bad-edge-map")
        if not is_valid(a):
            raise OmegaError("not-an-operad-map")
    return a


def is_valid(a: OmegaArrow) -> bool:
    """The operad-map condition, checked vertex by vertex."""
    for v in a.source.vertices:
        ins = tuple(a(x) for x in v.inputs)
        out = a(v.output)
        if len(ins) == 1 and ins[0] == out:
            continue
        if out in ins:
            return False
        if subtree_of_signature(a.target, (ins, out)) is None:
            return False
    return True


def identity(t: Tree) -> OmegaArrow:
    return OmegaArrow(t, t, {e: e for e in t.edges})


def compose(g: OmegaArrow, f: OmegaArrow) -> OmegaArrow:
    """``g ∘ f``."""
    if f.target != g.source:
        raise OmegaError("not-composable")
    return OmegaArrow(f.source, g.target, {e: g(f(e)) for e in f.source.edges})


def compose_all(*arrows: OmegaArrow) -> OmegaArrow:
    """``a1 ∘ a2 ∘ ... ∘ an``."""
    res = arrows[-1]
    for a in reversed(arrows[:-1]):
        res = compose(a, res)
    return res


def is_injective(a: OmegaArrow) -> bool:
    return len(set(a._d.values())) == len(a._d)


def is_iso(a: OmegaArrow) -> bool:
    # removing a stump is bijective on edges but not invertible
    return (is_injective(a) and len(a.target.edges) == len(a.source.edges)
            and len(a.target.vertices) == len(a.source.vertices))


def inverse(a: OmegaArrow) -> OmegaArrow:
    if not is_iso(a):
        raise OmegaError("not-an-iso")
    return OmegaArrow(a.target, a.source, {b: x for x, b in a.edge_map})


# generators --------------------------------------------------------------
def degeneracy(t: Tree, v: str) -> OmegaArrow:
    """Collapse the unary vertex with output ``v``; the output name survives."""
    if not t.has_vertex(v) or len(t.vertex(v).inputs) != 1:
        raise OmegaError("not-unary")
    (x,) = t.vertex(v).inputs
    verts = []
    for u in t.vertices:
        if u.output == v:
            continue
        if u.output == x:
            verts.append(Vertex(u.inputs, v))
        else:
            verts.append(u)
    target = Tree(t.root, verts)
    return OmegaArrow(t, target, {e: (v if e == x else e) for e in t.edges})


def outer_face(t: Tree, v: str) -> OmegaArrow:
    """Delete a vertex with exactly one inner edge attached."""
    if not t.has_vertex(v) or len(t.inner_attached(v)) != 1:
        raise OmegaError("not-outer-admissible")
    vert = t.vertex(v)
    if v != t.root:
        drop = set(vert.inputs)
        source = Tree(t.root, [u for u in t.vertices if u.output != v])
    else:
        (x,) = t.inner_attached(v)
        keep = set(t.edges_above(x))
        source = Tree(x, [u for u in t.vertices if u.output in keep])
        drop = set(t.edges) - keep
    assert not (set(source.edges) & drop)
    return OmegaArrow(source, t, {e: e for e in source.edges})


def corolla_edge_face(t: Tree, e: str) -> OmegaArrow:
    """The face ``eta -> C_n`` naming one edge of a corolla."""
    if len(t.vertices) != 1 or e not in t.edges:
        raise OmegaError("not-outer-admissible")
    return OmegaArrow(Tree(e, ()), t, {e: e})


def edge_inclusion(t: Tree, e: str) -> OmegaArrow:
    if e not in t.edges:
        raise OmegaError("not-an-edge")
    return OmegaArrow(Tree(e, ()), t, {e: e})


def inner_face(t: Tree, e: str) -> OmegaArrow:
    """Contract the inner edge ``e``."""
    if not t.is_inner(e):
        raise OmegaError("not-inner")
    up = t.vertex(e)
    down = t.vertex_below(e)
    j = down.inputs.index(e)
    merged = Vertex(down.inputs[:j] + up.inputs + down.inputs[j + 1:], down.output)
    verts = [u for u in t.vertices if u.output not in (e, down.output)] + [merged]
    source = Tree(t.root, verts)
    return OmegaArrow(source, t, {x: x for x in source.edges})


def faces(t: Tree) -> list:
    """All codimension-one faces as ``(kind, name, arrow)`` triples."""
    if t.is_eta():
        return []
    out = []
    if len(t.vertices) == 1:
        for e in t.edges:
            out.append(("outer", e, corolla_edge_face(t, e)))
        return out
    for e in t.inner_edges:
        out.append(("inner", e, inner_face(t, e)))
    for v in t.vertex_order():
        if len(t.inner_attached(v)) == 1:
            out.append(("outer", v, outer_face(t, v)))
    return out


def classify(a: OmegaArrow) -> str:
    """Tag a generator: identity, iso, degeneracy, inner, outer or composite."""
    s, t = a.source, a.target
    if s == t and all(x == y for x, y in a.edge_map):
        return "identity"
    if is_iso(a):
        return "iso"
    if len(s.vertices) == len(t.vertices) + 1 and len(s.edges) == len(t.edges) + 1:
        for v in s.vertex_order():
            if len(s.vertex(v).inputs) == 1:
                d = degeneracy(s, v)
                if _same_up_to_target_iso(d, a):
                    return "degeneracy"
    if is_injective(a):
        for kind, _, f in faces(t):
            if f.source.edges and set(f.image()) == set(a.image()) and \
                    _same_shape_image(f, a):
                return kind
    return "composite"


def _same_shape_image(f: OmegaArrow, a: OmegaArrow) -> bool:
    try:
        inv = {y: x for x, y in f.edge_map}
        g = OmegaArrow(a.source, f.source, {e: inv[a(e)] for e in a.source.edges})
    except KeyError:
        return False
    return is_valid(g) and is_iso(g)


def _same_up_to_target_iso(d: OmegaArrow, a: OmegaArrow) -> bool:
    # a = phi ∘ d for some iso phi
    m = {}
    for e in a.source.edges:
        x = d(e)
        if m.setdefault(x, a(e)) != a(e):
            return False
    phi = OmegaArrow(d.target, a.target, m)
    return is_iso(phi) and is_valid(phi)


# hom sets ------------------------------------------------------------------
def arrows_between(s: Tree, t: Tree) -> list:
    """Every arrow ``s -> t``, found by top-down backtracking."""
    subs = {y: subtree_leaves(t, y) for y in t.edges}
    order = s.vertex_order()
    results = []

    def rec(k, emap):
        if k == len(order):
            results.append(OmegaArrow(s, t, dict(emap)))
            return
        v = s.vertex(order[k])
        y = emap[v.output]
        n = len(v.inputs)
        for leaves in subs[y]:
            if len(leaves) != n:
                continue
            for perm in itertools.permutations(leaves):
                for x, z in zip(v.inputs, perm):
                    emap[x] = z
                rec(k + 1, emap)
            for x in v.inputs:
                emap.pop(x, None)

    for y in t.edges:
        rec(0, {s.root: y})
    results.sort(key=lambda a: a.edge_map)
    return results


def arrows_between_bruteforce(s: Tree, t: Tree) -> list:
    """Reference implementation: filter every edge map."""
    out = []
    se = s.edges
    for img in itertools.product(t.edges, repeat=len(se)):
        a = OmegaArrow(s, t, dict(zip(se, img)))
        if is_valid(a):
            out.append(a)
    out.sort(key=lambda a: a.edge_map)
    return out


def automorphisms(t: Tree) -> list:
    return [a for a in arrows_between(t, t) if is_iso(a)]


def isomorphisms(s: Tree, t: Tree) -> list:
    if len(s.edges) != len(t.edges):
        return []
    return [a for a in arrows_between(s, t) if is_iso(a)]


# factorization -----------------------------------------------------------
def image_tree(a: OmegaArrow) -> Tree:
    """The face of the target hit by an injective arrow, in target planar order."""
    verts = []
    for v in a.source.vertices:
        ins = tuple(a(x) for x in v.inputs)
        sub = subtree_of_signature(a.target, (ins, a(v.output)))
        verts.append((sub[0].leaves if sub[0].vertices else ins, a(v.output)))
    return Tree(a(a.source.root), verts)


def _included(sub: Tree, t: Tree) -> bool:
    if not set(sub.edges) <= set(t.edges):
        return False
    return is_valid(OmegaArrow(sub, t, {e: e for e in sub.edges}))


def face_chain(sub: Tree, t: Tree) -> list:
    """Codimension-one faces whose composite is the inclusion ``sub -> t``.

    Returned outermost first, so ``compose_all(*chain)`` is the inclusion.
    """
    if not _included(sub, t):
        raise OmegaError("not-a-face")
    chain = []
    cur = t
    while cur != sub:
        step = None
        for _, _, f in faces(cur):
            if _included(sub, f.source):
                step = f
                break
        if step is None:
            raise OmegaError("not-a-face")
        chain.append(step)
        cur = step.source
    return chain


def factorize(f: OmegaArrow) -> tuple:
    """Split ``f`` as ``delta ∘ phi ∘ sigma``.

    ``sigma`` is a composite of degeneracies, ``phi`` an isomorphism and
    ``delta`` a composite of faces (an inclusion of an image tree).
    """
    sigma = identity(f.source)
    cur = f
    while True:
        hit = None
        for v in cur.source.vertex_order():
            vert = cur.source.vertex(v)
            if len(vert.inputs) == 1 and cur(vert.inputs[0]) == cur(v):
                hit = v
                break
        if hit is None:
            break
        d = degeneracy(cur.source, hit)
        m = {d(e): cur(e) for e in cur.source.edges}
        cur = OmegaArrow(d.target, cur.target, m)
        sigma = compose(d, sigma)
    if not is_injective(cur):
        raise OmegaError("factorization-failed")
    img = image_tree(cur)
    phi = OmegaArrow(cur.source, img, cur.mapping)
    delta = OmegaArrow(img, f.target, {e: e for e in img.edges})
    return delta, phi, sigma


# JSON --------------------------------------------------------------------
def arrow_to_json(a: OmegaArrow) -> dict:
    return {"source": to_json(a.source), "target": to_json(a.target),
            "edge_map": dict(a.edge_map)}


def arrow_from_json(obj) -> OmegaArrow:
    if isinstance(obj, str):
        obj = json.loads(obj)
    try:
        return arrow(from_json(obj["source"]), from_json(obj["target"]), obj["edge_map"])
    except (KeyError, TypeError, TreeError) as exc:
        raise OmegaError("malformed-arrow-json: %s" % exc) from None
