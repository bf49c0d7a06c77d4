"""Certificates that an inclusion of dendroidal sets is inner anodyne.

Everything here lives inside a thin ambient operad (a tree operad or a
tensor of two of them), so a subobject of its nerve is determined by the
set of its non-degenerate dendrices.  Those are labelled trees, recorded
by :func:`face_key`.  A certificate is a start subobject, a list of
pushouts along inner horn inclusions and a claimed end subobject.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import omega
from .dset import all_faces
from .operad import OmegaOperad, ThinOperad
from .percolation import TensorOperad, downset, face_key, linearize, split
from .trees import Tree, graft


class AnodyneError(ValueError):
    pass


@dataclass
class Step:
    shape: Tree            # the filler, a labelled tree in the ambient
    edge: str              # the omitted inner edge
    family: tuple          # face keys of the horn's maximal faces

    def to_json(self) -> dict:
        return {"shape": {"root": self.shape.root,
                          "vertices": [{"inputs": list(v.inputs), "output": v.output}
                                       for v in self.shape.vertices]},
                "edge": self.edge,
                "family": [_key_json(k) for k in self.family]}


def _key_json(k) -> dict:
    root, verts = k
    return {"root": root, "vertices": sorted([o, sorted(i)] for o, i in verts)}


@dataclass
class AnodyneCertificate:
    ambient: ThinOperad
    start: frozenset
    steps: list
    end: frozenset
    notes: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"ambient": getattr(self.ambient, "name", ""),
                "start": sorted((_key_json(k) for k in self.start), key=str),
                "end": sorted((_key_json(k) for k in self.end), key=str),
                "steps": [s.to_json() for s in self.steps],
                "notes": list(self.notes)}


def horn_faces(r: Tree, xi: str) -> list:
    """Maximal faces of the inner horn omitting the contraction of ``xi``."""
    return [f.source for kind, name, f in omega.faces(r)
            if not (kind == "inner" and name == xi)]


def make_step(r: Tree, xi: str) -> Step:
    return Step(r, xi, tuple(face_key(f) for f in horn_faces(r, xi)))


def _is_dendrex(ambient: ThinOperad, r: Tree) -> bool:
    return all(ambient.exists(v.inputs, v.output) for v in r.vertices)


def verify_certificate(c: AnodyneCertificate, ambient: ThinOperad | None = None):
    """Replay the steps.  Returns ``(True, None)`` or ``(False, (index, reason))``."""
    amb = c.ambient if ambient is None else ambient
    current = set(c.start)
    for k, st in enumerate(c.steps):
        r, xi = st.shape, st.edge
        if not _is_dendrex(amb, r):
            return False, (k, "not-a-dendrex")
        if xi not in r.edges or not r.is_inner(xi):
            return False, (k, "not-an-inner-horn")
        hf = horn_faces(r, xi)
        if tuple(face_key(f) for f in hf) != tuple(st.family):
            return False, (k, "family-mismatch")
        horn_set = set()
        for f in hf:
            horn_set |= downset(f)
        if not horn_set <= current:
            return False, (k, "horn-not-contained")
        full = downset(r)
        if face_key(r) in current:
            return False, (k, "filler-not-new")
        # pushout exactness: the part of the new cell already present is the horn
        if (full & current) != horn_set:
            return False, (k, "not-a-pushout")
        current |= full
    if frozenset(current) != c.end:
        return False, (len(c.steps), "end-mismatch")
    return True, None


# multi-edge horns ---------------------------------------------------------------------
def _contract(t: Tree, e: str) -> Tree:
    return omega.inner_face(t, e).source


def multi_horn_steps(t: Tree, edges) -> list:
    edges = sorted(edges)
    if len(edges) == 1:
        return [make_step(t, edges[0])]
    e, rest = edges[0], edges[1:]
    return multi_horn_steps(_contract(t, e), rest) + multi_horn_steps(t, rest)


def multi_horn_start(t: Tree, edges) -> frozenset:
    res = set()
    for f in horn_faces_multi(t, edges):
        res |= downset(f)
    return frozenset(res)


def horn_faces_multi(t: Tree, edges) -> list:
    edges = set(edges)
    return [f.source for kind, name, f in omega.faces(t)
            if not (kind == "inner" and name in edges)]


def certify_multi_horn(t: Tree, edges) -> AnodyneCertificate:
    edges = set(edges)
    if not edges or any(not t.is_inner(e) for e in edges):
        raise AnodyneError("bad-horn-spec")
    return AnodyneCertificate(OmegaOperad(t), multi_horn_start(t, edges),
                              multi_horn_steps(t, edges), downset(t))


# grafting ------------------------------------------------------------------------------
def _external_clusters(t: Tree) -> list:
    """Vertices with exactly one adjacent inner edge."""
    return [v for v in t.vertex_order() if len(t.inner_attached(v)) == 1]


def _remove_vertex(t: Tree, v: str) -> Tree:
    return omega.outer_face(t, v).source


def _replay(steps: list, current: set, out: list, notes: list):
    """Append the steps that are still needed, checking each as it goes."""
    for st in steps:
        if face_key(st.shape) in current:
            notes.append("skip %s" % sorted(st.shape.edges))
            continue
        hs = set()
        for f in horn_faces(st.shape, st.edge):
            hs |= downset(f)
        full = downset(st.shape)
        if not hs <= current or (full & current) != hs:
            return False
        out.append(st)
        current |= full
    return True


def _greedy_fill(target: Tree, current: set, out: list, notes: list) -> bool:
    """Adjoin faces of ``target`` one inner horn at a time, smallest first."""
    faces_by_size = sorted(all_faces(target), key=lambda f: (len(f.vertices), str(face_key(f))))
    progress = True
    while progress and face_key(target) not in current:
        progress = False
        for f in faces_by_size:
            if face_key(f) in current:
                continue
            for xi in f.inner_edges:
                hs = set()
                for g in horn_faces(f, xi):
                    hs |= downset(g)
                full = downset(f)
                if hs <= current and (full & current) == hs:
                    out.append(make_step(f, xi))
                    current |= full
                    notes.append("greedy %s/%s" % (sorted(f.edges), xi))
                    progress = True
                    break
            if progress:
                break
    return face_key(target) in current


def _grafting_steps(t: Tree, l: str, s: Tree, current: set, out: list, notes: list):
    r = graft(t, l, s)
    if t.is_eta() or s.is_eta():
        return
    if len(t.vertices) + len(s.vertices) == 2:
        if not _replay([make_step(r, l)], current, out, notes):
            raise AnodyneError("certificate-invalid")
        return
    for c in _external_clusters(t):
        if l in t.vertex(c).inputs:
            continue
        tc = _remove_vertex(t, c)
        if l not in tc.edges or not tc.is_leaf(l):
            continue
        _grafting_steps(tc, l, s, current, out, notes)
    for c in _external_clusters(s):
        if c == s.root:
            continue
        _grafting_steps(t, l, _remove_vertex(s, c), current, out, notes)
    inner = r.inner_edges
    steps = multi_horn_steps(r, inner)
    if not _replay(steps, current, out, notes):
        notes.append("fallback")
        if not _greedy_fill(r, current, out, notes):
            raise AnodyneError("certificate-invalid")


def certify_grafting(t: Tree, l: str, s: Tree) -> AnodyneCertificate:
    if not t.is_eta() and not t.is_leaf(l):
        raise AnodyneError("not-a-leaf")
    if t.is_eta() or s.is_eta():
        r = graft(t, l, s) if not t.is_eta() else s
        d = downset(r)
        return AnodyneCertificate(OmegaOperad(r), d, [], d)
    r = graft(t, l, s)
    # keep the names that grafting assigned to the upper tree
    s_part = Tree(l, [v for v in r.vertices if v.output in set(r.edges_above(l))])
    start = set(downset(t)) | set(downset(s_part))
    cur = set(start)
    steps, notes = [], []
    _grafting_steps(t, l, s_part, cur, steps, notes)
    return AnodyneCertificate(OmegaOperad(r), frozenset(start), steps, downset(r), notes)


# tensor with a horn --------------------------------------------------------------------
def tensor_start(s: Tree, e: str, t: Tree) -> frozenset:
    """Non-degenerate dendrices of the image of Λ^e[S]⊗Ω[T] ∪ Ω[S]⊗∂Ω[T]."""
    from .percolation import enumerate_schemes
    res = set()
    for kind, name, f in omega.faces(s):
        if kind == "inner" and name == e:
            continue
        for p in enumerate_schemes(f.source, t).schemes:
            res |= downset(p.tree)
    for _, _, g in omega.faces(t):
        for p in enumerate_schemes(s, g.source).schemes:
            res |= downset(p.tree)
    return frozenset(res)


def spines(scheme: Tree, e: str) -> list:
    """``(e_i, vertex set)`` for each lowest occurrence of the colour ``e``."""
    out = []
    for z in scheme.edges:
        a, _ = split(z)
        if a != e or z == scheme.root:
            continue
        below = scheme.vertex_below(z)
        if split(below.output)[0] == e:
            continue
        path = scheme.path_to_root(z)
        verts = set(path[1:]) | {z}
        out.append((z, frozenset(verts)))
    return out


def initial_segments(t: Tree) -> list:
    """Vertex sets closed downwards, as trees with the same root."""
    order = t.vertex_order()
    res = []

    def rec(k, chosen):
        if k == len(order):
            if chosen:
                res.append(frozenset(chosen))
            return
        v = order[k]
        below = t.vertex_below(v)
        if v == t.root or (below is not None and below.output in chosen):
            chosen.add(v)
            rec(k + 1, chosen)
            chosen.discard(v)
        rec(k + 1, chosen)

    rec(0, set())
    return res


def _segment_tree(t: Tree, verts: frozenset) -> Tree:
    return Tree(t.root, [v for v in t.vertices if v.output in verts])


def top_faces(r: Tree) -> list:
    if len(r.vertices) < 2:
        return []
    return [_remove_vertex(r, v) for v in r.top_vertices() if v != r.root]


def inner_faces_all(r: Tree) -> list:
    """Every inner face of ``r`` (contract any set of inner edges), ``r`` first."""
    res = []
    inner = r.inner_edges
    for k in range(len(inner) + 1):
        for sub in itertools.combinations(inner, k):
            f = r
            for x in sub:
                f = _contract(f, x)
            res.append(f)
    return res


def characteristic_edge_check(r: Tree, xi: str, current) -> bool:
    """Whether inner faces outside ``current`` stay outside after contracting ``xi``."""
    for f in inner_faces_all(r):
        if xi not in f.edges or not f.is_inner(xi):
            continue
        if face_key(f) not in current and face_key(_contract(f, xi)) in current:
            return False
    return True


def top_faces_present(r: Tree, current) -> bool:
    return all(face_key(f) in current for f in top_faces(r))


SUBSET_CAP = 12


def adjoin_along_edge(r: Tree, xi: str, current: set, out: list, notes: list):
    """Adjoin ``r`` through the faces obtained by contracting the other
    edges whose contraction is missing, smallest first."""
    if face_key(r) in current:
        return
    if not characteristic_edge_check(r, xi, current):
        raise AnodyneError("not-characteristic")
    others = [z for z in r.inner_edges if z != xi and face_key(_contract(r, z)) not in current]
    n = len(others)
    if n > SUBSET_CAP:
        raise AnodyneError("subset-cap-exceeded")
    for kept in range(n):
        for keep in itertools.combinations(range(n), kept):
            f = r
            for j in range(n):
                if j not in keep:
                    f = _contract(f, others[j])
            if face_key(f) in current:
                continue
            _push(f, xi, current, out)
    _push(r, xi, current, out)


def _push(f: Tree, xi: str, current: set, out: list):
    out.append(make_step(f, xi))
    current |= downset(f)


def certify_tensor_extension(s: Tree, e: str, t: Tree) -> AnodyneCertificate:
    if not s.is_inner(e):
        raise AnodyneError("not-inner")
    amb = TensorOperad(s, t)
    start = tensor_start(s, e, t)
    current = set(start)
    steps, notes = [], []
    for scheme in linearize(amb.poset):
        tk = scheme.tree
        if face_key(tk) in current:
            notes.append("scheme contained")
            continue
        sp = spines(tk, e)
        work = []
        for seg in initial_segments(tk):
            inside = [(z, vs) for z, vs in sp if vs <= seg]
            if not inside:
                continue
            on_spine = set().union(*(vs for _, vs in inside))
            size = len(seg - on_spine)
            work.append((len(inside), size, sorted(seg), seg, inside))
        work.sort(key=lambda w: (w[0], w[1], w[2]))
        for _, _, _, seg, inside in work:
            r = _segment_tree(tk, seg)
            if face_key(r) in current:
                continue
            if not top_faces_present(r, current):
                raise AnodyneError("certificate-invalid: top face of %s" % sorted(seg))
            tops = [z for z, _ in inside]
            candidates = tops + [z for z in r.inner_edges if z not in tops]
            xi = next((z for z in candidates if characteristic_edge_check(r, z, current)), None)
            if xi is None:
                if not _greedy_fill(r, current, steps, notes):
                    raise AnodyneError("not-characteristic")
                continue
            if xi not in tops:
                notes.append("characteristic edge %s off the spine tops of %s" % (xi, sorted(seg)))
            adjoin_along_edge(r, xi, current, steps, notes)
    return AnodyneCertificate(amb, start, steps, frozenset(current_all(amb)), notes)


def current_all(amb: TensorOperad) -> set:
    res = set()
    for p in amb.poset.schemes:
        res |= downset(p.tree)
    return res
