"""Inner Kan conditions, homotopy of corolla dendrices and the operad Ho(X)."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import omega
from .dset import (DendroidalSet, NerveDSet, Sieve, all_faces, horn, hom_into,
                   is_degenerate, restrict_to)
from .omega import OmegaArrow, compose, faces
from .operad import ColoredOperad, Operad, OperadMap, validate
from .trees import Tree, corolla, degree, enumerate_trees, max_valence, to_json


class KanError(ValueError):
    pass


@dataclass
class KanReport:
    checked_horns: int = 0
    failures: list = field(default_factory=list)
    strictness_failures: list = field(default_factory=list)
    skipped: int = 0

    @property
    def inner_kan(self) -> bool:
        return not self.failures

    @property
    def strict(self) -> bool:
        return not self.failures and not self.strictness_failures

    def to_json(self) -> dict:
        return {"checked_horns": self.checked_horns, "skipped": self.skipped,
                "inner_kan": self.inner_kan, "strict": self.strict,
                "failures": self.failures, "strictness_failures": self.strictness_failures}


def _group_by_restriction(h: Sieve, x: DendroidalSet) -> dict:
    groups = {}
    for d in x.dendrices(h.tree):
        groups.setdefault(restrict_to(h, x, d), []).append(d)
    return groups


def fill_horn(x: DendroidalSet, h: Sieve, family) -> list:
    """Every dendrex on the horn's tree restricting to ``family``."""
    family = tuple(family)
    return [d for d in x.dendrices(h.tree) if restrict_to(h, x, d) == family]


def beyond_cap(x: DendroidalSet, t: Tree) -> bool:
    # nerves of arity-truncated operads cannot label faces above the cap
    cap = getattr(getattr(x, "operad", None), "arity_cap", None)
    return cap is not None and any(max_valence(f) > cap for f in all_faces(t))


def check_inner_kan(x: DendroidalSet, strict: bool = False, bound: int | None = None,
                    valence: int | None = None) -> KanReport:
    """Enumerate every inner horn ``Λ^e[T] -> x`` with ``T`` up to ``bound`` vertices."""
    b = x.bound if bound is None else bound
    v = x.valence if valence is None else valence
    rep = KanReport()
    for t in enumerate_trees(b, v):
        if not t.inner_edges:
            continue
        if degree(t) > x.bound or beyond_cap(x, t):
            rep.skipped += len(t.inner_edges)
            continue
        for e in t.inner_edges:
            h = horn(t, {e})
            groups = _group_by_restriction(h, x)
            for k, fam in enumerate(hom_into(h, x)):
                rep.checked_horns += 1
                n = len(groups.get(fam, ()))
                if n == 0:
                    rep.failures.append({"tree": to_json(t), "edge": e, "horn": k})
                elif n > 1 and strict:
                    rep.strictness_failures.append({"tree": to_json(t), "edge": e,
                                                    "horn": k, "fillers": n})
    return rep


# homotopies ------------------------------------------------------------------------
def _iso(src: Tree, tgt: Tree, mapping: dict) -> OmegaArrow:
    return OmegaArrow(src, tgt, {e: mapping.get(e, e) for e in src.edges})


def homotopy_shape(n: int, i: int):
    """The two-vertex tree for ``∼_i`` on ``C_n`` and arrows picking out
    ``(f face, g face, unary face)``, each precomposed so f and g live on ``C_n``."""
    cn = corolla(n)
    if 1 <= i <= n:
        e, top = str(i), str(i) + "'"
        t = Tree("0", [(tuple(str(k) for k in range(1, n + 1)), "0"), ((top,), e)])
        f_face = omega.outer_face(t, e)
        g_face = omega.inner_face(t, e)
        unary = omega.outer_face(t, "0")
        g_arrow = compose(g_face, _iso(cn, g_face.source, {e: top}))
    elif i == 0:
        t = Tree("0'", [(tuple(str(k) for k in range(1, n + 1)), "0"), (("0",), "0'")])
        f_face = omega.outer_face(t, "0'")
        g_face = omega.inner_face(t, "0")
        unary = omega.outer_face(t, "0")
        g_arrow = compose(g_face, _iso(cn, g_face.source, {"0": "0'"}))
    else:
        raise KanError("bad-edge-index")
    f_arrow = compose(f_face, _iso(cn, f_face.source, {}))
    return t, f_arrow, g_arrow, unary


def corolla_boundary(x: DendroidalSet, n: int, f) -> tuple:
    cn = corolla(n)
    return tuple(x.act(_edge(cn, str(k)), f) for k in range(n + 1))


def _edge(t: Tree, e: str) -> OmegaArrow:
    # edges are read off along eta named "0" so colours compare across trees
    return OmegaArrow(Tree("0", ()), t, {"0": e})


def homotopies(x: DendroidalSet, n: int, i: int) -> list:
    """All ``(f, g, H)`` with ``H: f ∼_i g``."""
    t, fa, ga, unary = homotopy_shape(n, i)
    out = []
    for h in x.dendrices(t):
        u = x.act(unary, h)
        if not is_degenerate(x, unary.source, u)[0]:
            continue
        out.append((x.act(fa, h), x.act(ga, h), h))
    return out


def homotopic(x: DendroidalSet, n: int, f, g, i: int):
    """``(True, H)`` when ``f ∼_i g`` with witness ``H``, else ``(False, None)``."""
    if corolla_boundary(x, n, f) != corolla_boundary(x, n, g):
        raise KanError("not-parallel")
    for a, b, h in homotopies(x, n, i):
        if a == f and b == g:
            return True, h
    return False, None


def homotopy_relation(x: DendroidalSet, n: int, i: int) -> set:
    return {(a, b) for a, b, _ in homotopies(x, n, i)}


def is_equivalence(rel: set, elements) -> bool:
    elements = list(elements)
    if any((a, a) not in rel for a in elements):
        return False
    if any((b, a) not in rel for a, b in rel):
        return False
    succ = {}
    for a, b in rel:
        succ.setdefault(a, set()).add(b)
    return all(c in succ.get(a, ()) for a, b in rel for c in succ.get(b, ()))


# composition -----------------------------------------------------------------------
def composition_shape(n: int, i: int, m: int):
    """Grafted tree ``C_m`` on leaf ``i`` of ``C_n`` with arrows from ``C_n``,
    ``C_m`` and ``C_{n+m-1}`` (the latter onto the inner face)."""
    if not 1 <= i <= n:
        raise KanError("bad-edge-index")
    e = str(i)
    up = tuple("%d'" % k for k in range(1, m + 1))
    t = Tree("0", [(tuple(str(k) for k in range(1, n + 1)), "0"), (up, e)])
    cn, cm, ck = corolla(n), corolla(m), corolla(n + m - 1)
    f_face = omega.outer_face(t, e)
    f_arrow = compose(f_face, _iso(cn, f_face.source, {}))
    g_face = omega.outer_face(t, "0")
    g_arrow = compose(g_face, _iso(cm, g_face.source,
                                   dict([("0", e)] + [(str(k), up[k - 1]) for k in range(1, m + 1)])))
    h_face = omega.inner_face(t, e)
    merged = h_face.source.vertex("0").inputs
    h_arrow = compose(h_face, _iso(ck, h_face.source,
                                   {str(k): merged[k - 1] for k in range(1, n + m)}))
    return t, f_arrow, g_arrow, h_arrow


def composition_witnesses(x: DendroidalSet, n: int, f, i: int, m: int, g) -> list:
    """All ``(h, gamma)`` with ``gamma`` a witness for ``h ∼ f ∘_i g``."""
    if corolla_boundary(x, n, f)[i] != corolla_boundary(x, m, g)[0]:
        raise KanError("not-composable")
    t, fa, ga, ha = composition_shape(n, i, m)
    return [(x.act(ha, d), d) for d in x.dendrices(t)
            if x.act(fa, d) == f and x.act(ga, d) == g]


def composition_witness(x: DendroidalSet, n: int, f, i: int, m: int, g):
    res = composition_witnesses(x, n, f, i, m, g)
    if not res:
        raise KanError("not-inner-kan")
    return res[0]


# the homotopy operad -----------------------------------------------------------------
@dataclass
class HoOperad:
    operad: ColoredOperad
    class_map: dict      # (arity, dendrex) -> operation id
    colour_of: dict      # eta dendrex -> colour id
    reps: dict           # operation id -> (arity, representative dendrex)


def _classes(x: DendroidalSet, n: int) -> list:
    """∼_0-classes of ``X_{C_n}`` as lists in enumeration order."""
    elems = x.dendrices(corolla(n))
    rel = homotopy_relation(x, n, 0)
    if not is_equivalence(rel, elems):
        raise KanError("not-inner-kan")
    seen = set()
    out = []
    for d in elems:
        if d in seen:
            continue
        cls = [e for e in elems if (d, e) in rel]
        seen.update(cls)
        out.append(cls)
    return out


def ho_operad(x: DendroidalSet, max_arity: int | None = None, check: bool = False) -> HoOperad:
    """Colours are ``X_η``; operations are homotopy classes of corolla dendrices."""
    if check:
        rep = check_inner_kan(x, bound=min(3, x.bound))
        if not rep.inner_kan:
            raise KanError("not-inner-kan")
    cap = x.valence if max_arity is None else max_arity
    eta0 = Tree("0", ())
    colours = x.dendrices(eta0)
    colour_of = {c: "c%d" % k for k, c in enumerate(colours)}
    ops, class_map, reps = {}, {}, {}
    for n in range(cap + 1):
        for k, cls in enumerate(_classes(x, n)):
            op = "%d.%d" % (n, k)
            bnd = corolla_boundary(x, n, cls[0])
            ops[op] = (tuple(colour_of[c] for c in bnd[1:]), colour_of[bnd[0]])
            reps[op] = (n, cls[0])
            for d in cls:
                class_map[(n, d)] = op
    c1 = corolla(1)
    collapse = omega.degeneracy(c1, "0")
    units = {}
    for c in colours:
        u = x.act(collapse, c)
        units[colour_of[c]] = class_map[(1, u)]
    comp = {}
    for p, (n, f) in reps.items():
        for q, (m, g) in reps.items():
            if n + m - 1 > cap:
                continue
            for i in range(1, n + 1):
                if ops[p][0][i - 1] != ops[q][1]:
                    continue
                h, _ = composition_witness(x, n, f, i, m, g)
                comp[(p, i, q)] = class_map[(n + m - 1, h)]
    sym = {}
    for p, (n, f) in reps.items():
        cn = corolla(n)
        for perm in itertools.permutations(range(n)):
            phi = OmegaArrow(cn, cn, dict([("0", "0")] + [(str(k + 1), str(perm[k] + 1))
                                                          for k in range(n)]))
            sym[(p, perm)] = class_map[(n, x.act(phi, f))]
    ho = ColoredOperad(tuple(colour_of.values()), ops, units, comp, sym,
                       "Ho(%s)" % x.name, cap)
    return HoOperad(ho, class_map, colour_of, reps)


def nerve_of(p: Operad, bound: int = 4, valence: int = 3) -> NerveDSet:
    return NerveDSet(p, bound, valence)


def nerve_map(psi: OperadMap):
    """Map of nerves induced by an operad map, acting on labellings."""
    cm, om = psi.colours, psi.ops

    def f(t, d):
        return type(d)(tuple(sorted((e, cm[c]) for e, c in d.colours)),
                       tuple(sorted((v, om[o]) for v, o in d.ops)))
    return f


def _generators(t: Tree) -> list:
    gens = [a for _, _, a in faces(t)]
    for v in t.vertex_order():
        if len(t.vertex(v).inputs) == 1:
            gens.append(omega.degeneracy(t, v))
    gens.extend(omega.automorphisms(t))
    return gens


def is_natural_iso(x: DendroidalSet, y: DendroidalSet, f, bound: int | None = None,
                   valence: int | None = None) -> bool:
    """Whether ``f(t, d)`` is a bijection ``X_t -> Y_t`` on every shape and commutes
    with faces, degeneracies and automorphisms."""
    for t in x.shapes(bound, valence):
        xs = x.dendrices(t)
        img = [f(t, d) for d in xs]
        if len(set(img)) != len(xs) or set(img) != set(y.dendrices(t)):
            return False
    cap = x.valence if valence is None else valence
    for t in x.shapes(bound, valence):
        for a in _generators(t):
            if max_valence(a.source) > cap:
                continue
            for d in x.dendrices(a.target):
                if f(a.source, x.act(a, d)) != y.act(a, f(a.target, d)):
                    return False
    return True


def unit_map(x: DendroidalSet, ho: HoOperad):
    """The comparison ``X -> N_d(Ho(X))`` sending a dendrex to its labelling."""
    from .dset import Labelling

    def f(t, d):
        cols = tuple(sorted((e, ho.colour_of[x.act(_edge(t, e), d)])
                            for e in t.edges))
        ops = []
        for v in t.vertices:
            n = len(v.inputs)
            a = OmegaArrow(corolla(n), t, dict([("0", v.output)] + [
                (str(k + 1), v.inputs[k]) for k in range(n)]))
            ops.append((v.output, ho.class_map[(n, x.act(a, d))]))
        return Labelling(cols, tuple(sorted(ops)))
    return f


# coskeletality ---------------------------------------------------------------------------
class CoskeletalExtension:
    """Extend a map given on shapes with at most two vertices by unique
    inner horn filling, one degree at a time."""

    def __init__(self, low, source: DendroidalSet, target: DendroidalSet, audit: bool = True):
        self.low = low
        self.source = source
        self.target = target
        self.audit = audit
        self._memo = {}

    def _fill(self, t: Tree, y, e: str):
        h = horn(t, {e})
        fam = tuple(self(m.source, self.source.act(m, y)) for m in h.maximal)
        fillers = fill_horn(self.target, h, fam)
        if len(fillers) != 1:
            raise KanError("requires-strict")
        return fillers[0]

    def __call__(self, t: Tree, y):
        key = (t, y)
        if key in self._memo:
            return self._memo[key]
        if degree(t) <= 2:
            res = self.low(t, y)
        else:
            edges = t.inner_edges
            res = self._fill(t, y, edges[0])
            if self.audit:
                for e in edges[1:]:
                    if self._fill(t, y, e) != res:
                        raise KanError("requires-strict")
        self._memo[key] = res
        return res


def coskeletal_extend(low, source: DendroidalSet, target: DendroidalSet,
                      audit: bool = True) -> CoskeletalExtension:
    return CoskeletalExtension(low, source, target, audit)
