"""Grothendieck construction for diagrams of dendroidal sets.

The index category is a finite poset with all finite meets, which is a
Cartesian category in which every hom-set has at most one element.  A
dendrex of the total space on ``T`` is a pair ``(t, u)``: ``t`` a dendrex
of the nerve of the index operad and ``u`` a dendrex of ``X(in(t))``,
where ``in(t)`` is the meet of the leaf colours of ``t``.  The values on
proper faces are recovered by pulling ``u`` back along the (injective)
restriction maps, so ``u`` determines the whole collection.
"""
from __future__ import annotations

from typing import Callable, NamedTuple

from . import omega
from .dset import DendroidalSet, NerveDSet, Sieve
from .kan import check_inner_kan, fill_horn
from .operad import ThinOperad
from .trees import Signature, Tree, enumerate_trees


class GrothendieckError(ValueError):
    pass


class CartesianPoset:
    """A finite meet-semilattice with a top element."""

    def __init__(self, objects, order):
        self.objects = tuple(objects)
        below = {(a, a) for a in self.objects} | {tuple(p) for p in order}
        # transitive closure
        changed = True
        while changed:
            changed = False
            for a, b in list(below):
                for c, d in list(below):
                    if b == c and (a, d) not in below:
                        below.add((a, d))
                        changed = True
        self._leq = frozenset(below)
        tops = [t for t in self.objects if all(self.leq(a, t) for a in self.objects)]
        if len(tops) != 1:
            raise GrothendieckError("no-terminal-object")
        self.top = tops[0]

    def leq(self, a, b) -> bool:
        return (a, b) in self._leq

    def meet(self, objs):
        lower = [c for c in self.objects if all(self.leq(c, a) for a in objs)]
        best = [c for c in lower if all(self.leq(d, c) for d in lower)]
        if len(best) != 1:
            raise GrothendieckError("no-product")
        return best[0]

    def validate(self) -> list:
        """Problems with the product structure, checked on all pairs."""
        probs = []
        for a in self.objects:
            for b in self.objects:
                try:
                    m = self.meet((a, b))
                except GrothendieckError:
                    probs.append("no product of %s and %s" % (a, b))
                    continue
                if not (self.leq(m, a) and self.leq(m, b)):
                    probs.append("projection missing for %s x %s" % (a, b))
                if self.meet((b, a)) != m:
                    probs.append("product of %s and %s not symmetric" % (a, b))
        return probs

    def operad(self) -> "CartesianOperad":
        return CartesianOperad(self)


class CartesianOperad(ThinOperad):
    """Operations ``(c_1..c_n; c)`` are the arrows ``c_1 x ... x c_n -> c``."""

    def __init__(self, base: CartesianPoset):
        self.base = base
        self.colours = base.objects
        self.name = "cartesian"

    def exists(self, ins, out):
        return self.base.leq(self.base.meet(tuple(ins)), out)


def terminal_poset() -> CartesianPoset:
    return CartesianPoset(["*"], [])


def two_chain() -> CartesianPoset:
    """Objects ``"0" < "1"``; the product is the minimum, ``"1"`` is terminal."""
    return CartesianPoset(["0", "1"], [("0", "1")])


Restriction = Callable[[Tree, object], object]


class DendroidalDiagram:
    """A contravariant functor from the poset to dendroidal sets.

    ``restrictions[(a, b)]`` for ``a <= b`` maps ``X(b)_T`` to ``X(a)_T``.
    Missing entries on the diagonal are identities.
    """

    def __init__(self, base: CartesianPoset, components: dict, restrictions: dict):
        self.base = base
        self.components = dict(components)
        self.restrictions = dict(restrictions)
        for a in base.objects:
            if a not in self.components:
                raise GrothendieckError("missing-component: %s" % a)

    def restrict(self, a, b) -> Restriction:
        if a == b:
            return lambda t, x: x
        if not self.base.leq(a, b):
            raise GrothendieckError("no-arrow: %s -> %s" % (a, b))
        f = self.restrictions.get((a, b))
        if f is None:
            raise GrothendieckError("missing-restriction: %s -> %s" % (a, b))
        return f

    def audit(self, bound: int = 2, valence: int = 2) -> list:
        """Functoriality, naturality on the generators of Ω and injectivity."""
        objs = self.base.objects
        pairs = [(a, b) for a in objs for b in objs if self.base.leq(a, b)]
        trees = enumerate_trees(bound, valence)
        probs = []
        for a, b in pairs:
            f = self.restrict(a, b)
            xa, xb = self.components[a], self.components[b]
            for t in trees:
                images = [f(t, y) for y in xb.dendrices(t)]
                if len(set(images)) != len(images):
                    probs.append("restriction %s->%s not injective on %s" % (a, b, t.root))
                if not set(images) <= set(xa.dendrices(t)):
                    probs.append("restriction %s->%s leaves X(%s)" % (a, b, a))
                for _, _, g in omega.faces(t):
                    for y in xb.dendrices(t):
                        if xa.act(g, f(t, y)) != f(g.source, xb.act(g, y)):
                            probs.append("restriction %s->%s not natural" % (a, b))
                            break
            for c in objs:
                if self.base.leq(b, c):
                    g = self.restrict(b, c)
                    h = self.restrict(a, c)
                    for t in trees:
                        for y in self.components[c].dendrices(t):
                            if f(t, g(t, y)) != h(t, y):
                                probs.append("composite %s->%s->%s" % (a, b, c))
                                break
        return sorted(set(probs))


class TotalDendrex(NamedTuple):
    base: object    # dendrex of the nerve of the index operad
    fibre: object   # dendrex of X(in(base))


class GrothendieckDSet(DendroidalSet):
    def __init__(self, diagram: DendroidalDiagram, bound: int | None = None,
                 valence: int | None = None):
        super().__init__()
        comps = diagram.components.values()
        self.bound = min(x.bound for x in comps) if bound is None else bound
        self.valence = min(x.valence for x in comps) if valence is None else valence
        self.diagram = diagram
        self.base_nerve = NerveDSet(diagram.base.operad(), self.bound, self.valence,
                                    name="N(S)")
        self.name = "integral"
        self._preimages = {}

    def in_object(self, t: Tree, b):
        leaves = t.leaves if t.vertices else (t.root,)
        return self.diagram.base.meet(tuple(b.colour(l) for l in leaves))

    def _preimage(self, a, b, t: Tree, y):
        key = (a, b, t)
        table = self._preimages.get(key)
        if table is None:
            f = self.diagram.restrict(a, b)
            table = {}
            for z in self.diagram.components[b].dendrices(t):
                table.setdefault(f(t, z), []).append(z)
            self._preimages[key] = table
        found = table.get(y, [])
        if len(found) > 1:
            raise GrothendieckError("restriction-not-injective")
        return found[0] if found else None

    def _dendrices(self, t):
        res = []
        faces = omega.faces(t) if t.vertices else []
        for b in self.base_nerve.dendrices(t):
            a = self.in_object(t, b)
            for u in self.diagram.components[a].dendrices(t):
                d = TotalDendrex(b, u)
                if all(self._face(g, d) in self.dendrices(g.source) for _, _, g in faces):
                    res.append(d)
        return res

    def _face(self, g, d: TotalDendrex):
        b2 = self.base_nerve.act(g, d.base)
        a = self.in_object(g.target, d.base)
        a2 = self.in_object(g.source, b2)
        v = self.diagram.components[a].act(g, d.fibre)
        return TotalDendrex(b2, self._preimage(a, a2, g.source, v))

    def act(self, g, d):
        res = self._face(g, d)
        if res.fibre is None:
            raise GrothendieckError("action-outside-total-space")
        return res

    def project(self, d: TotalDendrex):
        return d.base


def integrate(d: DendroidalDiagram, bound: int | None = None,
              valence: int | None = None) -> GrothendieckDSet:
    return GrothendieckDSet(d, bound, valence)


def integrate_fill_horn(g: GrothendieckDSet, h: Sieve, family, check: bool = True):
    """A filler built fibrewise: fill the base horn, push the family into
    ``X(in(t))`` and fill there."""
    if check:
        for a, x in g.diagram.components.items():
            rep = check_inner_kan(x, bound=min(g.bound, x.bound), valence=g.valence)
            if rep.failures:
                raise GrothendieckError("component-not-kan: %s" % a)
    family = tuple(family)
    bases = fill_horn(g.base_nerve, h, tuple(f.base for f in family))
    if not bases:
        raise GrothendieckError("base-horn-unfillable")
    t = bases[0]
    a = g.in_object(h.tree, t)
    pushed = []
    for m, f in zip(h.maximal, family):
        r = g.in_object(m.source, f.base)
        pushed.append(g.diagram.restrict(a, r)(m.source, f.fibre))
    for u in fill_horn(g.diagram.components[a], h, tuple(pushed)):
        d = TotalDendrex(t, u)
        if d in g.dendrices(h.tree) and all(g.act(m, d) == f for m, f in zip(h.maximal, family)):
            return d
    raise GrothendieckError("no-filler")


# fixtures -----------------------------------------------------------------------------
def relabel(cmap: dict) -> Restriction:
    """Restriction between nerves of thin operads induced by a colour bijection."""
    def f(t, x):
        cols = tuple((e, cmap[c]) for e, c in x.colours)
        ops = tuple((v, Signature(tuple(cmap[c] for c in op.inputs), cmap[op.output]))
                    for v, op in x.ops)
        return type(x)(cols, ops)
    return f


def constant_diagram(base: CartesianPoset, x: DendroidalSet) -> DendroidalDiagram:
    ident = lambda t, y: y  # noqa: E731
    rest = {(a, b): ident for a in base.objects for b in base.objects if base.leq(a, b)}
    return DendroidalDiagram(base, {a: x for a in base.objects}, rest)


def swap_diagram(bound: int = 3, valence: int = 2) -> DendroidalDiagram:
    """Two copies of the nerve of the operad of ``C_2``, restricted along the
    automorphism exchanging its two leaves."""
    from .operad import omega_operad
    from .trees import corolla
    base = two_chain()
    n0 = NerveDSet(omega_operad(corolla(2)), bound, valence, name="N(C2)")
    n1 = NerveDSet(omega_operad(corolla(2)), bound, valence, name="N(C2)")
    swap = relabel({"0": "0", "1": "2", "2": "1"})
    return DendroidalDiagram(base, {"0": n0, "1": n1}, {("0", "1"): swap})
