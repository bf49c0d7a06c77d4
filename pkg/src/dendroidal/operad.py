"""Finite coloured operads, tree operads and operad maps.

Composition positions ``i`` are counted from 1.  A permutation is a tuple
``perm`` of 0-based indices, and ``act(p, perm)`` has inputs
``[inputs(p)[perm[k]] for k]``.  This is a right action:
``act(act(p, a), b) == act(p, tuple(a[b[k]] for k))``.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

from .trees import Signature, Tree, subtree_leaves, subtree_of_signature


class OperadError(ValueError):
    pass


def perm_compose(a: tuple, b: tuple) -> tuple:
    """The permutation ``a∘b`` with ``x·a·b == x·(a∘b)``."""
    return tuple(a[k] for k in b)


def perm_inverse(a: tuple) -> tuple:
    inv = [0] * len(a)
    for k, x in enumerate(a):
        inv[x] = k
    return tuple(inv)


def block_left(perm: tuple, i: int, m: int) -> tuple:
    """``pi`` with ``(p·perm)∘_i q == (p∘_{perm[i-1]+1} q)·pi``."""
    n = len(perm)
    j = perm[i - 1]
    idx = lambda a: a if a < j else a + m - 1
    out = []
    for k in range(n):
        if k != i - 1:
            out.append(idx(perm[k]))
        else:
            out.extend(j + b for b in range(m))
    return tuple(out)


def block_right(n: int, i: int, tau: tuple) -> tuple:
    """``rho`` with ``p∘_i (q·tau) == (p∘_i q)·rho`` for ``p`` of arity n."""
    m = len(tau)
    base = list(range(n + m - 1))
    for b in range(m):
        base[i - 1 + b] = i - 1 + tau[b]
    return tuple(base)


class Operad:
    """Interface shared by table-backed and lazily computed operads."""

    arity_cap = None

    def signature(self, op) -> Signature:
        raise NotImplementedError

    def arity(self, op) -> int:
        return len(self.signature(op).inputs)

    def unit(self, c):
        raise NotImplementedError

    def ops_with(self, output, arity: int) -> list:
        raise NotImplementedError

    def compose(self, p, i: int, q):
        raise NotImplementedError

    def act(self, p, perm: tuple):
        raise NotImplementedError

    def all_ops(self, max_arity: int) -> list:
        res = []
        for c in self.colours:
            for n in range(max_arity + 1):
                res.extend(self.ops_with(c, n))
        return res

    def is_unit(self, op) -> bool:
        s = self.signature(op)
        return len(s.inputs) == 1 and self.unit(s.output) == op


@dataclass
class ColoredOperad(Operad):
    """Operad given by explicit finite tables.

    ``sym`` is ``None`` for a planar (non-symmetric) operad.  When
    ``arity_cap`` is set, composites whose arity would exceed it are allowed
    to be missing from the table.
    """

    colours: tuple
    ops: dict
    units: dict
    compose_table: dict
    sym: dict | None = None
    name: str = ""
    arity_cap: int | None = None
    _index: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        self.colours = tuple(self.colours)
        self.ops = {k: Signature(tuple(v[0]), v[1]) for k, v in self.ops.items()}
        idx = {}
        for op, s in self.ops.items():
            idx.setdefault((s.output, len(s.inputs)), []).append(op)
        for k in idx:
            idx[k].sort(key=str)
        self._index = idx

    @property
    def symmetric(self):
        return self.sym is not None

    def signature(self, op):
        return self.ops[op]

    def unit(self, c):
        return self.units[c]

    def ops_with(self, output, arity):
        return list(self._index.get((output, arity), ()))

    def compose(self, p, i, q):
        return self.compose_table.get((p, i, q))

    def act(self, p, perm):
        perm = tuple(perm)
        if perm == tuple(range(len(perm))):
            return p
        if self.sym is None:
            raise OperadError("planar-operad")
        return self.sym.get((p, perm))

    def all_ops(self, max_arity=None):
        return sorted((op for op, s in self.ops.items()
                       if max_arity is None or len(s.inputs) <= max_arity), key=str)

    @property
    def sigma_free(self) -> bool:
        return is_sigma_free(self)


class ThinOperad(Operad):
    """Operad with at most one operation per signature.

    Operations are the signatures themselves.  Subclasses decide which
    signatures exist.
    """

    symmetric = True

    def exists(self, ins: tuple, out) -> bool:
        raise NotImplementedError

    def signature(self, op):
        return op

    def unit(self, c):
        return Signature((c,), c)

    def ops_with(self, output, arity):
        res = []
        for ins in itertools.product(self.colours, repeat=arity):
            if self.exists(ins, output):
                res.append(Signature(ins, output))
        return res

    def compose(self, p, i, q):
        if not 1 <= i <= len(p.inputs) or p.inputs[i - 1] != q.output:
            return None
        if self.is_unit(p):
            return q
        if self.is_unit(q):
            return p
        ins = p.inputs[:i - 1] + q.inputs + p.inputs[i:]
        if self.arity_cap is not None and len(ins) > self.arity_cap:
            return None
        s = Signature(ins, p.output)
        return s if self.exists(ins, p.output) else None

    def act(self, p, perm):
        return Signature(tuple(p.inputs[k] for k in perm), p.output)

    def is_unit(self, op):
        return len(op.inputs) == 1 and op.inputs[0] == op.output


class OmegaOperad(ThinOperad):
    """The operad generated by a tree: colours are edges and an operation
    with signature (e_1..e_n; e_0) exists when the e_i are, in some order,
    the leaves of a subtree rooted at e_0."""

    def __init__(self, tree: Tree):
        self.tree = tree
        self.colours = tree.edges
        self.name = "Omega(%s)" % tree.root
        self._subs = {e: subtree_leaves(tree, e) for e in tree.edges}

    def exists(self, ins, out):
        if len(ins) == 1 and ins[0] == out:
            return True
        return subtree_of_signature(self.tree, (tuple(ins), out)) is not None

    def ops_with(self, output, arity):
        res = []
        for leaves in self._subs[output]:
            if len(leaves) != arity:
                continue
            for perm in itertools.permutations(leaves):
                res.append(Signature(perm, output))
        return res

    def compose(self, p, i, q):
        if not 1 <= i <= len(p.inputs) or p.inputs[i - 1] != q.output:
            return None
        return Signature(p.inputs[:i - 1] + q.inputs + p.inputs[i:], p.output)


def omega_operad(t: Tree) -> OmegaOperad:
    return OmegaOperad(t)


def planar_omega_operad(t: Tree) -> "ColoredOperad":
    """The planar operad of a tree: one operation per subtree, inputs in planar order."""
    sigs = sorted({Signature(leaves, e) for e in t.edges for leaves in subtree_leaves(t, e)})
    ops = {_op_id(s): s for s in sigs}
    units = {e: _op_id(Signature((e,), e)) for e in t.edges}
    comp = {}
    for a in sigs:
        for i, c in enumerate(a.inputs, 1):
            for b in sigs:
                if b.output == c:
                    r = Signature(a.inputs[:i - 1] + b.inputs + a.inputs[i:], a.output)
                    comp[(_op_id(a), i, _op_id(b))] = _op_id(r)
    return ColoredOperad(t.edges, ops, units, comp, None, "planar Omega(%s)" % t.root)


def omega_ops_oracle(t: Tree) -> int:
    """Count operations of the tree operad by scanning all signatures."""
    n = 0
    edges = t.edges
    for out in edges:
        for k in range(len(edges)):
            for ins in itertools.permutations(edges, k):
                if k == 1 and ins[0] == out:
                    n += 1
                elif subtree_of_signature(t, (ins, out)) is not None:
                    n += 1
    return n


def _op_id(s: Signature) -> str:
    return "%s;%s" % (",".join(s.inputs), s.output)


def to_table(p: Operad, max_arity: int | None = None, name: str = "") -> ColoredOperad:
    """Materialize an operad into explicit tables."""
    if isinstance(p, ColoredOperad):
        return p
    if max_arity is None:
        if isinstance(p, OmegaOperad):
            max_arity = len(p.tree.edges)
        else:
            raise OperadError("max-arity-required")
    ops_list = p.all_ops(max_arity)
    ident = {op: _op_id(p.signature(op)) if isinstance(op, Signature) else str(op)
             for op in ops_list}
    if len(set(ident.values())) != len(ident):
        ident = {op: "op%d" % k for k, op in enumerate(ops_list)}
    ops = {ident[op]: p.signature(op) for op in ops_list}
    units = {c: ident[p.unit(c)] for c in p.colours}
    comp = {}
    for a in ops_list:
        sa = p.signature(a)
        for i in range(1, len(sa.inputs) + 1):
            for b in ops_list:
                if p.signature(b).output != sa.inputs[i - 1]:
                    continue
                r = p.compose(a, i, b)
                if r is not None and r in ident:
                    comp[(ident[a], i, ident[b])] = ident[r]
    sym = None
    if p.symmetric:
        sym = {}
        for a in ops_list:
            n = len(p.signature(a).inputs)
            for perm in itertools.permutations(range(n)):
                sym[(ident[a], perm)] = ident[p.act(a, perm)]
    full = isinstance(p, OmegaOperad) and max_arity >= len(p.tree.edges)
    cap = None if full else max_arity
    return ColoredOperad(tuple(p.colours), ops, units, comp, sym,
                         name or getattr(p, "name", ""), cap)


# validation -----------------------------------------------------------------
def validate(p: Operad, max_arity: int | None = None) -> list:
    """List every failed axiom instance; empty means ``p`` is an operad."""
    q = to_table(p, max_arity) if not isinstance(p, ColoredOperad) else p
    errs = []
    ops = q.all_ops()
    sig = q.ops
    cap = q.arity_cap
    colours = set(q.colours)
    for op in ops:
        s = sig[op]
        if s.output not in colours or any(c not in colours for c in s.inputs):
            errs.append("bad-colour %s" % op)
    for c in q.colours:
        u = q.units.get(c)
        if u is None or sig.get(u) != Signature((c,), c):
            errs.append("bad-unit %s" % c)
    for (a, i, b), r in q.compose_table.items():
        sa, sb = sig[a], sig[b]
        if not 1 <= i <= len(sa.inputs) or sa.inputs[i - 1] != sb.output:
            errs.append("compose-on-mismatch %s,%d,%s" % (a, i, b))
            continue
        want = Signature(sa.inputs[:i - 1] + sb.inputs + sa.inputs[i:], sa.output)
        if sig.get(r) != want:
            errs.append("compose-signature %s,%d,%s" % (a, i, b))
    for a in ops:
        sa = sig[a]
        for i in range(1, len(sa.inputs) + 1):
            for b in ops:
                sb = sig[b]
                if sb.output != sa.inputs[i - 1]:
                    continue
                if (a, i, b) not in q.compose_table:
                    n = len(sa.inputs) + len(sb.inputs) - 1
                    if cap is None or n <= cap:
                        errs.append("compose-missing %s,%d,%s" % (a, i, b))
    c = q.compose
    for a in ops:
        sa = sig[a]
        if c(q.units[sa.output], 1, a) != a:
            errs.append("left-unit %s" % a)
        for i in range(1, len(sa.inputs) + 1):
            if c(a, i, q.units[sa.inputs[i - 1]]) != a:
                errs.append("right-unit %s,%d" % (a, i))
    for a in ops:
        na = len(sig[a].inputs)
        for i in range(1, na + 1):
            for b in ops:
                if sig[b].output != sig[a].inputs[i - 1]:
                    continue
                ab = c(a, i, b)
                nb = len(sig[b].inputs)
                for j in range(1, nb + 1):
                    for r in ops:
                        if sig[r].output != sig[b].inputs[j - 1]:
                            continue
                        bc = c(b, j, r)
                        lhs = c(ab, i + j - 1, r) if ab is not None else None
                        rhs = c(a, i, bc) if bc is not None else None
                        if lhs != rhs and lhs is not None and rhs is not None:
                            errs.append("assoc-seq %s,%d,%s,%d,%s" % (a, i, b, j, r))
                        elif (lhs is None) != (rhs is None) and cap is None:
                            errs.append("assoc-seq-partial %s,%d,%s,%d,%s" % (a, i, b, j, r))
                for k in range(i + 1, na + 1):
                    for r in ops:
                        if sig[r].output != sig[a].inputs[k - 1]:
                            continue
                        ar = c(a, k, r)
                        lhs = c(ar, i, b) if ar is not None else None
                        rhs = c(ab, k + nb - 1, r) if ab is not None else None
                        if lhs != rhs and lhs is not None and rhs is not None:
                            errs.append("assoc-par %s,%d,%s,%d,%s" % (a, i, b, k, r))
                        elif (lhs is None) != (rhs is None) and cap is None:
                            errs.append("assoc-par-partial %s,%d,%s,%d,%s" % (a, i, b, k, r))
    if q.sym is not None:
        errs.extend(_validate_sym(q))
    return errs


def _validate_sym(q: ColoredOperad) -> list:
    errs = []
    sig = q.ops
    ops = q.all_ops()
    for a in ops:
        n = len(sig[a].inputs)
        perms = list(itertools.permutations(range(n)))
        for perm in perms:
            r = q.act(a, perm)
            if r is None:
                errs.append("sym-missing %s,%s" % (a, perm))
                continue
            want = Signature(tuple(sig[a].inputs[k] for k in perm), sig[a].output)
            if sig.get(r) != want:
                errs.append("sym-signature %s,%s" % (a, perm))
        for s1 in perms:
            for s2 in perms:
                x = q.act(a, s1)
                if x is None:
                    continue
                if q.act(x, s2) != q.act(a, perm_compose(s1, s2)):
                    errs.append("sym-action %s,%s,%s" % (a, s1, s2))
    for a in ops:
        na = len(sig[a].inputs)
        for i in range(1, na + 1):
            for b in ops:
                if sig[b].output != sig[a].inputs[i - 1]:
                    continue
                nb = len(sig[b].inputs)
                ab = q.compose(a, i, b)
                for perm in itertools.permutations(range(na)):
                    ap = q.act(a, perm)
                    if ap is None or sig[ap].inputs[i - 1] != sig[b].output:
                        continue
                    lhs = q.compose(ap, i, b)
                    base = q.compose(a, perm[i - 1] + 1, b)
                    if lhs is None or base is None:
                        continue
                    if q.act(base, block_left(perm, i, nb)) != lhs:
                        errs.append("equivariance-left %s,%s,%d,%s" % (a, perm, i, b))
                for tau in itertools.permutations(range(nb)):
                    bt = q.act(b, tau)
                    if bt is None or ab is None:
                        continue
                    lhs = q.compose(a, i, bt)
                    if lhs is None:
                        continue
                    if q.act(ab, block_right(na, i, tau)) != lhs:
                        errs.append("equivariance-right %s,%d,%s,%s" % (a, i, b, tau))
    return errs


def is_sigma_free(p: ColoredOperad) -> bool:
    if p.sym is None:
        return True
    for a in p.all_ops():
        n = len(p.ops[a].inputs)
        for perm in itertools.permutations(range(n)):
            if perm != tuple(range(n)) and p.act(a, perm) == a:
                return False
    return True


# construction helpers --------------------------------------------------------
def build_operad(colours, ops: dict, compose: dict | None = None, sym: dict | None = None,
                 symmetric: bool = True, name: str = "", free_sym: bool = False) -> ColoredOperad:
    """Assemble tables, adding units, unit compositions and identity actions.

    ``ops`` maps ids to ``(inputs, output)``.  ``compose`` lists the
    non-unit composites.  With ``free_sym`` every operation gets its own
    orbit of formal permuted copies named ``id·perm``.
    """
    colours = tuple(colours)
    allops = {k: Signature(tuple(v[0]), v[1]) for k, v in ops.items()}
    units = {}
    for c in colours:
        u = "1_%s" % c
        units[c] = u
        allops[u] = Signature((c,), c)
    table = dict(compose or {})
    for a, s in list(allops.items()):
        for i, c in enumerate(s.inputs, 1):
            table[(a, i, units[c])] = a
        table[(units[s.output], 1, a)] = a
    symt = None
    if symmetric:
        symt = dict(sym or {})
        for a, s in allops.items():
            n = len(s.inputs)
            symt[(a, tuple(range(n)))] = a
    p = ColoredOperad(colours, allops, units, table, symt, name)
    return p


def symmetrize(p: ColoredOperad, name: str = "") -> ColoredOperad:
    """Free symmetric operad on a planar one: operations are (op, perm)."""
    if p.sym is not None:
        raise OperadError("already-symmetric")
    ident = lambda a, perm: a if perm == tuple(range(len(perm))) else "%s·%s" % (
        a, "".join(str(k) for k in perm))
    ops = {}
    for a in p.all_ops():
        s = p.ops[a]
        for perm in itertools.permutations(range(len(s.inputs))):
            ops[ident(a, perm)] = Signature(tuple(s.inputs[k] for k in perm), s.output)
    back = {}
    for a in p.all_ops():
        for perm in itertools.permutations(range(len(p.ops[a].inputs))):
            back[ident(a, perm)] = (a, perm)
    comp = {}
    for x, (a, sa) in back.items():
        for y, (b, tb) in back.items():
            na = len(sa)
            for i in range(1, na + 1):
                if ops[x].inputs[i - 1] != ops[y].output:
                    continue
                j = sa[i - 1] + 1
                base = p.compose(a, j, b)
                if base is None:
                    continue
                pi = block_left(sa, i, len(tb))
                rho = block_right(na, i, tb)
                comp[(x, i, y)] = ident(base, perm_compose(pi, rho))
    sym = {}
    for x, (a, sa) in back.items():
        for perm in itertools.permutations(range(len(sa))):
            sym[(x, perm)] = ident(a, perm_compose(sa, perm))
    units = {c: p.units[c] for c in p.colours}
    return ColoredOperad(p.colours, ops, units, comp, sym, name or "Symm(%s)" % p.name,
                         p.arity_cap)


# operad maps -------------------------------------------------------------------
@dataclass(frozen=True)
class OperadMap:
    colour_map: tuple
    op_map: tuple

    @staticmethod
    def make(cmap: dict, omap: dict) -> "OperadMap":
        return OperadMap(tuple(sorted(cmap.items(), key=str)),
                         tuple(sorted(omap.items(), key=str)))

    @property
    def colours(self) -> dict:
        return dict(self.colour_map)

    @property
    def ops(self) -> dict:
        return dict(self.op_map)

    def is_bijective(self) -> bool:
        return (len(set(self.colours.values())) == len(self.colour_map)
                and len(set(self.ops.values())) == len(self.op_map))


def is_operad_map(p: ColoredOperad, q: ColoredOperad, cmap: dict, omap: dict) -> bool:
    for a, s in p.ops.items():
        b = omap.get(a)
        if b is None:
            return False
        want = Signature(tuple(cmap[c] for c in s.inputs), cmap[s.output])
        if q.ops.get(b) != want:
            return False
    for c in p.colours:
        if omap[p.units[c]] != q.units[cmap[c]]:
            return False
    for (a, i, b), r in p.compose_table.items():
        if q.compose(omap[a], i, omap[b]) != omap[r]:
            return False
    if p.sym is not None:
        if q.sym is None:
            return False
        for (a, perm), r in p.sym.items():
            if q.act(omap[a], perm) != omap[r]:
                return False
    return True


def hom_operads(p: Operad, q: Operad, bijective: bool = False,
                max_arity: int | None = None) -> list:
    """Every operad map ``p -> q``; optionally only isomorphisms.

    Backtracks over the non-unit operations of ``p`` in order of arity,
    extending a partial colour map, and propagates forced values through
    the composition and symmetry tables.
    """
    p = to_table(p, max_arity)
    q = to_table(q, max_arity)
    if bijective and (len(p.colours) != len(q.colours) or len(p.ops) != len(q.ops)):
        return []
    unit_ops = set(p.units.values())
    order = sorted((a for a in p.all_ops() if a not in unit_ops),
                   key=lambda a: (len(p.ops[a].inputs), str(a)))
    q_by_arity = {}
    for b in q.all_ops():
        q_by_arity.setdefault(len(q.ops[b].inputs), []).append(b)
    comps_by_op = {}
    for (a, i, b), r in p.compose_table.items():
        comps_by_op.setdefault(a, []).append((a, i, b, r))
        comps_by_op.setdefault(b, []).append((a, i, b, r))
    syms_by_op = {}
    if p.sym is not None:
        for (a, perm), r in p.sym.items():
            syms_by_op.setdefault(a, []).append((perm, r))
            syms_by_op.setdefault(r, []).append((perm_inverse(perm), a))
    results = []

    class State:
        __slots__ = ("cmap", "omap", "ucol", "uop")

        def __init__(self, other=None):
            if other is None:
                self.cmap, self.omap, self.ucol, self.uop = {}, {}, set(), set()
            else:
                self.cmap, self.omap = dict(other.cmap), dict(other.omap)
                self.ucol, self.uop = set(other.ucol), set(other.uop)

    def set_colour(st, c, d, work):
        if c in st.cmap:
            return st.cmap[c] == d
        if bijective and d in st.ucol:
            return False
        st.cmap[c] = d
        st.ucol.add(d)
        return set_op(st, p.units[c], q.units[d], work)

    def set_op(st, a, b, work):
        if a in st.omap:
            return st.omap[a] == b
        if bijective and b in st.uop:
            return False
        sa, sb = p.ops[a], q.ops[b]
        if len(sa.inputs) != len(sb.inputs):
            return False
        st.omap[a] = b
        st.uop.add(b)
        for c, d in zip(sa.inputs + (sa.output,), sb.inputs + (sb.output,)):
            if not set_colour(st, c, d, work):
                return False
        work.append(a)
        return True

    def propagate(st, work):
        while work:
            a = work.pop()
            for (x, i, y, r) in comps_by_op.get(a, ()):
                if x in st.omap and y in st.omap:
                    want = q.compose(st.omap[x], i, st.omap[y])
                    if want is None:
                        if q.arity_cap is None:
                            return False
                        continue
                    if not set_op(st, r, want, work):
                        return False
            for perm, r in syms_by_op.get(a, ()):
                if q.sym is None and perm != tuple(range(len(perm))):
                    return False
                want = q.act(st.omap[a], perm)
                if want is None or not set_op(st, r, want, work):
                    return False
        return True

    def finish(st):
        free = [c for c in p.colours if c not in st.cmap]
        choices = (itertools.permutations([d for d in q.colours if d not in st.ucol], len(free))
                   if bijective else itertools.product(q.colours, repeat=len(free)))
        for img in choices:
            st2 = State(st)
            work = []
            if all(set_colour(st2, c, d, work) for c, d in zip(free, img)) and \
                    propagate(st2, work) and len(st2.omap) == len(p.ops) and \
                    is_operad_map(p, q, st2.cmap, st2.omap):
                m = OperadMap.make(st2.cmap, st2.omap)
                if not bijective or m.is_bijective():
                    results.append(m)

    def rec(k, st):
        while k < len(order) and order[k] in st.omap:
            k += 1
        if k == len(order):
            finish(st)
            return
        a = order[k]
        for b in q_by_arity.get(len(p.ops[a].inputs), ()):
            st2 = State(st)
            work = []
            if set_op(st2, a, b, work) and propagate(st2, work):
                rec(k + 1, st2)

    rec(0, State())
    results.sort(key=lambda m: (m.colour_map, m.op_map))
    return results


def isomorphisms(p: Operad, q: Operad) -> list:
    return hom_operads(p, q, bijective=True)


def identity_map(p: ColoredOperad) -> OperadMap:
    return OperadMap.make({c: c for c in p.colours}, {a: a for a in p.ops})


def omega_map(a) -> callable:
    """Operation map of ``Omega(s) -> Omega(t)`` induced by an arrow."""
    def f(op: Signature) -> Signature:
        return Signature(tuple(a(x) for x in op.inputs), a(op.output))
    return f


# JSON --------------------------------------------------------------------------
def operad_to_json(p: Operad, max_arity: int | None = None) -> dict:
    q = to_table(p, max_arity)
    return {
        "name": q.name,
        "colours": list(q.colours),
        "ops": [{"id": a, "inputs": list(q.ops[a].inputs), "output": q.ops[a].output}
                for a in q.all_ops()],
        "units": dict(q.units),
        "compose": sorted([[a, i, b, r] for (a, i, b), r in q.compose_table.items()],
                          key=str),
        "sym": None if q.sym is None else sorted(
            [[a, list(perm), r] for (a, perm), r in q.sym.items()], key=str),
        "arity_cap": q.arity_cap,
        "sigma_free": is_sigma_free(q),
    }


def operad_from_json(obj) -> ColoredOperad:
    if isinstance(obj, str):
        obj = json.loads(obj)
    try:
        ops = {o["id"]: (tuple(o["inputs"]), o["output"]) for o in obj["ops"]}
        comp = {(a, int(i), b): r for a, i, b, r in obj.get("compose", [])}
        sym = obj.get("sym")
        symt = None if sym is None else {(a, tuple(perm)): r for a, perm, r in sym}
        return ColoredOperad(tuple(obj["colours"]), ops, dict(obj["units"]), comp, symt,
                             obj.get("name", ""), obj.get("arity_cap"))
    except (KeyError, TypeError, ValueError) as exc:
        raise OperadError("malformed-operad-json: %s" % exc) from None
