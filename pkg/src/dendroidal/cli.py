"""Command line entry point: ``dendro <command> <action> [options]``."""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import anodyne, corpus as corpus_mod, dset, grothendieck, kan, omega, operad
from . import percolation, trees

EXIT_OK, EXIT_USAGE, EXIT_KAN, EXIT_STRICT, EXIT_CERT = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def threads() -> int:
    """Worker cap from ``DENDRO_THREADS``; the engines currently run in one process."""
    raw = os.environ.get("DENDRO_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise UsageError("DENDRO_THREADS must be an integer, got %r" % raw) from None


def _load(path: str, what: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError("%s: cannot read %s (%s)" % (what, path, exc.strerror)) from None
    except json.JSONDecodeError as exc:
        raise UsageError("%s: %s line %d column %d: %s"
                         % (what, path, exc.lineno, exc.colno, exc.msg)) from None


def _tree(path: str, what: str = "--tree") -> trees.Tree:
    try:
        return trees.from_json(_load(path, what))
    except trees.TreeError as exc:
        raise UsageError("%s: %s: %s" % (what, path, exc)) from None


def _operad(path: str) -> operad.ColoredOperad:
    try:
        return operad.operad_from_json(_load(path, "--operad"))
    except operad.OperadError as exc:
        raise UsageError("--operad: %s: %s" % (path, exc)) from None


def _dset(path: str) -> dset.DendroidalSet:
    try:
        return dset.dset_from_json(_load(path, "--dset"))
    except dset.DSetError as exc:
        raise UsageError("--dset: %s: %s" % (path, exc)) from None


def _emit(obj, out):
    out.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")


# commands -----------------------------------------------------------------------------
def cmd_trees(a, out):
    if a.action == "enumerate":
        ts = trees.enumerate_trees(a.max_vertices, a.max_valence)
        if a.dot:
            out.write("\n".join(trees.to_dot(t, "t%d" % k) for k, t in enumerate(ts)) + "\n")
        else:
            _emit([trees.to_json(t) for t in ts], out)
    elif a.action == "canonical":
        t = trees.canonical_form(_tree(a.tree))[0]
        out.write(trees.to_dot(t) + "\n") if a.dot else _emit(trees.to_json(t), out)
    elif a.action == "classify":
        t = _tree(a.tree)
        _emit({k: sorted(v) for k, v in trees.classify_edges(t).items()}, out)
    return EXIT_OK


def cmd_omega(a, out):
    if a.action == "faces":
        t = _tree(a.tree)
        _emit([{"kind": k, "name": n, "arrow": omega.arrow_to_json(f)}
               for k, n, f in omega.faces(t)], out)
    elif a.action == "arrows":
        s, t = _tree(a.source, "--source"), _tree(a.target, "--target")
        _emit([omega.arrow_to_json(f) for f in omega.arrows_between(s, t)], out)
    return EXIT_OK


def cmd_operad(a, out):
    if a.action == "omega":
        _emit(operad.operad_to_json(operad.omega_operad(_tree(a.tree)), a.max_valence), out)
    elif a.action == "validate":
        p = _operad(a.operad)
        probs = operad.validate(p, a.max_valence)
        _emit({"name": p.name, "problems": probs, "sigma_free": operad.is_sigma_free(p)}, out)
        return EXIT_OK if not probs else EXIT_USAGE
    return EXIT_OK


def cmd_nerve(a, out):
    p = _operad(a.operad)
    x = dset.NerveDSet(p, a.bound, a.max_valence)
    if a.action == "counts":
        _emit(x.counts(), out)
    elif a.action == "export":
        _emit({"kind": "nerve", "operad": operad.operad_to_json(p), "bound": a.bound,
               "valence": a.max_valence}, out)
    return EXIT_OK


def cmd_kan(a, out):
    x = _dset(a.dset)
    rep = kan.check_inner_kan(x, strict=a.strict, bound=a.bound, valence=a.max_valence)
    _emit(rep.to_json(), out)
    if rep.failures:
        return EXIT_KAN
    if a.strict and rep.strictness_failures:
        return EXIT_STRICT
    return EXIT_OK


def cmd_ho(a, out):
    x = _dset(a.dset)
    try:
        h = kan.ho_operad(x, max_arity=a.max_valence, check=True)
    except kan.KanError as exc:
        sys.stderr.write("ho: %s\n" % exc)
        return EXIT_KAN
    _emit(operad.operad_to_json(h.operad), out)
    return EXIT_OK


def cmd_tensor(a, out):
    s, t = _tree(a.s, "--s"), _tree(a.t, "--t")
    try:
        poset = percolation.enumerate_schemes(s, t)
    except percolation.PercolationError as exc:
        raise UsageError(str(exc)) from None
    if a.action == "percolate":
        out.write(poset.to_dot() + "\n") if a.dot else _emit(poset.to_json(), out)
    elif a.action == "counts":
        x = percolation.tensor(s, t, a.bound, a.max_valence)
        _emit(x.counts(), out)
    return EXIT_OK


def cmd_anodyne(a, out):
    try:
        if a.kind == "multi-horn":
            edges = json.loads(a.edges) if a.edges else []
            if not edges:
                raise UsageError("--edges must name at least one inner edge")
            c = anodyne.certify_multi_horn(_tree(a.tree), set(edges))
        elif a.kind == "grafting":
            if a.leaf is None or a.s is None:
                raise UsageError("grafting needs --tree, --leaf and --s")
            c = anodyne.certify_grafting(_tree(a.tree), a.leaf, _tree(a.s, "--s"))
        else:
            if a.edge is None or a.s is None or a.t is None:
                raise UsageError("tensor needs --s, --edge and --t")
            c = anodyne.certify_tensor_extension(_tree(a.s, "--s"), a.edge, _tree(a.t, "--t"))
    except json.JSONDecodeError as exc:
        raise UsageError("--edges: %s" % exc.msg) from None
    except anodyne.AnodyneError as exc:
        sys.stderr.write("anodyne: %s\n" % exc)
        return EXIT_CERT
    ok, why = anodyne.verify_certificate(c)
    body = c.to_json()
    body["valid"] = ok
    body["failure"] = why
    _emit(body, out)
    return EXIT_OK if ok else EXIT_CERT


def cmd_integrate(a, out):
    if a.fixture == "swap":
        d = grothendieck.swap_diagram(a.bound, a.max_valence)
    else:
        from .operad import omega_operad
        n = dset.NerveDSet(omega_operad(trees.corolla(2)), a.bound, a.max_valence)
        d = grothendieck.constant_diagram(grothendieck.two_chain(), n)
    g = grothendieck.integrate(d)
    rep = kan.check_inner_kan(g, strict=a.strict, bound=a.bound, valence=a.max_valence)
    _emit({"audit": d.audit(min(2, a.bound), a.max_valence), "kan": rep.to_json()}, out)
    if rep.failures:
        return EXIT_KAN
    if a.strict and rep.strictness_failures:
        return EXIT_STRICT
    return EXIT_OK


def cmd_corpus(a, out):
    b = corpus_mod.corpus(a.seed, a.budget)
    body = b.to_json()
    body["digest"] = b.digest()
    _emit(body, out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--max-vertices", type=int, default=3)
    common.add_argument("--max-valence", type=int, default=3)
    common.add_argument("--bound", type=int, default=3)
    common.add_argument("--strict", action="store_true")
    common.add_argument("--dot", action="store_true")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--json", action="store_true", help="JSON output (the default)")

    p = _Parser(prog="dendro", description="Dendroidal set toolkit.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    q = sub.add_parser("trees", parents=[common])
    q.add_argument("action", choices=["enumerate", "canonical", "classify"])
    q.add_argument("--tree")

    q = sub.add_parser("omega", parents=[common])
    q.add_argument("action", choices=["faces", "arrows"])
    q.add_argument("--tree")
    q.add_argument("--source")
    q.add_argument("--target")

    q = sub.add_parser("operad", parents=[common])
    q.add_argument("action", choices=["omega", "validate"])
    q.add_argument("--tree")
    q.add_argument("--operad")

    q = sub.add_parser("nerve", parents=[common])
    q.add_argument("action", choices=["counts", "export"])
    q.add_argument("--operad", required=True)

    q = sub.add_parser("kan", parents=[common])
    q.add_argument("action", choices=["check"])
    q.add_argument("--dset", required=True)

    q = sub.add_parser("ho", parents=[common])
    q.add_argument("action", choices=["compute"])
    q.add_argument("--dset", required=True)

    q = sub.add_parser("tensor", parents=[common])
    q.add_argument("action", choices=["percolate", "counts"])
    q.add_argument("--s", required=True)
    q.add_argument("--t", required=True)

    q = sub.add_parser("anodyne", parents=[common])
    q.add_argument("action", choices=["certify"])
    q.add_argument("--kind", choices=["multi-horn", "grafting", "tensor"], required=True)
    q.add_argument("--tree")
    q.add_argument("--edges")
    q.add_argument("--leaf")
    q.add_argument("--edge")
    q.add_argument("--s")
    q.add_argument("--t")

    q = sub.add_parser("integrate", parents=[common])
    q.add_argument("action", choices=["check"])
    q.add_argument("--fixture", choices=["swap", "constant"], default="swap")

    q = sub.add_parser("corpus", parents=[common])
    q.add_argument("--budget", type=int, default=0)
    return p


COMMANDS = {"trees": cmd_trees, "omega": cmd_omega, "operad": cmd_operad, "nerve": cmd_nerve,
            "kan": cmd_kan, "ho": cmd_ho, "tensor": cmd_tensor, "anodyne": cmd_anodyne,
            "integrate": cmd_integrate, "corpus": cmd_corpus}

REQUIRED = {("trees", "canonical"): ["tree"], ("trees", "classify"): ["tree"],
            ("omega", "faces"): ["tree"], ("omega", "arrows"): ["source", "target"],
            ("operad", "omega"): ["tree"], ("operad", "validate"): ["operad"]}


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        a = build_parser().parse_args(argv)
        threads()
        for name in REQUIRED.get((a.command, getattr(a, "action", None)), []):
            if getattr(a, name) is None:
                raise UsageError("--%s is required for %s %s" % (name, a.command, a.action))
        return COMMANDS[a.command](a, out)
    except UsageError as exc:
        sys.stderr.write("usage error: %s\n" % exc)
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
