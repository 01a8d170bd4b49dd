"""Command-line front end.

Every command prints a human-readable report followed by one JSON line;
``--json`` prints the JSON line only. Failures print a JSON line of the form
``{"error": {"type": ..., "message": ...}}`` and exit nonzero: 2 for unusable
input, 3 for a mathematical precondition that does not hold.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Callable

from . import io, linalg
from .adel import Adel, AdelMorphism, AdelObject
from .audit import DEFAULT_SEED, SUITES
from .errors import AdelmanError, IllTypedError, PreconditionError
from .homology import hat_functor
from .linalg import ZMatrix
from .zfree import FreeMorphism, zfree_capability
from .zmod import E, GroupMorphism, PresentedGroup, invariant_factors, zmod_capability

ADEL = Adel(zfree_capability())
ZM = zmod_capability()


class Report:
    """Collects text lines and the final JSON payload of one command."""

    def __init__(self, command: str):
        self.lines: list[str] = []
        self.data: dict[str, Any] = {"command": command}

    def say(self, line: str = "") -> None:
        self.lines.append(line)


# -- formatting -------------------------------------------------------------


def fmt_matrix(M: ZMatrix) -> str:
    if M.rows == 0 or M.cols == 0:
        return f"0 ({M.rows}x{M.cols})"
    return "[" + ", ".join("[" + ", ".join(map(str, r)) + "]" for r in M.tolist()) + "]"


def fmt_free(f: FreeMorphism) -> str:
    return f"Z^{f.dom.rank} -> Z^{f.cod.rank}: {fmt_matrix(f.mat)}"


def describe_object(rep: Report, A: AdelObject, title: str) -> None:
    rep.say(f"{title}: Z^{A.X0.rank} -> Z^{A.X1.rank} -> Z^{A.X2.rank}")
    rep.say(f"  x0 = {fmt_matrix(A.x0.mat)}")
    rep.say(f"  x1 = {fmt_matrix(A.x1.mat)}")
    if A.layout is not None:
        rep.say("  summands: " + " | ".join(
            " + ".join(f"Z^{X.rank}" for X in slot) or "0" for slot in A.layout))


def describe_morphism(rep: Report, f: AdelMorphism, title: str) -> None:
    rep.say(f"{title}:")
    for k, g in enumerate(f.components):
        rep.say(f"  f{k} = {fmt_free(g)}")


def fmt_group(G: PresentedGroup) -> str:
    return f"{invariant_factors(G)}  (generators {G.gens}, relations {fmt_matrix(G.rels)})"


def factors_json(G: PresentedGroup) -> dict:
    inv = invariant_factors(G)
    return {"free_rank": inv.free_rank, "torsion": list(inv.torsion), "display": str(inv)}


# -- commands ---------------------------------------------------------------


def _load_kind(path: str, *types: type) -> Any:
    value = io.load(path)
    if not isinstance(value, types):
        names = " or ".join(t.__name__ for t in types)
        raise io.FormatError(f"{path}: expected {names}, got {type(value).__name__}")
    return value


def _morphism(path: str) -> AdelMorphism:
    return _load_kind(path, AdelMorphism)


def _object(path: str) -> AdelObject:
    return _load_kind(path, AdelObject)


def cmd_equal(args, rep: Report) -> int:
    f, g = _morphism(args.f), _morphism(args.g)
    if f.source != g.source or f.target != g.target:
        raise IllTypedError("the two morphisms do not share source and target")
    w = ADEL.is_zero_morphism(ADEL.sub(f, g))
    rep.data["equal"] = w is not None
    if w is None:
        rep.say("NOT-EQUAL")
    else:
        rep.say("EQUAL")
        rep.say(f"  witness s = {fmt_matrix(w.s.mat)}")
        rep.say(f"  witness t = {fmt_matrix(w.t.mat)}")
        rep.data["witness"] = {"s": io.matrix_to_json(w.s.mat), "t": io.matrix_to_json(w.t.mat)}
    return 0


def _kernel_like(args, rep: Report, which: str) -> int:
    f = _morphism(args.f)
    obj, mor = ADEL.kernel(f) if which == "kernel" else ADEL.cokernel(f)
    describe_object(rep, obj, "K(f)" if which == "kernel" else "C(f)")
    describe_morphism(rep, mor, "k(f)" if which == "kernel" else "c(f)")
    rep.data["object"] = io.adel_object_to_json(obj)
    rep.data["morphism"] = io.adel_morphism_to_json(mor)
    if args.simplify:
        S, iso, _ = ADEL.simplify(obj)
        describe_object(rep, S, "simplified")
        rep.data["simplified"] = io.adel_object_to_json(S)
        rep.data["simplify_iso"] = io.adel_morphism_to_json(iso)
    return 0


def cmd_kernel(args, rep: Report) -> int:
    return _kernel_like(args, rep, "kernel")


def cmd_cokernel(args, rep: Report) -> int:
    return _kernel_like(args, rep, "cokernel")


def _witness_json(w) -> list | None:
    return None if w is None else [io.matrix_to_json(x.mat) for x in w]


def _say_witness(rep: Report, label: str, w) -> None:
    if w is None:
        rep.say(f"  {label} witness: none")
        return
    for name, x in zip("stuv", w):
        rep.say(f"  {label} {name} = {fmt_matrix(x.mat)}")


def cmd_is(which: str) -> Callable:
    def run(args, rep: Report) -> int:
        f = _morphism(args.f)
        verdict = {}
        if which in ("mono", "iso"):
            w = ADEL.mono_witness(f)
            verdict["mono"] = w is not None
            rep.data["mono_witness"] = _witness_json(w)
            rep.say(f"mono: {'yes' if w is not None else 'no'}")
            _say_witness(rep, "mono", w)
        if which in ("epi", "iso"):
            w = ADEL.epi_witness(f)
            verdict["epi"] = w is not None
            rep.data["epi_witness"] = _witness_json(w)
            rep.say(f"epi: {'yes' if w is not None else 'no'}")
            _say_witness(rep, "epi", w)
        result = all(verdict.values())
        rep.data[which] = result
        if which == "iso":
            rep.say(f"iso: {'yes' if result else 'no'}")
        return 0
    return run


def cmd_factorize(args, rep: Report) -> int:
    f = _morphism(args.f)
    fac = ADEL.kernel_cokernel_factorization(f)
    for name, m in (("p", fac.p), ("I_f", fac.If), ("i", fac.i), ("J_f", fac.Jf)):
        describe_morphism(rep, m, name)
        rep.data[name] = io.adel_morphism_to_json(m)
    checks = {
        "p.I_f.i == f": ADEL.equal(ADEL.chain(fac.p, fac.If, fac.i), f),
        "I_f.J_f == 1": ADEL.equal(ADEL.compose(fac.If, fac.Jf), ADEL.identity(fac.If.source)),
        "J_f.I_f == 1": ADEL.equal(ADEL.compose(fac.Jf, fac.If), ADEL.identity(fac.Jf.source)),
    }
    for k, v in checks.items():
        rep.say(f"check {k}: {'ok' if v else 'FAILED'}")
    rep.data["checks"] = checks
    return 0 if all(checks.values()) else 1


def cmd_hat_e(args, rep: Report) -> int:
    A = _object(args.A)
    G = hat_functor(E, A)
    inv = invariant_factors(G)
    rep.say(str(inv))
    rep.data["group"] = io.group_to_json(G)
    rep.data["invariant_factors"] = factors_json(G)
    return 0


def cmd_hat_e_mor(args, rep: Report) -> int:
    f = _morphism(args.f)
    h: GroupMorphism = hat_functor(E, f)
    rep.say(f"source: {fmt_group(h.dom)}")
    rep.say(f"target: {fmt_group(h.cod)}")
    rep.say(f"matrix: {fmt_matrix(h.M)}")
    zero = ZM.is_zero(h)
    rep.say(f"zero morphism: {'yes' if zero else 'no'}")
    rep.data["morphism"] = io.group_morphism_to_json(h)
    rep.data["source_factors"] = factors_json(h.dom)
    rep.data["target_factors"] = factors_json(h.cod)
    rep.data["is_zero"] = zero
    return 0


def cmd_resolve(args, rep: Report) -> int:
    A = _object(args.A)
    r = ADEL.projective_resolution(A)
    describe_object(rep, r.P, "P")
    describe_morphism(rep, r.f, "f: P -> Q")
    describe_object(rep, r.Q, "Q")
    describe_morphism(rep, r.c, "c: Q -> A")
    Kf, _ = ADEL.kernel(r.f)
    checks = {
        "f.c == 0": ADEL.is_zero(ADEL.compose(r.f, r.c)),
        "c epi": ADEL.is_epi(r.c),
        "C(f) -> A iso": ADEL.is_iso(ADEL.factor_through_cokernel(r.c, r.f)),
        "K(f) first slot zero": zfree_capability().is_zero_object(Kf.X0),
    }
    for k, v in checks.items():
        rep.say(f"check {k}: {'ok' if v else 'FAILED'}")
    rep.data.update({"P": io.adel_object_to_json(r.P), "f": io.adel_morphism_to_json(r.f),
                     "Q": io.adel_object_to_json(r.Q), "c": io.adel_morphism_to_json(r.c),
                     "checks": checks})
    return 0 if all(checks.values()) else 1


def cmd_dualize(args, rep: Report) -> int:
    x = _load_kind(args.x, AdelObject, AdelMorphism)
    if isinstance(x, AdelObject):
        D = ADEL.dualize(x)
        describe_object(rep, D, "D(A)")
    else:
        D = ADEL.dualize_morphism(x)
        describe_morphism(rep, D, "D(f)")
    rep.data["result"] = io.to_document(D)
    return 0


def cmd_snf(args, rep: Report) -> int:
    M = _load_kind(args.M, ZMatrix)
    dec = linalg.snf(M)
    rep.say(f"D = {fmt_matrix(dec.D)}")
    rep.say(f"U = {fmt_matrix(dec.U)}")
    rep.say(f"V = {fmt_matrix(dec.V)}")
    rep.say("diag(" + ",".join(map(str, dec.diagonal)) + ")")
    rep.data.update({"diagonal": list(dec.diagonal), "D": io.matrix_to_json(dec.D),
                     "U": io.matrix_to_json(dec.U), "V": io.matrix_to_json(dec.V)})
    return 0


def cmd_axioms(args, rep: Report) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    results = []
    for name in args.suite or list(SUITES):
        r = SUITES[name](seed=seed, count=args.count)
        results.append(r.to_dict())
        rep.say(f"{name}: {r.cases} cases, {r.passed} checks passed, {r.failed} failed "
                f"({r.seconds:.1f} s)")
        for msg in r.failures:
            rep.say(f"  FAIL {msg}")
    failed = sum(r["failed"] for r in results)
    rep.data.update({"seed": seed, "count": args.count, "suites": results, "failed": failed})
    return 0 if failed == 0 else 1


def _default_seed() -> int:
    raw = os.environ.get("ADELMAN_SEED")
    if raw is None or not raw.strip():
        return DEFAULT_SEED
    try:
        return int(raw, 0)
    except ValueError:
        raise io.FormatError(f"ADELMAN_SEED is not an integer: {raw!r}") from None


# -- entry point ------------------------------------------------------------


def _seed_arg(text: str) -> int:
    try:
        return int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="adelman",
                                description="Adelman category computations over Z-free.")
    p.add_argument("--json", action="store_true", help="print only the JSON result line")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, *files, simplify=False):
        q = sub.add_parser(name, help=help_)
        for f in files:
            q.add_argument(f)
        if simplify:
            q.add_argument("--simplify", action="store_true",
                           help="drop summands that are zero objects")
        q.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                       help="print only the JSON result line")
        q.set_defaults(func=fn)
        return q

    add("equal", cmd_equal, "decide equality of two Adel morphisms", "f", "g")
    add("kernel", cmd_kernel, "kernel of an Adel morphism", "f", simplify=True)
    add("cokernel", cmd_cokernel, "cokernel of an Adel morphism", "f", simplify=True)
    add("is-mono", cmd_is("mono"), "monomorphism test with witnesses", "f")
    add("is-epi", cmd_is("epi"), "epimorphism test with witnesses", "f")
    add("is-iso", cmd_is("iso"), "isomorphism test with witnesses", "f")
    add("factorize", cmd_factorize, "kernel-cokernel factorisation", "f")
    add("homology", cmd_hat_e, "invariant factors of the homology of E applied to A", "A")
    add("hat-e", cmd_hat_e, "invariant factors of the homology of E applied to A", "A")
    add("hat-e-mor", cmd_hat_e_mor, "induced morphism of presented groups", "f")
    add("resolve", cmd_resolve, "projective resolution of length two", "A")
    add("dualize", cmd_dualize, "dual object or morphism", "x")
    add("snf", cmd_snf, "Smith normal form of a matrix", "M")
    q = add("axioms", cmd_axioms, "randomised invariant audits")
    q.add_argument("--seed", type=_seed_arg, default=None,
                   help=f"audit seed (default ADELMAN_SEED or {DEFAULT_SEED:#x})")
    q.add_argument("--count", type=int, default=20, help="cases per suite (default 20)")
    q.add_argument("--suite", action="append", choices=sorted(SUITES),
                   help="restrict to a suite (repeatable)")
    return p


def _emit(rep: Report, json_only: bool, out) -> None:
    if not json_only:
        for line in rep.lines:
            print(line, file=out)
    print(json.dumps(rep.data, sort_keys=True), file=out)


def _fail(out, kind: str, exc: Exception, status: int) -> int:
    print(f"error: {exc}", file=sys.stderr)
    print(json.dumps({"error": {"type": kind, "kind": type(exc).__name__,
                                "message": str(exc)}}), file=out)
    return status


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    rep = Report(args.command)
    try:
        status = args.func(args, rep)
    except PreconditionError as exc:
        return _fail(out, "precondition", exc, 3)
    except (AdelmanError, ValueError) as exc:
        return _fail(out, "input", exc, 2)
    _emit(rep, args.json, out)
    return status


if __name__ == "__main__":
    sys.exit(main())
