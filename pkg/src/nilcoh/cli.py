"""Command line interface.

Commands read a presentation document from --input or stdin (``gen`` and
``selftest`` take no input) and write text or JSON to stdout or --out.
Exit codes: 0 success, 1 validation or verification failure, 2 malformed
input or invocation.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass

from . import acceptance, families
from .cocycles import (CocycleFormatError, build_extension,
                       coboundary_witness, cocycle_to_json,
                       lemmax_generators, lemmay_basis, render,
                       verify_cocycle)
from .cohomology import h1, h2, second_homology_rank
from .grouplaw import (InvalidPresentationError, PresentationFormatError,
                       load_presentation, presentation_to_json, validate)


def dump_json(obj):
    """The one JSON writer: emitted documents re-serialize byte-identically."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


@dataclass(frozen=True)
class Invocation:
    command: str
    input_path: str = None
    coeff_rank: int = 1
    trials: int = 1000
    bound: int = 10
    seed: int = 0
    max_weight: int = 3
    format: str = "text"
    out_path: str = None
    family: str = None
    n: int = None
    m: int = None
    d: tuple = None


def _read_presentation(inv):
    if inv.input_path is not None:
        with open(inv.input_path, "r", encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    return load_presentation(text)


def _group_json(P):
    return presentation_to_json(P)


def _cmd_validate(inv):
    P = _read_presentation(inv)
    rep = validate(P)
    if inv.format == "json":
        text = dump_json({"group": _group_json(P), "valid": rep.ok,
                          "failures": list(rep.failures)})
    else:
        lines = list(rep.failures) + ["valid" if rep.ok else "invalid"]
        text = "".join(line + "\n" for line in lines)
    return (0 if rep.ok else 1), text


def _cmd_h1(inv):
    P = _read_presentation(inv)
    g = h1(P, inv.coeff_rank)
    if inv.format == "json":
        return 0, dump_json({"group": _group_json(P), "h1": g.to_json()})
    return 0, "H^1 = %s\n" % g


def _cmd_h2(inv):
    P = _read_presentation(inv)
    rep = h2(P, inv.coeff_rank)
    if inv.format == "json":
        text = dump_json({"group": _group_json(P), "h2": rep.to_json()})
    else:
        text = ("H^2 = %s\n"
                "coker c* = %s\n"
                "hom part rank = %d\n"
                "ker c rank = %d\n"
                "ext part = %s\n"
                "complex path = %s\n"
                "agree = %s\n"
                % (rep.total, rep.coker_cstar, rep.hom_part_rank,
                   rep.ker_c_rank, rep.ext_part, rep.crosscheck,
                   "yes" if rep.agree else "no"))
    return (0 if rep.agree else 1), text


def _cmd_homology_rank(inv):
    P = _read_presentation(inv)
    k = second_homology_rank(P)
    if inv.format == "json":
        return 0, dump_json({"group": _group_json(P), "second_homology_rank": k})
    return 0, "H_2 free rank = %d\n" % k


def _describe(P, idx, w):
    kind = cocycle_to_json(w)["kind"]
    if kind == "lemmax" and w.order:
        head = "cocycle %d [lemmax, order %d]" % (idx, w.order)
    elif kind == "lemmax":
        head = "cocycle %d [lemmax, infinite order]" % idx
    else:
        head = "cocycle %d [%s]" % (idx, kind)
    return "%s: %s" % (head, render(P, w))


def _cmd_cocycles(inv):
    P = _read_presentation(inv)
    ws = lemmax_generators(P) + lemmay_basis(P)
    if inv.format == "json":
        return 0, dump_json({"group": _group_json(P),
                             "cocycles": [cocycle_to_json(w) for w in ws]})
    lines = [_describe(P, i + 1, w) for i, w in enumerate(ws)]
    if not lines:
        lines = ["no cocycle generators (trivial H^2)"]
    return 0, "".join(line + "\n" for line in lines)


def _cmd_verify(inv):
    P = _read_presentation(inv)
    ws = lemmax_generators(P) + lemmay_basis(P)
    results = [verify_cocycle(P, w, trials=inv.trials, bound=inv.bound,
                              seed=inv.seed) for w in ws]
    ok = all(r.ok for r in results)
    if inv.format == "json":
        text = dump_json({"group": _group_json(P),
                          "verify": [{"cocycle": cocycle_to_json(w),
                                      "ok": r.ok, "trials": r.trials,
                                      "message": r.message}
                                     for w, r in zip(ws, results)]})
    else:
        lines = ["cocycle %d: %s" % (i + 1,
                                     "PASS (%d trials)" % r.trials if r.ok
                                     else "FAIL: %s" % r.message)
                 for i, r in enumerate(results)]
        lines.append("all passed" if ok else "verification failed")
        text = "".join(line + "\n" for line in lines)
    return (0 if ok else 1), text


def _cmd_extend(inv):
    P = _read_presentation(inv)
    ws = lemmax_generators(P) + lemmay_basis(P)
    try:
        E = build_extension(P, ws)
    except ValueError as exc:
        return 1, "extension rejected: %s\n" % exc
    rng = random.Random("cli-extend:%d" % inv.seed)
    for t in range(inv.trials):
        x = E.random_element(inv.bound, rng)
        y = E.random_element(inv.bound, rng)
        z = E.random_element(inv.bound, rng)
        if E.multiply(E.multiply(x, y), z) != E.multiply(x, E.multiply(y, z)):
            return 1, "associativity fails at trial %d\n" % t
        xi = E.inverse(x)
        if (E.multiply(x, xi) != E.identity()
                or E.multiply(xi, x) != E.identity()):
            return 1, "inverse law fails at trial %d\n" % t
    if inv.format == "json":
        text = dump_json({"group": _group_json(P),
                          "extend": {"fiber_rank": E.fiber_rank,
                                     "trials": inv.trials, "ok": True}})
    else:
        text = ("central extension by Z^%d built from %d cocycles\n"
                "associativity and inverse laws: PASS (%d trials)\n"
                % (E.fiber_rank, len(ws), inv.trials))
    return 0, text


def _cmd_witness(inv):
    P = _read_presentation(inv)
    finite = [w for w in lemmax_generators(P) if w.order]
    if not finite:
        if inv.format == "json":
            return 0, dump_json({"group": _group_json(P), "witness": []})
        return 0, "no torsion classes; nothing to search\n"
    lines, records, ok = [], [], True
    for w in finite:
        u = coboundary_witness(P, w.order * w, max_weight=inv.max_weight,
                               trials=inv.trials, seed=inv.seed)
        if u is None:
            ok = False
            lines.append("order-%d class: no witness within weight %d (finding)"
                         % (w.order, inv.max_weight))
            records.append({"order": w.order, "found": False})
        else:
            lines.append("order-%d class: %d * cocycle = coboundary of u = %s"
                         % (w.order, w.order, u.render()))
            records.append({"order": w.order, "found": True,
                            "witness": u.render()})
    if inv.format == "json":
        text = dump_json({"group": _group_json(P), "witness": records})
    else:
        text = "".join(line + "\n" for line in lines)
    return (0 if ok else 1), text


def _cmd_gen(inv):
    if inv.family == "heisenberg":
        P = families.heisenberg()
    elif inv.family == "abelian":
        if inv.n is None:
            raise PresentationFormatError("family 'abelian' needs --n")
        P = families.abelian(inv.n)
    elif inv.family == "paper-example":
        if not inv.d:
            raise PresentationFormatError("family 'paper-example' needs --d d1,d2,...")
        if inv.n is not None and inv.n != len(inv.d):
            raise PresentationFormatError("--n disagrees with the length of --d")
        P = families.divisor_chain_group(inv.d)
    elif inv.family == "random":
        if inv.n is None or inv.m is None:
            raise PresentationFormatError("family 'random' needs --n and --m")
        P = families.random_presentation(inv.n, inv.m, inv.bound, inv.seed)
    else:
        raise PresentationFormatError("unknown family %r" % (inv.family,))
    return 0, dump_json(presentation_to_json(P))


def _cmd_selftest(inv):
    lines = []
    ok = acceptance.run_all(write=lines.append)
    lines.append("selftest: %s" % ("all criteria passed" if ok else "FAILURES"))
    return (0 if ok else 1), "".join(line + "\n" for line in lines)


_COMMANDS = {
    "validate": _cmd_validate,
    "h1": _cmd_h1,
    "h2": _cmd_h2,
    "homology-rank": _cmd_homology_rank,
    "cocycles": _cmd_cocycles,
    "verify": _cmd_verify,
    "extend": _cmd_extend,
    "witness": _cmd_witness,
    "gen": _cmd_gen,
    "selftest": _cmd_selftest,
}


def run(inv):
    """Execute one invocation; returns the process exit code."""
    try:
        code, text = _COMMANDS[inv.command](inv)
        if inv.out_path is not None:
            with open(inv.out_path, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return code
    except (PresentationFormatError, CocycleFormatError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except InvalidPresentationError as exc:
        for line in exc.report.failures:
            print(line, file=sys.stderr)
        return 1


def _chain(text):
    return tuple(int(x) for x in text.split(","))


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="nilcoh",
        description="Exact H^1/H^2 and explicit 2-cocycles for torsion-free "
                    "class-2 nilpotent groups.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", dest="input_path", metavar="FILE",
                        help="presentation JSON (stdin when absent)")
    common.add_argument("--coeff-rank", dest="coeff_rank", type=int, default=1,
                        help="rank r of the trivial coefficient module Z^r")
    common.add_argument("--trials", type=int, default=1000)
    common.add_argument("--bound", type=int, default=10)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--max-weight", dest="max_weight", type=int, default=3)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", dest="out_path", metavar="FILE")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("validate", "h1", "h2", "homology-rank", "cocycles",
                 "verify", "extend", "witness", "selftest"):
        sub.add_parser(name, parents=[common])
    gen = sub.add_parser("gen", parents=[common])
    gen.add_argument("--family", required=True,
                     choices=("paper-example", "heisenberg", "abelian", "random"))
    gen.add_argument("--n", type=int)
    gen.add_argument("--m", type=int)
    gen.add_argument("--d", type=_chain, metavar="d1,d2,...")
    return parser


def main(argv=None):
    ns = _build_parser().parse_args(argv)
    inv = Invocation(command=ns.command,
                     input_path=ns.input_path,
                     coeff_rank=ns.coeff_rank,
                     trials=ns.trials,
                     bound=ns.bound,
                     seed=ns.seed,
                     max_weight=ns.max_weight,
                     format=ns.format,
                     out_path=ns.out_path,
                     family=getattr(ns, "family", None),
                     n=getattr(ns, "n", None),
                     m=getattr(ns, "m", None),
                     d=getattr(ns, "d", None))
    return run(inv)


if __name__ == "__main__":
    sys.exit(main())
