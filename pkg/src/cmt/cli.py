"""Command line interface: ``cmt <command> [options] FILE``.

Exit codes: 0 success, 1 a verification produced a ``fail`` verdict,
2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import cm
from .contraction import contract_complex, contract_graph
from .core import (
    CmtError,
    MonomialIdeal,
    SimpleGraph,
    SimplicialComplex,
    dim,
    edge_ideal,
    f_vector,
    independence_complex,
    is_pure,
    stanley_reisner_ideal,
)
from .expansion import expand_complex, expand_graph, expand_ideal
from .harness import THEOREMS, InstanceSweepConfig, dump_jsonl, summarize, sweep
from .homology import FieldSpec, reduced_betti
from .io import Document, parse_document, serialize


class UsageError(Exception):
    pass


def _alpha(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad alpha {text!r}; expected k1,k2,...") from None


def _field(text: str) -> FieldSpec:
    try:
        return FieldSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _bool(x: bool) -> str:
    return "true" if x else "false"


def _read(path: str) -> Document:
    if path == "-":
        return parse_document(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_document(fh.read())


def _expect(doc: Document, kind: type, what: str):
    if not isinstance(doc, kind):
        raise UsageError(f"this command needs a {what} file")
    return doc


def _emit(doc: Document, out: str | None, lines: list[str]) -> None:
    text = serialize(doc)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    for line in lines:
        print(line)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cmt", description="Expansion, contraction and CM_t checks for simplicial complexes.")
    sub = p.add_subparsers(dest="command", required=True)

    def cmd(name: str, help: str, alpha: bool = False) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        sp.add_argument("file", help="input JSON document, or - for stdin")
        sp.add_argument("--field", type=_field, default=FieldSpec(), help="q (default) or gf:<p>")
        sp.add_argument("--out", help="write the resulting document here instead of stdout")
        if alpha:
            sp.add_argument("--alpha", type=_alpha, required=True, help="multiplicities k1,k2,...")
        return sp

    cmd("info", "dimension, purity and f-vector of a complex")
    cmd("homology", "reduced Betti numbers of a complex")
    cm_p = cmd("cm", "least t for which the complex is CM_t")
    cm_p.add_argument("--t", type=int, help="also test CM_t for this t")
    cmd("buchsbaum", "Buchsbaum (CM_1) test")
    cmd("expand", "expand a complex", alpha=True)
    cmd("contract", "contract a complex")
    cmd("sr-ideal", "Stanley-Reisner ideal of a complex")
    cmd("edge-ideal", "edge ideal of a graph")
    cmd("indep-complex", "independence complex of a graph")
    cmd("expand-ideal", "expand a monomial ideal", alpha=True)
    cmd("expand-graph", "expand a graph", alpha=True)
    cmd("contract-graph", "contract a graph")

    v = sub.add_parser("verify", help="sweep small instances and check the theorems")
    v.add_argument("--theorem", choices=THEOREMS, required=True)
    v.add_argument("--field", type=_field, action="append", help="repeatable; default q")
    v.add_argument("--max-vertices", type=int, default=5)
    v.add_argument("--alpha-max", type=int, default=3)
    v.add_argument("--max-expanded", type=int, default=10, help="skip expansions with more vertices")
    v.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    v.add_argument("--seed", type=int)
    v.add_argument("--count", type=int, default=100)
    v.add_argument("--out", help="write one JSON record per line here")
    return p


def _verify(args: argparse.Namespace) -> int:
    cfg = InstanceSweepConfig(
        max_vertices=args.max_vertices,
        alpha_entry_max=args.alpha_max,
        mode=args.mode,
        seed=args.seed,
        count=args.count,
        fields=args.field or [FieldSpec()],
        max_expanded=args.max_expanded,
    )
    records = list(sweep(args.theorem, cfg))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            for line in dump_jsonl(records):
                fh.write(line + "\n")
    counts = summarize(records)
    checks = sorted({(c, f) for c, f, _ in counts})
    for check, fld in checks:
        parts = " ".join(f"{v}={counts[(check, fld, v)]}" for v in ("pass", "skip", "fail"))
        print(f"check={check}{' field=' + fld if fld else ''} {parts}")
    fails = [r for r in records if r["verdict"] == "fail"]
    for line in dump_jsonl(fails[:20]):
        print("FAIL " + line)
    return 1 if fails else 0


def run(args: argparse.Namespace) -> int:
    if args.command == "verify":
        return _verify(args)
    doc = _read(args.file)
    fld = args.field
    c = args.command
    if c in ("info", "homology", "cm", "buchsbaum", "expand", "contract", "sr-ideal"):
        cx = _expect(doc, SimplicialComplex, "complex")
        if c == "info":
            print(f"vertices={cx.n} facets={len(cx.facets)} dim={dim(cx)} pure={_bool(is_pure(cx))}")
            print("f_vector=" + ",".join(map(str, f_vector(cx))))
        elif c == "homology":
            b = reduced_betti(cx, fld)
            print(f"field={fld} " + " ".join(f"b{q}={v}" for q, v in b.as_dict().items()))
        elif c == "cm":
            rep = cm.min_cm_t(cx, fld)
            t = "none" if rep.minimal_t is None else rep.minimal_t
            print(f"pure={_bool(rep.pure)} minimal_t={t}")
            for w in rep.witnesses:
                print(f"witness t={w.t} face={{{','.join(w.face)}}} degree={w.degree}")
            if args.t is not None:
                print(f"cm_t({args.t})={_bool(cm.is_cm_t(cx, args.t, fld))}")
        elif c == "buchsbaum":
            print(f"buchsbaum={_bool(cm.is_buchsbaum(cx, fld))}")
        elif c == "expand":
            ex = expand_complex(cx, args.alpha)
            _emit(ex, args.out, [f"pure={_bool(is_pure(ex))}"])
        elif c == "contract":
            res = contract_complex(cx)
            classes = " ".join("{" + ",".join(cls) + "}" for cls in res.class_names(cx))
            _emit(res.gamma, args.out, ["alpha=" + ",".join(map(str, res.alpha)), "classes=" + classes])
        else:
            _emit(stanley_reisner_ideal(cx), args.out, [])
        return 0
    if c == "expand-ideal":
        ideal = _expect(doc, MonomialIdeal, "ideal")
        _emit(expand_ideal(ideal, args.alpha), args.out, [])
        return 0
    g = _expect(doc, SimpleGraph, "graph")
    if c == "edge-ideal":
        _emit(edge_ideal(g), args.out, [])
    elif c == "indep-complex":
        _emit(independence_complex(g), args.out, [])
    elif c == "expand-graph":
        _emit(expand_graph(g, args.alpha), args.out, [])
    else:
        h, alpha = contract_graph(g)
        _emit(h, args.out, ["alpha=" + ",".join(map(str, alpha))])
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return run(args)
    except (CmtError, UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
