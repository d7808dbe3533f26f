"""Command-line front end.

Exit codes: 0 success, 1 counterexample or no morphism, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import free
from .categories import NAMES, get_category
from .operad import (
    EXAMPLES,
    Collection,
    ConstructionError,
    check_composition,
    example,
    is_algebra,
    minimal_nat,
    minimal_young,
    verify_operad,
)
from .order import BOTTOM, UsageError
from .young import Young


def _ints(text: str) -> list:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _json_arg(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{what}: invalid JSON {text!r} ({exc.msg})") from None


def _render_terms(C: Collection, fmt: str) -> str:
    cat = C.category
    if fmt == "json":
        return json.dumps(C.to_json(), sort_keys=True)
    if fmt == "ascii":
        blocks = []
        for j, t in enumerate(C.terms):
            blocks.append(f"C({j}):\n{cat.render(t)}")
        return "\n\n".join(blocks)
    return " ".join(cat.render(t) if t is BOTTOM or cat.name == "nat" else json.dumps(cat.encode(t)) for t in C.terms)


def _load_collection(args) -> Collection:
    if args.example:
        return example(args.example, args.n if args.n is not None else 8)
    if not args.file:
        raise UsageError("give a collection file or --example")
    try:
        with open(args.file, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{args.file}: invalid JSON ({exc.msg})") from None
    if not isinstance(data, dict):
        raise UsageError(f"{args.file}: expected a JSON object")
    return Collection.from_json(data)


def _verdict_lines(v, cat, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(v.to_json(cat.encode), sort_keys=True)
    if v.ok:
        return "ok"
    w = dict(v.witness or {})
    if v.reason == "composition":
        comp = ",".join(map(str, w["composition"]))
        return (
            f"counterexample γ^{w['p']}{w['q']} (k={w['k']}, j=({comp})) arity {w['arity']}\n"
            f"lhs: {json.dumps(cat.encode(w['lhs']))}\n"
            f"rhs: {json.dumps(cat.encode(w['rhs']))}\n"
            "lhs > rhs"
        )
    if v.reason == "action":
        return (
            f"not an algebra: θ^{w['p']}{w['q']} fails at arity {w['arity']}\n"
            f"lhs: {json.dumps(cat.encode(w['lhs']))}\n"
            f"rhs: {json.dumps(cat.encode(w['rhs']))}"
        )
    details = ", ".join(f"{k}={v!r}" for k, v in w.items())
    return f"failed: {v.reason}" + (f" ({details})" if details else "")


# --------------------------------------------------------------------------
# subcommands


def cmd_gen(args) -> int:
    if args.kind == "nat":
        if args.seeds is None:
            raise UsageError("gen nat needs --seeds")
        C = minimal_nat(_ints(args.seeds), args.n, method=args.method)
    else:
        if args.b is None:
            raise UsageError("gen young needs --b")
        B = _json_arg(args.b, "--b")
        if not isinstance(B, list):
            raise UsageError("--b must be a JSON list of column heights")
        try:
            B = Young(B)
        except (TypeError, ValueError) as exc:
            raise UsageError(f"--b: {exc}") from None
        C = minimal_young(B, args.n, method="binary" if args.method == "dp" else "enum")
    print(_render_terms(C, args.format))
    return 0


def cmd_verify(args) -> int:
    C = _load_collection(args)
    cat = C.category
    if args.composition:
        comp = _ints(args.composition)
        if sum(comp) > C.bound:
            raise UsageError(f"composition sums past the bound {C.bound}")
        lhs, rhs, ok = check_composition(C, args.p, args.q, comp)
        rel = "<=" if ok else ">"
        print(f"lhs: {json.dumps(cat.encode(lhs))}\nrhs: {json.dumps(cat.encode(rhs))}\nlhs {rel} rhs")
        return 0 if ok else 1
    v = verify_operad(C, args.p, args.q, args.n if args.example is None else None, jobs=args.jobs)
    print(_verdict_lines(v, cat, args.format))
    return 0 if v.ok else 1


def cmd_hom(args) -> int:
    a = free.parse(args.source, args.n)
    b = free.parse(args.target, args.n)
    if args.symbols:
        wanted = [s for s in args.symbols.split(",") if s]
        for e, side in ((a, "source"), (b, "target")):
            if not free.is_linear(e, wanted):
                raise UsageError(f"{side} is not linear in {{{', '.join(wanted)}}}")
    bad = free.violations(a, b)
    if args.format == "json":
        print(json.dumps({
            "exists": not bad,
            "violations": [{"pair": list(p), "source": str(sa), "target": str(sb)} for p, sa, sb in bad],
        }, sort_keys=True))
    elif not bad:
        print(f"exists: {a} -> {b}")
    else:
        print(f"no morphism: {a} -> {b}")
        for (x, y), sa, sb in bad:
            print(f"  pair ({x}, {y}): {sa} in source, {sb} in target")
    return 0 if not bad else 1


def cmd_interchange(args) -> int:
    cat = get_category(args.category, args.dim)
    try:
        objs = [cat.decode(_json_arg(t, "object")) for t in args.objects]
    except (TypeError, ValueError) as exc:
        raise UsageError(f"bad object: {exc}") from None
    lhs, rhs = cat.interchange(args.p, args.q, *objs)
    c = cat.cmp(lhs, rhs)
    rel = "<" if c < 0 else "=" if c == 0 else ">"
    if args.format == "json":
        print(json.dumps({"lhs": cat.encode(lhs), "rhs": cat.encode(rhs), "relation": rel}))
    else:
        p, q = args.p, args.q
        print(f"(A⊗{q}B)⊗{p}(C⊗{q}D) = {json.dumps(cat.encode(lhs))}")
        print(f"(A⊗{p}C)⊗{q}(B⊗{p}D) = {json.dumps(cat.encode(rhs))}")
        print(f"lhs {rel} rhs")
    return 0 if c <= 0 else 1


def cmd_algebra(args) -> int:
    C = _load_collection(args)
    cat = C.category
    try:
        A = cat.decode(_json_arg(args.object, "--object"))
    except (TypeError, ValueError) as exc:
        raise UsageError(f"bad object: {exc}") from None
    v = is_algebra(C, A, args.p, args.q)
    print(_verdict_lines(v, cat, args.format))
    return 0 if v.ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="nfold", description="n-fold operads in poset categories")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a minimal operad")
    g.add_argument("kind", choices=["nat", "young"])
    g.add_argument("--seeds", help="nat seeds C(1),...,C(l), e.g. 0,1")
    g.add_argument("--b", help="young generator C(2) as column heights, e.g. [1]")
    g.add_argument("--n", type=int, default=8, help="largest arity (default 8)")
    g.add_argument("--method", choices=["dp", "enum"], default="enum")
    g.add_argument("--format", choices=["text", "json", "ascii"], default="text")
    g.set_defaults(func=cmd_gen)

    def collection_args(p):
        p.add_argument("file", nargs="?", help="collection JSON file")
        p.add_argument("--example", choices=sorted(EXAMPLES), help="built-in collection")
        p.add_argument("--p", type=int, default=1)
        p.add_argument("--q", type=int, default=2)
        p.add_argument("--n", type=int, default=None, help="truncation bound")
        p.add_argument("--format", choices=["text", "json"], default="text")

    v = sub.add_parser("verify", help="check the operad inequalities")
    collection_args(v)
    v.add_argument("--composition", help="check a single composition, e.g. 1,3,2")
    v.add_argument("--jobs", type=int, default=1)
    v.set_defaults(func=cmd_verify)

    h = sub.add_parser("hom", help="decide a morphism in the free category")
    h.add_argument("source")
    h.add_argument("target")
    h.add_argument("--n", type=int, default=4, help="number of products")
    h.add_argument("--symbols", help="expected symbol set, comma separated")
    h.add_argument("--format", choices=["text", "json"], default="text")
    h.set_defaults(func=cmd_hom)

    i = sub.add_parser("interchange", help="evaluate both sides of η^{pq}")
    i.add_argument("--category", choices=NAMES, default="seq-nat")
    i.add_argument("--dim", type=int)
    i.add_argument("--p", type=int, default=1)
    i.add_argument("--q", type=int, default=2)
    i.add_argument("objects", nargs=4, metavar="OBJ", help="A B C D as JSON")
    i.add_argument("--format", choices=["text", "json"], default="text")
    i.set_defaults(func=cmd_interchange)

    a = sub.add_parser("algebra", help="check whether an object is an algebra")
    collection_args(a)
    a.add_argument("--object", required=True, help="the object A as JSON")
    a.set_defaults(func=cmd_algebra)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ConstructionError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
