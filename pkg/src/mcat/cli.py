"""Command line interface: ``mcat linearize | end-alg | dim | nf | check | examples``.

Exit status is 0 on success, 1 when a computation or check fails, and 2 on
usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .checks import run_suite, SUITES
from .freemon import normal_form, parse_morphism
from .linearize import EndomorphismHypothesisError, default_max_degree, end_algebra, linearize
from .ncalg import complete
from .presentation import BUILTIN_NAMES, PresentationError, builtin, builtin_source, parse_presentation
from .presentation.frobenius import InvalidAlgebraError


class UsageError(Exception):
    pass


def _add_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group()
    src.add_argument("--builtin", metavar="NAME", help=f"one of: {', '.join(BUILTIN_NAMES)}")
    src.add_argument("--file", metavar="PATH", help="presentation file")
    p.add_argument("--algebra", metavar="NAME", help="token algebra for wreath builtins (Z2, Z3, trivial)")


def _add_output(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")


def _add_object(p: argparse.ArgumentParser) -> None:
    p.add_argument("--object", metavar="WORD", help='object word, e.g. "a a a"')
    p.add_argument("--object-power", metavar="X:N", help="shorthand for X repeated N times")


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mcat", description="Presentations of linear monoidal categories.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("linearize", help="emit the truncated linear presentation")
    _add_input(p)
    p.add_argument("--max-len", type=_positive, required=True, metavar="N", help="largest object word length")
    _add_output(p)

    p = sub.add_parser("end-alg", help="algebra presentation of End(object)")
    _add_input(p)
    _add_object(p)
    _add_output(p)

    p = sub.add_parser("dim", help="dimension or graded counts of End(object)")
    _add_input(p)
    _add_object(p)
    p.add_argument("--max-deg", type=_positive, metavar="D", help="degree bound (default 2 * length * max relation degree)")
    _add_output(p)

    p = sub.add_parser("nf", help="interchange normal form of a morphism expression")
    _add_input(p)
    p.add_argument("--expr", required=True, help='e.g. "s a a ; a a s"')
    _add_output(p)

    p = sub.add_parser("check", help="run a self-check suite")
    p.add_argument("--suite", choices=SUITES, default="core")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=_positive, default=1000)
    p.add_argument("--timing", action="store_true", help="include wall time per check")
    _add_output(p)

    p = sub.add_parser("examples", help="list or show the builtin presentations")
    esub = p.add_subparsers(dest="action", required=True)
    esub.add_parser("list")
    show = esub.add_parser("show")
    show.add_argument("name", choices=BUILTIN_NAMES)
    show.add_argument("--algebra", metavar="NAME")
    return parser


def _load(args):
    if args.builtin:
        params = {"algebra": args.algebra} if args.algebra else {}
        return builtin(args.builtin, **params)
    if args.file:
        if args.algebra:
            raise UsageError("--algebra only applies to --builtin")
        path = Path(args.file)
        return parse_presentation(path.read_text(encoding="utf-8"), name=path.stem)
    raise UsageError("give an input with --builtin NAME or --file PATH")


def _object(args) -> tuple:
    if args.object and args.object_power:
        raise UsageError("give only one of --object and --object-power")
    if args.object_power:
        letter, _, n = args.object_power.partition(":")
        if not letter or not n.isdigit():
            raise UsageError("--object-power expects X:N, e.g. a:4")
        return (letter,) * int(n)
    if args.object is None:
        raise UsageError("give the object with --object or --object-power")
    parts = args.object.split()
    return () if parts in ([], ["-"]) else tuple(parts)


def _emit(args, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if getattr(args, "out", None):
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _dump(doc) -> str:
    return json.dumps(doc, indent=2)


def cmd_linearize(args) -> int:
    L = linearize(_load(args), args.max_len)
    _emit(args, _dump(L.to_json()) if args.format == "json" else L.to_text())
    return 0


def cmd_end_alg(args) -> int:
    A = end_algebra(_load(args), _object(args))
    _emit(args, _dump(A.to_json()) if args.format == "json" else A.to_text())
    return 0


def cmd_dim(args) -> int:
    P = _load(args)
    A = end_algebra(P, _object(args))
    D = args.max_deg or default_max_degree(A)
    t = time.perf_counter()
    G = complete(A.polynomials(), A.default_order(), D, A.names, A.field)
    q = G.quotient_dim()
    elapsed = time.perf_counter() - t
    doc = {
        "presentation": P.name,
        "object": " ".join(A.obj) or "-",
        "coefficients": A.field.name,
        "generators": len(A.generators),
        "relations": len(A.relations),
        "max_degree": D,
        "basis_size": len(G.leading_words),
        "finite": q.finite,
        "dimension": q.dimension,
        "counts": list(q.counts),
        "cumulative": q.cumulative(),
    }
    if args.format == "json":
        text = _dump(doc)
    else:
        status = f"finite, dimension {q.dimension}" if q.finite else f"not finite within degree {D}"
        text = (
            f"End({doc['object']}) of {P.name or 'presentation'} over {A.field.name}: {status}\n"
            f"generators {doc['generators']}, relations {doc['relations']}, Groebner basis {doc['basis_size']}, degree bound {D}\n"
            f"normal words per degree: {' '.join(map(str, q.counts))}\n"
            f"cumulative: {' '.join(map(str, doc['cumulative']))}\n"
        )
    _emit(args, text)
    # timing goes to stderr so reports stay byte-identical between runs
    print(f"wall time {elapsed:.3f} s", file=sys.stderr)
    return 0


def cmd_nf(args) -> int:
    P = _load(args)
    f = parse_morphism(P, args.expr)
    nf = normal_form(f)
    if args.format == "json":
        text = _dump(
            {
                "domain": " ".join(nf.domain) or "-",
                "codomain": " ".join(nf.codomain) or "-",
                "terms": [
                    {"coeff": P.field.format(c), "steps": [str(t) for t in p.steps]} for c, p in nf.terms
                ],
                "text": str(nf),
            }
        )
    else:
        text = str(nf)
    _emit(args, text)
    return 0


def cmd_check(args) -> int:
    results = run_suite(args.suite, args.seed, args.cases)
    ok = all(r.passed for r in results)
    if args.format == "json":
        rows = []
        for r in results:
            row = r.to_json()
            if not args.timing:
                row.pop("seconds")
            rows.append(row)
        text = _dump({"suite": args.suite, "seed": args.seed, "cases": args.cases, "passed": ok, "results": rows})
    else:
        width = max(len(r.name) for r in results)
        lines = []
        for r in results:
            line = f"{'PASS' if r.passed else 'FAIL'}  {r.name.ljust(width)}  {r.actual}"
            if r.detail:
                line += f"  [{r.detail}]"
            if args.timing:
                line += f"  ({r.seconds:.2f} s)"
            lines.append(line)
        lines.append(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
        text = "\n".join(lines)
    _emit(args, text)
    return 0 if ok else 1


def cmd_examples(args) -> int:
    if args.action == "list":
        sys.stdout.write("\n".join(BUILTIN_NAMES) + "\n")
        return 0
    params = {"algebra": args.algebra} if args.algebra else {}
    sys.stdout.write(builtin_source(args.name, **params))
    return 0


COMMANDS = {
    "linearize": cmd_linearize,
    "end-alg": cmd_end_alg,
    "dim": cmd_dim,
    "nf": cmd_nf,
    "check": cmd_check,
    "examples": cmd_examples,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"mcat: error: {exc}", file=sys.stderr)
        return 2
    except EndomorphismHypothesisError as exc:
        print(f"mcat: error: {exc}", file=sys.stderr)
        return 1
    except (PresentationError, InvalidAlgebraError, ValueError, OSError) as exc:
        print(f"mcat: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
