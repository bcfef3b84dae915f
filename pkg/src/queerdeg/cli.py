"""Command line entry point: ``queerdeg <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import sys

from . import errors
from .axioms import check_deg, check_queer_deg, pairing_edges, unique_extension_search
from .degraph import DEGraph, concat_graph, sst_graph, syt_graph, to_dot
from .involutions import deg_syt
from .product import structure_constants
from .qsym import BasisExpansion, decompose, schur_F, schurP_F, schurQ_F
from .reproduce import format_line, run_all, strict_pairs_upto
from .shapes import check_strict, format_shape, parse_shape
from .tableaux import format_tableau, generate, generate_syt, to_dict

MAX_N = 12
_ERRORS = tuple(
    cls for cls in vars(errors).values() if isinstance(cls, type) and issubclass(cls, Exception)
)


class CliError(Exception):
    pass


def _strict(text):
    return check_strict(parse_shape(text))


def _shapes(text):
    """Several partitions separated by ';', e.g. ``3,1;2,2``."""
    return [parse_shape(part) for part in text.split(";")]


def _guard(n: int, args):
    if n > MAX_N and not getattr(args, "force", False):
        raise CliError(f"n = {n} exceeds {MAX_N}; pass --force to run anyway")


def _emit(text: str, args):
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _family(args):
    """(family, shapes) from the mutually exclusive --syt/--sst/--concat flags."""
    if args.syt:
        return "syt", tuple(_shapes(args.syt))
    if args.sst:
        return "sst", (_strict(args.sst),)
    if args.concat:
        return "concat", (_strict(args.concat[0]), _strict(args.concat[1]))
    raise CliError("choose one of --syt, --sst, --concat")


def cmd_tableaux(args):
    family, shapes = _family(args)
    _guard(sum(map(sum, shapes)), args)
    if family == "syt" and len(shapes) > 1:
        raise CliError("tableaux takes a single --syt shape")
    objs = generate(family, *shapes)
    if args.count:
        out = f"{len(objs)}\n"
    elif args.format == "json":
        out = json.dumps([to_dict(T) for T in objs], indent=1) + "\n"
    else:
        out = "".join(f"{format_tableau(T)}\t{''.join(str(d) for d in sorted(T.descents)) or '-'}\n" for T in objs)
    _emit(out, args)
    return 0


def _build(args) -> DEGraph:
    if args.file:
        with open(args.file) as fh:
            return DEGraph.from_dict(json.load(fh))
    family, shapes = _family(args)
    _guard(sum(shapes[0]) if family == "syt" else sum(map(sum, shapes)), args)
    if family == "syt":
        return syt_graph(*shapes)
    if family == "sst":
        return sst_graph(shapes[0], queer=args.queer)
    return concat_graph(*shapes, queer=args.queer)


def cmd_graph(args):
    g = _build(args)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(to_dot(g))
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(g.to_json() + "\n")
    counts = ", ".join(f"d_{lb}: {len(g.edges(lb))}" for lb in g.labels)
    _emit(f"{len(g)} vertices, {g.edge_count()} edges ({counts})\n", args)
    return 0


def cmd_expand(args):
    if args.s:
        lam = parse_shape(args.s)
        f, name = schur_F(lam), f"s({format_shape(lam)})"
    elif args.P:
        g = _strict(args.P)
        f, name = schurP_F(g), f"P({format_shape(g)})"
    else:
        g = _strict(args.Q)
        f, name = schurQ_F(g), f"Q({format_shape(g)})"
    _guard(f.n, args)
    if args.basis == "F":
        _emit(f"{name} = {f}\n", args)
        return 0
    e: BasisExpansion = decompose(f, args.basis)
    if args.csv:
        _emit(e.to_csv(), args)
    else:
        rows = "".join(f"  ({format_shape(s)})\t{c}\n" for s, c in e.coefficients.items())
        _emit(f"{name} = {e}\n{rows}", args)
    return 0


def cmd_product(args):
    if args.upto:
        pairs = strict_pairs_upto(args.upto)
        _guard(args.upto, args)
    else:
        if not (args.gamma and args.delta):
            raise CliError("give GAMMA DELTA or --upto N")
        pairs = [(_strict(args.gamma), _strict(args.delta))]
        _guard(sum(pairs[0][0]) + sum(pairs[0][1]), args)
    tables = [structure_constants(g, d) for g, d in pairs]
    if args.csv or args.upto:
        out = "".join(t.to_csv(header=(k == 0)) for k, t in enumerate(tables))
    else:
        t = tables[0]
        out = f"P({format_shape(t.gamma)}) P({format_shape(t.delta)}) = {t}\n"
    _emit(out, args)
    return 0


def cmd_verify(args):
    g = _build(args)
    if args.deg or (g.n >= 2 and 0 not in g.moves):
        report = check_deg(g.restrict_labels([lb for lb in g.labels if lb >= 2]))
        kind = "dual equivalence"
    else:
        report = check_queer_deg(g)
        kind = "queer dual equivalence"
    header = (
        f"{kind} audit, n = {g.n}, {len(g)} vertices\n"
        "local windows: labels h..i for 2 <= h <= i <= n-1, i-h <= 3; queer (i) for i = 1,2,3; "
        "queer (iii) for 3 <= k <= n\n"
    )
    _emit(header + str(report) + "\n", args)
    return 0 if report.passed else 1


LEMMA_SHAPES = {
    "2": ((2,), (1, 1)),
    "3": ((3,), (2, 1), (1, 1, 1)),
    "3-left": ((2, 1),),
    "4": ((3, 1), (2, 2), (2, 1, 1)),
    "4-alt": ((4,), (3, 1), (2, 1, 1), (1, 1, 1, 1)),
}


def cmd_search_unique(args):
    shapes = LEMMA_SHAPES[args.lemma] if args.lemma else _shapes(args.shapes)
    n = sum(shapes[0])
    objects = [T for lam in shapes for T in generate_syt(lam)]
    existing = {i: (lambda T, i=i: deg_syt(T, i)) for i in range(2, n)}
    found = unique_extension_search(objects, lambda T: T.descents, existing, n=n)
    words = {str(T): "".join(map(str, T.reading_word)) for T in objects}
    lines = [f"{len(found)} candidate(s)"]
    for k, match in enumerate(found, 1):
        pairs = ", ".join(f"{words[a]}-{words[b]}" for a, b in pairing_edges(match))
        lines.append(f"  {k}: {pairs}")
    _emit("\n".join(lines) + "\n", args)
    return 0


def cmd_repro(args):
    only = set(args.only) if args.only else None
    lines, ok = [], True
    for row in run_all(only):
        ok &= row[2]
        lines.append(format_line(*row))
        if not args.out:
            print(lines[-1], flush=True)
    if args.out:
        _emit("\n".join(lines) + "\n", args)
    return 0 if ok else 1


def _add_family(p, syt_many=False):
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--syt", metavar="SHAPE" + ("[;SHAPE..]" if syt_many else ""))
    grp.add_argument("--sst", metavar="SHAPE")
    grp.add_argument("--concat", nargs=2, metavar=("GAMMA", "DELTA"))
    return grp


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="queerdeg", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    guarded = argparse.ArgumentParser(add_help=False)
    guarded.add_argument("--force", action="store_true", help=f"allow n > {MAX_N}")

    p = sub.add_parser("tableaux", parents=[guarded], help="enumerate a family of tableaux")
    _add_family(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--count", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_tableaux)

    p = sub.add_parser("graph", parents=[guarded], help="build an involution graph and export it")
    grp = _add_family(p, syt_many=True)
    grp.add_argument("--file", help="graph in the structured JSON schema")
    p.add_argument("--queer", action="store_true", help="include label 0")
    p.add_argument("--dot")
    p.add_argument("--json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("expand", parents=[guarded], help="F, Schur or Schur P expansion of s, P or Q")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--s", metavar="SHAPE")
    grp.add_argument("--P", metavar="SHAPE")
    grp.add_argument("--Q", metavar="SHAPE")
    p.add_argument("--basis", choices=("F", "s", "P"), default="F")
    p.add_argument("--csv", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("product", parents=[guarded], help="structure constants of P_gamma P_delta")
    p.add_argument("gamma", nargs="?")
    p.add_argument("delta", nargs="?")
    p.add_argument("--upto", type=int, metavar="N", help="all pairs with total size <= N, as CSV")
    p.add_argument("--csv", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("verify", parents=[guarded], help="audit a graph against the axioms")
    grp = _add_family(p, syt_many=True)
    grp.add_argument("--file", help="graph in the structured JSON schema")
    p.add_argument("--deg", action="store_true", help="dual equivalence axioms only")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify, queer=True)

    p = sub.add_parser("search-unique", help="enumerate queer involutions on unions of SYT")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--lemma", choices=sorted(LEMMA_SHAPES))
    grp.add_argument("--shapes", metavar="SHAPE;SHAPE..")
    p.add_argument("--out")
    p.set_defaults(func=cmd_search_unique)

    p = sub.add_parser("repro", help="run the reproduction suite")
    p.add_argument("--only", type=int, nargs="+", metavar="K")
    p.add_argument("--out")
    p.set_defaults(func=cmd_repro)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _ERRORS as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
