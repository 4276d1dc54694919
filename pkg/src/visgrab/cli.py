"""Command-line entry point: ``visgrab <command> ...``.

Every command prints one JSON object. Exit codes: 0 success/true,
1 checked and false, 2 usage, parse or input error (JSON on stderr).
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import corpus as corpus_mod
from .blocking import BlockTarget, is_k_color_blocked
from .coloring import chromatic_number, is_properly_colored
from .empty_polygon import find_empty_convex_kgon
from .equivalence import are_equivalent
from .errors import InvalidInput, ParseError, VerificationFailed
from .fileio import dumps, error_object, read_pointset, serialize
from .render import Style, render
from .search import Mode, SearchConfig, SearchReport, replay, search_blocking, search_extremal
from .visibility import max_collinear, visibility_graph


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _emit(obj) -> None:
    print(dumps(obj))


def cmd_verify(a) -> int:
    X = read_pointset(a.file).pointset
    rep = is_properly_colored(X)
    mc = max_collinear(X)
    out = {"points": len(X), "proper": rep.proper, "violation": rep.violation, "max_collinear": mc}
    ok = rep.proper
    if a.max_collinear is not None:
        out["collinear_ok"] = mc <= a.max_collinear
        ok = ok and out["collinear_ok"]
    _emit(out)
    return 0 if ok else 1


def cmd_chromatic(a) -> int:
    X = read_pointset(a.file).pointset
    r = chromatic_number(visibility_graph(X))
    _emit({"chi": r.chi, "coloring": list(r.witness_coloring), "clique": list(r.lower_bound_certificate)})
    return 0


def cmd_equiv(a) -> int:
    X = read_pointset(a.a).pointset
    Y = read_pointset(a.b).pointset
    phi = are_equivalent(X, Y, a.relations)
    _emit({"equivalent": phi is not None, "map": None if phi is None else list(phi)})
    return 0 if phi is not None else 1


def cmd_empty_kgon(a) -> int:
    X = read_pointset(a.file).pointset
    idx = list(range(len(X))) if a.color is None else X.color_classes().get(a.color, [])
    w = find_empty_convex_kgon([X.points[i] for i in idx], a.k, method=a.method)
    found = None if w is None else [idx[i] for i in w.indices]
    _emit({"k": a.k, "class": a.color, "found": w is not None, "indices": found})
    return 0 if w is not None else 1


def cmd_search(a) -> int:
    initial = ()
    if a.initial:
        initial = read_pointset(a.initial).pointset.points
    cfg = SearchConfig(k=a.k, ell=a.ell, grid=(a.resolution, a.grid), budget=a.budget, seed=a.seed,
                       mode=Mode(a.mode), target=a.stop_at, max_blockers=a.max_blockers,
                       initial=initial, workers=a.threads)
    if cfg.mode is Mode.EXTREMAL:
        report = search_extremal(cfg)
    else:
        if not a.target:
            raise InvalidInput("blocking mode needs --target")
        T = read_pointset(a.target).pointset
        if len(set(T.colors)) != 1:
            raise InvalidInput("target points must share one color")
        report = search_blocking(BlockTarget(T.points, T.colors[0]), a.k, cfg)
    text = report.to_json()
    if a.out:
        Path(a.out).write_text(text + "\n", encoding="utf-8")
    print(text)
    return 0


def cmd_replay(a) -> int:
    report = SearchReport.from_json(Path(a.report).read_text(encoding="utf-8"))
    ok = replay(report)
    _emit({"replay": ok})
    return 0 if ok else 1


def cmd_block_verify(a) -> int:
    T = read_pointset(a.target).pointset
    if len(set(T.colors)) != 1:
        raise InvalidInput("target points must share one color")
    B = read_pointset(a.blockers).pointset
    r = is_k_color_blocked(BlockTarget(T.points, T.colors[0]), B, a.k)
    _emit({"valid": r.valid, "reason": r.reason.value, "colors_used": r.colors_used_in_B,
           "unblocked_pairs": [list(p) for p in r.unblocked_pairs],
           "violation": None if r.violation is None else list(r.violation)})
    return 0 if r.valid else 1


def cmd_render(a) -> int:
    X = read_pointset(a.file).pointset
    svg = render(X, Style(blocked_pairs=a.blocked_pairs, show_names=a.names))
    Path(a.out).write_text(svg, encoding="utf-8")
    _emit({"out": str(a.out), "marks": len(X)})
    return 0


def cmd_corpus(a) -> int:
    entries = corpus_mod.corpus()
    if a.export:
        d = Path(a.export)
        d.mkdir(parents=True, exist_ok=True)
        for e in entries:
            (d / f"{e.id}.txt").write_text(serialize(e.pointset), encoding="utf-8")
    if not a.verify_all:
        _emit({"entries": [{"id": e.id, "points": len(e.pointset), "schematic": e.schematic,
                            "provenance": e.provenance} for e in entries]})
        return 0
    results = corpus_mod.verify_all(strict=False)
    _emit({"all_ok": all(r.ok for r in results),
           "entries": [{"id": r.id, "ok": r.ok, "skipped": r.skipped, "failures": list(r.failures),
                        "observed": r.observed} for r in results]})
    return 0 if all(r.ok for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="visgrab", description="Exact tools for colored point sets and visibility.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    s = sub.add_parser("verify", help="proper coloring and collinearity report")
    s.add_argument("file")
    s.add_argument("--max-collinear", type=int)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("chromatic", help="exact chromatic number of the visibility graph")
    s.add_argument("file")
    s.set_defaults(func=cmd_chromatic)

    s = sub.add_parser("equiv", help="combinatorial equivalence of two colored sets")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--relations", choices=("hull", "betweenness"), default="hull")
    s.set_defaults(func=cmd_equiv)

    s = sub.add_parser("empty-kgon", help="find an empty convex k-gon")
    s.add_argument("file")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--class", dest="color", type=int, help="restrict to one color class")
    s.add_argument("--method", choices=("auto", "exhaustive", "dp"), default="auto")
    s.set_defaults(func=cmd_empty_kgon)

    s = sub.add_parser("search", help="extremal or blocking search")
    s.add_argument("--mode", choices=("extremal", "blocking"), required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--ell", type=int, default=3)
    s.add_argument("--grid", type=int, default=3, help="grid extent (|x|, |y| <= G)")
    s.add_argument("--resolution", type=int, default=1, help="grid points per unit")
    s.add_argument("--budget", type=int, default=100_000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--target", help="blocking mode: file with the unicolored target")
    s.add_argument("--initial", help="extremal mode: file with a starting set")
    s.add_argument("--stop-at", type=int, help="extremal mode: stop at this size")
    s.add_argument("--max-blockers", type=int)
    s.add_argument("--threads", type=int, help="worker processes (capped by VISGRAB_THREADS)")
    s.add_argument("--out", help="also write the JSON report here")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("replay", help="re-verify the witness of a search report")
    s.add_argument("report")
    s.set_defaults(func=cmd_replay)

    s = sub.add_parser("block-verify", help="check a k-color blocking of a target")
    s.add_argument("--target", required=True)
    s.add_argument("--blockers", required=True)
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(func=cmd_block_verify)

    s = sub.add_parser("render", help="write an SVG picture")
    s.add_argument("file")
    s.add_argument("--out", required=True)
    s.add_argument("--blocked-pairs", action="store_true", help="draw same-colored pairs")
    s.add_argument("--names", action="store_true")
    s.set_defaults(func=cmd_render)

    s = sub.add_parser("corpus", help="list, export or verify the reference configurations")
    s.add_argument("--verify-all", action="store_true")
    s.add_argument("--export", metavar="DIR")
    s.set_defaults(func=cmd_corpus)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
        if not a.command:
            raise _UsageError("missing command")
        return a.func(a)
    except _UsageError as exc:
        print(dumps(error_object("usage", str(exc))), file=sys.stderr)
        return 2
    except ParseError as exc:
        print(dumps(error_object("parse", str(exc), exc.line)), file=sys.stderr)
        return 2
    except InvalidInput as exc:
        print(dumps(error_object("invalid-input", str(exc))), file=sys.stderr)
        return 2
    except VerificationFailed as exc:
        print(dumps(error_object("verification-failed", str(exc))), file=sys.stderr)
        return 1
    except OSError as exc:
        print(dumps(error_object("io", str(exc))), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
