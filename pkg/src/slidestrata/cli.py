"""Command-line front end.

Exit codes: 0 success, 1 a checked property failed, 2 bad usage or input,
3 the size bound was exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from collections.abc import Sequence

from . import counts, kappa, oracle, patterns, properties, serialize, slides, tournament
from .errors import BoundExceeded, StrataError
from .trees import StrataSum, check_bound, enumerate_stable, enumerate_trivalent

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BOUND = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma separated list of integers, got {text!r}")


# -- rendering -----------------------------------------------------------------------


def _sum_csv(total: StrataSum) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["mult", "codim", "stratum", "splits"])
    for t, m in total.items():
        w.writerow([m, t.codim, serialize.tree_text(t), ";".join(serialize._word(s) for s in t.sides())])
    return buf.getvalue()


def _emit_sum(total: StrataSum, fmt: str) -> str:
    if fmt == "json":
        return serialize.dumps(serialize.sum_to_json(total))
    if fmt == "dot":
        return serialize.sum_to_dot(total)
    if fmt == "csv":
        return _sum_csv(total)
    return serialize.sum_text(total) + "\n"


def _table(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return serialize.dumps(rows)
    if not rows:
        return ""
    cols = list(rows[0])
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, cols, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        return buf.getvalue()
    if fmt == "dot":
        raise UsageError("dot output is only available for trees and sums")
    cells = [[str(r[c]) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[j]) for row in cells)) for j, c in enumerate(cols)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip()]
    lines += ["  ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines) + "\n"


def _kstr(k: Sequence[int]) -> str:
    return ",".join(map(str, k))


# -- commands ------------------------------------------------------------------------


def cmd_slide(args) -> tuple[int, str]:
    k = slides.as_composition(args.k)
    check_bound(len(k))
    return EXIT_OK, _emit_sum(slides.slide_set(k, args.flavor), args.format)


def cmd_tour(args) -> tuple[int, str]:
    if args.k is not None:
        k = slides.as_composition(args.k)
        check_bound(len(k))
        total = tournament.tour_set(k)
        if args.format == "json":
            results = [serialize.tournament_to_json(tournament.lazy_tournament(t)) for t in total]
            return EXIT_OK, serialize.dumps({"k": list(k), "count": len(total), "points": results})
        return EXIT_OK, _emit_sum(total, args.format)
    if args.n is None:
        raise UsageError("tour needs --k or --n")
    check_bound(args.n)
    sets = tournament.all_tour_sets(args.n)
    rows = [{"k": _kstr(k), "tour": len(s)} for k, s in sets.items() if len(s)]
    total = sum(len(s) for s in sets.values())
    want = counts.double_factorial_odd(args.n)
    rows.append({"k": "total", "tour": total})
    code = EXIT_OK if total == want else EXIT_FAIL
    return code, _table(rows, args.format)


def cmd_kappa(args) -> tuple[int, str]:
    if args.n is None:
        raise UsageError("kappa needs --n")
    check_bound(args.n + (len(args.r) if args.r else 1))
    if args.r is not None:
        total = kappa.generalized_kappa(args.n, args.r)
    elif args.i is not None:
        total = kappa.kappa_expansion(args.n, args.i)
    else:
        raise UsageError("kappa needs --i or --r")
    return EXIT_OK, _emit_sum(total, args.format)


def _check_slides(n: int) -> list[str]:
    bad = []
    for m in range(1, n + 1):
        for tree in enumerate_stable(m):
            for i in range(1, m + 1):
                if oracle.oracle_slide(tree, i) != slides.slide_i(tree, i):
                    bad.append(f"slide_{i} of {serialize.tree_text(tree)}")
    return bad


def _check_main(ks: list[tuple[int, ...]], flavors: list[str]) -> list[str]:
    bad = []
    for k in ks:
        for f in flavors:
            if oracle.iterated_limit(k, f) != slides.slide_set(k, f):
                bad.append(f"{f} k=({_kstr(k)})")
    return bad


def cmd_oracle(args) -> tuple[int, str]:
    flavors = [args.flavor] if args.flavor else ["psi", "omega"]
    if args.check == "slides":
        n = args.n if args.n is not None else 4
        check_bound(n)
        bad = _check_slides(n)
        label = f"oracle_slide vs slide_i, n <= {n}"
    elif args.check == "main":
        if args.k is not None:
            ks = [slides.as_composition(args.k)]
        elif args.n is not None:
            ks = [k for m in range(1, args.n + 1) for t in range(m + 1) for k in counts.compositions(m, t)]
        else:
            raise UsageError("--check main needs --k or --n")
        check_bound(max(len(k) for k in ks))
        bad = _check_main(ks, flavors)
        label = f"iterated_limit vs slide_set on {len(ks)} composition(s)"
    elif args.check == "labelings":
        n = args.n if args.n is not None else 4
        check_bound(n)
        bad = []
        for m in range(1, n + 1):
            trees = list(enumerate_trivalent(m))
            for k in counts.compositions(m):
                for f in flavors:
                    got = {t for t in trees if slides.admits_labeling(t, k, f)}
                    if got != set(slides.slide_set(k, f).trees()):
                        bad.append(f"{f} k=({_kstr(k)})")
        label = f"labelings vs slide sets, n <= {n}"
    else:
        ns = (args.n,) if args.n is not None else (5, 6)
        check_bound(max(ns))
        report = properties.run_properties(args.cases, ns, args.seed)
        bad = report.failures
        kinds = ", ".join(f"{k}={v}" for k, v in sorted(report.by_kind.items()))
        label = f"{report.cases} random cases (seed {args.seed}; {kinds})"
    lines = [f"{'ok' if not bad else 'FAIL'}: {label}"] + [f"  mismatch: {b}" for b in bad]
    return (EXIT_FAIL if bad else EXIT_OK), "\n".join(lines) + "\n"


def cmd_patterns(args) -> tuple[int, str]:
    fmt = args.format
    if args.action == "avoiders":
        check_bound(args.n)
        words = ["".join(map(str, w)) for w in patterns.avoiders(args.n)]
        if fmt == "json":
            return EXIT_OK, serialize.dumps(words)
        return EXIT_OK, "\n".join(words) + "\n"
    if args.action == "bell":
        rows = []
        code = EXIT_OK
        for n in range(1, args.n + 1):
            check_bound(n)
            cats = len(patterns.caterpillars(slides.slide_set_omega((1,) * n)))
            rows.append({"n": n, "caterpillars": cats, "avoiders": len(patterns.avoiders(n)), "bell": patterns.bell(n)})
            if not cats == rows[-1]["avoiders"] == rows[-1]["bell"]:
                code = EXIT_FAIL
        return code, _table(rows, fmt)
    if args.action == "tree":
        if args.word is None:
            raise UsageError("patterns tree needs --word")
        tree = patterns.leaf_labeling(patterns.parse_word(args.word))
        if fmt == "json":
            return EXIT_OK, serialize.dumps(serialize.tree_to_json(tree))
        if fmt == "dot":
            return EXIT_OK, serialize.tree_to_dot(tree)
        return EXIT_OK, patterns.draw_caterpillar(tree) + "\n"
    if args.action == "word":
        if args.tree is None:
            raise UsageError("patterns word needs --tree (tree JSON)")
        try:
            data = json.loads(args.tree)
        except json.JSONDecodeError as exc:
            raise UsageError(f"--tree is not JSON: {exc}") from None
        tree = serialize.tree_from_json(data)
        check_bound(tree.n)
        return EXIT_OK, "".join(map(str, patterns.reading_word(tree))) + "\n"
    # caterpillars
    check_bound(args.n)
    cats = sorted(patterns.caterpillars(slides.slide_set_omega((1,) * args.n)))
    rows = [{"word": "".join(map(str, patterns.reading_word(t))), "tree": patterns.draw_caterpillar(t)} for t in cats]
    rows.sort(key=lambda r: r["word"])
    return EXIT_OK, _table(rows, fmt)


def cmd_counts(args) -> tuple[int, str]:
    if args.n is None:
        raise UsageError("counts needs --n")
    check_bound(args.n)
    rows = []
    for k in counts.compositions(args.n):
        rows.append(
            {
                "k": _kstr(k),
                "multinomial": counts.multinomial(k),
                "asym": counts.asym_multinomial(k),
                "catalan": counts.is_catalan(k),
                "almost_catalan": counts.is_almost_catalan(k),
            }
        )
    return EXIT_OK, _table(rows, args.format)


def cmd_export(args) -> tuple[int, str]:
    if args.what in ("trivalent", "stable"):
        if args.n is None:
            raise UsageError(f"export {args.what} needs --n")
        check_bound(args.n)
        gen = enumerate_trivalent(args.n) if args.what == "trivalent" else enumerate_stable(args.n)
        total = StrataSum.from_trees(args.n, gen)
    else:
        if args.k is None:
            raise UsageError(f"export {args.what} needs --k")
        k = slides.as_composition(args.k)
        check_bound(len(k))
        total = tournament.tour_set(k) if args.what == "tour" else slides.slide_set(k, args.flavor or "psi")
    out = _emit_sum(total, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
        return EXIT_OK, f"wrote {len(total)} trees to {args.out}\n"
    return EXIT_OK, out


# -- parser --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="slidestrata", description=__doc__.splitlines()[0])
    p.add_argument("--max-n", type=int, help="size bound (default: $STRATA_MAX_N or 7)")
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp, default="text"):
        sp.add_argument("--format", choices=("text", "json", "dot", "csv"), default=default)

    sp = sub.add_parser("slide", help="the slide set of a composition")
    sp.add_argument("--k", type=_ints, required=True)
    sp.add_argument("--flavor", choices=("psi", "omega"), default="psi")
    fmt(sp)
    sp.set_defaults(run=cmd_slide)

    sp = sub.add_parser("tour", help="lazy tournament point sets")
    sp.add_argument("--k", type=_ints)
    sp.add_argument("--n", type=int)
    fmt(sp)
    sp.set_defaults(run=cmd_tour)

    sp = sub.add_parser("kappa", help="kappa class expansions")
    sp.add_argument("--n", type=int)
    sp.add_argument("--i", type=int)
    sp.add_argument("--r", type=_ints)
    fmt(sp)
    sp.set_defaults(run=cmd_kappa)

    sp = sub.add_parser("oracle", help="cross-check slides against independent routes")
    sp.add_argument("--check", choices=("slides", "main", "labelings", "properties"), required=True)
    sp.add_argument("--n", type=int)
    sp.add_argument("--k", type=_ints)
    sp.add_argument("--flavor", choices=("psi", "omega"))
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--cases", type=int, default=1000)
    sp.set_defaults(run=cmd_oracle)

    sp = sub.add_parser("patterns", help="23-1 avoiders and caterpillars")
    sp.add_argument("action", choices=("avoiders", "bell", "caterpillars", "tree", "word"))
    sp.add_argument("--n", type=int, default=4)
    sp.add_argument("--word")
    sp.add_argument("--tree", help="tree JSON")
    fmt(sp)
    sp.set_defaults(run=cmd_patterns)

    sp = sub.add_parser("counts", help="multidegree tables")
    sp.add_argument("--n", type=int)
    fmt(sp)
    sp.set_defaults(run=cmd_counts)

    sp = sub.add_parser("export", help="write tree sets as json, dot or csv")
    sp.add_argument("what", choices=("slide", "tour", "trivalent", "stable"))
    sp.add_argument("--k", type=_ints)
    sp.add_argument("--n", type=int)
    sp.add_argument("--flavor", choices=("psi", "omega"))
    sp.add_argument("--out")
    fmt(sp, "json")
    sp.set_defaults(run=cmd_export)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    saved = os.environ.get("STRATA_MAX_N")
    if args.max_n is not None:
        os.environ["STRATA_MAX_N"] = str(args.max_n)
    try:
        code, out = args.run(args)
    except BoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (UsageError, StrataError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        if args.max_n is not None:
            if saved is None:
                del os.environ["STRATA_MAX_N"]
            else:
                os.environ["STRATA_MAX_N"] = saved
    sys.stdout.write(out)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
