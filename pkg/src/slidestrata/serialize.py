"""JSON, DOT and text forms of trees, strata sums and tournament results.

Every output here is a pure function of canonical data, so equal inputs give
byte-identical text.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Mapping
from typing import Any

from .errors import StrataError
from .tournament import Match, TournamentResult
from .trees import A, StableTree, StrataSum, from_splits, label_str, mask_labels, parse_label


class BadJSON(StrataError):
    """Input that does not describe a tree or sum."""


# -- JSON ----------------------------------------------------------------------------


def tree_to_json(tree: StableTree) -> dict[str, Any]:
    return {"n": tree.n, "splits": [[label_str(x) for x in side] for side in tree.sides()]}


def tree_from_json(data: Mapping[str, Any]) -> StableTree:
    try:
        n = int(data["n"])
        sides = [[parse_label(x, n) for x in side] for side in data["splits"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise BadJSON(f"not a tree: {data!r}") from exc
    return from_splits(n, sides)


def sum_to_json(total: StrataSum) -> dict[str, Any]:
    return {
        "n": total.n,
        "terms": [{"tree": tree_to_json(t), "mult": m} for t, m in total.items()],
    }


def sum_from_json(data: Mapping[str, Any]) -> StrataSum:
    try:
        n = int(data["n"])
        terms = [(tree_from_json(t["tree"]), int(t["mult"])) for t in data["terms"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise BadJSON(f"not a strata sum: {data!r}") from exc
    return StrataSum(n, terms)


def _edge_key(tree: StableTree, edge: int) -> list[str]:
    return [label_str(x) for x in mask_labels(edge)]


def tournament_to_json(result: TournamentResult) -> dict[str, Any]:
    tree = result.tree
    edges = sorted(result.edge_labels, key=lambda e: (e.bit_count(), mask_labels(e)))
    return {
        "tree": tree_to_json(tree),
        "composition": list(result.composition()),
        "edge_labels": [
            {"edge": _edge_key(tree, e), "label": label_str(result.edge_labels[e])} for e in edges
        ],
        "wins": {label_str(x): w for x, w in sorted(result.win_counts.items())},
        "match_log": [
            {"loser": label_str(m.loser), "winner": label_str(m.winner), "advanced": label_str(m.advanced)}
            for m in result.match_log
        ],
    }


def tournament_from_json(data: Mapping[str, Any]) -> TournamentResult:
    tree = tree_from_json(data["tree"])
    n = tree.n

    def edge(names: Iterable[str]) -> int:
        m = 0
        for x in names:
            m |= 1 << (parse_label(x, n) - A)
        return m

    labels = {edge(e["edge"]): parse_label(e["label"], n) for e in data["edge_labels"]}
    wins = {parse_label(x, n): int(w) for x, w in data["wins"].items()}
    log = tuple(
        Match(parse_label(m["loser"], n), parse_label(m["winner"], n), parse_label(m["advanced"], n))
        for m in data["match_log"]
    )
    return TournamentResult(tree, labels, wins, log)


def dumps(obj: Any) -> str:
    """Canonical JSON text: sorted keys, fixed separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


# -- text ----------------------------------------------------------------------------


def _word(labels: Iterable[int]) -> str:
    return "".join(label_str(x) for x in sorted(labels))


def _groups_along_path(tree: StableTree) -> list[str]:
    # codimension two: three vertices on a path
    small, big = sorted(tree.splits, key=int.bit_count)
    path = [tree.root, big, small] if small & big == small else [small, tree.root, big]
    groups = [tree.vertex_leaves(v) for v in path]
    if min(groups[-1]) < min(groups[0]):
        groups.reverse()
    return [f"({_word(g)})" for g in groups]


def tree_text(tree: StableTree) -> str:
    """``D(ab|c12)`` in codimension one, ``(ab)-(c)-(123)`` in codimension two,
    the split list otherwise."""
    if tree.codim == 1:
        (side,) = tree.splits
        inside = mask_labels(side)
        outside = [x for x in tree.leaves() if x not in inside]
        return f"D({_word(outside)}|{_word(inside)})"
    if tree.codim == 2:
        return "-".join(_groups_along_path(tree))
    if tree.codim == 0:
        return f"({_word(tree.leaves())})"
    return "{" + ", ".join(_word(s) for s in tree.sides()) + "}"


def sum_text(total: StrataSum) -> str:
    if not total:
        return "0"
    parts = []
    for t, m in total.items():
        parts.append(tree_text(t) if m == 1 else f"{m}*{tree_text(t)}")
    return " + ".join(parts)


# -- DOT -----------------------------------------------------------------------------


def tree_to_dot(tree: StableTree, name: str = "T") -> str:
    """Graphviz source: internal vertices as unlabeled circles, leaves as labels."""
    lines = [f"graph {name} {{", "  node [shape=circle, label=\"\", width=0.15];"]
    ids = {v: f"v{k}" for k, v in enumerate(sorted(tree.vertices(), key=lambda v: (-v.bit_count(), mask_labels(v))))}
    for v, vid in ids.items():
        lines.append(f"  {vid};")
    for x in tree.leaves():
        lines.append(f'  l{label_str(x)} [shape=plaintext, label="{label_str(x)}"];')
    for v, vid in ids.items():
        for x in tree.vertex_leaves(v):
            lines.append(f"  {vid} -- l{label_str(x)};")
        if v != tree.root:
            lines.append(f"  {ids[tree.parent(v)]} -- {vid};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def sum_to_dot(total: StrataSum) -> str:
    return "".join(tree_to_dot(t, f"T{k}") for k, t in enumerate(total))
