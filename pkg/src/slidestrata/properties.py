"""Seeded random checks of structural facts about slides.

Each ``check_*`` function returns ``None`` when the fact holds and a short
message otherwise.  :func:`run_properties` draws random cases from a
:class:`random.Random` and collects the failures.
"""

from __future__ import annotations

import functools
import random
from dataclasses import dataclass, field

from .counts import is_almost_catalan, is_catalan
from .slides import admits_labeling, common_tree, slide_i, slide_set_psi
from .trees import StableTree, bit, contract_split, subdivide_edge


def random_trivalent(n: int, rng: random.Random) -> StableTree:
    """Grow a trivalent tree by subdividing uniformly chosen edges.

    Every trivalent tree arises from exactly one sequence of choices, so the
    result is uniform.
    """
    tree = StableTree.interior(0)
    for new in range(1, n + 1):
        tree = subdivide_edge(tree, rng.choice(tree.edges()), new)
    return tree


def random_stable(n: int, rng: random.Random) -> StableTree:
    """A random trivalent tree with each internal edge kept with probability 1/2."""
    tree = random_trivalent(n, rng)
    return StableTree(n, [s for s in sorted(tree.splits) if rng.random() < 0.5])


def random_composition(n: int, rng: random.Random, total: int | None = None) -> tuple[int, ...]:
    total = n if total is None else total
    k = [0] * n
    for _ in range(total):
        k[rng.randrange(n)] += 1
    return tuple(k)


def check_slide(tree: StableTree, i: int) -> str | None:
    """Count, extra valency and contraction back to ``tree`` for one slide."""
    v = tree.leaf_vertex(i)
    deg = tree.degree(v)
    out = slide_i(tree, i)
    want = 2 ** (deg - 3) - 1
    if len(out) != want:
        return f"|slide_{i}| = {len(out)}, expected 2^({deg}-3)-1 = {want}"
    for t in out:
        if t.extra_valency != tree.extra_valency - 1:
            return f"extra valency {t.extra_valency} after slide of {tree!r}"
        (new,) = t.splits - tree.splits
        if not new & bit(i) or contract_split(t, new) != tree:
            return f"{t!r} does not contract to {tree!r}"
    return None


def check_disjoint(s: StableTree, t: StableTree, i: int) -> str | None:
    if s != t and slide_i(s, i) & slide_i(t, i):
        return f"slides of {s!r} and {t!r} meet"
    return None


@functools.lru_cache(maxsize=None)
def _psi_size(k: tuple[int, ...]) -> int:
    return len(slide_set_psi(k))


def check_equinumerous(k: tuple[int, ...], perm: tuple[int, ...]) -> str | None:
    moved = tuple(k[p] for p in perm)
    if _psi_size(k) != _psi_size(moved):
        return f"|Slide^psi({k})| = {_psi_size(k)} but |Slide^psi({moved})| = {_psi_size(moved)}"
    return None


def check_common_tree(k: tuple[int, ...]) -> str | None:
    t0 = common_tree(len(k))
    if admits_labeling(t0, k, "omega") != is_catalan(k):
        return f"T0 in Slide^omega({k}) disagrees with the Catalan test"
    if admits_labeling(t0, k, "psi") != is_almost_catalan(k):
        return f"T0 in Slide^psi({k}) disagrees with the almost-Catalan test"
    return None


@dataclass
class PropertyReport:
    cases: int = 0
    by_kind: dict[str, int] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def run_properties(cases: int, ns: tuple[int, ...] = (5, 6), seed: int = 0) -> PropertyReport:
    """Draw ``cases`` random instances, cycling through the kinds of check.

    Single-slide checks are drawn twice as often as the others.
    """
    rng = random.Random(seed)
    report = PropertyReport()
    kinds = ("slide", "disjoint", "equinumerous", "common_tree", "slide")
    for c in range(cases):
        n = rng.choice(ns)
        kind = kinds[c % len(kinds)]
        if kind == "slide":
            msg = check_slide(random_stable(n, rng), rng.randint(1, n))
        elif kind == "disjoint":
            i = rng.randint(1, n)
            # a contraction of s: close trees are the likeliest to collide
            s = random_stable(n, rng)
            t = StableTree(n, [x for x in s.splits if rng.random() < 0.7])
            msg = check_disjoint(s, t, i)
        elif kind == "equinumerous":
            perm = list(range(n))
            rng.shuffle(perm)
            msg = check_equinumerous(random_composition(n, rng), tuple(perm))
        else:
            # Catalan compositions are rare under uniform draws; bias half of them
            k = random_composition(n, rng)
            if rng.random() < 0.5:
                k = tuple(sorted(k))
            msg = check_common_tree(k)
        report.cases += 1
        report.by_kind[kind] = report.by_kind.get(kind, 0) + 1
        if msg:
            report.failures.append(msg)
    return report
