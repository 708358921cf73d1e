"""Lazy tournaments, the point sets ``Tour(k)``, and hyperplane schedules.

A lazy tournament labels every edge of a trivalent tree.  Leaf edges start
with their own label; then the two labeled edges meeting at a vertex play a
match, the larger label wins, and the third edge is labeled by the winner
unless the loser is about to lose again to a larger label across that edge,
in which case the loser advances.

``Tour(k)`` collects the trees with ``a`` and ``b`` paired in which each
label ``i >= 1`` wins ``k_i`` matches.  For a few shapes of ``k`` these
points are limits of explicit hyperplane sections; :func:`family_schedule`
records those hyperplanes as a program of leaf insertions and generalized
slides, and :func:`run_schedule` executes it.
"""

from __future__ import annotations

import logging
from collections import Counter
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field

from .errors import BadComposition, MalformedSchedule, NotTrivalent, UnsupportedShape
from .slides import PriorityOrder, _doomed, as_composition, generalized_slide
from .trees import (
    A,
    B,
    C,
    StableTree,
    StrataSum,
    check_bound,
    enumerate_trivalent,
    insert_leaf,
    label_str,
    min_label,
)

log = logging.getLogger(__name__)

#: Number of tie situations met in step 1 of the tournament, for auditing.
tie_count = 0


@dataclass(frozen=True)
class Match:
    loser: int
    winner: int
    advanced: int


@dataclass(frozen=True)
class TournamentResult:
    tree: StableTree
    edge_labels: dict[int, int] = field(hash=False)
    win_counts: dict[int, int] = field(hash=False)
    match_log: tuple[Match, ...]

    def composition(self) -> tuple[int, ...]:
        """Wins of ``1, ..., n`` (wins of ``a, b, c`` are dropped)."""
        return tuple(self.win_counts.get(i, 0) for i in range(1, self.tree.n + 1))


def lazy_tournament(tree: StableTree, *, tie_break: str = "smaller") -> TournamentResult:
    """Play the lazy tournament on a trivalent tree.

    When two eligible pairs share the largest loser label, the pair with the
    smaller winner is played first (``tie_break="larger"`` reverses this).
    Such ties are logged and counted in :data:`tie_count`.
    """
    global tie_count
    if not tree.is_trivalent():
        raise NotTrivalent(f"{tree!r} is not trivalent")
    labels = {e: min_label(e) for e in tree.edges() if e not in tree.splits}
    incident = {v: tree.incident_edges(v) for v in tree.vertices()}
    ends: dict[int, list[int]] = {}
    for v, es in incident.items():
        for e in es:
            ends.setdefault(e, []).append(v)
    wins: Counter[int] = Counter()
    matches = []
    while len(labels) < len(ends):
        eligible = []
        for v, es in incident.items():
            done = [e for e in es if e in labels]
            if len(done) != 2:
                continue
            x, y = labels[done[0]], labels[done[1]]
            lo, hi = (x, y) if x < y else (y, x)
            open_edge = next(e for e in es if e not in labels)
            eligible.append((lo, hi, v, open_edge))
        if not eligible:  # pragma: no cover - impossible on a trivalent tree
            raise RuntimeError("tournament stalled")
        top = max(e[0] for e in eligible)
        best = [e for e in eligible if e[0] == top]
        if len(best) > 1:
            tie_count += 1
            log.warning("lazy tournament tie on %r: %s", tree, best)
        best.sort(key=lambda e: e[1], reverse=(tie_break == "larger"))
        i, j, v, edge = best[0]
        wins[j] += 1
        far = next(w for w in ends[edge] if w != v)
        lazy = any(
            e != edge and e in labels and labels[e] != j and labels[e] > i for e in incident[far]
        )
        adv = i if lazy else j
        labels[edge] = adv
        matches.append(Match(i, j, adv))
    return TournamentResult(tree, labels, dict(wins), tuple(matches))


def ab_paired(tree: StableTree) -> bool:
    return tree.leaf_vertex(A) == tree.leaf_vertex(B)


def tournament_compositions(n: int) -> Iterator[tuple[StableTree, tuple[int, ...]]]:
    """Each ``a, b``-paired trivalent tree with the win counts of its tournament."""
    for tree in enumerate_trivalent(n, ab_paired=True):
        yield tree, lazy_tournament(tree).composition()


def tour_set(k: Iterable[int]) -> StrataSum:
    """The trees of ``Tour(k)``, as a multiplicity-free sum of points."""
    k = as_composition(k)
    n = len(k)
    if sum(k) != n:
        raise BadComposition(f"Tour(k) needs sum(k) = n, got {k}")
    check_bound(n)
    return StrataSum.from_trees(n, (t for t, c in tournament_compositions(n) if c == k))


def all_tour_sets(n: int) -> dict[tuple[int, ...], StrataSum]:
    """``Tour(k)`` for every composition ``k`` of ``n`` with a nonempty set."""
    groups: dict[tuple[int, ...], list[StableTree]] = {}
    for tree, comp in tournament_compositions(n):
        groups.setdefault(comp, []).append(tree)
    return {k: StrataSum.from_trees(n, ts) for k, ts in sorted(groups.items())}


# -- hyperplane schedules -------------------------------------------------------


@dataclass(frozen=True)
class Insert:
    label: int

    def __str__(self) -> str:
        return f"Insert({self.label})"


@dataclass(frozen=True)
class GenSlide:
    i: int
    priority: PriorityOrder

    def __str__(self) -> str:
        return f"GenSlide({self.i}, {self.priority})"


Instruction = Insert | GenSlide


@dataclass(frozen=True)
class SlideSchedule:
    """Leaf insertions and generalized slides, executed left to right."""

    instructions: tuple[Instruction, ...]

    def __post_init__(self):
        inserted = 0
        for ins in self.instructions:
            if isinstance(ins, Insert):
                if ins.label != inserted + 1:
                    raise MalformedSchedule(f"expected Insert({inserted + 1}), got {ins}")
                inserted = ins.label
            elif isinstance(ins, GenSlide):
                # a slide for leaf i lives on the moduli space with leaves up to i
                if ins.i != inserted:
                    raise MalformedSchedule(f"{ins} must follow Insert({ins.i}) directly or other slides of it")
                if ins.i in ins.priority.labels or any(x > ins.i for x in ins.priority.labels):
                    raise MalformedSchedule(f"{ins} refers to a label not yet present")
            else:
                raise MalformedSchedule(f"unknown instruction {ins!r}")

    @property
    def n(self) -> int:
        return sum(isinstance(x, Insert) for x in self.instructions)

    def composition(self) -> tuple[int, ...]:
        counts = Counter(x.i for x in self.instructions if isinstance(x, GenSlide))
        return tuple(counts.get(i, 0) for i in range(1, self.n + 1))

    def __str__(self) -> str:
        return "; ".join(str(x) for x in self.instructions)


def omega_schedule(k: Sequence[int]) -> SlideSchedule:
    """The schedule of the ordinary omega slide rule for ``k``."""
    out: list[Instruction] = []
    for i, ki in enumerate(k, start=1):
        out.append(Insert(i))
        prio = PriorityOrder(tuple(range(B, i)))
        out.extend(GenSlide(i, prio) for _ in range(ki))
    return SlideSchedule(tuple(out))


def _all_on_last(n: int) -> SlideSchedule:
    return omega_schedule((0,) * (n - 1) + (n,))


def _one_then_rest(n: int) -> SlideSchedule:
    # y_b = 0; z_b = t z_{n-1}; z_c = t z_1; z_1 = t z_2; ...; z_{n-3} = t z_{n-2}
    out: list[Instruction] = [Insert(i) for i in range(1, n)]
    out.append(GenSlide(n - 1, PriorityOrder((B,))))
    out.append(Insert(n))
    out.append(GenSlide(n, PriorityOrder((B, n - 1))))
    chain = [C] + list(range(1, n - 1))
    for x, y in zip(chain, chain[1:]):
        out.append(GenSlide(n, PriorityOrder((x, y))))
    return SlideSchedule(tuple(out))


def _rest_then_one(n: int) -> SlideSchedule:
    base = omega_schedule((0,) * (n - 2) + (n - 1,))
    return SlideSchedule(base.instructions + (Insert(n), GenSlide(n, PriorityOrder((B, n - 1)))))


def _two_two() -> SlideSchedule:
    # y_b = 0; y_c + t y_1 + t^2 y_2 = 0; z_b + t z_3 = 0; z_c + t z_1 + t^2 z_2 = 0
    return SlideSchedule(
        (
            Insert(1),
            Insert(2),
            Insert(3),
            GenSlide(3, PriorityOrder((B,))),
            GenSlide(3, PriorityOrder((C, 1, 2))),
            Insert(4),
            GenSlide(4, PriorityOrder((B, 3))),
            GenSlide(4, PriorityOrder((C, 1, 2))),
        )
    )


def extend_schedule(s: SlideSchedule) -> SlideSchedule:
    """From a schedule for ``(k_1, ..., k_n)`` build one for
    ``(k_1, ..., k_{n-1}, 0, k_n + 1)``.

    The slides of ``n`` are moved to leaf ``n + 1`` and followed by the
    hyperplane ``w_b + t w_c + t^2 w_1 + ... + t^n w_{n-1}``.
    """
    n = s.n
    head = [x for x in s.instructions if not (isinstance(x, GenSlide) and x.i == n)]
    moved = [GenSlide(n + 1, x.priority) for x in s.instructions if isinstance(x, GenSlide) and x.i == n]
    last = GenSlide(n + 1, PriorityOrder(tuple(range(B, n))))
    return SlideSchedule(tuple(head) + (Insert(n + 1),) + tuple(moved) + (last,))


def _base_schedule(k: tuple[int, ...]) -> SlideSchedule | None:
    n = len(k)
    zeros = lambda m: (0,) * m  # noqa: E731
    if n >= 1 and k == zeros(n - 1) + (n,):
        return _all_on_last(n)
    if n >= 2 and k == zeros(n - 2) + (1, n - 1):
        return _one_then_rest(n)
    if n >= 2 and k == zeros(n - 2) + (n - 1, 1):
        return _rest_then_one(n)
    if k == (0, 0, 2, 2):
        return _two_two()
    return None


def family_schedule(k: Iterable[int]) -> SlideSchedule:
    """The hyperplane schedule whose limit is ``Tour(k)``, for supported ``k``.

    Supported are ``(0,...,0,n)``, ``(0,...,0,1,n-1)``, ``(0,...,0,n-1,1)``,
    ``(0,0,2,2)``, and anything reached from these by
    ``k -> (k_1, ..., k_{n-1}, 0, k_n + 1)``.
    """
    k = as_composition(k)
    if sum(k) != len(k):
        raise UnsupportedShape(f"{k} is not a composition of n={len(k)}")
    base = _base_schedule(k)
    if base is not None:
        return base
    n = len(k)
    if n >= 3 and k[-2] == 0 and k[-1] >= 2:
        smaller = k[:-2] + (k[-1] - 1,)
        try:
            return extend_schedule(family_schedule(smaller))
        except UnsupportedShape:
            pass
    raise UnsupportedShape(f"no hyperplane schedule known for {k}")


def run_schedule(s: SlideSchedule, n: int | None = None, *, prune: bool = True) -> StrataSum:
    """Execute a schedule from ``(abc)``, fanning out over all choices.

    A generalized slide with no eligible label (the hyperplane vanishes on the
    stratum) drops that tree.  With ``prune`` trees whose vertices cannot
    absorb the pending slides of the current leaf are discarded early.
    """
    if n is not None and n != s.n:
        raise MalformedSchedule(f"schedule inserts {s.n} leaves, expected {n}")
    steps = s.instructions
    trees = {StableTree.interior(0)}
    dropped = 0
    for idx, ins in enumerate(steps):
        if isinstance(ins, Insert):
            trees = {u for t in trees for u in insert_leaf(t, ins.label)}
            continue
        if prune:
            pending = sum(1 for x in steps[idx:] if isinstance(x, GenSlide) and x.i == ins.i)
            trees = {t for t in trees if not _doomed(t, {ins.i: pending})}
        new: set[StableTree] = set()
        produced = 0
        for t in trees:
            out = generalized_slide(t, ins.i, ins.priority)
            if not out and t.degree(t.leaf_vertex(ins.i)) > 3:
                dropped += 1
            produced += len(out)
            new |= out
        assert produced == len(new), "generalized slide images overlap"
        trees = new
    if dropped:
        log.debug("run_schedule dropped %d degenerate trees", dropped)
    return StrataSum.from_trees(s.n, trees)


def format_wins(result: TournamentResult) -> str:
    parts = [f"{label_str(x)}:{c}" for x, c in sorted(result.win_counts.items())]
    return " ".join(parts)
