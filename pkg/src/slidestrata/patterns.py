"""Caterpillars in the omega slide set of ``(1, ..., 1)`` and 23-1 avoidance.

A caterpillar is a trivalent tree whose internal vertices form a path.  We
draw it with the ``a, b`` cherry on the left, so the internal edges are read
left to right along the path away from ``a``.  The omega slide labeling of
such a tree labels every internal edge once, and the word read off is a
permutation avoiding the dashed pattern 23-1.  The leaf labeling algorithm
goes back from the word to the tree.

The second half of the module encodes psi slide histories as words.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from .errors import NotCaterpillar, NoValidLabeling, PatternViolation
from .slides import Flavor, as_composition, slide_i, verify_labeling
from .trees import A, B, C, StableTree, bit, check_bound, min_label


# -- permutations -----------------------------------------------------------------


def _check_perm(w: Sequence[int]) -> tuple[int, ...]:
    w = tuple(int(x) for x in w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"{w} is not a permutation of 1..{len(w)}")
    return w


def parse_word(text: str) -> tuple[int, ...]:
    """``"2143"`` or ``"2,1,4,3"``."""
    text = text.strip()
    parts = text.split(",") if "," in text else list(text)
    return _check_perm(int(p) for p in parts)


def find_231_dash(w: Sequence[int]) -> tuple[int, int] | None:
    """1-based ``(i, j)`` with ``i + 1 < j`` and ``w_j < w_i < w_{i+1}``."""
    w = _check_perm(w)
    for i in range(len(w) - 1):
        if w[i] < w[i + 1]:
            for j in range(i + 2, len(w)):
                if w[j] < w[i]:
                    return i + 1, j + 1
    return None


def avoids_231_dash(w: Sequence[int]) -> bool:
    return find_231_dash(w) is None


def avoiders(n: int) -> list[tuple[int, ...]]:
    """Permutations of ``1..n`` avoiding 23-1, in lexicographic order."""
    return [w for w in itertools.permutations(range(1, n + 1)) if avoids_231_dash(w)]


def bell(n: int) -> int:
    """The Bell number ``B_n``, from the Bell triangle."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


# -- caterpillars ------------------------------------------------------------------


def is_caterpillar(tree: StableTree) -> bool:
    if not tree.is_trivalent():
        return False
    internal_degree = {v: 0 for v in tree.vertices()}
    for s in tree.splits:
        internal_degree[s] += 1
        internal_degree[tree.parent(s)] += 1
    return all(d <= 2 for d in internal_degree.values())


def path_edges(tree: StableTree) -> list[int]:
    """Internal edges from left to right, with ``a, b`` at the left end."""
    if not is_caterpillar(tree):
        raise NotCaterpillar(f"{tree!r} is not a caterpillar")
    if tree.leaf_vertex(B) != tree.root:
        raise NotCaterpillar(f"a and b are not a cherry in {tree!r}")
    return sorted(tree.splits, key=lambda s: -s.bit_count())


def reading_word(tree: StableTree) -> tuple[int, ...]:
    """The labels of the omega ``(1, ..., 1)`` slide labeling, left to right."""
    edges = path_edges(tree)
    lab = verify_labeling(tree, (1,) * tree.n, Flavor.OMEGA)
    if not lab or not lab.is_complete():
        raise NoValidLabeling(f"{tree!r} has no omega slide labeling for (1,...,1)")
    return tuple(lab.edge_labels[e] for e in edges)


@dataclass(frozen=True)
class LeafLabelingStep:
    value: int
    case: int
    slot: int


def leaf_labeling_trace(w: Sequence[int]) -> tuple[StableTree, list[LeafLabelingStep]]:
    """Run the leaf labeling algorithm, returning the tree and each step.

    Slots ``1..n+1`` are the leaf positions along the path: slot ``p < n``
    hangs between edges ``p`` and ``p+1``; slots ``n`` and ``n+1`` sit at the
    right end.
    """
    w = _check_perm(w)
    bad = find_231_dash(w)
    if bad is not None:
        raise PatternViolation(f"{w} contains 23-1 at positions {bad}")
    n = len(w)
    if n == 0:
        return StableTree.interior(0), []
    pos = {v: p for p, v in enumerate(w, start=1)}
    slots: dict[int, int] = {}
    steps = []
    for value in range(n, 0, -1):
        p = pos[value]
        right = w[p] if p < n else None
        if right is not None and right < value:
            assert p not in slots, "the leaf next to the edge is taken"
            slot, case = p, 1
        else:
            free = [q for q in range(p, n + 2) if q not in slots]
            assert len(free) == 2 and free[0] == p, (w, value, free)
            slot, case = free[-1], 2
        slots[slot] = value
        steps.append(LeafLabelingStep(value, case, slot))
    (rest,) = [q for q in range(1, n + 2) if q not in slots]
    slots[rest] = C

    splits = []
    for p in range(1, n + 1):
        m = 0
        for q in range(p, n + 2):
            m |= bit(slots[q])
        splits.append(m)
    return StableTree(n, splits), steps


def leaf_labeling(w: Sequence[int]) -> StableTree:
    """The caterpillar ``T_w`` whose reading word is ``w``."""
    return leaf_labeling_trace(w)[0]


def caterpillars(trees: Iterable[StableTree]) -> list[StableTree]:
    return [t for t in trees if is_caterpillar(t)]


def draw_caterpillar(tree: StableTree) -> str:
    """``(ab)-(2)-(c)-(4)-(13)``."""
    edges = path_edges(tree)
    groups = []
    prev = tree.root
    for e in edges + [0]:
        leaves = prev & ~e
        groups.append("".join(("a", "b", "c")[x + 2] if x <= C else str(x) for x in _labels(leaves)))
        prev = e
    return "-".join(f"({g})" for g in groups)


def _labels(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(min_label(low))
        mask ^= low
    return out


# -- words from psi slide histories -------------------------------------------------


@dataclass(frozen=True)
class SlideHistory:
    """A run of the psi slide procedure: the slid leaf and the tree after it."""

    n: int
    steps: tuple[tuple[int, StableTree], ...]

    @property
    def tree(self) -> StableTree:
        return self.steps[-1][1] if self.steps else StableTree.interior(self.n)

    def pairs(self) -> Iterator[tuple[int, StableTree, StableTree]]:
        prev = StableTree.interior(self.n)
        for i, t in self.steps:
            yield i, prev, t
            prev = t


def slide_histories(k: Iterable[int]) -> Iterator[SlideHistory]:
    """Every run of the psi procedure for ``k``, one per tree of the slide set."""
    k = as_composition(k)
    n = len(k)
    check_bound(n)
    order = [i for i in range(1, n + 1) for _ in range(k[i - 1])]

    def grow(tree: StableTree, done: tuple, rest: list[int]) -> Iterator[SlideHistory]:
        if not rest:
            yield SlideHistory(n, done)
            return
        i = rest[0]
        for t in sorted(slide_i(tree, i)):
            yield from grow(t, done + ((i, t),), rest[1:])

    yield from grow(StableTree.interior(n), (), order)


def vertex_order(tree: StableTree) -> list[int]:
    """Internal vertices by their smallest non-``a`` leaf, ties broken so
    that a vertex closer to ``a`` counts as larger."""

    def j(v: int) -> int:
        # the non-a branches at v cover its clade, minus a at the root
        return min_label(v & ~bit(A))

    depth = {v: len(tree.path_to_a(v)) for v in tree.vertices()}
    return sorted(tree.vertices(), key=lambda v: (j(v), -depth[v]))


def word_encode_psi(history: SlideHistory, *, before: bool = True) -> tuple[int, ...]:
    """Insert ``i`` at the position of ``v_i`` among the internal vertices.

    ``before`` reads the order off the tree the slide acts on; otherwise off
    the tree it produces.
    """
    word: list[int] = []
    for i, old, new in history.pairs():
        t = old if before else new
        order = vertex_order(t)
        j = order.index(t.leaf_vertex(i)) + 1
        word.insert(j - 1, i)
    return tuple(word)
