"""Slide moves and the slide sets of psi and omega products.

``Slide^psi(k)`` starts from the one-vertex tree on all leaves and performs,
for ``i = 1, ..., n`` in turn, ``k_i`` successive ``i``-slides in all
possible ways.  ``Slide^omega(k)`` starts from the tree ``(abc)`` and before
the ``i``-slides inserts leaf ``i`` at every internal vertex.  Each set is
multiplicity free, and the corresponding sum of boundary strata is the
product ``psi^k`` (resp. ``omega^k``).
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .errors import BadComposition, BadLeaf
from .trees import (
    A,
    A_BIT,
    StableTree,
    StrataSum,
    bit,
    branches_of,
    contract_split,
    degree_of,
    insert_leaf,
    label_str,
    mask_labels,
    min_label,
    vertex_of,
)


class Flavor(str, enum.Enum):
    PSI = "psi"
    OMEGA = "omega"


def as_flavor(flavor: Flavor | str) -> Flavor:
    try:
        return Flavor(flavor)
    except ValueError:
        raise ValueError(f"flavor must be 'psi' or 'omega', got {flavor!r}") from None


def as_composition(k: Iterable[int], n: int | None = None) -> tuple[int, ...]:
    """Validate a weak composition ``(k_1, ..., k_n)`` with ``sum(k) <= n``."""
    try:
        parts = tuple(int(x) for x in k)
    except (TypeError, ValueError):
        raise BadComposition(f"not a sequence of integers: {k!r}") from None
    if n is not None and len(parts) != n:
        raise BadComposition(f"expected {n} parts, got {len(parts)}")
    if any(x < 0 for x in parts):
        raise BadComposition(f"negative part in {parts}")
    if sum(parts) > len(parts):
        raise BadComposition(f"sum of {parts} exceeds n={len(parts)}")
    return parts


@dataclass(frozen=True)
class PriorityOrder:
    """Order in which labels are tried when choosing the branch to slide.

    The default order ``b, c, 1, ..., n`` gives the ordinary slide; other
    orders come from hyperplanes whose variables are reordered.
    """

    labels: tuple[int, ...]

    def __post_init__(self):
        if not self.labels:
            raise ValueError("a priority order needs at least one label")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError(f"repeated label in priority {self.labels}")
        if A in self.labels:
            raise ValueError("a cannot appear in a priority order")

    @classmethod
    def default(cls, i: int, n: int) -> PriorityOrder:
        return cls(tuple(x for x in range(A + 1, n + 1) if x != i))

    def __str__(self) -> str:
        return "(" + ", ".join(label_str(x) for x in self.labels) + ")"


# -- single slides ------------------------------------------------------------


def _slide_parts(tree: StableTree, i: int) -> tuple[int, list[int]]:
    if not 1 <= i <= tree.n:
        raise BadLeaf(f"cannot slide at {label_str(i)} on a tree with n={tree.n}")
    v = vertex_of(tree.splits, tree.n, i)
    ib = bit(i)
    branches = [m for m in branches_of(tree.splits, tree.n, v) if m != ib and not m & A_BIT]
    return v, branches


def _distribute(
    tree: StableTree,
    i: int,
    m_branch: int,
    others: list[int],
    need: int = 0,
    pending: dict[int, int] | None = None,
) -> set[StableTree]:
    # Br_m goes to the new vertex vbar; every other non-a branch either moves
    # with it or stays at v_i, and at least one stays.  The new edge has side
    # {i} + (stayers).
    #
    # With need > 0 we also drop results that cannot carry the slides still to
    # come: need - 1 more i-slides, and pending[j] slides for each later leaf
    # j hanging directly off v_i.  Afterwards v_i has spare valency
    # |stayers| - 1 and vbar has |movers|, and nothing else changes.
    rest = [b for b in others if b != m_branch]
    ib = bit(i)
    n = tree.n
    splits = tree.splits
    loads = [0] * len(rest)
    m_load = 0
    if pending:
        for idx, b in enumerate(rest):
            if b.bit_count() == 1:
                loads[idx] = pending.get(b.bit_length() - 3, 0)
        if m_branch.bit_count() == 1:
            m_load = pending.get(m_branch.bit_length() - 3, 0)
    after = need - 1
    out = set()
    for sub in range(1, 1 << len(rest)):
        side = ib
        stay = move = 0
        stay_load = 0
        move_load = m_load
        for idx, b in enumerate(rest):
            if sub >> idx & 1:
                side |= b
                stay += 1
                stay_load += loads[idx]
            else:
                move += 1
                move_load += loads[idx]
        if need > 0 and (after + stay_load > stay - 1 or move_load > move):
            continue
        out.add(StableTree(n, splits | {side}))
    return out


def _minimal_branch(others: list[int]) -> int:
    union = 0
    for b in others:
        union |= b
    mbit = union & -union
    return next(b for b in others if b & mbit)


def _priority_branch(others: list[int], priority: PriorityOrder, n: int) -> int | None:
    for label in priority.labels:
        if label > n:
            continue
        lb = bit(label)
        for b in others:
            if b & lb:
                return b
    return None


def i_minimal(tree: StableTree, i: int) -> int:
    """Smallest label off the ``a`` branch at ``i`` (and not ``i`` itself)."""
    _, others = _slide_parts(tree, i)
    return min_label(_minimal_branch(others))


def slide_i(tree: StableTree, i: int) -> set[StableTree]:
    """All trees obtained from ``tree`` by one ``i``-slide.

    There are ``2**(deg(v_i) - 3) - 1`` of them, none when ``deg(v_i) == 3``.
    """
    _, others = _slide_parts(tree, i)
    return _distribute(tree, i, _minimal_branch(others), others)


def generalized_slide(tree: StableTree, i: int, priority: PriorityOrder | Sequence[int]) -> set[StableTree]:
    """An ``i``-slide that moves the branch of the first label in ``priority``
    found off the ``a`` branch.  Returns the empty set if there is none."""
    if not isinstance(priority, PriorityOrder):
        priority = PriorityOrder(tuple(priority))
    if i in priority.labels:
        raise ValueError(f"priority order for {i}-slides cannot contain {i}")
    _, others = _slide_parts(tree, i)
    m_branch = _priority_branch(others, priority, tree.n)
    if m_branch is None:
        return set()
    return _distribute(tree, i, m_branch, others)


def slide_word(word: Sequence[int], n: int) -> StrataSum:
    """Slides in the order given by ``word``, starting from the interior."""
    trees = {StableTree.interior(n)}
    for i in word:
        trees = _slide_all(trees, i)
    return StrataSum.from_trees(n, trees)


def _slide_all(
    trees: Iterable[StableTree],
    i: int,
    priority: PriorityOrder | None = None,
    need: int = 0,
    pending: dict[int, int] | None = None,
) -> set[StableTree]:
    """Slide every tree once.

    ``need`` counts this slide and the further ``i``-slides still to come;
    with it (and ``pending`` slides of later leaves) results that have no
    room left for them are dropped.
    """
    if priority is not None and i in priority.labels:
        raise ValueError(f"priority order for {i}-slides cannot contain {i}")
    out: set[StableTree] = set()
    produced = 0
    for t in trees:
        _, others = _slide_parts(t, i)
        # deg(v_i) = len(others) + 2, counting leaf i and the a branch
        if len(others) - 1 < need:
            continue
        if priority is None:
            m_branch = _minimal_branch(others)
        else:
            m_branch = _priority_branch(others, priority, t.n)
            if m_branch is None:
                continue
        new = _distribute(t, i, m_branch, others, need, pending)
        produced += len(new)
        out |= new
    # distinct trees have disjoint slide sets
    assert produced == len(out), "slide images overlap"
    return out


# -- slide sets ---------------------------------------------------------------


def _doomed(tree: StableTree, remaining: dict[int, int]) -> bool:
    """True if some vertex has more pending slides than spare valency."""
    load: dict[int, int] = {}
    for label, r in remaining.items():
        if r:
            v = vertex_of(tree.splits, tree.n, label)
            load[v] = load.get(v, 0) + r
    for v, r in load.items():
        if r > degree_of(tree.splits, tree.n, v) - 3:
            return True
    return False


def slide_set_psi(k: Iterable[int], *, prune: bool = True) -> StrataSum:
    """The strata of ``Slide^psi(k)``; their classes sum to ``psi^k``."""
    k = as_composition(k)
    n = len(k)
    trees = {StableTree.interior(n)}
    for i in range(1, n + 1):
        pending = {j: k[j - 1] for j in range(i + 1, n + 1) if k[j - 1]} if prune else None
        for step in range(k[i - 1]):
            trees = _slide_all(trees, i, need=k[i - 1] - step if prune else 0, pending=pending)
    return StrataSum.from_trees(n, trees)


def slide_set_omega(k: Iterable[int], *, prune: bool = True) -> StrataSum:
    """The strata of ``Slide^omega(k)``; their classes sum to ``omega^k``."""
    k = as_composition(k)
    n = len(k)
    trees = {StableTree.interior(0)}
    for i in range(1, n + 1):
        trees = {s for t in trees for s in insert_leaf(t, i)}
        for step in range(k[i - 1]):
            trees = _slide_all(trees, i, need=k[i - 1] - step if prune else 0)
    return StrataSum.from_trees(n, trees)


def slide_set(k: Iterable[int], flavor: Flavor | str, *, prune: bool = True) -> StrataSum:
    if as_flavor(flavor) is Flavor.PSI:
        return slide_set_psi(k, prune=prune)
    return slide_set_omega(k, prune=prune)


def common_tree(n: int) -> StableTree:
    """The caterpillar ``(ab)-(c)-(1)-...-(n-2)-(n-1,n)``.

    It lies in ``Slide^omega(k)`` exactly for Catalan ``k`` and in
    ``Slide^psi(k)`` exactly for almost-Catalan ``k``.
    """
    if n < 1:
        return StableTree.interior(0)
    sides = []
    for j in range(0, n):
        m = 0
        for x in range(j, n + 1):
            m |= bit(x)
        sides.append(m)
    return StableTree(n, sides)


# -- slide labelings ----------------------------------------------------------


@dataclass(frozen=True)
class SlideLabeling:
    """A (possibly partial) assignment of values ``1..n`` to internal edges."""

    tree: StableTree
    composition: tuple[int, ...]
    flavor: Flavor
    edge_labels: dict[int, int] = field(hash=False)

    def __bool__(self) -> bool:
        return True

    def is_complete(self) -> bool:
        """Every internal edge of the tree carries a label."""
        return len(self.edge_labels) == len(self.tree.splits)

    def labeled_sides(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted((mask_labels(s), v) for s, v in self.edge_labels.items())


@dataclass(frozen=True)
class Rejection:
    """Why the labeling process stopped before completion."""

    tree: StableTree
    composition: tuple[int, ...]
    flavor: Flavor
    ell: int
    reason: str
    partial: dict[int, int] = field(hash=False)

    def __bool__(self) -> bool:
        return False


def _branch_min(tree: StableTree, v: int, exclude: int) -> int | None:
    best = None
    for m in tree.branch_masks(v):
        if m & exclude:
            continue
        x = min_label(m)
        if best is None or x < best:
            best = x
    return best


def verify_labeling(tree: StableTree, k: Iterable[int], flavor: Flavor | str) -> SlideLabeling | Rejection:
    """Run the deterministic slide-labeling process on ``tree``.

    Labels are assigned from ``ell = n`` downward; each step contracts the
    edges labeled so far, takes the first edge from ``v_ell`` towards ``a``
    and labels it when the minimal labels decrease across it.
    """
    flavor = as_flavor(flavor)
    k = as_composition(k, tree.n)
    labels: dict[int, int] = {}
    contracted = tree
    for ell in range(tree.n, 0, -1):
        for _ in range(k[ell - 1]):
            v = contracted.leaf_vertex(ell)
            if v == contracted.root:
                return Rejection(tree, k, flavor, ell, "v_ell is adjacent to a", dict(labels))
            vbar = contracted.parent(v)
            # at v_ell skip the a branch (the edge up) and leaf ell
            m_here = _branch_min(contracted, v, A_BIT | bit(ell))
            m_there = _branch_min(contracted, vbar, A_BIT | bit(ell))
            if flavor is Flavor.OMEGA:
                ok = ell > m_here > m_there
            else:
                ok = m_here > m_there
            if not ok:
                reason = (
                    f"minima do not decrease: m(v_{ell})={label_str(m_here)}, "
                    f"m(vbar)={label_str(m_there)}"
                )
                return Rejection(tree, k, flavor, ell, reason, dict(labels))
            labels[v] = ell
            contracted = contract_split(contracted, v)
    return SlideLabeling(tree, k, flavor, labels)


def admits_labeling(tree: StableTree, k: Iterable[int], flavor: Flavor | str) -> bool:
    result = verify_labeling(tree, k, flavor)
    return bool(result) and result.is_complete()
