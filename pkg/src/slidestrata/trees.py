"""Leaf-labeled stable trees and formal sums of boundary strata.

A boundary stratum of the moduli space of stable genus-0 curves with marked
points ``a, b, c, 1, ..., n`` is indexed by its dual tree.  Trees are stored
here as their set of splits: each internal edge cuts the leaf set in two, and
we keep the side that does *not* contain ``a``.  Splits are bitmasks over the
leaf set, with bit ``label + 2`` standing for a leaf, so that the bit order
agrees with the label order ``a < b < c < 1 < 2 < ... < n``.

Internal vertices are identified with their *clade*: the mask of leaves lying
below the vertex when the tree is hung from ``a``.  The vertex carrying ``a``
(the root) has the full leaf mask as clade; every other internal vertex has
the split of the edge above it.
"""

from __future__ import annotations

import os
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass

from .errors import (
    BadLabel,
    BadLeaf,
    BoundExceeded,
    IncompatibleSplits,
    NoSuchSplit,
    UnstableTree,
)

A, B, C = -2, -1, 0
_NAMES = {A: "a", B: "b", C: "c"}
_FROM_NAME = {"a": A, "b": B, "c": C}

DEFAULT_MAX_N = 7


def max_n() -> int:
    """The enumeration bound, read from ``STRATA_MAX_N`` (default 7)."""
    raw = os.environ.get("STRATA_MAX_N")
    if raw is None or raw == "":
        return DEFAULT_MAX_N
    return int(raw)


def check_bound(n: int, bound: int | None = None) -> None:
    bound = max_n() if bound is None else bound
    if n > bound:
        raise BoundExceeded(f"n={n} exceeds the configured bound {bound}")


# -- labels -----------------------------------------------------------------


def label_str(label: int) -> str:
    return _NAMES.get(label, str(label))


def parse_label(value: int | str, n: int | None = None) -> int:
    """Turn ``"a"``, ``"3"`` or ``3`` into an integer label, checking range."""
    if isinstance(value, str):
        key = value.strip()
        if key in _FROM_NAME:
            label = _FROM_NAME[key]
        else:
            try:
                label = int(key)
            except ValueError:
                raise BadLeaf(f"unknown leaf {value!r}") from None
            if label < 1:
                raise BadLeaf(f"unknown leaf {value!r}")
    elif isinstance(value, bool) or not isinstance(value, int):
        raise BadLeaf(f"unknown leaf {value!r}")
    else:
        label = value
    if label < A or (n is not None and label > n):
        raise BadLeaf(f"leaf {value!r} is not in the leaf set for n={n}")
    return label


def bit(label: int) -> int:
    return 1 << (label + 2)


A_BIT = bit(A)


def full_mask(n: int) -> int:
    return (1 << (n + 3)) - 1


def mask_labels(mask: int) -> tuple[int, ...]:
    out = []
    pos = 0
    while mask:
        if mask & 1:
            out.append(pos - 2)
        mask >>= 1
        pos += 1
    return tuple(out)


def min_label(mask: int) -> int:
    return (mask & -mask).bit_length() - 3


def labels_mask(labels: Iterable[int]) -> int:
    m = 0
    for x in labels:
        m |= bit(x)
    return m


def format_labels(labels: Iterable[int]) -> str:
    names = [label_str(x) for x in labels]
    if all(len(s) == 1 for s in names):
        return "".join(names)
    return ",".join(names)


def _compatible(s: int, t: int) -> bool:
    inter = s & t
    return inter == 0 or inter == s or inter == t


def is_valid_side(mask: int, n: int) -> bool:
    full = full_mask(n)
    return (
        not mask & A_BIT
        and mask & ~full == 0
        and mask.bit_count() >= 2
        and (full ^ mask).bit_count() >= 2
    )


# -- fast queries -----------------------------------------------------------
# Light-weight structure queries straight from a split set.  The slide loops
# call these on hundreds of thousands of short-lived trees, where building a
# full parent/children map would dominate the running time.


def vertex_of(splits: Iterable[int], n: int, label: int) -> int:
    """Clade of the vertex carrying ``label``: the smallest split containing it."""
    lb = 1 << (label + 2)
    best = (1 << (n + 3)) - 1
    size = n + 3
    for s in splits:
        if s & lb:
            c = s.bit_count()
            if c < size:
                best, size = s, c
    return best


def _kids(splits: Iterable[int], v: int) -> tuple[list[int], int]:
    # splits below v are nested or disjoint, so scanning them largest first
    # the maximal ones are exactly those not yet covered
    inside = sorted((s for s in splits if s & v == s and s != v), key=int.bit_count, reverse=True)
    kids = []
    covered = 0
    for s in inside:
        if not s & covered:
            kids.append(s)
            covered |= s
    return kids, covered


def branches_of(splits: Iterable[int], n: int, v: int) -> list[int]:
    """Leaf masks of the components of the tree minus the vertex ``v``."""
    kids, covered = _kids(splits, v)
    rest = v & ~covered
    while rest:
        low = rest & -rest
        kids.append(low)
        rest ^= low
    full = (1 << (n + 3)) - 1
    if v != full:
        kids.append(full ^ v)
    return kids


def degree_of(splits: Iterable[int], n: int, v: int) -> int:
    kids, covered = _kids(splits, v)
    return len(kids) + (v & ~covered).bit_count() + (v != (1 << (n + 3)) - 1)


# -- trees ------------------------------------------------------------------


class _Structure:
    __slots__ = ("full", "parent", "children", "leaf_vertex")

    def __init__(self, n: int, splits: frozenset[int]):
        full = full_mask(n)
        clades = sorted(splits, key=int.bit_count)
        parent: dict[int, int] = {}
        children: dict[int, list[int]] = {full: []}
        for s in clades:
            children[s] = []
        for idx, s in enumerate(clades):
            p = full
            for t in clades[idx + 1 :]:
                if t & s == s:
                    p = t
                    break
            parent[s] = p
            children[p].append(s)
        leaf_vertex: dict[int, int] = {}
        for label in range(A, n + 1):
            lb = bit(label)
            v = full
            for t in clades:
                if t & lb:
                    v = t
                    break
            leaf_vertex[label] = v
            children[v].append(lb)
        self.full = full
        self.parent = parent
        self.children = children
        self.leaf_vertex = leaf_vertex


class StableTree:
    """A stable tree on leaves ``{a, b, c, 1, ..., n}``, stored by its splits.

    Instances are immutable and hash/compare on ``(n, splits)``.  Use
    :func:`from_splits` to build a tree from user input; the constructor
    trusts its arguments.
    """

    __slots__ = ("n", "splits", "_struct", "_hash")

    def __init__(self, n: int, splits: Iterable[int] = ()):
        self.n = n
        self.splits = frozenset(splits)
        self._struct: _Structure | None = None
        self._hash = hash((n, self.splits))

    @classmethod
    def interior(cls, n: int) -> StableTree:
        """The one-vertex tree: the open part of the moduli space."""
        return cls(n, ())

    # structural equality
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StableTree):
            return NotImplemented
        return self.n == other.n and self.splits == other.splits

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: StableTree) -> bool:
        return self.sort_key() < other.sort_key()

    def __repr__(self) -> str:
        return f"StableTree(n={self.n}, splits={[format_labels(s) for s in self.sides()]})"

    def __getstate__(self):
        return (self.n, tuple(sorted(self.splits)))

    def __setstate__(self, state):
        n, splits = state
        self.n = n
        self.splits = frozenset(splits)
        self._struct = None
        self._hash = hash((n, self.splits))

    @property
    def _s(self) -> _Structure:
        if self._struct is None:
            self._struct = _Structure(self.n, self.splits)
        return self._struct

    # basic invariants
    @property
    def full(self) -> int:
        return full_mask(self.n)

    @property
    def root(self) -> int:
        return full_mask(self.n)

    @property
    def codim(self) -> int:
        return len(self.splits)

    @property
    def extra_valency(self) -> int:
        # sum over internal vertices of deg(v) - 3, which telescopes to n - #splits
        return self.n - len(self.splits)

    @property
    def dim(self) -> int:
        return self.extra_valency

    def is_trivalent(self) -> bool:
        return len(self.splits) == self.n

    def leaves(self) -> tuple[int, ...]:
        return tuple(range(A, self.n + 1))

    def sides(self) -> tuple[tuple[int, ...], ...]:
        """Canonical list of splits: label tuples, sorted in label order."""
        return tuple(sorted(mask_labels(s) for s in self.splits))

    def sort_key(self) -> tuple:
        return (self.n, self.sides())

    # vertices and branches
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self._s.children, key=lambda v: (v.bit_count(), v)))

    def children(self, v: int) -> tuple[int, ...]:
        return tuple(self._s.children[v])

    def parent(self, v: int) -> int | None:
        return self._s.parent.get(v)

    def degree(self, v: int) -> int:
        d = len(self._s.children[v])
        return d if v == self.full else d + 1

    def degrees(self) -> dict[int, int]:
        return {v: self.degree(v) for v in self._s.children}

    def leaf_vertex(self, label: int) -> int:
        """Clade of the internal vertex carrying ``label``."""
        if not A <= label <= self.n:
            raise BadLeaf(f"leaf {label_str(label)} not in tree with n={self.n}")
        return self._s.leaf_vertex[label]

    def vertex_leaves(self, v: int) -> tuple[int, ...]:
        return tuple(
            min_label(c) for c in self._s.children[v] if c.bit_count() == 1 and c not in self.splits
        )

    def branch_masks(self, v: int) -> list[int]:
        """Leaf masks of the connected components of the tree minus ``v``."""
        out = list(self._s.children[v])
        if v != self.full:
            out.append(self.full ^ v)
        return out

    def incident_edges(self, v: int) -> list[int]:
        """Edges at ``v``, each named by the mask of its side away from ``a``.

        The edge to leaf ``a`` is named by the bit of ``a``.
        """
        out = list(self._s.children[v])
        if v != self.full:
            out.append(v)
        return out

    def edges(self) -> list[int]:
        return [bit(x) for x in self.leaves()] + sorted(self.splits)

    def edge_ends(self, edge: int) -> tuple[int | None, int | None]:
        """(upper vertex, lower vertex); leaves are reported as None."""
        if edge in self.splits:
            return self._s.parent[edge], edge
        if edge.bit_count() == 1:
            return self._s.leaf_vertex[min_label(edge)], None
        raise NoSuchSplit(f"no edge {edge:b}")

    def path_to_a(self, v: int) -> list[int]:
        out = [v]
        while v != self.full:
            v = self._s.parent[v]
            out.append(v)
        return out


# -- construction and surgery -------------------------------------------------


def _side_mask(n: int, side: Iterable[int | str] | int) -> int:
    if isinstance(side, int) and not isinstance(side, bool):
        m = side
        if m & ~full_mask(n):
            raise BadLeaf(f"mask {m:b} has bits outside the leaf set for n={n}")
    else:
        m = 0
        for x in side:
            m |= bit(parse_label(x, n))
    if m & A_BIT:
        m ^= full_mask(n)
    return m


def from_splits(n: int, sides: Iterable[Iterable[int | str] | int]) -> StableTree:
    """Build the stable tree with the given splits.

    Each side may be given as labels or as a bitmask, from either side of the
    edge; it is normalized to the side without ``a``.
    """
    if n < 0:
        raise BadLeaf(f"n must be nonnegative, got {n}")
    masks = set()
    for side in sides:
        m = _side_mask(n, side)
        if not is_valid_side(m, n):
            raise UnstableTree(
                f"split {format_labels(mask_labels(m))} would create a vertex of degree 2"
            )
        masks.add(m)
    ordered = sorted(masks)
    for i, s in enumerate(ordered):
        for t in ordered[i + 1 :]:
            if not _compatible(s, t):
                raise IncompatibleSplits(
                    f"splits {format_labels(mask_labels(s))} and "
                    f"{format_labels(mask_labels(t))} cross"
                )
    return StableTree(n, masks)


def contract_split(tree: StableTree, side: Iterable[int | str] | int) -> StableTree:
    m = _side_mask(tree.n, side)
    if m not in tree.splits:
        raise NoSuchSplit(f"{format_labels(mask_labels(m))} is not a split of {tree!r}")
    return StableTree(tree.n, tree.splits - {m})


def add_split(tree: StableTree, side: int) -> StableTree:
    return StableTree(tree.n, tree.splits | {side})


def insert_leaf(tree: StableTree, new_label: int) -> set[StableTree]:
    """Attach ``new_label`` (which must be ``n + 1``) at each internal vertex."""
    if new_label != tree.n + 1:
        raise BadLabel(f"can only insert leaf {tree.n + 1}, got {new_label}")
    nb = bit(new_label)
    out = set()
    for v in tree.vertices():
        if v == tree.full:
            splits = tree.splits
        else:
            splits = {s | nb if s & v == v else s for s in tree.splits}
        out.add(StableTree(new_label, splits))
    return out


def subdivide_edge(tree: StableTree, edge: int, new_label: int) -> StableTree:
    """Attach ``new_label`` to a new vertex in the middle of ``edge``."""
    if new_label != tree.n + 1:
        raise BadLabel(f"can only insert leaf {tree.n + 1}, got {new_label}")
    nb = bit(new_label)
    new_full = full_mask(new_label)
    if edge == A_BIT:
        splits = set(tree.splits)
        splits.add(new_full ^ A_BIT ^ nb)
    else:
        # strict ancestors of the edge gain the new leaf; the edge itself stays
        splits = {s | nb if s & edge == edge and s != edge else s for s in tree.splits}
        splits.add(edge | nb)
    return StableTree(new_label, splits)


def forget_leaf(tree: StableTree, label: int) -> StableTree:
    """Delete the maximal leaf and stabilize."""
    if label != tree.n or label < 1:
        raise BadLabel(f"can only forget the maximal numbered leaf {tree.n}, got {label}")
    lb = bit(label)
    n = tree.n - 1
    splits = set()
    for s in tree.splits:
        t = s & ~lb
        if is_valid_side(t, n):
            splits.add(t)
    return StableTree(n, splits)


def forget_down_to(tree: StableTree, n: int) -> StableTree:
    while tree.n > n:
        tree = forget_leaf(tree, tree.n)
    return tree


# -- branches -----------------------------------------------------------------


@dataclass(frozen=True)
class SetPartitionAtLeaf:
    """The branches of a tree at a leaf: a partition of the other leaves.

    ``blocks[0]`` is the block containing ``a``; the rest are ordered by
    their smallest label.
    """

    leaf: int
    blocks: tuple[frozenset[int], ...]

    @classmethod
    def from_blocks(cls, leaf: int, blocks: Iterable[Iterable[int]]) -> SetPartitionAtLeaf:
        bs = [frozenset(b) for b in blocks]
        if any(not b for b in bs):
            raise ValueError("blocks must be nonempty")
        seen: set[int] = set()
        for b in bs:
            if seen & b:
                raise ValueError("blocks must be disjoint")
            seen |= b
        if leaf in seen:
            raise ValueError("the leaf itself cannot be in a block")
        if A not in seen:
            raise ValueError("some block must contain a")
        bs.sort(key=lambda b: (A not in b, min(b)))
        return cls(leaf, tuple(bs))

    @property
    def a_block(self) -> frozenset[int]:
        return self.blocks[0]

    def block_of(self, label: int) -> int:
        for idx, b in enumerate(self.blocks):
            if label in b:
                return idx
        raise BadLeaf(f"leaf {label_str(label)} is not covered by the partition")

    def __len__(self) -> int:
        return len(self.blocks)


def branches_at(tree: StableTree, leaf: int) -> SetPartitionAtLeaf:
    v = tree.leaf_vertex(leaf)
    lb = bit(leaf)
    blocks = [frozenset(mask_labels(m)) for m in tree.branch_masks(v) if m != lb]
    return SetPartitionAtLeaf.from_blocks(leaf, blocks)


# -- enumeration --------------------------------------------------------------


def enumerate_trivalent(
    n: int, *, ab_paired: bool = False, bound: int | None = None
) -> Iterator[StableTree]:
    """All trivalent trees on ``{a, b, c, 1, ..., n}``, each once.

    With ``ab_paired`` only the trees where ``a`` and ``b`` share a vertex are
    produced; there are ``(2n - 1)!!`` of them.
    """
    check_bound(n, bound)
    banned = {A_BIT, bit(B)} if ab_paired else set()

    def grow(tree: StableTree) -> Iterator[StableTree]:
        if tree.n == n:
            yield tree
            return
        for edge in tree.edges():
            if edge in banned:
                continue
            yield from grow(subdivide_edge(tree, edge, tree.n + 1))

    yield from grow(StableTree.interior(0))


def enumerate_stable(n: int, *, bound: int | None = None) -> Iterator[StableTree]:
    """All stable trees on ``{a, b, c, 1, ..., n}``, each once."""
    check_bound(n, bound)

    def grow(tree: StableTree) -> Iterator[StableTree]:
        if tree.n == n:
            yield tree
            return
        new = tree.n + 1
        for t in insert_leaf(tree, new):
            yield from grow(t)
        for edge in tree.edges():
            yield from grow(subdivide_edge(tree, edge, new))

    yield from grow(StableTree.interior(0))


def all_splits(n: int) -> list[int]:
    """Every boundary divisor of the moduli space, as a split mask."""
    full = full_mask(n)
    return [m for m in range(full + 1) if is_valid_side(m, n)]


# -- formal sums of strata ----------------------------------------------------


class StrataSum(Mapping):
    """A formal nonnegative integer combination of boundary strata.

    Iteration is in canonical tree order, which makes every serialization
    deterministic.
    """

    __slots__ = ("n", "_terms", "_order")

    def __init__(self, n: int, terms: Mapping[StableTree, int] | Iterable[tuple[StableTree, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[StableTree, int] = {}
        for tree, mult in items:
            if tree.n != n:
                raise ValueError(f"tree on n={tree.n} in a sum over n={n}")
            if mult < 0:
                raise ValueError("multiplicities must be nonnegative")
            acc[tree] = acc.get(tree, 0) + mult
        self.n = n
        self._terms = {t: m for t, m in acc.items() if m}
        self._order: list[StableTree] | None = None

    @classmethod
    def from_trees(cls, n: int, trees: Iterable[StableTree]) -> StrataSum:
        return cls(n, ((t, 1) for t in trees))

    def __getitem__(self, tree: StableTree) -> int:
        return self._terms[tree]

    def __iter__(self) -> Iterator[StableTree]:
        # canonical order is only worked out when someone iterates
        if self._order is None:
            self._order = sorted(self._terms, key=StableTree.sort_key)
        return iter(self._order)

    def __contains__(self, tree: object) -> bool:
        return tree in self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StrataSum):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._terms.items())))

    def __add__(self, other: StrataSum) -> StrataSum:
        if self.n != other.n:
            raise ValueError("cannot add sums over different n")
        return StrataSum(self.n, list(self._terms.items()) + list(other._terms.items()))

    def items(self):
        return [(t, self._terms[t]) for t in self]

    def __repr__(self) -> str:
        return f"StrataSum(n={self.n}, terms={len(self)}, total={self.total()})"

    def total(self) -> int:
        return sum(self._terms.values())

    def trees(self) -> frozenset[StableTree]:
        return frozenset(self._terms)

    def is_multiplicity_free(self) -> bool:
        return all(m == 1 for m in self._terms.values())
