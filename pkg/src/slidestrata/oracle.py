"""Leading-term degeneration of moving hyperplanes on boundary strata.

The ``i``-th Kapranov map sends the moduli space to a projective space with
coordinates ``z_b, z_c, z_1, ..., z_n`` (``z_i`` omitted).  On a stratum
``X_T`` its image lies in the linear space ``P_sigma`` cut out by the
branches of ``T`` at ``i``: coordinates in one branch agree and those in the
branch of ``a`` vanish.  Restricting a hyperplane ``sum_e t^e z_{r_e}`` to
``P_sigma`` and keeping the lowest power of ``t`` gives the limiting equation
``y_m = 0``, whose solutions are the strata with a new edge separating ``i``
from both ``a`` and ``m``.

This module recomputes slide sets from that rule alone.  Everything is exact:
coefficients are :class:`fractions.Fraction` and there is no floating point.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction

from .errors import BadLeaf, BadParametrization, DegenerateRestriction
from .slides import Flavor, PriorityOrder, as_composition, as_flavor
from .trees import (
    A,
    A_BIT,
    B,
    SetPartitionAtLeaf,
    StableTree,
    StrataSum,
    bit,
    branches_at,
    full_mask,
    insert_leaf,
    is_valid_side,
    label_str,
    labels_mask,
)

log = logging.getLogger(__name__)


# -- linear forms ---------------------------------------------------------------


@dataclass(frozen=True)
class LinearForm:
    """A formal linear combination of coordinates with rational coefficients."""

    coeffs: tuple[tuple[int, Fraction], ...] = ()

    @classmethod
    def of(cls, coeffs: Mapping[int, Fraction | int]) -> LinearForm:
        items = sorted((k, Fraction(v)) for k, v in coeffs.items() if v != 0)
        return cls(tuple(items))

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def variables(self) -> tuple[int, ...]:
        return tuple(k for k, _ in self.coeffs)

    def __add__(self, other: LinearForm) -> LinearForm:
        acc = self.as_dict()
        for k, v in other.coeffs:
            acc[k] = acc.get(k, 0) + v
        return LinearForm.of(acc)

    def scale(self, c: Fraction | int) -> LinearForm:
        return LinearForm.of({k: c * v for k, v in self.coeffs})

    def evaluate(self, point: Mapping[int, Fraction]) -> Fraction:
        return sum((v * Fraction(point.get(k, 0)) for k, v in self.coeffs), Fraction(0))


@dataclass(frozen=True)
class LinearFormPoly:
    """A polynomial in ``t`` with linear forms as coefficients.

    ``coords`` lists the coordinates of the ambient projective space; for a
    hyperplane these are labels, after restriction they are block indices.
    """

    terms: tuple[tuple[int, LinearForm], ...]
    coords: tuple[int, ...]
    var: str = "z"

    @classmethod
    def of(cls, terms: Mapping[int, LinearForm], coords: Iterable[int], var: str = "z") -> LinearFormPoly:
        items = []
        for e in sorted(terms):
            if e < 0:
                raise ValueError("exponents of t must be nonnegative")
            if not terms[e].is_zero():
                items.append((e, terms[e]))
        return cls(tuple(items), tuple(coords), var)

    @classmethod
    def from_exponents(cls, exps: Mapping[int, int], coords: Iterable[int]) -> LinearFormPoly:
        """``sum_r t^{exps[r]} z_r``."""
        acc: dict[int, LinearForm] = {}
        for r, e in exps.items():
            acc[e] = acc.get(e, LinearForm()) + LinearForm.of({r: 1})
        return cls.of(acc, coords)

    def as_dict(self) -> dict[int, LinearForm]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: LinearFormPoly) -> LinearFormPoly:
        if self.coords != other.coords:
            raise ValueError("forms live on different spaces")
        acc = self.as_dict()
        for e, f in other.terms:
            acc[e] = acc.get(e, LinearForm()) + f
        return LinearFormPoly.of(acc, self.coords, self.var)

    def scale(self, c: Fraction | int) -> LinearFormPoly:
        return LinearFormPoly.of({e: f.scale(c) for e, f in self.terms}, self.coords, self.var)

    def leading(self) -> tuple[int, LinearForm]:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        return self.terms[0]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, f in self.terms:
            tpow = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
            for k, v in f.coeffs:
                c = "" if v == 1 else f"{v}*"
                name = label_str(k) if self.var == "z" else str(k)
                parts.append(f"{c}{tpow}{'*' if tpow else ''}{self.var}_{name}")
        return " + ".join(parts)


def _coords(i: int, n: int) -> tuple[int, ...]:
    return tuple(r for r in range(B, n + 1) if r != i)


def hyperplane_psi(i: int, n: int) -> LinearFormPoly:
    """``z_b + t z_c + t^2 z_1 + ... + t^i z_{i-1} + t^{i+1} z_{i+1} + ... + t^n z_n``."""
    if not 1 <= i <= n:
        raise BadLeaf(f"need 1 <= i <= n, got i={i}, n={n}")
    # with b=-1, c=0 the exponent of z_r is r+1 below i and r above it
    exps = {r: (r + 1 if r < i else r) for r in _coords(i, n)}
    return LinearFormPoly.from_exponents(exps, _coords(i, n))


def hyperplane_omega(i: int) -> LinearFormPoly:
    """``w_b + t w_c + t^2 w_1 + ... + t^i w_{i-1}``."""
    if i < 1:
        raise BadLeaf(f"need i >= 1, got {i}")
    coords = _coords(i, i - 1)
    return LinearFormPoly.from_exponents({r: r + 1 for r in coords}, _coords(i, i))


def hyperplane_from_priority(i: int, n: int, priority: PriorityOrder | Sequence[int]) -> LinearFormPoly:
    """The hyperplane whose ``e``-th power of ``t`` multiplies the ``e``-th
    label of ``priority``."""
    labels = priority.labels if isinstance(priority, PriorityOrder) else tuple(priority)
    coords = _coords(i, n)
    exps = {}
    for e, r in enumerate(labels):
        if r not in coords:
            raise BadLeaf(f"{label_str(r)} is not a coordinate of the {i}-th map for n={n}")
        exps[r] = e
    return LinearFormPoly.from_exponents(exps, coords)


def priority_of(h: LinearFormPoly) -> PriorityOrder:
    """Variables of a monomial-coefficient hyperplane in ascending power of ``t``."""
    out = []
    for _, f in h.terms:
        if len(f.coeffs) != 1:
            raise ValueError("each power of t must carry a single variable")
        out.append(f.coeffs[0][0])
    return PriorityOrder(tuple(out))


# -- restriction to strata ------------------------------------------------------


@dataclass(frozen=True)
class PSigma:
    """The linear space of a branch partition, with coordinates ``y_1..y_k``.

    ``z_r`` pulls back to ``y_{sigma(r)}``, and ``y_0 = 0`` on the block of
    ``a``.
    """

    partition: SetPartitionAtLeaf

    @property
    def leaf(self) -> int:
        return self.partition.leaf

    @property
    def dim(self) -> int:
        return len(self.partition) - 2

    def index(self, r: int) -> int:
        return self.partition.block_of(r)

    def y_coords(self) -> tuple[int, ...]:
        return tuple(range(1, len(self.partition)))

    def embed(self, y: Mapping[int, Fraction | int], n: int) -> tuple[Fraction, ...]:
        """The point ``iota_sigma(y)`` in the ``z`` coordinates."""
        out = []
        for r in _coords(self.leaf, n):
            j = self.index(r)
            out.append(Fraction(0) if j == 0 else Fraction(y[j]))
        return tuple(out)

    def pattern(self, n: int) -> str:
        """Like ``[0:0:y1:y1:y2]``."""
        cells = []
        for r in _coords(self.leaf, n):
            j = self.index(r)
            cells.append("0" if j == 0 else f"y{j}")
        return "[" + ":".join(cells) + "]"


def restrict_to_stratum(h: LinearFormPoly, tree: StableTree, i: int) -> LinearFormPoly:
    """Pull ``h`` back along ``iota_sigma`` for the branches of ``tree`` at ``i``."""
    sigma = PSigma(branches_at(tree, i))
    return restrict_to_psigma(h, sigma)


def restrict_to_psigma(h: LinearFormPoly, sigma: PSigma) -> LinearFormPoly:
    acc: dict[int, LinearForm] = {}
    for e, f in h.terms:
        sub: dict[int, Fraction] = {}
        for r, v in f.coeffs:
            j = sigma.index(r)
            if j:
                sub[j] = sub.get(j, 0) + v
        acc[e] = LinearForm.of(sub)
    return LinearFormPoly.of(acc, sigma.y_coords(), "y")


@dataclass(frozen=True)
class Degenerate:
    """The limit is not cut out by a single coordinate."""

    reason: str

    def __bool__(self) -> bool:
        return False


def limit_condition(h: LinearFormPoly) -> int | Degenerate:
    """The coordinate ``m`` of the limiting equation ``y_m = 0``."""
    if h.is_zero():
        return Degenerate("the form vanishes identically on the stratum")
    _, f = h.leading()
    if len(f.coeffs) != 1:
        return Degenerate(f"leading form {f.variables()} involves several coordinates")
    if len(h.coords) == 1:
        # P^0: the equation y = 0 has no solution there
        return Degenerate("no room: the stratum maps to a point")
    return f.coeffs[0][0]


def _expected_exponent(i: int, m: int) -> int:
    return m + 1 if m < i else m


def oracle_slide(tree: StableTree, i: int, h: LinearFormPoly | None = None) -> set[StableTree]:
    """Strata of the limit of ``X_T`` cut by the moving hyperplane ``h``.

    ``h`` defaults to the psi hyperplane for ``i``.  The result is every tree
    with one more split that separates ``i`` from both ``a`` and the branch
    named by the limiting equation.
    """
    if not 1 <= i <= tree.n:
        raise BadLeaf(f"leaf {i} not in tree with n={tree.n}")
    default = h is None
    if default:
        h = hyperplane_psi(i, tree.n)
    sigma = PSigma(branches_at(tree, i))
    res = restrict_to_psigma(h, sigma)
    cond = limit_condition(res)
    if isinstance(cond, Degenerate):
        if res.is_zero():
            raise DegenerateRestriction(f"{h} vanishes on the stratum of {tree!r}")
        log.debug("degenerate restriction on %r at %d: %s", tree, i, cond.reason)
        return set()
    block = sigma.partition.blocks[cond]
    if default:
        m = min(block)
        exp = res.leading()[0]
        assert exp == _expected_exponent(i, m), (tree, i, m, exp)

    # every side that contains i, avoids a and the whole m block, and fits
    n = tree.n
    ib = bit(i)
    free = full_mask(n) & ~A_BIT & ~labels_mask(block) & ~ib
    out = set()
    sub = free
    while True:
        side = sub | ib
        if side not in tree.splits and is_valid_side(side, n) and all(
            side & s in (0, side, s) for s in tree.splits
        ):
            out.add(StableTree(n, tree.splits | {side}))
        if sub == 0:
            break
        sub = (sub - 1) & free
    return out


def iterated_limit(k: Iterable[int], flavor: Flavor | str) -> StrataSum:
    """Take the hyperplanes one at a time, replacing each stratum by its limit.

    For omega, leaf ``i`` is first pulled back along the forgetful map
    (inserted everywhere) and the hyperplanes live on the ``i``-th factor.
    """
    flavor = as_flavor(flavor)
    k = as_composition(k)
    n = len(k)

    def step(trees: set[StableTree], i: int, h_for) -> set[StableTree]:
        out: set[StableTree] = set()
        produced = 0
        for t in trees:
            new = oracle_slide(t, i, h_for(t))
            produced += len(new)
            out |= new
        assert produced == len(out), "limit components counted twice"
        return out

    if flavor is Flavor.PSI:
        trees = {StableTree.interior(n)}
        for i in range(1, n + 1):
            for _ in range(k[i - 1]):
                trees = step(trees, i, lambda t: None)
    else:
        trees = {StableTree.interior(0)}
        for i in range(1, n + 1):
            trees = {s for t in trees for s in insert_leaf(t, i)}
            h = hyperplane_omega(i)
            for _ in range(k[i - 1]):
                trees = step(trees, i, lambda t: h)
    return StrataSum.from_trees(n, trees)


# -- Kapranov coordinates ---------------------------------------------------------

INF = None  # the point at infinity of a component


@dataclass(frozen=True)
class StratumPoint:
    """A point of a stratum, given on the component that carries ``leaf``.

    ``positions`` places each special point of that component on the
    projective line.  Keys are labels; a key stands for the whole branch that
    contains it.  ``None`` is the point at infinity.
    """

    tree: StableTree
    leaf: int
    positions: tuple[tuple[int, Fraction | None], ...]

    @classmethod
    def of(cls, tree: StableTree, leaf: int, positions: Mapping[int, Fraction | int | None]) -> StratumPoint:
        items = tuple(sorted((k, None if v is None else Fraction(v)) for k, v in positions.items()))
        pt = cls(tree, leaf, items)
        pt.special_points()
        return pt

    def special_points(self) -> dict[int, Fraction | None]:
        """Map from block (by its index, ``-1`` for ``leaf`` itself) to position."""
        sigma = branches_at(self.tree, self.leaf)
        out: dict[int, Fraction | None] = {}
        for key, pos in self.positions:
            idx = -1 if key == self.leaf else sigma.block_of(key)
            if idx in out:
                raise BadParametrization(f"two positions given for the branch of {label_str(key)}")
            out[idx] = pos
        if len(out) != len(sigma) + 1:
            raise BadParametrization("every special point of the component needs a position")
        vals = list(out.values())
        if len(set(vals)) != len(vals):
            raise BadParametrization("special points must be distinct")
        return out


def _homog(x: Fraction | None) -> tuple[Fraction, Fraction]:
    return (Fraction(1), Fraction(0)) if x is None else (x, Fraction(1))


def _det(p, q) -> Fraction:
    return p[0] * q[1] - p[1] * q[0]


def normalize(point: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Scale so the first nonzero coordinate is 1."""
    for x in point:
        if x:
            return tuple(y / x for y in point)
    raise ValueError("the zero vector is not a projective point")


def kapranov_coords(pt: StratumPoint, i: int) -> tuple[Fraction, ...]:
    """``|psi_i|`` of the point, normalized.

    On the component of ``i`` the coordinate ``z_r`` is
    ``(p_a - p_r) / (p_i - p_r)``, copied along the branches at ``i``.
    """
    tree = pt.tree
    if not 1 <= i <= tree.n:
        raise BadLeaf(f"leaf {i} not in tree with n={tree.n}")
    if tree.leaf_vertex(i) != tree.leaf_vertex(pt.leaf):
        raise BadParametrization(f"leaf {i} is not on the parametrized component")
    spec = pt.special_points()
    home = branches_at(tree, pt.leaf)

    def key(r: int) -> int:
        return -1 if r == pt.leaf else home.block_of(r)

    pa, pi = _homog(spec[key(A)]), _homog(spec[key(i)])
    out = []
    for r in _coords(i, tree.n):
        if key(r) == key(A):
            out.append(Fraction(0))
            continue
        pr = _homog(spec[key(r)])
        out.append(_det(pa, pr) / _det(pi, pr))
    return normalize(out)
