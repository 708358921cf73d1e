"""Kappa classes and generalized kappa classes as sums of boundary strata.

``kappa_i`` is the pushforward of ``psi_{n+1}^{i+1}`` along the map that
forgets leaf ``n+1``.  Expanding the psi power by its slide set and pushing
forward term by term, a stratum survives exactly when ``n+1`` sits at a
trivalent vertex; otherwise its image has smaller dimension and it dies.
"""

from __future__ import annotations

from collections.abc import Iterable

from .errors import BadComposition, BadDegree
from .slides import slide_set_psi
from .trees import StableTree, StrataSum, forget_leaf


def _check(n: int, i: int) -> None:
    if n < 0:
        raise BadDegree(f"n must be nonnegative, got {n}")
    if not 0 <= i <= n:
        raise BadDegree(f"kappa_{i} does not fit on n={n}: need 0 <= i <= n")


def _leaf_degree(tree: StableTree, label: int) -> int:
    return tree.degree(tree.leaf_vertex(label))


def kappa_expansion(n: int, i: int) -> StrataSum:
    """``kappa_i`` on ``M_{0,n+3}`` with multiplicities."""
    _check(n, i)
    acc: dict[StableTree, int] = {}
    for tree in slide_set_psi((0,) * n + (i + 1,)):
        if _leaf_degree(tree, n + 1) == 3:
            image = forget_leaf(tree, n + 1)
            acc[image] = acc.get(image, 0) + 1
    return StrataSum(n, acc)


def kappa_expansion_via_degrees(n: int, i: int) -> StrataSum:
    """The same class, one slide earlier, weighting by ``deg(v_{n+1}) - 3``."""
    _check(n, i)
    acc: dict[StableTree, int] = {}
    for tree in slide_set_psi((0,) * n + (i,)):
        w = _leaf_degree(tree, n + 1) - 3
        if w:
            image = forget_leaf(tree, n + 1)
            acc[image] = acc.get(image, 0) + w
    return StrataSum(n, acc)


def kappa_pairs_distinct(n: int, i: int) -> bool:
    """Whether the surviving terms of the weighted expansion have distinct images."""
    _check(n, i)
    images = [
        forget_leaf(t, n + 1)
        for t in slide_set_psi((0,) * n + (i,))
        if _leaf_degree(t, n + 1) > 3
    ]
    return len(images) == len(set(images))


def generalized_kappa(n: int, r: Iterable[int]) -> StrataSum:
    """``R_{n;r}``: push ``psi_{n+1}^{r_1} ... psi_{n+m}^{r_m}`` down to ``n``.

    Leaves ``n+m, ..., n+1`` are forgotten one at a time; a term survives only
    if each is at a trivalent vertex when its turn comes.
    """
    try:
        r = tuple(int(x) for x in r)
    except (TypeError, ValueError):
        raise BadComposition(f"not a sequence of integers: {r!r}") from None
    m = len(r)
    if n < 0 or any(x < 0 for x in r):
        raise BadComposition("n and the parts of r must be nonnegative")
    if sum(r) - m > n:
        raise BadComposition(f"codimension {sum(r) - m} exceeds n={n}")
    acc: dict[StableTree, int] = {}
    for tree in slide_set_psi((0,) * n + r):
        t = tree
        for j in range(n + m, n, -1):
            if _leaf_degree(t, j) != 3:
                break
            t = forget_leaf(t, j)
        else:
            acc[t] = acc.get(t, 0) + 1
    return StrataSum(n, acc)
