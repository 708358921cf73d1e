"""Reference counts: multidegrees, Catalan conditions, double factorials."""

from __future__ import annotations

import functools
import math
from collections.abc import Iterable, Iterator

from .errors import BadComposition
from .slides import as_composition, slide_set_omega


def _full(k: Iterable[int]) -> tuple[int, ...]:
    k = as_composition(k)
    if sum(k) != len(k):
        raise BadComposition(f"{k} does not sum to n={len(k)}")
    return k


def multinomial(k: Iterable[int]) -> int:
    """``n! / (k_1! ... k_n!)``, the psi multidegree."""
    k = _full(k)
    out = math.factorial(len(k))
    for x in k:
        out //= math.factorial(x)
    return out


@functools.lru_cache(maxsize=None)
def _asym(k: tuple[int, ...]) -> int:
    return len(slide_set_omega(k))


def asym_multinomial(k: Iterable[int]) -> int:
    """The omega multidegree, counted by enumerating the omega slide set."""
    return _asym(_full(k))


def _suffix_sums(k: Iterable[int]) -> Iterator[tuple[int, int]]:
    s = 0
    for i, x in enumerate(reversed(tuple(k)), start=1):
        s += x
        yield i, s


def is_catalan(k: Iterable[int]) -> bool:
    """``k_n + ... + k_{n-i+1} >= i`` for every ``i``."""
    return all(s >= i for i, s in _suffix_sums(k))


def is_almost_catalan(k: Iterable[int]) -> bool:
    """``k_n + ... + k_{n-i+1} >= i - 1`` for every ``i``."""
    return all(s >= i - 1 for i, s in _suffix_sums(k))


def double_factorial_odd(n: int) -> int:
    """``(2n-1)!! = (2n-1)(2n-3)...3*1``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return math.prod(range(1, 2 * n, 2))


def compositions(n: int, total: int | None = None) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``total`` (default ``n``) into ``n`` parts, in
    reverse lexicographic order."""
    total = n if total is None else total

    def rec(parts: int, left: int) -> Iterator[tuple[int, ...]]:
        if parts == 0:
            if left == 0:
                yield ()
            return
        for x in range(left, -1, -1):
            for rest in rec(parts - 1, left - x):
                yield (x,) + rest

    yield from rec(n, total)


def boundary_divisor_count(n: int) -> int:
    """Number of boundary divisors ``D(A|B)`` of ``M_{0,n+3}``: ``4 * 2**n - n - 4``."""
    return 4 * 2**n - n - 4
