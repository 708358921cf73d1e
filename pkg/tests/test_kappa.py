import pytest

from slidestrata.errors import BadComposition, BadDegree
from slidestrata.kappa import (
    generalized_kappa,
    kappa_expansion,
    kappa_expansion_via_degrees,
    kappa_pairs_distinct,
)
from slidestrata.trees import all_splits, from_splits


def test_kappa1_on_five_points():
    want = {
        from_splits(2, [["c", "1", "2"]]): 2,
        from_splits(2, [["1", "2"]]): 1,
        from_splits(2, [["c", "2"]]): 1,
        from_splits(2, [["c", "1"]]): 1,
    }
    assert dict(kappa_expansion(2, 1).items()) == want


@pytest.mark.parametrize("n", range(1, 7))
def test_kappa1_total_multiplicity(n):
    assert kappa_expansion(n, 1).total() == (n - 1) * 2**n + 1


@pytest.mark.parametrize("n", range(0, 7))
def test_kappa0_is_a_multiple_of_the_fundamental_class(n):
    k0 = kappa_expansion(n, 0)
    assert len(k0) == 1 and k0.total() == n + 1
    (t,) = k0
    assert t.codim == 0


def test_kappa1_outgrows_the_divisors():
    for n in range(1, 7):
        k1 = kappa_expansion(n, 1)
        divisors = set(all_splits(n))
        assert len(divisors) == 4 * 2**n - n - 4
        assert all(len(t.splits) == 1 and t.splits <= divisors for t in k1)
        # more terms than divisors forces some multiplicity above 1
        if k1.total() > len(divisors):
            assert not k1.is_multiplicity_free()
    assert kappa_expansion(6, 1).total() > len(all_splits(6))


@pytest.mark.parametrize("n", range(0, 6))
def test_two_routes_agree(n):
    for i in range(0, min(n, 3) + 1):
        assert kappa_expansion(n, i) == kappa_expansion_via_degrees(n, i)
        assert kappa_pairs_distinct(n, i)


def test_codimension():
    for t in kappa_expansion(4, 2):
        assert t.codim == 2


def test_top_kappa_is_points():
    for n in range(1, 5):
        assert all(t.is_trivalent() for t in kappa_expansion(n, n))


def test_generalized_kappa_one_point_is_kappa():
    for n in range(0, 5):
        for i in range(0, n + 1):
            assert generalized_kappa(n, (i + 1,)) == kappa_expansion(n, i)


def test_generalized_kappa_product_rule():
    # forgetting two points: R_{n;(2,1)} = kappa_1 kappa_0 + kappa_1 = (n + 2) kappa_1
    for n in range(1, 5):
        k1 = kappa_expansion(n, 1)
        got = generalized_kappa(n, (2, 1))
        assert dict(got.items()) == {t: (n + 2) * m for t, m in k1.items()}


def test_generalized_kappa_r1():
    for n in range(0, 5):
        assert generalized_kappa(n, (1,)).total() == n + 1


@pytest.mark.parametrize("n,i", [(-1, 0), (2, 3), (2, -1)])
def test_bad_degrees(n, i):
    with pytest.raises(BadDegree):
        kappa_expansion(n, i)


def test_bad_generalized_input():
    with pytest.raises(BadComposition):
        generalized_kappa(1, (3, 3))
    with pytest.raises(BadComposition):
        generalized_kappa(2, ("x",))
