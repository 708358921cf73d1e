"""The nine acceptance criteria, each checked exactly and within its time budget."""

import time

import pytest

from slidestrata.counts import asym_multinomial, compositions, double_factorial_odd, multinomial
from slidestrata.kappa import kappa_expansion, kappa_expansion_via_degrees
from slidestrata.oracle import iterated_limit, oracle_slide
from slidestrata.patterns import avoiders, bell, caterpillars, leaf_labeling, parse_word, reading_word
from slidestrata.properties import run_properties
from slidestrata.slides import admits_labeling, slide_i, slide_set, slide_set_omega, slide_set_psi
from slidestrata.tournament import all_tour_sets, family_schedule, run_schedule, tour_set, tournament_compositions
from slidestrata.trees import all_splits, enumerate_stable, enumerate_trivalent, from_splits, parse_label

pytestmark = pytest.mark.slow


class Budget:
    def __init__(self, seconds):
        self.seconds = seconds

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        if exc[0] is None:
            took = time.perf_counter() - self.start
            assert took < self.seconds, f"took {took:.1f}s, budget {self.seconds}s"


def path(*groups):
    labels = [[parse_label(x) for x in g] for g in groups]
    n = sum(len(g) for g in labels) - 3
    return from_splits(n, [[x for g in labels[j:] for x in g] for j in range(1, len(labels))])


@pytest.mark.criterion(1, "worked examples", 1)
def test_criterion_1_examples():
    with Budget(1):
        psi, omega = slide_set_psi((1, 0, 2)), slide_set_omega((1, 0, 2))
        assert len(psi) == 3 and len(omega) == 2 and omega.trees() <= psi.trees()
        listed = {
            path("ab", "c", "123"),
            path("ab", "c1", "23"),
            path("ab", "c2", "13"),
            path("abc", "1", "23"),
            path("ab1", "c", "23"),
            path("ab2", "c", "13"),
        }
        assert slide_set_psi((0, 0, 2)).trees() == listed
        assert len(tour_set((0, 0, 2, 2))) == 6
        kappa1 = {
            from_splits(2, [["c", "1", "2"]]): 2,
            from_splits(2, [["1", "2"]]): 1,
            from_splits(2, [["c", "2"]]): 1,
            from_splits(2, [["c", "1"]]): 1,
        }
        assert dict(kappa_expansion(2, 1).items()) == kappa1


@pytest.mark.criterion(2, "multinomial identity, n <= 7", 120)
def test_criterion_2_multinomial():
    with Budget(120):
        for n in range(1, 8):
            for k in compositions(n):
                assert len(slide_set_psi(k)) == multinomial(k), k


@pytest.mark.criterion(3, "tournament cross-counts", 300)
def test_criterion_3_tournaments():
    with Budget(300):
        for n in range(1, 7):
            sets = all_tour_sets(n)
            for k in compositions(n):
                assert len(sets.get(k, ())) == len(slide_set_omega(k)), k
            assert sum(len(s) for s in sets.values()) == double_factorial_odd(n)
        count = 0
        for _, comp in tournament_compositions(7):
            assert sum(comp) == 7
            count += 1
        assert count == double_factorial_odd(7) == 135135


@pytest.mark.criterion(4, "labelings equal generated sets, n <= 5", 300)
def test_criterion_4_labelings():
    with Budget(300):
        for n in range(1, 6):
            trees = list(enumerate_trivalent(n))
            for k in compositions(n):
                for flavor in ("psi", "omega"):
                    got = {t for t in trees if admits_labeling(t, k, flavor)}
                    assert got == slide_set(k, flavor).trees(), (k, flavor)


@pytest.mark.criterion(5, "hyperplane oracle equals slides, n <= 5", 600)
def test_criterion_5_oracle():
    with Budget(600):
        for n in range(1, 6):
            for t in enumerate_stable(n):
                for i in range(1, n + 1):
                    assert oracle_slide(t, i) == slide_i(t, i), (t, i)
        for n in range(1, 6):
            for total in range(n + 1):
                for k in compositions(n, total):
                    for flavor in ("psi", "omega"):
                        assert iterated_limit(k, flavor) == slide_set(k, flavor), (k, flavor)


FAMILIES = (
    [(0, 0, 2, 2), (0, 0, 2, 0, 3)]
    + [(0,) * (n - 1) + (n,) for n in range(1, 7)]
    + [(0,) * (n - 2) + (1, n - 1) for n in range(2, 7)]
    + [(0,) * (n - 2) + (n - 1, 1) for n in range(2, 7)]
)


@pytest.mark.criterion(6, "family schedules give Tour(k)", 120)
def test_criterion_6_families():
    with Budget(120):
        for k in FAMILIES:
            assert run_schedule(family_schedule(k)) == tour_set(k), k


@pytest.mark.criterion(7, "kappa counts", 120)
def test_criterion_7_kappa():
    with Budget(120):
        for n in range(1, 8):
            assert kappa_expansion(n, 1).total() == (n - 1) * 2**n + 1
            assert len(all_splits(n)) == 4 * 2**n - n - 4
            assert kappa_expansion(n, 0).total() == n + 1
        for n in range(0, 7):
            for i in range(0, min(n, 3) + 1):
                assert kappa_expansion(n, i) == kappa_expansion_via_degrees(n, i), (n, i)


LISTED_AVOIDERS = "4321 3214 4213 2143 2134 4312 3142 3124 4132 1432 1324 4123 1423 1243 1234".split()


@pytest.mark.criterion(8, "23-1 patterns and caterpillars", 60)
def test_criterion_8_patterns():
    with Budget(60):
        assert {parse_word(w) for w in LISTED_AVOIDERS} == set(avoiders(4))
        for n in range(1, 7):
            cats = set(caterpillars(slide_set_omega((1,) * n)))
            assert len(cats) == bell(n)
            words = avoiders(n)
            assert {reading_word(t) for t in cats} == set(words)
            for w in words:
                assert reading_word(leaf_labeling(w)) == w
        assert bell(4) == 15 and bell(6) == 203


@pytest.mark.criterion(9, "seeded property suite, 10^4 cases", 300)
def test_criterion_9_properties():
    with Budget(300):
        report = run_properties(10_000, ns=(5, 6), seed=2024)
        assert report.cases == 10_000
        assert report.ok, report.failures[:5]
