import pytest

from slidestrata import tournament
from slidestrata.counts import asym_multinomial, compositions, double_factorial_odd
from slidestrata.errors import BadComposition, MalformedSchedule, NotTrivalent, UnsupportedShape
from slidestrata.slides import PriorityOrder, common_tree
from slidestrata.tournament import (
    GenSlide,
    Insert,
    Match,
    SlideSchedule,
    ab_paired,
    all_tour_sets,
    extend_schedule,
    family_schedule,
    format_wins,
    lazy_tournament,
    omega_schedule,
    run_schedule,
    tour_set,
)
from slidestrata.trees import B, C, StableTree, enumerate_trivalent, from_splits


def test_hand_computed_tournament_without_laziness():
    t = from_splits(3, [["c", "1", "2", "3"], ["1", "2", "3"], ["2", "3"]])
    r = lazy_tournament(t)
    assert r.composition() == (0, 0, 3)
    assert r.match_log == (Match(2, 3, 3), Match(1, 3, 3), Match(C, 3, 3))


def test_hand_computed_tournament_with_laziness():
    # (ab)-(1)-(c)-(23): 3 beats c but the edge goes to c, since 1 > c waits
    t = from_splits(3, [["1", "c", "2", "3"], ["c", "2", "3"], ["2", "3"]])
    r = lazy_tournament(t)
    assert r.match_log == (Match(2, 3, 3), Match(C, 3, C), Match(C, 1, 1))
    assert r.composition() == (1, 0, 2)
    assert format_wins(r) == "1:1 3:2"


def test_every_edge_labeled():
    for t in enumerate_trivalent(4, ab_paired=True):
        r = lazy_tournament(t)
        assert set(r.edge_labels) == set(t.edges())
        assert len(r.match_log) == 4


def test_tournament_needs_trivalent():
    with pytest.raises(NotTrivalent):
        lazy_tournament(StableTree.interior(2))


def test_tie_break_option_is_inert_when_no_ties():
    for t in enumerate_trivalent(4, ab_paired=True):
        assert lazy_tournament(t).composition() == lazy_tournament(t, tie_break="larger").composition()


def test_tour_0022_has_six_points():
    pts = tour_set((0, 0, 2, 2))
    assert len(pts) == 6
    assert all(ab_paired(t) and t.is_trivalent() for t in pts)


@pytest.mark.parametrize("n", range(1, 7))
def test_cross_counts(n):
    sets = all_tour_sets(n)
    assert sum(len(s) for s in sets.values()) == double_factorial_odd(n)
    for k in compositions(n):
        assert len(sets.get(k, ())) == asym_multinomial(k)


def test_no_ties_seen():
    before = tournament.tie_count
    all_tour_sets(5)
    assert tournament.tie_count == before


def test_common_tree_wins_everything():
    for n in range(1, 6):
        assert tour_set((0,) * (n - 1) + (n,)).trees() == {common_tree(n)}


def test_tour_set_needs_full_composition():
    with pytest.raises(BadComposition):
        tour_set((0, 1, 0))


def test_omega_schedule_reproduces_slide_sets():
    from slidestrata.slides import slide_set_omega

    for n in range(1, 5):
        for k in compositions(n):
            assert run_schedule(omega_schedule(k)) == slide_set_omega(k)


@pytest.mark.parametrize(
    "k",
    [(0, 0, 2, 2)]
    + [(0,) * (n - 1) + (n,) for n in range(1, 7)]
    + [(0,) * (n - 2) + (1, n - 1) for n in range(2, 7)]
    + [(0,) * (n - 2) + (n - 1, 1) for n in range(2, 7)]
    + [(0, 0, 2, 0, 3)],
)
def test_family_schedules(k):
    s = family_schedule(k)
    assert s.composition() == k
    assert run_schedule(s) == tour_set(k)


def test_pruning_is_invisible_in_schedules():
    for k in [(0, 0, 2, 2), (0, 0, 1, 3), (0, 0, 3, 1)]:
        s = family_schedule(k)
        assert run_schedule(s) == run_schedule(s, prune=False)


def test_extension_shape():
    s = extend_schedule(family_schedule((0, 0, 2, 2)))
    assert s.composition() == (0, 0, 2, 0, 3)


def test_unsupported_shape():
    with pytest.raises(UnsupportedShape):
        family_schedule((1, 1, 1))


def test_malformed_schedules():
    with pytest.raises(MalformedSchedule):
        SlideSchedule((Insert(2),))
    with pytest.raises(MalformedSchedule):
        SlideSchedule((Insert(1), Insert(2), GenSlide(1, PriorityOrder((B,)))))
    with pytest.raises(MalformedSchedule):
        SlideSchedule((Insert(1), GenSlide(1, PriorityOrder((2,)))))
    with pytest.raises(MalformedSchedule):
        run_schedule(omega_schedule((1, 0)), n=3)
