import random

from hypothesis import given, settings
from hypothesis import strategies as st

from slidestrata.counts import multinomial
from slidestrata.properties import (
    check_common_tree,
    check_disjoint,
    check_equinumerous,
    check_slide,
    random_composition,
    random_stable,
    random_trivalent,
    run_properties,
)
from slidestrata.serialize import tree_from_json, tree_to_json
from slidestrata.slides import slide_set_psi
from slidestrata.trees import StableTree, from_splits, mask_labels

seeds = st.integers(min_value=0, max_value=2**32 - 1)
sizes = st.integers(min_value=1, max_value=6)


@st.composite
def stable_trees(draw):
    return random_stable(draw(sizes), random.Random(draw(seeds)))


@st.composite
def full_compositions(draw, max_n=5):
    n = draw(st.integers(min_value=1, max_value=max_n))
    return random_composition(n, random.Random(draw(seeds)))


@given(stable_trees(), st.data())
def test_slide_counts_and_contraction(tree, data):
    i = data.draw(st.integers(min_value=1, max_value=tree.n))
    assert check_slide(tree, i) is None


@given(stable_trees(), st.data())
def test_contraction_neighbours_have_disjoint_slides(tree, data):
    i = data.draw(st.integers(min_value=1, max_value=tree.n))
    keep = data.draw(st.sets(st.sampled_from(sorted(tree.splits)))) if tree.splits else set()
    assert check_disjoint(tree, StableTree(tree.n, keep), i) is None


@settings(max_examples=40, deadline=None)
@given(full_compositions(), st.randoms(use_true_random=False))
def test_equinumerous_under_permutation(k, rnd):
    perm = list(range(len(k)))
    rnd.shuffle(perm)
    assert check_equinumerous(k, tuple(perm)) is None
    assert len(slide_set_psi(k)) == multinomial(k)


@given(full_compositions(max_n=6))
def test_common_tree(k):
    assert check_common_tree(k) is None


@given(stable_trees())
def test_tree_round_trips(tree):
    assert from_splits(tree.n, [mask_labels(s) for s in tree.splits]) == tree
    assert tree_from_json(tree_to_json(tree)) == tree


@given(sizes, seeds)
def test_random_trivalent_is_trivalent(n, seed):
    t = random_trivalent(n, random.Random(seed))
    assert t.is_trivalent() and t.extra_valency == 0


def test_seeded_runs_repeat():
    a = run_properties(200, seed=11)
    b = run_properties(200, seed=11)
    assert a.ok and a.by_kind == b.by_kind and a.cases == 200
