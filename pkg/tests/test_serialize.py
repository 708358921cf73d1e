import json

import pytest

from slidestrata.kappa import kappa_expansion
from slidestrata.serialize import (
    BadJSON,
    dumps,
    sum_from_json,
    sum_text,
    sum_to_dot,
    sum_to_json,
    tournament_from_json,
    tournament_to_json,
    tree_from_json,
    tree_text,
    tree_to_dot,
    tree_to_json,
)
from slidestrata.slides import slide_set_psi
from slidestrata.tournament import lazy_tournament, tour_set
from slidestrata.trees import StableTree, enumerate_stable, from_splits


def test_tree_json_canonical_form():
    t = from_splits(4, [["3", "1"], ["2", "c"]])
    assert tree_to_json(t) == {"n": 4, "splits": [["c", "2"], ["1", "3"]]}
    assert dumps(tree_to_json(t)) == '{"n":4,"splits":[["c","2"],["1","3"]]}\n'


def test_tree_json_round_trip():
    for n in range(0, 4):
        for t in enumerate_stable(n):
            assert tree_from_json(json.loads(dumps(tree_to_json(t)))) == t


def test_bad_tree_json():
    with pytest.raises(BadJSON):
        tree_from_json({"n": 2})
    with pytest.raises(BadJSON):
        tree_from_json({"n": 2, "splits": [["q"]]})


def test_sum_json_round_trip():
    for s in [slide_set_psi((1, 0, 2)), kappa_expansion(3, 1)]:
        text = dumps(sum_to_json(s))
        assert sum_from_json(json.loads(text)) == s
        assert text == dumps(sum_to_json(sum_from_json(json.loads(text))))


def test_sum_json_shape():
    d = sum_to_json(kappa_expansion(2, 1))
    assert d["n"] == 2
    assert [t["mult"] for t in d["terms"]] == [1, 2, 1, 1]


def test_tournament_json_round_trip():
    for t in tour_set((0, 0, 2, 2)):
        r = lazy_tournament(t)
        d = json.loads(dumps(tournament_to_json(r)))
        assert d["composition"] == [0, 0, 2, 2]
        assert len(d["match_log"]) == 4
        assert tournament_from_json(d) == r


def test_text_notation():
    assert tree_text(from_splits(2, [["c", "1", "2"]])) == "D(ab|c12)"
    assert tree_text(from_splits(3, [["c", "1", "2", "3"], ["1", "2", "3"]])) == "(ab)-(c)-(123)"
    # a in the middle of the path
    assert tree_text(from_splits(3, [["c", "1"], ["2", "3"]])) == "(c1)-(ab)-(23)"
    assert tree_text(StableTree.interior(1)) == "(abc1)"
    assert sum_text(kappa_expansion(2, 1)) == "D(ab2|c1) + 2*D(ab|c12) + D(ab1|c2) + D(abc|12)"


def test_text_for_higher_codimension():
    t = next(iter(tour_set((0, 0, 2, 2))))
    assert tree_text(t).startswith("{") and tree_text(t).count(",") == 3


def test_empty_sum_text():
    from slidestrata.slides import slide_set_omega

    assert sum_text(slide_set_omega((2, 1, 0))) == "0"


def test_dot_is_deterministic():
    t = from_splits(3, [["c", "1"], ["2", "3"]])
    a, b = tree_to_dot(t), tree_to_dot(from_splits(3, [["2", "3"], ["1", "c"]]))
    assert a == b
    assert a.startswith("graph T {") and a.count(" -- ") == 6 + 2
    assert 'label="a"' in a
    s = sum_to_dot(slide_set_psi((1, 0, 2)))
    assert s.count("graph T") == 3
