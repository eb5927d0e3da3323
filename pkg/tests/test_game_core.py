import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cssbkit import (Deviation, GameFormatError, all_coalitions, deviation_profiles,
                     make_game, merge, parse_game, parse_rational, serialize_game)

from conftest import GAMES

PD_DOC = {
    "players": ["1", "2"],
    "actions": [["C", "D"], ["C", "D"]],
    "payoffs": {"C,C": ["2", "2"], "C,D": ["0/1", "3/1"], "D,C": ["3", "0"], "D,D": ["1", "1"]},
    "delta": "3/5",
}


def test_parse_pd_field_by_field():
    text = (GAMES / "pd.json").read_text()
    g = parse_game(text)
    raw = json.loads(text)
    assert g.n == 2 and len(g.payoffs) == 4
    assert list(g.players) == raw["players"]
    assert [list(a) for a in g.actions] == raw["actions"]
    assert g.delta == Fraction(3, 5)
    for key, vec in raw["payoffs"].items():
        assert list(g.u(g.parse_profile(key))) == [parse_rational(v) for v in vec]


@pytest.mark.parametrize("delta", ["1/1", "0", "3/2", "-1/2"])
def test_delta_out_of_range(delta):
    doc = dict(PD_DOC, delta=delta)
    with pytest.raises(GameFormatError, match="delta out of range"):
        parse_game(json.dumps(doc))


def test_missing_profile():
    doc = json.loads(json.dumps(PD_DOC))
    del doc["payoffs"]["D,D"]
    with pytest.raises(GameFormatError, match="missing profile D,D"):
        parse_game(json.dumps(doc))


def test_duplicate_action_labels():
    doc = dict(PD_DOC, actions=[["C", "C"], ["C", "D"]])
    with pytest.raises(GameFormatError, match="duplicate action labels"):
        parse_game(json.dumps(doc))


def test_syntax_error_has_position():
    with pytest.raises(GameFormatError, match=r"syntax error at line 2 column \d+"):
        parse_game('{"players": ["1"],\n "actions": [[}')


@pytest.mark.parametrize("bad", ["0.5", "1e3", "1/0", "x", 0.5, None])
def test_rationals_are_exact_or_refused(bad):
    with pytest.raises(GameFormatError):
        parse_rational(bad)


def test_rational_forms():
    assert parse_rational("-7/14") == Fraction(-1, 2)
    assert parse_rational("12") == 12
    assert parse_rational(3) == 3


def test_unknown_profile_key():
    doc = json.loads(json.dumps(PD_DOC))
    doc["payoffs"]["C,X"] = ["0", "0"]
    with pytest.raises(GameFormatError, match="unknown profile"):
        parse_game(json.dumps(doc))


def test_coalitions(pd):
    assert all_coalitions(pd) == [(0,), (1,), (0, 1)]
    solo = make_game([["x"]], lambda p: [1], "1/2")
    assert all_coalitions(solo) == [(0,)]
    three = make_game([["a", "b"]] * 3, lambda p: [0, 0, 0], "1/2")
    assert all_coalitions(three) == [(0,), (1,), (2,), (0, 1), (0, 2), (1, 2), (0, 1, 2)]


def test_deviation_profiles(pd):
    assert deviation_profiles(pd, (0,)) == [(0,), (1,)]
    assert len(deviation_profiles(pd, (0, 1))) == 4
    three = make_game([["a", "b"]] * 3, lambda p: [0, 0, 0], "1/2")
    assert len(deviation_profiles(three, (0, 2))) == 4


def test_merge(pd):
    C, D = 0, 1
    assert merge((C, C), Deviation((0,), 1, (D,))) == (D, C)
    assert merge((C, C), Deviation((0, 1), 1, (D, D))) == (D, D)
    assert merge((C, D), Deviation((1,), 1, (D,))) == (C, D)


sizes = st.lists(st.integers(1, 3), min_size=1, max_size=3)


@given(sizes, st.data())
def test_deviation_profile_count_and_merge_locality(sz, data):
    g = make_game([[str(j) for j in range(s)] for s in sz], lambda p: [0] * len(sz), "1/2")
    for c in all_coalitions(g):
        profs = deviation_profiles(g, c)
        expected = 1
        for i in c:
            expected *= sz[i]
        assert len(profs) == expected == len(set(profs))
    c = data.draw(st.sampled_from(all_coalitions(g)))
    base = tuple(data.draw(st.integers(0, s - 1)) for s in sz)
    zeta = data.draw(st.sampled_from(deviation_profiles(g, c)))
    out = merge(base, Deviation(c, 1, zeta))
    assert all(out[i] == base[i] for i in range(len(sz)) if i not in c)
    assert tuple(out[i] for i in c) == zeta


@settings(max_examples=50)
@given(sizes, st.randoms(use_true_random=False), st.integers(1, 19), st.integers(2, 20))
def test_round_trip(sz, rng, num, den):
    delta = Fraction(num % (den - 1) + 1, den)
    g = make_game([[f"s{j}" for j in range(s)] for s in sz],
                  lambda p: [Fraction(rng.randint(-20, 20), rng.randint(1, 7)) for _ in sz],
                  delta)
    assert parse_game(serialize_game(g)) == g
