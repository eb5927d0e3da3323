import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cssbkit import (Deviation, Mode, cdom_member, enumerate_universe, evaluate_deviation,
                     externally_stable_relative, internally_stable, payoff, worst_paths)

import oracles
from direct import direct_cdom

C, D = 0, 1
COAL, NASH = Mode.COALITIONAL, Mode.NASH


def test_worst_paths_singleton(pd, P):
    assert worst_paths(pd, {P("| C,C")}) == (P("| C,C"), P("| C,C"))


def test_worst_paths_pd(pd, P):
    sb = {P("| C,C"), P("C,D | C,C"), P("D,C | C,C")}
    z = worst_paths(pd, sb)
    assert z == (P("C,D | C,C"), P("D,C | C,C"))
    assert payoff(pd, z[0], 0) == payoff(pd, z[1], 1) == Fraction(6, 5)


def test_worst_paths_tie_break(coord):
    ab, ba = coord_path(coord, "| A,B"), coord_path(coord, "| B,A")
    assert payoff(coord, ab, 0) == payoff(coord, ba, 0) == 0
    assert worst_paths(coord, {ba, ab}) == (ab, ab)


def test_worst_paths_empty(pd):
    with pytest.raises(ValueError):
        worst_paths(pd, set())


def test_cdom_pd_coalitional(pd, P):
    sb, x = {P("| C,C")}, P("| D,D")
    w = cdom_member(pd, COAL, sb, x)
    assert w is not None and w.holds
    grand = evaluate_deviation(pd, sb, x, Deviation((0, 1), 1, (C, C)))
    assert grand.holds
    assert grand.margins == ((0, 2, 1), (1, 2, 1))


def test_cdom_pd_nash(pd, P):
    sb, x = {P("| C,C")}, P("| D,D")
    w = cdom_member(pd, NASH, sb, x)
    assert w is not None and len(w.deviation.coalition) == 1
    # a null deviation (restarting the standard tomorrow) already dominates
    null = evaluate_deviation(pd, sb, x, Deviation((0,), 1, (D,)))
    assert null.holds and null.margins == ((0, Fraction(8, 5), 1),)


def test_cdom_strong_nash_constant(coord):
    aa = coord_path(coord, "| A,A")
    for mode in Mode:
        assert cdom_member(coord, mode, {aa}, aa) is None


def coord_path(game, lit):
    from cssbkit import parse_path
    return parse_path(game, lit)


def test_cdom_empty_sb(pd, P):
    assert cdom_member(pd, COAL, set(), P("| D,D")) is None


def test_cdom_tau_bound_precondition(pd, P):
    with pytest.raises(ValueError):
        cdom_member(pd, COAL, {P("| C,C")}, P("C,D;D,D | C,C"), tau_bound=2)


def test_internal_stability_examples(pd, P):
    # one-shot defection followed by a return to cooperation pays 12/5 > 2
    for mode in Mode:
        res = internally_stable(pd, mode, {P("| C,C")})
        assert not res.stable
        assert direct_cdom(pd, mode, {P("| C,C")}, P("| C,C"))
    gain = evaluate_deviation(pd, {P("| C,C")}, P("| C,C"), Deviation((0,), 1, (D,)))
    assert gain.holds and gain.margins == ((0, Fraction(12, 5), 2),)
    assert internally_stable(pd, COAL, {P("| C,C"), P("C,D | C,C"), P("D,C | C,C")}).stable
    res = internally_stable(pd, COAL, {P("| D,D")})
    assert not res.stable and res.violations[0][0] == P("| D,D")
    assert internally_stable(pd, NASH, {P("| D,D")}).stable


def test_external_stability_examples(pd, P):
    u = enumerate_universe(pd, 1, 1)
    assert externally_stable_relative(pd, COAL, u, u).stable
    res = externally_stable_relative(pd, COAL, set(), u)
    assert not res.stable and len(res.violations) == len(u)
    with pytest.raises(ValueError):
        externally_stable_relative(pd, COAL, {P("C,C;D,D | C,C")}, u)


# properties

def _instance(seed, max_sb=4):
    rng = random.Random(seed)
    game = oracles.random_game(rng, max_profiles=8)
    sb = {oracles.random_path(rng, game, 2, 2) for _ in range(rng.randint(1, max_sb))}
    x = oracles.random_path(rng, game, 2, 3)
    return game, sb, x


seeds = st.integers(0, 2**32 - 1)


@settings(max_examples=100, deadline=None)
@given(seeds)
def test_worst_path_characterization_matches_definition(seed):
    game, sb, x = _instance(seed)
    for mode in Mode:
        assert (cdom_member(game, mode, sb, x) is not None) == direct_cdom(game, mode, sb, x)


@settings(max_examples=100, deadline=None)
@given(seeds)
def test_nash_witness_is_coalitional_witness(seed):
    game, sb, x = _instance(seed)
    w = cdom_member(game, NASH, sb, x)
    if w is not None:
        again = evaluate_deviation(game, sb, x, w.deviation)
        assert again.holds
        assert cdom_member(game, COAL, sb, x) is not None


@settings(max_examples=100, deadline=None)
@given(seeds)
def test_tau_reduction(seed):
    game, sb, x = _instance(seed)
    for mode in Mode:
        short = cdom_member(game, mode, sb, x)
        long = cdom_member(game, mode, sb, x, tau_bound=x.period_classes + 50)
        assert (short is None) == (long is None)


@settings(max_examples=50, deadline=None)
@given(seeds)
def test_witness_margins_are_strict(seed):
    game, sb, x = _instance(seed)
    w = cdom_member(game, COAL, sb, x)
    if w is not None:
        assert all(after > before for _, after, before in w.margins)
        for i, _, before in w.margins:
            assert before == payoff(game, x, i)
