"""Conservative dominion and stability of nondiscriminating standards of behavior.

A nondiscriminating standard of behavior assigns the same set of paths to
every position, so it is represented here by a single collection of
:class:`~cssbkit.paths.Path` objects. Domination is only ever evaluated at
the initial (empty-history) position; for a nondiscriminating standard the
payoff comparison at any other position differs by a positive affine map.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional

from ._values import Values
from .game_core import Deviation, StageGame, all_coalitions, singletons
from .paths import Path, history_weight, profile_at


class Mode(enum.Enum):
    NASH = "nash"
    COALITIONAL = "coalition"


def coalitions_for(game: StageGame, mode: Mode) -> list:
    """Coalitions allowed to deviate: singletons only in Nash mode."""
    if Mode(mode) is Mode.NASH:
        return singletons(game)
    return all_coalitions(game)


@dataclass(frozen=True)
class DominationWitness:
    """A deviation after which every coalition member strictly gains.

    ``margins`` holds ``(player, u_i(H)(z(i)), U_i(x))`` per member, where
    ``H`` is the position reached by the deviation and ``z(i)`` the worst
    path for ``i`` in the standard.
    """

    deviation: Deviation
    margins: tuple

    @property
    def holds(self) -> bool:
        return all(after > before for _, after, before in self.margins)


class StabilityResult(NamedTuple):
    stable: bool
    violations: list


def worst_paths(game: StageGame, sb: Iterable[Path], values: Optional[Values] = None) -> tuple:
    """For each player, a path in ``sb`` minimizing that player's value.

    Ties go to the smallest path in :class:`Path` order.
    """
    paths = sorted(set(sb))
    if not paths:
        raise ValueError("empty standard of behavior")
    values = values or Values(game)
    return tuple(min(paths, key=lambda x: values.of(x)[i]) for i in range(game.n))


def _rescale(game, x, t, i, normalized):
    # undo the normalization to period t by adding back the discounted history
    hist = tuple(profile_at(x, s) for s in range(1, t))
    return history_weight(game, hist, i) + game.delta ** (t - 1) * normalized


def _witness(game, x, c, t, zeta, rows) -> DominationWitness:
    margins = tuple((i, _rescale(game, x, t, i, dev), _rescale(game, x, t, i, stay))
                    for i, stay, dev in rows)
    return DominationWitness(Deviation(c, t, zeta), margins)


def cdom_member(game: StageGame, mode: Mode, sb: Iterable[Path], x: Path,
                tau_bound: Optional[int] = None,
                values: Optional[Values] = None) -> Optional[DominationWitness]:
    """Return a witness if ``x`` is conservatively dominated relative to ``sb``.

    Uses the worst-path reduction: ``x`` is dominated iff some coalition can
    deviate so that every member strictly prefers the deviation followed by
    that member's worst path in ``sb``. Periods are scanned up to
    ``tau_bound`` (default: the number of distinct continuations of ``x``).
    An empty ``sb`` dominates nothing.
    """
    sb = set(sb)
    if not sb:
        return None
    values = values or Values(game)
    return _dominate(game, coalitions_for(game, mode), _floor(game, sb, values), x,
                     tau_bound, values)


def _floor(game, sb, values):
    worst = worst_paths(game, sb, values)
    return [values.of(worst[i])[i] for i in range(game.n)]


def _dominate(game, coalitions, floor, x, tau_bound, values):
    for c, t, zeta, rows in values.scan(x, coalitions, floor, tau_bound):
        if all(dev > stay for _, stay, dev in rows):
            return _witness(game, x, c, t, zeta, rows)
    return None


def evaluate_deviation(game: StageGame, sb: Iterable[Path], x: Path,
                       dev: Deviation) -> DominationWitness:
    """Margins of one specific deviation against the worst paths of ``sb``.

    The deviation dominates ``x`` iff the returned witness ``holds``.
    """
    values = Values(game)
    floor = _floor(game, set(sb), values)
    t = dev.period
    for c, tt, zeta, rows in values.scan(x, [dev.coalition], floor, max(t, x.period_classes)):
        if tt == t and zeta == tuple(dev.actions):
            return _witness(game, x, c, t, zeta, rows)
    raise ValueError(f"deviation {dev} is not available in this game")


def internally_stable(game: StageGame, mode: Mode, sb: Iterable[Path],
                      tau_bound: Optional[int] = None) -> StabilityResult:
    """No path of ``sb`` is dominated relative to ``sb``."""
    sb = sorted(set(sb))
    if not sb:
        return StabilityResult(True, [])
    values = Values(game)
    coalitions = coalitions_for(game, mode)
    floor = _floor(game, sb, values)
    violations = []
    for x in sb:
        w = _dominate(game, coalitions, floor, x, tau_bound, values)
        if w is not None:
            violations.append((x, w))
    return StabilityResult(not violations, violations)


def externally_stable_relative(game: StageGame, mode: Mode, sb: Iterable[Path],
                               universe: Iterable[Path],
                               tau_bound: Optional[int] = None) -> StabilityResult:
    """Every path of ``universe`` outside ``sb`` is dominated relative to ``sb``.

    Violations are the undominated outside paths, paired with ``None``.
    """
    sb = set(sb)
    universe = set(universe)
    if not sb <= universe:
        raise ValueError("standard of behavior is not contained in the universe")
    outside = sorted(universe - sb)
    if not sb:
        return StabilityResult(not outside, [(x, None) for x in outside])
    values = Values(game)
    coalitions = coalitions_for(game, mode)
    floor = _floor(game, sb, values)
    violations = [(x, None) for x in outside
                  if _dominate(game, coalitions, floor, x, tau_bound, values) is None]
    return StabilityResult(not violations, violations)
