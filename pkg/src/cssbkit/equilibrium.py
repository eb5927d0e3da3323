"""Self-generation, fixed-point iteration and penal-code certificates."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from ._values import Values
from .game_core import Deviation, StageGame
from .paths import Path, history_weight, profile_at
from .situations import Mode, coalitions_for, worst_paths


class NotSelfGenerating(ValueError):
    def __init__(self, path, msg="path set is not self-generating"):
        super().__init__(f"{msg}: {path}")
        self.path = path


def _enforceable(values, coalitions, floor, x) -> bool:
    # every deviation must leave some member weakly worse off
    for _, _, _, rows in values.scan(x, coalitions, floor):
        if not any(stay >= dev for _, stay, dev in rows):
            return False
    return True


def psi(game: StageGame, mode: Mode, Y: Iterable[Path], universe: Iterable[Path],
        values: Optional[Values] = None) -> frozenset:
    """Paths of ``universe`` enforceable with punishments drawn from ``Y``.

    Only each deterring player's own continuation enters the condition, so it
    suffices to punish player ``i`` with a path of ``Y`` minimizing ``U_i``.
    """
    Y = frozenset(Y)
    universe = frozenset(universe)
    if not Y <= universe:
        raise ValueError("Y must be a subset of the universe")
    if not Y:
        return frozenset()
    values = values or Values(game)
    worst = worst_paths(game, Y, values)
    floor = [values.of(worst[i])[i] for i in range(game.n)]
    coalitions = coalitions_for(game, mode)
    return frozenset(x for x in universe if _enforceable(values, coalitions, floor, x))


@dataclass(frozen=True)
class IterationTrace:
    """``sizes[k] = |X^k|``; ``rounds`` is the first k with ``X^{k+1} = X^k``."""

    sizes: tuple
    rounds: int
    final: tuple


def fixed_point(game: StageGame, mode: Mode, universe: Iterable[Path]) -> IterationTrace:
    """Iterate ``X^{k+1} = psi(X^k)`` from the whole universe until it stops shrinking."""
    current = frozenset(universe)
    if not current:
        raise ValueError("empty universe")
    values = Values(game)
    sizes = [len(current)]
    while True:
        nxt = psi(game, mode, current, current, values)
        if nxt == current:
            break
        current = nxt
        sizes.append(len(current))
    return IterationTrace(tuple(sizes), len(sizes) - 1, tuple(sorted(current)))


@dataclass(frozen=True)
class Witness:
    """Member ``player`` of the deviating coalition is deterred when the
    path indexed ``k`` (0 = base, ``i + 1`` = punishment of player ``i``) is
    followed: ``stay >= deviate``, both unnormalized path values."""

    k: int
    deviation: Deviation
    player: int
    stay: object
    deviate: object


@dataclass(frozen=True)
class Counterexample:
    k: int
    deviation: Deviation
    margins: tuple  # (player, stay, deviate) per member, every deviate > stay


@dataclass(frozen=True)
class Certificate:
    base: Path
    family: tuple
    accepted: bool
    witnesses: tuple = ()
    counterexample: Optional[Counterexample] = None

    def __bool__(self):
        return self.accepted


def _unnormalize(game, x, t, i, v):
    hist = tuple(profile_at(x, s) for s in range(1, t))
    return history_weight(game, hist, i) + game.delta ** (t - 1) * v


def verify_family(game: StageGame, mode: Mode, x0: Path, family,
                  values: Optional[Values] = None) -> Certificate:
    """Check that ``x0`` with punishments ``family[i]`` is an equilibrium path.

    For the base path and every punishment path, every coalition deviation at
    every period must leave some member ``j`` no better off when play then
    switches to ``family[j]``. Returns an accepted certificate listing the
    deterring member for each deviation, or a rejected one carrying the first
    deviation that no member resists.
    """
    family = tuple(family)
    if len(family) != game.n:
        raise ValueError(f"need one punishment path per player ({game.n}), got {len(family)}")
    values = values or Values(game)
    floor = [values.of(family[i])[i] for i in range(game.n)]
    coalitions = coalitions_for(game, mode)
    witnesses = []
    for k, xk in enumerate((x0,) + family):
        for c, t, zeta, rows in values.scan(xk, coalitions, floor):
            dev = Deviation(c, t, zeta)
            for j, stay, deviate in rows:
                if stay >= deviate:
                    witnesses.append(Witness(k, dev, j, _unnormalize(game, xk, t, j, stay),
                                             _unnormalize(game, xk, t, j, deviate)))
                    break
            else:
                margins = tuple((j, _unnormalize(game, xk, t, j, stay),
                                 _unnormalize(game, xk, t, j, deviate))
                                for j, stay, deviate in rows)
                return Certificate(x0, family, False, tuple(witnesses),
                                   Counterexample(k, dev, margins))
    return Certificate(x0, family, True, tuple(witnesses))


def optimal_penal_code(game: StageGame, mode: Mode, pcep: Iterable[Path]) -> tuple:
    """Per-player worst paths of a self-generating set.

    The returned family enforces every member of ``pcep`` at once.
    """
    pcep = frozenset(pcep)
    if not pcep:
        raise ValueError("empty path set")
    values = Values(game)
    kept = psi(game, mode, pcep, pcep, values)
    if kept != pcep:
        raise NotSelfGenerating(min(pcep - kept))
    return worst_paths(game, pcep, values)


@dataclass(frozen=True)
class ModeComparison:
    nash: IterationTrace
    coalitional: IterationTrace
    nash_only: tuple = field(default=())

    @property
    def contained(self) -> bool:
        return set(self.coalitional.final) <= set(self.nash.final)


def compare_modes(game: StageGame, universe: Iterable[Path]) -> ModeComparison:
    """Fixed points under individual and coalitional deviations on one universe."""
    universe = list(universe)
    nash = fixed_point(game, Mode.NASH, universe)
    coal = fixed_point(game, Mode.COALITIONAL, universe)
    out = ModeComparison(nash, coal, tuple(sorted(set(nash.final) - set(coal.final))))
    if not out.contained:
        raise AssertionError("coalitional fixed point escapes the Nash fixed point")
    return out
