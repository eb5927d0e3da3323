"""Cached path values and the per-period deviation scan.

Whether a deviation at period t pays off depends only on the on-path
profile at t and the continuation from t onward. Both sides of every
comparison share the discounted history before t, so comparisons here are
made on values normalized to period t; callers rescale when reporting.
"""

from __future__ import annotations

from .game_core import deviation_profiles
from .paths import Path, payoffs, profile_at, tail


class Values:
    def __init__(self, game):
        self.game = game
        self._u = {}
        self._cont = {}

    def of(self, x: Path) -> tuple:
        v = self._u.get(x)
        if v is None:
            v = self._u[x] = payoffs(self.game, x)
        return v

    def continuations(self, x: Path) -> list:
        """``[(x_t, U(tail(x, t))) for t in 1..p+c]``."""
        v = self._cont.get(x)
        if v is None:
            v = self._cont[x] = [
                (profile_at(x, t), self.of(tail(x, t))) for t in range(1, x.period_classes + 1)
            ]
        return v

    def scan(self, x: Path, coalitions, punish_values, tau_bound=None):
        """Yield ``(C, t, zeta, [(i, stay, deviate) for i in C])`` for every deviation.

        ``stay`` is U_i(tail(x, t)); ``deviate`` is (1-d) u_i(zeta_t) + d U_i(y_i)
        where ``punish_values[i]`` is U_i of the continuation assigned to ``i``.
        """
        game = self.game
        d = game.delta
        conts = self.continuations(x)
        pc = len(conts)
        if tau_bound is None:
            tau_bound = pc
        elif tau_bound < pc:
            raise ValueError(f"tau_bound {tau_bound} below the {pc} period classes of the path")
        profiles = {c: deviation_profiles(game, c) for c in coalitions}
        for c in coalitions:
            for t in range(1, tau_bound + 1):
                on_path, stay = conts[(t - 1) if t <= pc else _fold(t, x)]
                for zeta in profiles[c]:
                    prof = list(on_path)
                    for i, a in zip(c, zeta):
                        prof[i] = a
                    u = game.u(prof)
                    yield c, t, zeta, [
                        (i, stay[i], (1 - d) * u[i] + d * punish_values[i]) for i in c
                    ]


def _fold(t: int, x: Path) -> int:
    p, c = len(x.prefix), len(x.cycle)
    return p + (t - p - 1) % c
