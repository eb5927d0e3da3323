"""CDOM evaluated straight from its definition: quantify over every path of
the standard instead of each member's worst one."""

import itertools

from cssbkit import Deviation, Mode, all_coalitions, payoff, splice


def direct_cdom(game, mode, sb, x, extra=0):
    if not sb:
        return False
    coalitions = all_coalitions(game)
    if mode is Mode.NASH:
        coalitions = [c for c in coalitions if len(c) == 1]
    base = [payoff(game, x, i) for i in range(game.n)]
    for c in coalitions:
        choices = itertools.product(*(range(len(game.actions[i])) for i in c))
        for zeta in choices:
            for t in range(1, x.period_classes + extra + 1):
                dev = Deviation(c, t, zeta)
                if all(payoff(game, splice(x, dev, y), i) > base[i] for y in sb for i in c):
                    return True
    return False
