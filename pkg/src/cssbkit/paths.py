"""Eventually periodic paths of play and their exact discounted values."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .game_core import Deviation, GameFormatError, StageGame, merge

DEFAULT_CAP = 10**7


class UniverseTooLarge(ValueError):
    """Raised when a requested path universe exceeds the size cap."""


def _primitive(cycle: tuple) -> tuple:
    c = len(cycle)
    for d in range(1, c):
        if c % d == 0 and cycle == cycle[:d] * (c // d):
            return cycle[:d]
    return cycle


@dataclass(frozen=True, order=True)
class Path:
    """``prefix`` followed by ``cycle`` repeated forever.

    The stored form is always canonical: the cycle is primitive and no
    trailing prefix entry could be folded into the cycle. Ordering compares
    ``(prefix, cycle)`` as tuples of action indices; it is the tie-break
    order used throughout the package.
    """

    prefix: tuple
    cycle: tuple

    def __post_init__(self):
        prefix = tuple(tuple(p) for p in self.prefix)
        cycle = tuple(tuple(p) for p in self.cycle)
        if not cycle:
            raise ValueError("cycle must be nonempty")
        cycle = _primitive(cycle)
        while prefix and prefix[-1] == cycle[-1]:
            cycle = cycle[-1:] + cycle[:-1]
            prefix = prefix[:-1]
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "cycle", cycle)

    @classmethod
    def constant(cls, profile) -> "Path":
        return cls((), (tuple(profile),))

    @property
    def period_classes(self) -> int:
        """Number of distinct continuations ``tail(x, t)``, i.e. ``p + c``."""
        return len(self.prefix) + len(self.cycle)


Position = tuple  # finite history: tuple of action profiles


def profile_at(x: Path, t: int) -> tuple:
    if t < 1:
        raise ValueError("periods start at 1")
    p = len(x.prefix)
    if t <= p:
        return x.prefix[t - 1]
    return x.cycle[(t - p - 1) % len(x.cycle)]


def tail(x: Path, t: int) -> Path:
    """The continuation ``(x_t, x_{t+1}, ...)``."""
    if t < 1:
        raise ValueError("periods start at 1")
    p = len(x.prefix)
    if t <= p:
        return Path(x.prefix[t - 1:], x.cycle)
    k = (t - p - 1) % len(x.cycle)
    return Path((), x.cycle[k:] + x.cycle[:k])


def splice(x: Path, dev: Deviation, y: Path) -> Path:
    """Follow ``x`` until ``dev.period - 1``, deviate, then follow ``y``."""
    t = dev.period
    head = tuple(profile_at(x, s) for s in range(1, t)) + (merge(profile_at(x, t), dev),)
    return Path(head + y.prefix, y.cycle)


def _discounted_sum(game: StageGame, seq: Sequence, i: int) -> Fraction:
    # sum_{t=1..len} delta^{t-1} u_i(seq_t)
    d = game.delta
    total = Fraction(0)
    w = Fraction(1)
    for prof in seq:
        total += w * game.u(prof)[i]
        w *= d
    return total


def payoff(game: StageGame, x: Path, i: int) -> Fraction:
    """Normalized discounted value of ``x`` for player ``i``, exactly."""
    d = game.delta
    p, c = len(x.prefix), len(x.cycle)
    head = (1 - d) * _discounted_sum(game, x.prefix, i)
    loop = (1 - d) / (1 - d**c) * _discounted_sum(game, x.cycle, i)
    return head + d**p * loop


def payoffs(game: StageGame, x: Path) -> tuple:
    return tuple(payoff(game, x, i) for i in range(game.n))


def history_weight(game: StageGame, g: Position, i: int) -> Fraction:
    """The accumulated part of a position's payoff, ``(1-d) sum d^{t-1} u_i(z_t)``."""
    return (1 - game.delta) * _discounted_sum(game, g, i)


def position_payoff(game: StageGame, g: Position, x: Path, i: int) -> Fraction:
    """Value of continuation ``x`` for player ``i`` when history ``g`` has been played."""
    return history_weight(game, g, i) + game.delta ** len(g) * payoff(game, x, i)


def splice_payoff(game: StageGame, x: Path, dev: Deviation, y: Path, i: int) -> Fraction:
    """``payoff(splice(x, dev, y), i)`` without building the spliced path."""
    t = dev.period
    g = tuple(profile_at(x, s) for s in range(1, t)) + (merge(profile_at(x, t), dev),)
    return position_payoff(game, g, y, i)


def universe_size_bound(game: StageGame, max_prefix: int, max_cycle: int) -> int:
    z = len(game.payoffs)
    return sum(z**p for p in range(max_prefix + 1)) * sum(z**c for c in range(1, max_cycle + 1))


def enumerate_universe(game: StageGame, max_prefix: int = 2, max_cycle: int = 2,
                       cap: int = DEFAULT_CAP) -> list:
    """All canonical paths with ``|prefix| <= max_prefix`` and ``|cycle| <= max_cycle``.

    Paths are generated directly in canonical form (primitive cycle, prefix
    whose last entry differs from the cycle's last entry) and returned sorted.
    """
    if max_prefix < 0 or max_cycle < 1:
        raise ValueError("need max_prefix >= 0 and max_cycle >= 1")
    bound = universe_size_bound(game, max_prefix, max_cycle)
    if bound > cap:
        raise UniverseTooLarge(f"universe of up to {bound} paths exceeds cap {cap}")
    profs = game.profiles()
    out = []
    for c in range(1, max_cycle + 1):
        for cyc in itertools.product(profs, repeat=c):
            if _primitive(cyc) != cyc:
                continue
            for p in range(max_prefix + 1):
                for pre in itertools.product(profs, repeat=p):
                    if pre and pre[-1] == cyc[-1]:
                        continue
                    out.append(Path(pre, cyc))
    out.sort()
    return out


def parse_path(game: StageGame, text: str) -> Path:
    """Parse a literal such as ``"C,D | C,C"`` or ``"| A,A;B,B"``."""
    if text.count("|") != 1:
        raise GameFormatError(f"path literal needs exactly one '|': {text!r}")
    left, right = text.split("|")

    def profiles(part, allow_empty):
        part = part.strip()
        if not part:
            if allow_empty:
                return ()
            raise GameFormatError(f"path literal has an empty cycle: {text!r}")
        return tuple(game.parse_profile(s) for s in part.split(";"))

    return Path(profiles(left, True), profiles(right, False))


def format_path(game: StageGame, x: Path) -> str:
    pre = ";".join(game.profile_label(p) for p in x.prefix)
    cyc = ";".join(game.profile_label(p) for p in x.cycle)
    return f"{pre} | {cyc}" if pre else f"| {cyc}"


def parse_path_list(game: StageGame, text: str) -> list:
    """Newline-separated path literals; ``#`` starts a comment."""
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(parse_path(game, line))
    return out
