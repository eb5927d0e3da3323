"""Stage games, exact rationals, coalitions and deviations.

Payoffs and the discount factor are :class:`fractions.Fraction` values.
Players and actions are addressed by 0-based index internally; labels are
only used for parsing and display.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rat = Fraction
ActionProfile = tuple  # tuple[int, ...], one action index per player
Coalition = tuple  # tuple[int, ...], sorted player indices

_RATIONAL = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")
_RESERVED = set(",;|#")


class GameFormatError(ValueError):
    """Raised when a game file is malformed."""


def parse_rational(value) -> Fraction:
    """Parse ``"p/q"``, an integer string, or a Python int into a Fraction.

    Floats are refused: they would smuggle rounding into the core.
    """
    if isinstance(value, bool):
        raise GameFormatError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    if not isinstance(value, str):
        raise GameFormatError(f"not a rational: {value!r}")
    m = _RATIONAL.match(value)
    if m is None:
        raise GameFormatError(f"not a rational: {value!r}")
    num, den = m.groups()
    if den is not None and int(den) == 0:
        raise GameFormatError(f"zero denominator: {value!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class StageGame:
    """A finite stage game with a common discount factor.

    ``payoffs`` is dense over the full profile space, in the order given by
    :meth:`profiles` (first player's action varies slowest).
    """

    players: tuple
    actions: tuple
    payoffs: tuple
    delta: Fraction

    def __post_init__(self):
        if len(self.players) < 1:
            raise GameFormatError("a game needs at least one player")
        if len(self.actions) != len(self.players):
            raise GameFormatError("need one action list per player")
        if len(set(self.players)) != len(self.players):
            raise GameFormatError("duplicate player ids")
        for name, acts in zip(self.players, self.actions):
            if len(acts) == 0:
                raise GameFormatError(f"player {name} has no actions")
            if len(set(acts)) != len(acts):
                raise GameFormatError(f"duplicate action labels for player {name}")
        if not 0 < self.delta < 1:
            raise GameFormatError("delta out of range")
        size = 1
        for acts in self.actions:
            size *= len(acts)
        if len(self.payoffs) != size:
            raise GameFormatError("payoff table does not cover every profile")
        n = len(self.players)
        for vec in self.payoffs:
            if len(vec) != n:
                raise GameFormatError("each payoff vector needs one entry per player")
        strides = []
        stride = 1
        for acts in reversed(self.actions):
            strides.append(stride)
            stride *= len(acts)
        object.__setattr__(self, "_strides", tuple(reversed(strides)))

    @property
    def n(self) -> int:
        return len(self.players)

    def profiles(self) -> list:
        """All action profiles, first player slowest."""
        return list(itertools.product(*(range(len(a)) for a in self.actions)))

    def index(self, profile: Sequence[int]) -> int:
        return sum(a * s for a, s in zip(profile, self._strides))

    def u(self, profile: Sequence[int]) -> tuple:
        """Stage payoff vector at ``profile``."""
        return self.payoffs[self.index(profile)]

    def max_abs_payoff(self) -> Fraction:
        return max(abs(v) for vec in self.payoffs for v in vec)

    def profile_label(self, profile: Sequence[int]) -> str:
        return ",".join(self.actions[i][a] for i, a in enumerate(profile))

    def parse_profile(self, text: str) -> ActionProfile:
        labels = [s.strip() for s in text.split(",")]
        if len(labels) != self.n:
            raise GameFormatError(
                f"profile {text.strip()!r} needs {self.n} actions, got {len(labels)}")
        out = []
        for i, lab in enumerate(labels):
            try:
                out.append(self.actions[i].index(lab))
            except ValueError:
                raise GameFormatError(
                    f"unknown action {lab!r} for player {self.players[i]}") from None
        return tuple(out)

    def coalition_label(self, c: Coalition) -> str:
        return "{" + ",".join(self.players[i] for i in c) + "}"


@dataclass(frozen=True)
class Deviation:
    """Coalition ``coalition`` plays ``actions`` (one per member) in period ``period``."""

    coalition: Coalition
    period: int
    actions: tuple

    def __post_init__(self):
        if self.period < 1:
            raise ValueError("deviation period must be >= 1")
        if len(self.coalition) == 0:
            raise ValueError("empty coalition")
        if len(self.actions) != len(self.coalition):
            raise ValueError("one action per coalition member required")


def parse_game(text: str) -> StageGame:
    """Build a :class:`StageGame` from the JSON game-file format."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise GameFormatError(f"syntax error at line {e.lineno} column {e.colno}: {e.msg}") from None
    if not isinstance(doc, dict):
        raise GameFormatError("syntax error: top level must be a JSON object")
    for key in ("players", "actions", "payoffs", "delta"):
        if key not in doc:
            raise GameFormatError(f"missing field {key!r}")

    players = doc["players"]
    actions = doc["actions"]
    if not isinstance(players, list) or not all(isinstance(p, str) for p in players):
        raise GameFormatError("'players' must be a list of strings")
    if not isinstance(actions, list) or not all(
            isinstance(a, list) and all(isinstance(s, str) for s in a) for a in actions):
        raise GameFormatError("'actions' must be a list of lists of strings")
    if len(actions) != len(players):
        raise GameFormatError("need one action list per player")
    for acts in actions:
        for lab in acts:
            if not lab or lab != lab.strip() or _RESERVED & set(lab):
                raise GameFormatError(f"invalid action label {lab!r}")
        if len(set(acts)) != len(acts):
            raise GameFormatError("duplicate action labels")

    raw = doc["payoffs"]
    if not isinstance(raw, dict):
        raise GameFormatError("'payoffs' must be an object")
    n = len(players)
    table = {}
    for key, vec in raw.items():
        labels = tuple(s.strip() for s in key.split(","))
        if not isinstance(vec, list) or len(vec) != n:
            raise GameFormatError(f"payoff for {key!r} needs {n} entries")
        if labels in table:
            raise GameFormatError(f"duplicate payoff entry for {key!r}")
        table[labels] = tuple(parse_rational(v) for v in vec)

    payoffs = []
    for prof in itertools.product(*actions):
        if prof not in table:
            raise GameFormatError(f"missing profile {','.join(prof)}")
        payoffs.append(table.pop(prof))
    if table:
        extra = next(iter(table))
        raise GameFormatError(f"payoff for unknown profile {','.join(extra)}")

    delta = parse_rational(doc["delta"])
    return StageGame(tuple(players), tuple(tuple(a) for a in actions), tuple(payoffs), delta)


def serialize_game(game: StageGame) -> str:
    doc = {
        "players": list(game.players),
        "actions": [list(a) for a in game.actions],
        "payoffs": {
            game.profile_label(p): [format_rational(v) for v in game.u(p)]
            for p in game.profiles()
        },
        "delta": format_rational(game.delta),
    }
    return json.dumps(doc, indent=2, ensure_ascii=False)


def make_game(actions: Iterable[Iterable[str]], payoff_fn, delta, players=None) -> StageGame:
    """Convenience constructor from a payoff callable ``profile -> vector``."""
    actions = tuple(tuple(a) for a in actions)
    if players is None:
        players = tuple(str(i + 1) for i in range(len(actions)))
    profs = itertools.product(*(range(len(a)) for a in actions))
    payoffs = tuple(tuple(Fraction(v) for v in payoff_fn(p)) for p in profs)
    return StageGame(tuple(players), actions, payoffs, Fraction(delta))


def all_coalitions(game: StageGame) -> list:
    """Nonempty player subsets ordered by size, then lexicographically."""
    out = []
    for size in range(1, game.n + 1):
        out.extend(itertools.combinations(range(game.n), size))
    return out


def singletons(game: StageGame) -> list:
    return [(i,) for i in range(game.n)]


def deviation_profiles(game: StageGame, c: Coalition) -> list:
    """Every joint action of the members of ``c``, on-path choices included."""
    if not c:
        raise ValueError("empty coalition")
    return list(itertools.product(*(range(len(game.actions[i])) for i in c)))


def merge(profile: Sequence[int], dev: Deviation) -> ActionProfile:
    out = list(profile)
    for i, a in zip(dev.coalition, dev.actions):
        out[i] = a
    return tuple(out)
