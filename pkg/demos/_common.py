import pathlib

from cssbkit import parse_game

GAMES = pathlib.Path(__file__).resolve().parents[1] / "games"


def load(name):
    return parse_game((GAMES / f"{name}.json").read_text())
