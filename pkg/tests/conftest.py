import pathlib
import sys

import pytest

from cssbkit import parse_game, parse_path

GAMES = pathlib.Path(__file__).resolve().parents[1] / "games"
sys.path.insert(0, str(pathlib.Path(__file__).parent))


def load(name):
    return parse_game((GAMES / f"{name}.json").read_text())


@pytest.fixture(scope="session")
def pd():
    return load("pd")


@pytest.fixture(scope="session")
def coord():
    return load("coord")


@pytest.fixture
def P(pd):
    """Path literal parser bound to the prisoner's dilemma."""
    return lambda text: parse_path(pd, text)


ACCEPTANCE = {}


def record(criterion, passed, detail=""):
    ACCEPTANCE[criterion] = (passed, detail)
    print(f"{criterion}: {'PASS' if passed else 'FAIL'} {detail}")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        passed, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"{key}: {'PASS' if passed else 'FAIL'}  {detail}")
