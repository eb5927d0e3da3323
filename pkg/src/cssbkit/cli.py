"""Command-line front end.

    cssbkit solve     --game pd.json [--mode coalition] [--prefix 2] [--cycle 2]
    cssbkit verify    --game pd.json --path "| C,C" --punish "C,D | C,C" --punish "D,C | C,C"
    cssbkit stability --game pd.json --sb sb.txt
    cssbkit compare   --game pd.json

Exit codes: 0 success/positive verdict, 1 negative verdict, 2 usage error,
3 unreadable or malformed input, 4 universe cap exceeded, 5 standard of
behavior outside the universe.
"""

from __future__ import annotations

import argparse
import decimal
import json
import os
import sys
from dataclasses import asdict, dataclass, field
from typing import Optional

from .equilibrium import compare_modes, fixed_point, optimal_penal_code, verify_family
from .game_core import GameFormatError, format_rational, parse_game
from .paths import (DEFAULT_CAP, UniverseTooLarge, enumerate_universe, format_path,
                    parse_path, parse_path_list, payoffs)
from .situations import Mode, externally_stable_relative, internally_stable

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_CAP = 4
EXIT_SB = 5

CAP_ENV = "CSSBKIT_CAP"


class OutsideUniverse(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    game: str
    mode: str = "coalition"
    prefix: int = 2
    cycle: int = 2
    sb: Optional[str] = None
    path: Optional[str] = None
    punish: list = field(default_factory=list)
    format: str = "text"
    cap: Optional[int] = None

    def __post_init__(self):
        if self.prefix < 0 or self.cycle < 1:
            raise ValueError("need --prefix >= 0 and --cycle >= 1")
        if self.cap is not None and self.cap < 1:
            raise ValueError("--cap must be >= 1")

    def resolved_cap(self) -> int:
        if self.cap is not None:
            return self.cap
        env = os.environ.get(CAP_ENV)
        return int(env) if env else DEFAULT_CAP


@dataclass
class RunReport:
    data: dict
    lines: list
    exit_code: int = EXIT_OK

    def render(self, fmt: str) -> str:
        if fmt == "machine":
            return json.dumps(self.data, indent=2)
        return "\n".join(self.lines)


def approx(q) -> str:
    """Decimal rendering for display only, 20 significant digits."""
    with decimal.localcontext() as ctx:
        ctx.prec = 20
        return f"{decimal.Decimal(q.numerator) / decimal.Decimal(q.denominator)}~"


def _rat(q) -> dict:
    return {"exact": format_rational(q), "approx": approx(q)}


def _load_game(cfg):
    with open(cfg.game, encoding="utf-8") as fh:
        return parse_game(fh.read())


def _universe(game, cfg):
    return enumerate_universe(game, cfg.prefix, cfg.cycle, cap=cfg.resolved_cap())


def _sorted_lits(game, paths):
    return sorted(format_path(game, x) for x in paths)


def _path_rows(game, paths):
    rows = []
    for lit in _sorted_lits(game, paths):
        x = parse_path(game, lit)
        rows.append({"path": lit, "payoffs": [_rat(v) for v in payoffs(game, x)]})
    return rows


def _dev_dict(game, dev):
    return {
        "coalition": [game.players[i] for i in dev.coalition],
        "period": dev.period,
        "actions": [game.actions[i][a] for i, a in zip(dev.coalition, dev.actions)],
    }


def _dev_text(game, dev):
    acts = ",".join(game.actions[i][a] for i, a in zip(dev.coalition, dev.actions))
    return f"C={game.coalition_label(dev.coalition)} t={dev.period} zeta=({acts})"


def _certificate_dict(game, cert):
    out = {
        "base": format_path(game, cert.base),
        "family": {game.players[i]: format_path(game, x) for i, x in enumerate(cert.family)},
        "accepted": cert.accepted,
        "witnesses": [
            {"k": w.k, "deviation": _dev_dict(game, w.deviation),
             "player": game.players[w.player],
             "stay": format_rational(w.stay), "deviate": format_rational(w.deviate)}
            for w in cert.witnesses
        ],
        "counterexample": None,
    }
    ce = cert.counterexample
    if ce is not None:
        out["counterexample"] = {
            "k": ce.k, "deviation": _dev_dict(game, ce.deviation),
            "margins": [{"player": game.players[j], "stay": format_rational(s),
                         "deviate": format_rational(d)} for j, s, d in ce.margins],
        }
    return out


def _echo(cfg):
    d = asdict(cfg)
    d["cap"] = cfg.resolved_cap()
    return d


def cmd_solve(cfg: RunConfig) -> RunReport:
    game = _load_game(cfg)
    mode = Mode(cfg.mode)
    universe = _universe(game, cfg)
    trace = fixed_point(game, mode, universe)
    label = f"PCEP restricted to universe({cfg.prefix},{cfg.cycle})"
    data = {
        "command": "solve", "config": _echo(cfg), "label": label,
        "universe_size": len(universe),
        "trace": {"sizes": list(trace.sizes), "rounds": trace.rounds},
        "paths": _path_rows(game, trace.final),
        "penal_code": None, "certificates": [],
    }
    lines = [f"{label}, mode={mode.value}",
             f"universe size {len(universe)}; set sizes per round {list(trace.sizes)}; "
             f"fixed point after {trace.rounds} rounds",
             f"{len(trace.final)} path(s):"]
    for row in data["paths"]:
        vals = ", ".join(f"{v['exact']} ({v['approx']})" for v in row["payoffs"])
        lines.append(f"  {row['path']:<24} U = [{vals}]")
    code = EXIT_OK
    if trace.final:
        family = optimal_penal_code(game, mode, trace.final)
        data["penal_code"] = {game.players[i]: format_path(game, x) for i, x in enumerate(family)}
        lines.append("optimal penal code:")
        for i, x in enumerate(family):
            lines.append(f"  player {game.players[i]}: {format_path(game, x)}")
        lines.append("certificates:")
        for lit in _sorted_lits(game, trace.final):
            cert = verify_family(game, mode, parse_path(game, lit), family)
            data["certificates"].append(_certificate_dict(game, cert))
            verdict = "ACCEPT" if cert.accepted else "REJECT"
            lines.append(f"  {lit:<24} {verdict} ({len(cert.witnesses)} deviations deterred)")
            if not cert.accepted:
                code = EXIT_NEGATIVE
    else:
        lines.append("fixed point is empty: no penal code")
    return RunReport(data, lines, code)


def cmd_verify(cfg: RunConfig) -> RunReport:
    game = _load_game(cfg)
    mode = Mode(cfg.mode)
    if cfg.path is None:
        raise GameFormatError("verify needs --path")
    x0 = parse_path(game, cfg.path)
    if len(cfg.punish) != game.n:
        raise GameFormatError(f"verify needs {game.n} --punish paths, got {len(cfg.punish)}")
    family = tuple(parse_path(game, lit) for lit in cfg.punish)
    cert = verify_family(game, mode, x0, family)
    data = {"command": "verify", "config": _echo(cfg), "certificate": _certificate_dict(game, cert)}
    lines = [f"base {format_path(game, x0)}; mode={mode.value}"]
    for i, x in enumerate(family):
        lines.append(f"  punish {game.players[i]}: {format_path(game, x)}")
    if cert.accepted:
        lines.append("ACCEPT")
        for w in cert.witnesses:
            lines.append(f"  k={w.k} {_dev_text(game, w.deviation)}: player "
                         f"{game.players[w.player]} deterred, "
                         f"{format_rational(w.stay)} >= {format_rational(w.deviate)}")
        return RunReport(data, lines, EXIT_OK)
    ce = cert.counterexample
    lines.append(f"REJECT at k={ce.k} {_dev_text(game, ce.deviation)}")
    for j, s, d in ce.margins:
        lines.append(f"  player {game.players[j]}: {format_rational(d)} > {format_rational(s)}")
    return RunReport(data, lines, EXIT_NEGATIVE)


def cmd_stability(cfg: RunConfig) -> RunReport:
    game = _load_game(cfg)
    mode = Mode(cfg.mode)
    if cfg.sb is None:
        raise GameFormatError("stability needs --sb")
    with open(cfg.sb, encoding="utf-8") as fh:
        sb = set(parse_path_list(game, fh.read()))
    universe = _universe(game, cfg)
    outside = sb - set(universe)
    if outside:
        raise OutsideUniverse(
            f"{format_path(game, min(outside))} is not in universe({cfg.prefix},{cfg.cycle})")
    internal = internally_stable(game, mode, sb)
    external = externally_stable_relative(game, mode, sb, universe)
    data = {
        "command": "stability", "config": _echo(cfg),
        "sb": _sorted_lits(game, sb),
        "internal": {"stable": internal.stable, "violations": [
            {"path": format_path(game, x), "deviation": _dev_dict(game, w.deviation),
             "margins": [{"player": game.players[i], "after": format_rational(a),
                          "before": format_rational(b)} for i, a, b in w.margins]}
            for x, w in internal.violations]},
        "external_relative": {"stable": external.stable,
                              "undominated": [format_path(game, x) for x, _ in external.violations]},
    }
    lines = [f"standard of behavior with {len(sb)} path(s); mode={mode.value}",
             f"internal stability: {str(internal.stable).lower()}"]
    for x, w in internal.violations:
        gains = ", ".join(f"{game.players[i]}: {format_rational(a)} > {format_rational(b)}"
                          for i, a, b in w.margins)
        lines.append(f"  {format_path(game, x)} dominated by {_dev_text(game, w.deviation)} [{gains}]")
    lines.append(f"external stability relative to universe({cfg.prefix},{cfg.cycle}): "
                 f"{str(external.stable).lower()}")
    for x, _ in external.violations:
        lines.append(f"  undominated outside path {format_path(game, x)}")
    ok = internal.stable and external.stable
    return RunReport(data, lines, EXIT_OK if ok else EXIT_NEGATIVE)


def cmd_compare(cfg: RunConfig) -> RunReport:
    game = _load_game(cfg)
    universe = _universe(game, cfg)
    cmp = compare_modes(game, universe)
    data = {
        "command": "compare", "config": _echo(cfg),
        "nash": {"sizes": list(cmp.nash.sizes), "paths": _sorted_lits(game, cmp.nash.final)},
        "coalition": {"sizes": list(cmp.coalitional.sizes),
                      "paths": _sorted_lits(game, cmp.coalitional.final)},
        "nash_only": _sorted_lits(game, cmp.nash_only),
        "contained": cmp.contained,
    }
    lines = [f"universe({cfg.prefix},{cfg.cycle}) with {len(universe)} paths",
             f"nash fixed point: {len(cmp.nash.final)} path(s)",
             f"coalition fixed point: {len(cmp.coalitional.final)} path(s)",
             f"coalition subset of nash: {str(cmp.contained).lower()}",
             "only under nash:"]
    lines += [f"  {lit}" for lit in data["nash_only"]] or ["  (none)"]
    return RunReport(data, lines, EXIT_OK)


COMMANDS = {"solve": cmd_solve, "verify": cmd_verify,
            "stability": cmd_stability, "compare": cmd_compare}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cssbkit", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--game", required=True)
        p.add_argument("--mode", choices=["nash", "coalition"], default="coalition")
        p.add_argument("--prefix", type=int, default=2)
        p.add_argument("--cycle", type=int, default=2)
        p.add_argument("--format", choices=["text", "machine"], default="text")
        p.add_argument("--cap", type=int, default=None)
        if name == "stability":
            p.add_argument("--sb", required=True)
        if name == "verify":
            p.add_argument("--path", required=True)
            p.add_argument("--punish", action="append", default=[])
    return parser


def run(argv=None):
    """Parse ``argv``, run the command, and return ``(exit_code, output)``."""
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(**vars(args))
    except ValueError as e:
        return EXIT_USAGE, f"error: {e}"
    try:
        report = COMMANDS[cfg.command](cfg)
    except UniverseTooLarge as e:
        return EXIT_CAP, f"error: {e}"
    except (GameFormatError, OSError) as e:
        return EXIT_PARSE, f"error: {e}"
    except OutsideUniverse as e:
        return EXIT_SB, f"error: {e}"
    return report.exit_code, report.render(cfg.format)


def main(argv=None):
    code, out = run(argv)
    print(out, file=sys.stdout if code in (EXIT_OK, EXIT_NEGATIVE) else sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
