# One family of punishment paths enforces every equilibrium path at once.
#
# Take each player's worst surviving path. Any equilibrium path, and each of
# the punishment paths themselves, must then deter every coalition deviation
# with some member's own punishment.

from cssbkit import (Mode, enumerate_universe, fixed_point, format_path, format_rational,
                     optimal_penal_code, parse_path, verify_family)

from _common import load

pd = load("pd")
final = fixed_point(pd, Mode.COALITIONAL, enumerate_universe(pd, 1, 2)).final
family = optimal_penal_code(pd, Mode.COALITIONAL, final)
for i, x in enumerate(family):
    print(f"punish player {pd.players[i]} with {format_path(pd, x)}")

for x in final:
    cert = verify_family(pd, Mode.COALITIONAL, x, family)
    print(f"{format_path(pd, x):<18} accepted={cert.accepted} ({len(cert.witnesses)} deviations)")

# a family that fails: both players punished by permanent defection
dd = parse_path(pd, "| D,D")
cert = verify_family(pd, Mode.COALITIONAL, parse_path(pd, "| C,C"), (dd, dd))
ce = cert.counterexample
print("rejected: path", ce.k, "coalition", ce.deviation.coalition, "period", ce.deviation.period)
for j, stay, dev in ce.margins:
    print(f"   player {pd.players[j]}: {format_rational(dev)} > {format_rational(stay)}")
