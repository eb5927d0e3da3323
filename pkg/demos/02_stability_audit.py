# Auditing standards of behavior: which paths does a set of paths dominate?
#
# A path is dominated if some coalition can deviate once and then every
# member does strictly better, even when the standard then hands each member
# their worst path in the set.

from cssbkit import (Mode, cdom_member, enumerate_universe, externally_stable_relative,
                     format_path, format_rational, internally_stable, parse_path)

from _common import load

pd = load("pd")
P = lambda s: parse_path(pd, s)


def show(sb, mode):
    res = internally_stable(pd, mode, sb)
    print(f"{mode.value:>9}  {sorted(format_path(pd, x) for x in sb)}  internally stable: {res.stable}")
    for x, w in res.violations:
        gains = ", ".join(f"{format_rational(a)} > {format_rational(b)}" for _, a, b in w.margins)
        print(f"           {format_path(pd, x)} falls to coalition {w.deviation.coalition} "
              f"at t={w.deviation.period}: {gains}")


# permanent defection survives individual deviations but not joint ones
show({P("| D,D")}, Mode.NASH)
show({P("| D,D")}, Mode.COALITIONAL)

# cooperation alone cannot punish a one-shot defection...
show({P("| C,C")}, Mode.COALITIONAL)
# ...but it can once each player's worst path is available
show({P("| C,C"), P("C,D | C,C"), P("D,C | C,C")}, Mode.COALITIONAL)

# external stability is checked against a finite universe of paths
universe = enumerate_universe(pd, 1, 1)
sb = {P("| C,C"), P("C,D | C,C"), P("D,C | C,C"), P("D,D | C,C")}
ext = externally_stable_relative(pd, Mode.COALITIONAL, sb, universe)
print("externally stable relative to universe(1,1):", ext.stable)
w = cdom_member(pd, Mode.COALITIONAL, sb, P("| D,D"))
print("| D,D is dominated via", w.deviation)
