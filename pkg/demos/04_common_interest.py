# In a common-interest coordination game, joint deviations leave only the
# Pareto-optimal profile.

from cssbkit import Mode, enumerate_universe, fixed_point, format_path

from _common import load

coord = load("coord")
universe = enumerate_universe(coord, 2, 2)

nash = fixed_point(coord, Mode.NASH, universe)
coal = fixed_point(coord, Mode.COALITIONAL, universe)
print("individual deviations only:", len(nash.final), "paths survive, e.g.")
for x in nash.final[:5]:
    print("   ", format_path(coord, x))
print("coalitional deviations:", [format_path(coord, x) for x in coal.final])
print("set sizes by round:", list(coal.sizes))
