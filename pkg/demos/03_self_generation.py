# Computing equilibrium paths by iterating the self-generation operator.
#
# Starting from every path in a finite universe, keep only the paths whose
# every deviation can be deterred by punishing some member with a path that
# is still in the set. The iteration shrinks until it stops; the survivors
# are equilibrium paths relative to that universe.

from cssbkit import Mode, compare_modes, enumerate_universe, fixed_point, format_path

from _common import load

pd = load("pd")
universe = enumerate_universe(pd, max_prefix=1, max_cycle=2)
print(len(universe), "paths in universe(1,2)")

for mode in Mode:
    tr = fixed_point(pd, mode, universe)
    print(f"{mode.value}: sizes {list(tr.sizes)}, fixed after {tr.rounds} rounds")
    for x in tr.final:
        print("   ", format_path(pd, x))

# coalitional deviations can only remove paths
cmp = compare_modes(pd, enumerate_universe(pd, 1, 1))
print("only supported without coalitions:", [format_path(pd, x) for x in cmp.nash_only])
