# Paths of play, discounted values and splicing in the prisoner's dilemma.
#
# A path is written "prefix | cycle": the prefix is played once, then the
# cycle repeats forever. Values are exact fractions.

from cssbkit import Deviation, format_path, parse_path, payoffs, splice, tail

from _common import load

pd = load("pd")
print("delta =", pd.delta)

# cooperation forever is worth the stage payoff
coop = parse_path(pd, "| C,C")
print(format_path(pd, coop), [str(v) for v in payoffs(pd, coop)])

# one round of (C,D) before cooperating: player 1 loses, player 2 gains
sucker = parse_path(pd, "C,D | C,C")
print(format_path(pd, sucker), [str(v) for v in payoffs(pd, sucker)])  # 6/5, 12/5

# literals are canonicalized: repeated cycles and foldable prefixes vanish
print(format_path(pd, parse_path(pd, "C,C;C,C | C,C;C,C")))   # | C,C
print(format_path(pd, parse_path(pd, "D,D | C,C;D,D")))       # | D,D;C,C

# tails drop the first periods; beyond the prefix they rotate the cycle
alt = parse_path(pd, "| C,C;D,D")
print(format_path(pd, tail(alt, 2)))                          # | D,D;C,C

# splice: follow x, let a coalition deviate at period t, then follow y
grim = parse_path(pd, "| D,D")
dev = Deviation(coalition=(0,), period=2, actions=(1,))       # player 1 defects in period 2
y = splice(coop, dev, grim)
print(format_path(pd, y), [str(v) for v in payoffs(pd, y)])
