"""Perfect coalitional equilibrium paths and conservative stable standards of
behavior for discounted repeated games, computed exactly on finite path universes."""

from .game_core import (Deviation, GameFormatError, StageGame, all_coalitions,
                        deviation_profiles, make_game, merge, parse_game,
                        parse_rational, format_rational, serialize_game)
from .paths import (Path, UniverseTooLarge, enumerate_universe, format_path,
                    parse_path, parse_path_list, payoff, payoffs, position_payoff,
                    profile_at, splice, splice_payoff, tail)
from .situations import (DominationWitness, Mode, StabilityResult, cdom_member, evaluate_deviation,
                         coalitions_for, externally_stable_relative,
                         internally_stable, worst_paths)
from .equilibrium import (Certificate, Counterexample, IterationTrace, ModeComparison,
                          NotSelfGenerating, Witness, compare_modes, fixed_point,
                          optimal_penal_code, psi, verify_family)

__version__ = "0.1.0"
