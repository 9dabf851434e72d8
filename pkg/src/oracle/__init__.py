from .brute import brute_force_co, enumerate_chordless_cycles, is_chain, is_chordless
from .corpus import format_edge_list, read_expected
from .generators import (GluingResult, GluingSpec, cycle_graph, gen_co_graph, gen_perturbed,
                         glue_along_edge, make_rng)
from .lemmas import find_separating_edge, shorten_to_chain, shorten_to_chordless

__all__ = [
    "brute_force_co", "enumerate_chordless_cycles", "is_chain", "is_chordless",
    "format_edge_list", "read_expected", "GluingResult", "GluingSpec", "cycle_graph",
    "gen_co_graph", "gen_perturbed", "glue_along_edge", "make_rng", "find_separating_edge",
    "shorten_to_chain", "shorten_to_chordless",
]
