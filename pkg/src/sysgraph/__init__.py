"""Edge-colored regular graphs, their structural hierarchy, and isoperimetry.

Submodules
----------
colored_graph   validated graphs, color restrictions, components, quotients
constructions   boolean cubes and iterated clique products
simplicial      chromatic complexes and dual graphs
verifiers       pseudo-cube / dual systolic checks with witnesses
isoperimetry    boundaries, exact and heuristic profiles
bounds          bounding functions and the bootstrap recurrence
spectral        normalized spectra and threshold ranks
formats         pcg-1 / scx-1 JSON, DOT and CSV export
"""

from ._backend import BACKEND
from .bounds import (coefficient_sequence, dual_systolic_bound, envelope,
                     next_coefficient, optimal_epsilon, pseudo_cube_bound)
from .colored_graph import (ColoredGraph, components, contract_except,
                            from_neighbor_table, restrict, validate)
from .constructions import (boolean_cube, build_family, clique_product,
                            clique_size_sequence, replace_with_clique)
from .errors import *  # noqa: F401,F403
from .formats import export, load, to_json
from .isoperimetry import (boundary, exact_profile, expansion,
                           heuristic_min_expansion, heuristic_profile,
                           inner_edges_by_color)
from .simplicial import (ChromaticComplex, cards_complex, cube_complex,
                         detect_empty_squares, dual_complex, dual_graph,
                         star_correspondence, validate_complex)
from .spectral import (copy_rayleigh, full_spectrum, threshold_rank,
                       verify_threshold_theorem)
from .verifiers import (Property, VerificationReport, Witness, replay_witness,
                        verify, verify_dual_systolic, verify_pseudo_cube,
                        verify_weak_pseudo_cube, verify_weakly_dual_systolic)

__version__ = "0.1.0"
