"""Poly-free decompositions of right-angled Artin groups.

The group ``AΓ`` of a finite simplicial graph ``Γ`` has one generator per
vertex, with two generators commuting exactly when their vertices are
adjacent.  This package computes shortlex normal forms in ``AΓ``, the exact
clique and chromatic numbers that bound its poly-free length, the towers
``AΓ = F ⋊ AΓ_L`` obtained by peeling colour classes, and the free-by-free
splittings available when an independent set meets every cycle twice.
"""

from .breakable import (ActionTable, BreakingCertificate, EulerReport,
                        FgFreeVerdict, Length2Splitting, action_table,
                        breaks_cycles_twice, certify_breaking_set,
                        classify_poly_fg_free, euler_from_counts,
                        euler_from_ranks, euler_report, find_breaking_set,
                        independent_sets, is_breaking_set, verify_splitting)
from .checks import verify_graph
from .errors import (BreakingSetRefused, GraphParseError, InputError,
                     PolyfreeError, ResourceError)
from .freegroup import (FreeWord, IndexResult, KernelSymbol,
                        SubgroupPresentation, cyclic_kernel, fold,
                        free_reduce, schreier_check, subgroup_index)
from .graph import (Coloring, Graph, Shape, chromatic_number, classify_shape,
                    clique_number, coloring_with, connected_components,
                    format_graph, has_triangle, induced_subgraph, is_forest,
                    is_independent, is_proper, max_clique, parse_graph,
                    read_graph, simple_cycles)
from .semidirect import CheckResult, SemidirectElement
from .tower import (ColorClassSplitting, PflBounds, TowerDescription,
                    build_tower, pfl_bounds)
from .words import (Letter, TraceWord, brute_force_equal, initial_letters,
                    invert, multiply, normalize, parse_word, word)

__version__ = "0.1.0"
