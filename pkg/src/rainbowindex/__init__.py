"""Rainbow index of graphs: exact small-graph solver, polynomial certificates,
closed-form threshold calculators and seeded Monte Carlo sweeps."""

from ._kernels import backend_name, have_compiled
from .bounds import (BASE_A, BASE_LN, bad_set_event_probs, chernoff_tail_bound,
                     p_to_M, rainbow_star_prob, star_failure_bound,
                     threshold_M, threshold_log, threshold_log_base,
                     threshold_log_base_exact, threshold_p)
from .coloring import (EdgeColoring, coloring_text, is_rainbow, random_coloring,
                       rainbow_star_count, read_coloring, write_coloring)
from .errors import FormatError, ParameterError, UncoloredEdgeError
from .graph import (GNM, GNP, GenSpec, Graph, canonical_edge, colex_rank,
                    colex_unrank, common_neighbors, edge_from_index,
                    edge_index, edge_list_text, find_bad_set, gen_gnm, gen_gnp,
                    generate, is_independent, k_subsets_colex, read_edge_list,
                    write_edge_list)
from .solver import (MODE_FULL, MODE_STAR, CertKind, Certificate, ExactResult,
                     check_coloring, exact_certificate, exact_rainbow_index,
                     lower_certificate, serialize_certificate,
                     upper_certificate)
from .sweep import (ALL_CHECKS, CHECK_BAD_SET, CHECK_COMMON_NBRS, CHECK_EXACT,
                    CHECK_STAR_CERT, SweepConfig, SweepRow, config_from_coefs,
                    materialize_coef_grid, run_sweep, sweep_csv,
                    write_sweep_csv)
from .trees import (DisjointTreeFamily, SteinerTree, enumerate_rainbow_s_trees,
                    find_disjoint_family, has_disjoint_rainbow_trees,
                    minimal_terminal_trees)

__version__ = "0.1.0"
