"""Rigid words, cell trees and zig-zag data for Coxeter diagrams."""

from .errors import (CoxkitError, DiagramParseError, DisconnectedDiagramError, InfiniteCellError,
                     NotComposableError, OrbitCapExceeded)
from .diagram import (INF, CoxeterDiagram, Edge, FinitenessVerdict, SplitData, diagram_from_json,
                      diagram_to_json, finiteness_check, load_diagram, parse_diagram,
                      split_at_labeled_edge, tree_path)
from .words import (OracleStatus, batch_oracle, cell_table, enumerate_small_cell, format_word,
                    induced_bijection, intersection, is_rigid, left_multiply, oracle_unique_reduced,
                    parabolic_core_check, parse_word)
from .laurent import V, LaurentMatrix, LaurentPoly
from .zigzag import (MultiGraph, build_zigzag, cartan_matrix, compose, graded_cartan_matrix,
                     load_multigraph, parse_multigraph)
from .cellrep import (action_matrices, action_matrix, graded_action_matrix, lambda_graph,
                      verify_cell_representation)
from .theta import (BipartiteADE, RootedGraph, ade_catalog, bipartite_ade, build_theta,
                    one_point_union, tree_canonical_form, two_rep_category)

__version__ = "0.1.0"
