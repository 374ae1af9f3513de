"""Overlapping correlation clustering by editing graphs into disjoint 2-clubs."""
from .cced import grow_two_club, run_2cced, score_vertices
from .ccedvs import (best_prefix, build_walk_graph, cluster_cost, process_cluster,
                     rank_neighborhood, run_2ccedvs, transition_distribution)
from .graph import (Clustering, DeleteEdge, Graph, SplitVertex, closed_two_neighborhood,
                    is_two_club, parse_edge_list, replay, square_coefficient)
from .metrics import (QualityReport, edit_cost, inter_cluster_distance, intra_cluster_distance,
                      overlap_f_score, quality_report)
from .oracle import OracleBudget, OracleRefusal, exact_2cced, exact_2ccedvs, verify_solution
from .synth import SynthParams, generate_planted

__version__ = "0.1.0"
