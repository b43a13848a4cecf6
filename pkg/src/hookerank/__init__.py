"""Influential-spreader identification in weighted networks with k-shell
based HookeRank (KSHR), plus baselines, SIR simulation and evaluation metrics."""
from .baselines import weighted_degree_rank, weighted_eigenvector_rank, weighted_kshell_rank, weighted_voterank
from .diffusion import SirOutcome, SirParams, sir_node_strength, sir_simulate
from .graph import (
    EdgeListError,
    IngestOptions,
    WeightedGraph,
    generate_ba_weighted,
    load_edge_list,
    neighbors_within_hops,
    write_edge_list,
)
from .metrics import avg_spreader_distance, influence_curve, kendall_tau
from .shell import ShellIndex, kshell_decompose, shell_index, weighted_kshell
from .spring import RankList, combine_parallel, combine_series, kshr_scores, spring_reduce, top_k

__version__ = "0.1.0"
