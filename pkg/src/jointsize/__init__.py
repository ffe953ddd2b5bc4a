"""Exact clique counts, jointsizes and Turán-graph algebra."""

from ._backend import kernels as _kernels
from .cliques import (
    CliqueVector,
    JointWitness,
    clique_vector,
    count_cliques,
    edge_clique_count,
    joint_size,
)
from .generators import (
    RandomSpec,
    all_labeled_graphs,
    complete_multipartite,
    gnm,
    gnp,
    random_graph,
    turan,
    turan_part_sizes,
    turan_plus_edge,
)
from .graph import (
    Graph,
    GraphError,
    build_graph,
    common_neighborhood,
    complement,
    complete_graph,
    complete_multipartite_decomposition,
    induced_subgraph,
    is_turan,
)

BACKEND = _kernels.NAME

__version__ = "0.1.0"
