"""Exact domination and bondage numbers of small graphs."""

from .bondage import (
    BondageCertificate,
    bondage_number,
    bondage_number_oracle,
    gamma_after_removal,
    star_bondage_upper_bound,
)
from .domination import (
    DominationCertificate,
    domination_number,
    domination_number_oracle,
    is_dominating,
    two_dominating_set_regular,
)
from .generators import (
    CyclePartition,
    cocktail_party,
    complete_graph,
    cycle,
    disjoint_cycles,
    enumerate_n_minus_3_regular,
    path,
)
from .graph import (
    MAX_VERTICES,
    Graph,
    Graph6Error,
    GraphError,
    closed_neighborhood,
    complement,
    empty_graph,
    from_edge_list,
    from_graph6,
    regularity,
    remove_edges,
    to_graph6,
)

__all__ = [
    "BondageCertificate",
    "CyclePartition",
    "DominationCertificate",
    "Graph",
    "Graph6Error",
    "GraphError",
    "MAX_VERTICES",
    "bondage_number",
    "bondage_number_oracle",
    "closed_neighborhood",
    "cocktail_party",
    "complement",
    "complete_graph",
    "cycle",
    "disjoint_cycles",
    "domination_number",
    "domination_number_oracle",
    "empty_graph",
    "enumerate_n_minus_3_regular",
    "from_edge_list",
    "from_graph6",
    "gamma_after_removal",
    "is_dominating",
    "path",
    "regularity",
    "remove_edges",
    "star_bondage_upper_bound",
    "to_graph6",
    "two_dominating_set_regular",
]
