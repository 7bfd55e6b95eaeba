"""Spring-electrical graph embeddings for structural link prediction."""

from ._core import (
    Error,
    Graph,
    GraphKind,
    NumericalError,
    ParameterError,
    ParseError,
    SfdpParams,
    Side,
    SingularityError,
    StructuralError,
    adamic_adar,
    auc,
    common_neighbors,
    directed_to_bipartite,
    embed,
    embed_bipartite,
    energy,
    evaluate,
    forces,
    icosphere,
    is_connected,
    largest_connected_component,
    orient_by_degree,
    preferential_attachment,
    scorers,
    split,
)

__all__ = [
    "Error",
    "Graph",
    "GraphKind",
    "NumericalError",
    "ParameterError",
    "ParseError",
    "SfdpParams",
    "Side",
    "SingularityError",
    "StructuralError",
    "adamic_adar",
    "auc",
    "common_neighbors",
    "directed_to_bipartite",
    "embed",
    "embed_bipartite",
    "energy",
    "evaluate",
    "forces",
    "icosphere",
    "is_connected",
    "largest_connected_component",
    "orient_by_degree",
    "preferential_attachment",
    "scorers",
    "split",
]
