from .core import CoreResult, strip_core
from .density import SizeError, check_density, max_closure, max_density
from .expansion import check_expansion, expansion_slack
from .matching import hopcroft_karp, is_orientable
from .model import (
    Hypergraph,
    Orientation,
    read_hypergraph,
    sample_hypergraph,
    write_hypergraph,
)
from .neighborhood import (
    distance_to_free,
    free_distances,
    h_neighborhood_size,
    neighborhood_bound,
)

__all__ = [
    "CoreResult",
    "Hypergraph",
    "Orientation",
    "SizeError",
    "check_density",
    "check_expansion",
    "distance_to_free",
    "expansion_slack",
    "free_distances",
    "h_neighborhood_size",
    "hopcroft_karp",
    "is_orientable",
    "max_closure",
    "max_density",
    "neighborhood_bound",
    "read_hypergraph",
    "sample_hypergraph",
    "strip_core",
    "write_hypergraph",
]
