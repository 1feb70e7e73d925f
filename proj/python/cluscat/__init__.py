from _cluscat import (
    exchange_graph,
    ext1_dim,
    mutate,
    orbit_quiver,
    roots,
    universal_seed,
    verify,
)

__all__ = [
    "exchange_graph",
    "ext1_dim",
    "mutate",
    "orbit_quiver",
    "roots",
    "universal_seed",
    "verify",
]
