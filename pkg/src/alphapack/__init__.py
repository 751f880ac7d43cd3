"""Approximate parameterized packing: P2-packing, 3-set packing and 3D matching.

The procedures trade accuracy ``alpha`` for running time: given ``k`` they
return a packing of at least ``ceil(alpha k)`` members whenever one of size
``k`` exists.
"""

from .algorithms import (
    PROCEDURES,
    SolveOutcome,
    SolverConfig,
    match,
    match1,
    match2,
    matchrand,
    matchrand1,
    pack,
    pack1,
    pack2,
    setpack,
    setpack1,
    sprand,
    sprand1,
)
from .model import (
    Graph,
    Instance,
    P2Packing,
    SetPacking,
    ThreeSetFamily,
    TradeoffParams,
    TripartiteFamily,
    required_size,
    validate_instance,
)

__all__ = [
    "PROCEDURES",
    "SolveOutcome",
    "SolverConfig",
    "match",
    "match1",
    "match2",
    "matchrand",
    "matchrand1",
    "pack",
    "pack1",
    "pack2",
    "setpack",
    "setpack1",
    "sprand",
    "sprand1",
    "Graph",
    "Instance",
    "P2Packing",
    "SetPacking",
    "ThreeSetFamily",
    "TradeoffParams",
    "TripartiteFamily",
    "required_size",
    "validate_instance",
]

__version__ = "0.1.0"
