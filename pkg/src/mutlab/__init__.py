"""Exact-arithmetic Y-seed mutation with quasi-Cartan companion tracking."""

from .core import CVector, ExchangeMatrix, YSeed, find_symmetrizer, initial_seed
from .companion import (
    Companion,
    companion_mutation,
    explicit_companion,
    pairing_companion,
    sign_change,
    sign_equivalent,
)
from .diagram import (
    Cycle,
    Diagram,
    EdgeCut,
    check_companion_conditions,
    diagram_of,
    enumerate_cycles,
    is_acyclic,
    is_admissible_cut,
    positive_edges,
    to_dot,
)
from .explorer import bfs_explore, random_walks, verify_step
from .mutation import apply_word, mutate_matrix, mutate_seed
from .oracle import (
    enumerate_admissible_companions,
    exists_admissible_companion,
    figure1_matrix,
)
from .roots import (
    CartanMatrix,
    bilinear,
    cartan_from_acyclic,
    pairing,
    real_roots_up_to_height,
    reflect,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
