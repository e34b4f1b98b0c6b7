"""Brute-force ground truth for admissible companions.

One sign per undirected diagram edge is enough: sharing B's symmetrizer
forces A_ij and A_ji to carry the same sign, so the search space is 2^|E|
rather than 2^(2|E|).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .core import ExchangeMatrix
from .companion import Companion
from .diagram import EdgeCut, diagram_of, is_admissible_cut
from .errors import SearchBudgetExceeded

MAX_EDGES = 30


@dataclass(frozen=True)
class SearchResult:
    companions: tuple[Companion, ...]
    assignments_checked: int

    @property
    def exists(self) -> bool:
        return bool(self.companions)


def _companion_from_signs(
    B: ExchangeMatrix, edges: list[frozenset[int]], signs: tuple[int, ...]
) -> Companion:
    sigma = dict(zip(edges, signs))
    n = B.n
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(2)
            elif B.entries[i][j] == 0:
                row.append(0)
            else:
                row.append(sigma[frozenset((i, j))] * abs(B.entries[i][j]))
        rows.append(tuple(row))
    return Companion(tuple(rows), B.symmetrizer)


def search_admissible_companions(
    B: ExchangeMatrix, short_circuit: bool = False
) -> SearchResult:
    """Try all 2^|E| edge-sign assignments, keeping the admissible ones."""
    G = diagram_of(B)
    edges = sorted(G.undirected_pairs(), key=sorted)
    if len(edges) > MAX_EDGES:
        raise SearchBudgetExceeded(f"{len(edges)} edges exceeds the {MAX_EDGES}-edge cap")
    cycles_cut = lambda signs: EdgeCut(
        frozenset(e for e, s in zip(edges, signs) if s > 0)
    )
    found = []
    checked = 0
    for signs in product((1, -1), repeat=len(edges)):
        checked += 1
        if is_admissible_cut(G, cycles_cut(signs)):
            found.append(_companion_from_signs(B, edges, signs))
            if short_circuit:
                break
    return SearchResult(tuple(found), checked)


def enumerate_admissible_companions(B: ExchangeMatrix) -> list[Companion]:
    """All admissible quasi-Cartan companions of B, deterministically ordered."""
    return list(search_admissible_companions(B).companions)


def exists_admissible_companion(B: ExchangeMatrix) -> bool:
    return search_admissible_companions(B, short_circuit=True).exists


def figure1_matrix() -> ExchangeMatrix:
    """Rank-4 fixture whose diagram has no admissible companion.

    Four vertices, six edges, three of weight 2; validated structurally by
    the test suite before use.
    """
    return ExchangeMatrix.from_entries(
        [
            [0, 1, -1, -1],
            [-1, 0, 1, -1],
            [2, -2, 0, -2],
            [1, 1, 1, 0],
        ]
    )
