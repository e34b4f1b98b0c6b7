"""Matrix and Y-seed mutation.

Mutation at direction k (0-based internally):

    B'_ij = -B_ij                                if i == k or j == k
    B'_ij = B_ij + [B_ik]_+[B_kj]_+ - [-B_ik]_+[-B_kj]_+   otherwise

    c'_k = -c_k
    c'_i = c_i + [sgn(c_k)*B_ki]_+ * c_k         for i != k

Words are applied left-to-right.
"""

from __future__ import annotations

from typing import Sequence

from .core import CVector, ExchangeMatrix, YSeed, pos_part

MutationWord = Sequence[int]


def _check_index(n: int, k: int) -> None:
    if not 0 <= k < n:
        raise IndexError(f"mutation index {k} out of range for n={n}")


def mutate_matrix(B: ExchangeMatrix, k: int) -> ExchangeMatrix:
    """Mutate B at k; the result keeps the same symmetrizer."""
    _check_index(B.n, k)
    E = B.entries
    rows = []
    for i in range(B.n):
        row = []
        for j in range(B.n):
            if i == k or j == k:
                row.append(-E[i][j])
            else:
                row.append(
                    E[i][j]
                    + pos_part(E[i][k]) * pos_part(E[k][j])
                    - pos_part(-E[i][k]) * pos_part(-E[k][j])
                )
        rows.append(tuple(row))
    return ExchangeMatrix(tuple(rows), B.symmetrizer)


def mutate_seed(seed: YSeed, k: int) -> YSeed:
    """Y-seed mutation at k; raises SignCoherenceViolation on a bad c-vector."""
    _check_index(seed.n, k)
    B = seed.matrix.entries
    ck = seed.cvectors[k]
    new_c = []
    for i, ci in enumerate(seed.cvectors):
        if i == k:
            new_c.append(-ck)
        else:
            t = pos_part(ck.sign * B[k][i])
            new_c.append(CVector(tuple(a + t * b for a, b in zip(ci.coords, ck.coords))))
    return YSeed(tuple(new_c), mutate_matrix(seed.matrix, k))


def apply_word(seed: YSeed, word: MutationWord) -> YSeed:
    """Left-to-right fold of mutate_seed over the word."""
    for k in word:
        seed = mutate_seed(seed, k)
    return seed
