"""Exact-integer exchange matrices, c-vectors and Y-seeds.

All values are immutable after construction; every arithmetic operation is
exact (Python integers). Internal indices are 0-based; file formats and CLI
output are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import NotSkewSymmetrizable, SignCoherenceViolation

IntMatrix = tuple[tuple[int, ...], ...]


def sgn(x: int) -> int:
    """Sign of an integer with sgn(0) = 0."""
    return (x > 0) - (x < 0)


def pos_part(x: int) -> int:
    """[x]_+ = max(x, 0)."""
    return x if x > 0 else 0


def freeze_matrix(rows) -> IntMatrix:
    """Copy a matrix-like into a tuple of tuples of ints, checking squareness."""
    out = tuple(tuple(int(v) for v in row) for row in rows)
    n = len(out)
    if any(len(row) != n for row in out):
        raise ValueError("matrix must be square")
    return out


def find_symmetrizer(entries) -> tuple[int, ...]:
    """Componentwise-minimal positive integer diagonal D with D*B skew-symmetric.

    Ratios d_j/d_i are propagated along a spanning tree of the nonzero
    pattern of each connected component, denominators are cleared, and each
    component is divided by its gcd, making the result unique.

    Raises NotSkewSymmetrizable when the zero pattern is asymmetric, signs do
    not oppose, the diagonal is nonzero, or the ratio constraints are
    inconsistent around a cycle.
    """
    B = freeze_matrix(entries)
    n = len(B)
    for i in range(n):
        if B[i][i] != 0:
            raise NotSkewSymmetrizable(f"nonzero diagonal entry at ({i + 1},{i + 1})")
        for j in range(i + 1, n):
            if (B[i][j] == 0) != (B[j][i] == 0):
                raise NotSkewSymmetrizable(f"asymmetric zero pattern at ({i + 1},{j + 1})")
            if B[i][j] != 0 and sgn(B[i][j]) == sgn(B[j][i]):
                raise NotSkewSymmetrizable(f"signs do not oppose at ({i + 1},{j + 1})")

    ratio: list[Fraction | None] = [None] * n
    for root in range(n):
        if ratio[root] is not None:
            continue
        ratio[root] = Fraction(1)
        component = [root]
        stack = [root]
        while stack:
            i = stack.pop()
            for j in range(n):
                if B[i][j] == 0:
                    continue
                # d_i*B_ij = -d_j*B_ji  =>  d_j = d_i * (-B_ij/B_ji)
                r = ratio[i] * Fraction(-B[i][j], B[j][i])
                if ratio[j] is None:
                    ratio[j] = r
                    component.append(j)
                    stack.append(j)
                elif ratio[j] != r:
                    raise NotSkewSymmetrizable(
                        f"inconsistent symmetrizer ratio around a cycle through {j + 1}"
                    )
        # clear denominators, then normalize the component gcd to 1
        lcm = 1
        for i in component:
            lcm = lcm * ratio[i].denominator // gcd(lcm, ratio[i].denominator)
        vals = [int(ratio[i] * lcm) for i in component]
        g = 0
        for v in vals:
            g = gcd(g, v)
        for i, v in zip(component, vals):
            ratio[i] = Fraction(v // g)
    return tuple(int(r) for r in ratio)


@dataclass(frozen=True)
class ExchangeMatrix:
    """Skew-symmetrizable integer matrix with its minimal positive symmetrizer."""

    entries: IntMatrix
    symmetrizer: tuple[int, ...]

    def __post_init__(self):
        B, D = self.entries, self.symmetrizer
        n = len(B)
        if len(D) != n or any(d <= 0 for d in D):
            raise NotSkewSymmetrizable("symmetrizer must be n positive integers")
        for i in range(n):
            for j in range(n):
                if D[i] * B[i][j] != -D[j] * B[j][i]:
                    raise NotSkewSymmetrizable(f"D*B is not skew-symmetric at ({i + 1},{j + 1})")

    @classmethod
    def from_entries(cls, rows) -> "ExchangeMatrix":
        entries = freeze_matrix(rows)
        return cls(entries, find_symmetrizer(entries))

    @property
    def n(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class CVector:
    """Sign-coherent nonzero integer vector."""

    coords: tuple[int, ...]

    def __post_init__(self):
        c = self.coords
        if not c or all(v == 0 for v in c):
            raise SignCoherenceViolation("c-vector must be nonzero")
        if any(v > 0 for v in c) and any(v < 0 for v in c):
            raise SignCoherenceViolation(f"mixed signs in c-vector {c}")

    @property
    def sign(self) -> int:
        return 1 if any(v > 0 for v in self.coords) else -1

    def __neg__(self) -> "CVector":
        return CVector(tuple(-v for v in self.coords))


@dataclass(frozen=True)
class YSeed:
    """Pair (c-tuple, B) attached to a vertex of the mutation tree."""

    cvectors: tuple[CVector, ...]
    matrix: ExchangeMatrix

    def __post_init__(self):
        if len(self.cvectors) != self.matrix.n:
            raise ValueError("c-tuple length must match matrix dimension")
        if any(len(c.coords) != self.matrix.n for c in self.cvectors):
            raise ValueError("c-vector dimension must match matrix dimension")

    @property
    def n(self) -> int:
        return self.matrix.n


def standard_basis(n: int) -> tuple[CVector, ...]:
    return tuple(CVector(tuple(int(i == j) for j in range(n))) for i in range(n))


def initial_seed(B: ExchangeMatrix) -> YSeed:
    """Initial Y-seed: the standard basis paired with B."""
    return YSeed(standard_basis(B.n), B)
