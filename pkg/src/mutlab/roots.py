"""Generalized Cartan matrix of an acyclic matrix, bilinear form, reflections.

Root vectors are plain integer tuples in the simple-root basis. The invariant
form is (e_i, e_j) = d_i * A0_ij; the coroot pairing is <b, a^> = 2(a,b)/(a,a)
and must be integral, otherwise the input is not a real root of this lattice.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import ExchangeMatrix, IntMatrix, freeze_matrix
from .errors import NonIntegralPairing, NotAcyclic

RootVector = tuple[int, ...]


@dataclass(frozen=True)
class CartanMatrix:
    """Generalized Cartan matrix with its symmetrizer and Gram matrix."""

    entries: IntMatrix
    symmetrizer: tuple[int, ...]

    def __post_init__(self):
        A = self.entries
        n = len(A)
        if any(A[i][i] != 2 for i in range(n)):
            raise ValueError("Cartan matrix diagonal must be 2")
        if any(A[i][j] > 0 for i in range(n) for j in range(n) if i != j):
            raise ValueError("Cartan matrix off-diagonal must be <= 0")
        G = self.gram
        if any(G[i][j] != G[j][i] for i in range(n) for j in range(n)):
            raise ValueError("D*A0 must be symmetric")

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def gram(self) -> IntMatrix:
        D = self.symmetrizer
        return tuple(
            tuple(D[i] * v for v in row) for i, row in enumerate(self.entries)
        )


def _has_oriented_cycle(B: ExchangeMatrix) -> bool:
    # edge i -> j iff B_ji > 0; iterative 3-color DFS
    n = B.n
    adj = [[j for j in range(n) if B.entries[j][i] > 0] for i in range(n)]
    state = [0] * n  # 0 unseen, 1 on stack, 2 done
    for start in range(n):
        if state[start]:
            continue
        stack = [(start, iter(adj[start]))]
        state[start] = 1
        while stack:
            v, it = stack[-1]
            adv = next(it, None)
            if adv is None:
                state[v] = 2
                stack.pop()
            elif state[adv] == 1:
                return True
            elif state[adv] == 0:
                state[adv] = 1
                stack.append((adv, iter(adj[adv])))
    return False


def cartan_from_acyclic(B0: ExchangeMatrix) -> CartanMatrix:
    """A0_ii = 2, A0_ij = -|B0_ij|; requires the diagram of B0 to be acyclic."""
    if _has_oriented_cycle(B0):
        raise NotAcyclic("diagram has an oriented cycle; no Cartan matrix")
    n = B0.n
    A = freeze_matrix(
        [[2 if i == j else -abs(B0.entries[i][j]) for j in range(n)] for i in range(n)]
    )
    return CartanMatrix(A, B0.symmetrizer)


def bilinear(A0: CartanMatrix, x: RootVector, y: RootVector) -> int:
    """Invariant symmetric form x^T * (D*A0) * y."""
    if len(x) != A0.n or len(y) != A0.n:
        raise ValueError("dimension mismatch")
    G = A0.gram
    return sum(x[i] * G[i][j] * y[j] for i in range(A0.n) for j in range(A0.n))


def pairing(A0: CartanMatrix, beta: RootVector, alpha: RootVector) -> int:
    """Coroot pairing <beta, alpha^> = 2(alpha,beta)/(alpha,alpha), exact."""
    aa = bilinear(A0, alpha, alpha)
    if aa == 0:
        raise NonIntegralPairing(f"(alpha,alpha)=0 for alpha={alpha}")
    num = 2 * bilinear(A0, alpha, beta)
    q, r = divmod(num, aa)
    if r != 0:
        raise NonIntegralPairing(f"2(a,b)={num} not divisible by (a,a)={aa}")
    return q


def reflect(A0: CartanMatrix, alpha: RootVector, beta: RootVector) -> RootVector:
    """s_alpha(beta) = beta - <beta, alpha^> * alpha."""
    p = pairing(A0, beta, alpha)
    return tuple(b - p * a for a, b in zip(alpha, beta))


def real_roots_up_to_height(A0: CartanMatrix, h: int) -> frozenset[RootVector]:
    """Close {+-e_i} under simple reflections, keeping |sum of coords| <= h.

    For infinite types this is a bounded approximation of the real root set;
    within the height bound it is exact because simple reflections change the
    height by steps visited inside the bound.
    """
    if h < 1:
        raise ValueError("height bound must be >= 1")
    n = A0.n
    A = A0.entries
    roots: set[RootVector] = set()
    frontier: list[RootVector] = []
    for i in range(n):
        for s in (1, -1):
            v = tuple(s * int(i == j) for j in range(n))
            roots.add(v)
            frontier.append(v)
    while frontier:
        beta = frontier.pop()
        for i in range(n):
            p = sum(A[i][j] * beta[j] for j in range(n))
            img = tuple(b - p * int(j == i) for j, b in enumerate(beta))
            if abs(sum(img)) <= h and img not in roots:
                roots.add(img)
                frontier.append(img)
    return frozenset(roots)
