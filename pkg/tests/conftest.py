import random
from math import gcd

import pytest

from mutlab import ExchangeMatrix, initial_seed

A2 = [[0, 1], [-1, 0]]
A3 = [[0, 1, 0], [-1, 0, 1], [0, -1, 0]]
B2 = [[0, 2], [-1, 0]]
G2 = [[0, 3], [-1, 0]]
TRIANGLE = [[0, -1, 1], [1, 0, -1], [-1, 1, 0]]
# acyclic rank-4 path with one weight-2 edge (between vertices 2 and 3)
RANK4 = [[0, 1, 0, 0], [-1, 0, 2, 0], [0, -1, 0, 1], [0, 0, -1, 0]]

ACYCLIC_FIXTURES = {"A2": A2, "A3": A3, "B2": B2, "G2": G2, "rank4": RANK4}


@pytest.fixture
def a3_matrix():
    return ExchangeMatrix.from_entries(A3)


@pytest.fixture
def a3_seed(a3_matrix):
    return initial_seed(a3_matrix)


def random_skew_symmetrizable(rng: random.Random, n: int, max_mult: int = 1):
    """Random skew-symmetrizable integer matrix with entries bounded by 3.

    Picks a symmetrizer d in {1,2,3}^n and per pair a multiplier t, setting
    B_ij = t*d_j/g and B_ji = -t*d_i/g with g = gcd(d_i, d_j), which makes
    d_i*B_ij = -d_j*B_ji hold by construction.
    """
    d = [rng.choice((1, 2, 3)) for _ in range(n)]
    B = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            t = rng.randint(-max_mult, max_mult)
            g = gcd(d[i], d[j])
            if abs(t) * max(d[i], d[j]) // g > 3:
                t = 0
            B[i][j] = t * d[j] // g
            B[j][i] = -t * d[i] // g
    return ExchangeMatrix.from_entries(B)
