"""Mutation-tree traversal with full per-step verification.

Every mutation step from an acyclic initial seed is checked against six
independent predicates: sign coherence, agreement of the two companion
constructions, the eps-mutation rule with eps = sgn(c_k), the admissible-cut
conditions, the reflection identity for c-vectors, and preservation of the
root lengths (c_i, c_i) = 2*d_i. Failures are recorded, never raised: a
single bug should surface as many localized report entries.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

from .core import ExchangeMatrix, YSeed, initial_seed
from .companion import companion_mutation, explicit_companion, pairing_companion
from .diagram import check_companion_conditions, diagram_of, is_acyclic
from .errors import FrontierBudgetExceeded, MutlabError, NotAcyclic
from .mutation import mutate_seed
from .roots import CartanMatrix, bilinear, cartan_from_acyclic, reflect

CHECK_NAMES = (
    "sign_coherence",
    "companion_match",
    "companion_mutation",
    "admissible_cut",
    "reflection",
    "length",
)


@dataclass(frozen=True)
class StepRecord:
    k: int
    checks: dict[str, bool]
    detail: dict[str, str] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


@dataclass(frozen=True)
class WalkReport:
    word: tuple[int, ...]
    records: tuple[StepRecord, ...]

    @property
    def verdict(self) -> bool:
        return all(r.passed for r in self.records)


def verify_step(seed: YSeed, k: int, A0: CartanMatrix) -> tuple[YSeed, StepRecord]:
    """Mutate at k and run all six checks; returns the new seed + record."""
    checks = {name: False for name in CHECK_NAMES}
    detail: dict[str, str] = {}

    try:
        new_seed = mutate_seed(seed, k)
        checks["sign_coherence"] = True
    except MutlabError as exc:
        detail["sign_coherence"] = str(exc)
        return seed, StepRecord(k, checks, detail)

    try:
        A_new = pairing_companion(new_seed, A0)
        checks["companion_match"] = explicit_companion(new_seed).entries == A_new.entries
        A_old = pairing_companion(seed, A0)
        eps = seed.cvectors[k].sign
        mutated = companion_mutation(A_old, seed.matrix, k, eps)
        checks["companion_mutation"] = mutated.entries == A_new.entries
        report = check_companion_conditions(new_seed.matrix, A_new)
        checks["admissible_cut"] = report.all_ok
        if not report.all_ok:
            detail["admissible_cut"] = f"witness {report.witness}"
    except MutlabError as exc:
        detail["companion"] = str(exc)

    ck = seed.cvectors[k].coords
    ok = True
    for i, (ci, ci2) in enumerate(zip(seed.cvectors, new_seed.cvectors)):
        if i == k:
            ok &= ci2.coords == tuple(-v for v in ci.coords)
        elif ci2.coords != ci.coords:
            ok &= ci2.coords == reflect(A0, ck, ci.coords)
    checks["reflection"] = ok

    D = seed.matrix.symmetrizer
    checks["length"] = all(
        bilinear(A0, c.coords, c.coords) == 2 * D[i]
        for i, c in enumerate(new_seed.cvectors)
    )
    return new_seed, StepRecord(k, checks, detail)


def random_word(n: int, depth: int, rng: random.Random) -> list[int]:
    """Uniform word avoiding immediate repetition of the previous letter."""
    word: list[int] = []
    for _ in range(depth):
        choices = [k for k in range(n) if not word or k != word[-1]]
        word.append(rng.choice(choices))
    return word


def random_walks(
    B0: ExchangeMatrix, depth: int, trials: int, rng_seed: int
) -> list[WalkReport]:
    """Fully verified random walks from the initial seed of B0."""
    if not is_acyclic(diagram_of(B0)):
        raise NotAcyclic("random walks require an acyclic initial matrix")
    if depth < 1:
        raise ValueError("depth must be >= 1")
    A0 = cartan_from_acyclic(B0)
    start = initial_seed(B0)
    reports = []
    for t in range(trials):
        rng = random.Random(f"{rng_seed}:{t}")
        word = random_word(B0.n, depth, rng)
        seed = start
        records = []
        for k in word:
            seed, rec = verify_step(seed, k, A0)
            records.append(rec)
        reports.append(WalkReport(tuple(word), tuple(records)))
    return reports


@dataclass(frozen=True)
class ExploreResult:
    seeds: frozenset[YSeed]
    level_counts: tuple[int, ...]  # new distinct seeds per level
    cvector_counts: tuple[tuple[tuple[int, ...], int], ...]

    @property
    def cvectors(self) -> set[tuple[int, ...]]:
        return {c for c, _ in self.cvector_counts}


def count_up_to_permutation(seeds, limit: int = 8) -> int:
    """Distinct seeds modulo simultaneous index permutation.

    Brute force over all n! permutations, so only for n <= limit.
    """
    from itertools import permutations

    classes: set[tuple] = set()
    for seed in seeds:
        n = seed.n
        if n > limit:
            raise ValueError(f"n={n} exceeds the brute-force permutation limit {limit}")
        best = None
        for perm in permutations(range(n)):
            B = tuple(
                tuple(seed.matrix.entries[perm[i]][perm[j]] for j in range(n))
                for i in range(n)
            )
            c = tuple(
                tuple(seed.cvectors[perm[i]].coords[perm[j]] for j in range(n))
                for i in range(n)
            )
            key = (c, B)
            if best is None or key < best:
                best = key
        classes.add(best)
    return len(classes)


def bfs_explore(
    B0: ExchangeMatrix, depth: int, budget: int = 10**5
) -> ExploreResult:
    """Breadth-first ball of the mutation tree, deduplicated by exact seed
    equality, with per-level counts and the multiset of c-vectors seen."""
    if depth < 0:
        raise ValueError("depth must be >= 0")
    start = initial_seed(B0)
    seen: set[YSeed] = {start}
    frontier = [start]
    levels = [1]
    counts: Counter[tuple[int, ...]] = Counter(c.coords for c in start.cvectors)
    for _ in range(depth):
        nxt = []
        for seed in frontier:
            for k in range(B0.n):
                child = mutate_seed(seed, k)
                if child not in seen:
                    seen.add(child)
                    if len(seen) > budget:
                        raise FrontierBudgetExceeded(f"more than {budget} seeds")
                    counts.update(c.coords for c in child.cvectors)
                    nxt.append(child)
        levels.append(len(nxt))
        frontier = nxt
        if not frontier:
            break
    return ExploreResult(
        frozenset(seen),
        tuple(levels),
        tuple(sorted(counts.items())),
    )
