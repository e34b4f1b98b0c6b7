"""The diagram of a skew-symmetrizable matrix and its cycle conditions.

The diagram has a directed edge i -> j iff B_ji > 0, weighted |B_ij*B_ji|.
A companion is admissible when every oriented chordless cycle carries an odd
number of positive edges and every non-oriented chordless cycle an even
number; for the cuts defined by c-vectors the oriented count is exactly one.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Optional

from .core import ExchangeMatrix
from .companion import Companion
from .errors import CycleBudgetExceeded

DEFAULT_CYCLE_BUDGET = 10**6


def cycle_budget(override: Optional[int] = None) -> int:
    if override is not None:
        return override
    return int(os.environ.get("MUTLAB_CYCLE_BUDGET", DEFAULT_CYCLE_BUDGET))


@dataclass(frozen=True)
class Diagram:
    """Directed weighted graph on vertices 0..n-1."""

    n: int
    edges: frozenset[tuple[int, int, int]]  # (source, target, weight)

    def directed_pairs(self) -> set[tuple[int, int]]:
        return {(s, t) for s, t, _ in self.edges}

    def undirected_pairs(self) -> set[frozenset[int]]:
        return {frozenset((s, t)) for s, t, _ in self.edges}


@dataclass(frozen=True)
class EdgeCut:
    """Set of undirected diagram edges."""

    edges: frozenset[frozenset[int]]


@dataclass(frozen=True)
class Cycle:
    """Simple cycle as a canonical vertex sequence (no repeated endpoint)."""

    vertices: tuple[int, ...]
    oriented: bool

    def undirected_edges(self) -> list[frozenset[int]]:
        vs = self.vertices
        return [frozenset((vs[i], vs[(i + 1) % len(vs)])) for i in range(len(vs))]


def diagram_of(B: ExchangeMatrix) -> Diagram:
    """Edge i -> j present iff B_ji > 0, with weight |B_ij * B_ji|."""
    E = B.entries
    edges = set()
    for i in range(B.n):
        for j in range(B.n):
            if E[j][i] > 0:
                edges.add((i, j, abs(E[i][j] * E[j][i])))
    return Diagram(B.n, frozenset(edges))


def is_acyclic(G: Diagram) -> bool:
    """True iff the diagram has no oriented cycle."""
    adj: dict[int, list[int]] = {v: [] for v in range(G.n)}
    for s, t, _ in G.edges:
        adj[s].append(t)
    state = [0] * G.n
    for start in range(G.n):
        if state[start]:
            continue
        stack = [(start, iter(adj[start]))]
        state[start] = 1
        while stack:
            v, it = stack[-1]
            w = next(it, None)
            if w is None:
                state[v] = 2
                stack.pop()
            elif state[w] == 1:
                return False
            elif state[w] == 0:
                state[w] = 1
                stack.append((w, iter(adj[w])))
    return True


def _orientation(G: Diagram, vs: tuple[int, ...]) -> bool:
    directed = G.directed_pairs()
    forward = all(
        (vs[i], vs[(i + 1) % len(vs)]) in directed for i in range(len(vs))
    )
    backward = all(
        (vs[(i + 1) % len(vs)], vs[i]) in directed for i in range(len(vs))
    )
    return forward or backward


def _canonical(vs: tuple[int, ...]) -> tuple[int, ...]:
    # rotate the smallest vertex to the front, then pick the smaller direction
    m = vs.index(min(vs))
    fwd = vs[m:] + vs[:m]
    rev = (fwd[0],) + tuple(reversed(fwd[1:]))
    return min(fwd, rev)


def enumerate_cycles(
    G: Diagram, mode: str = "all-simple", budget: Optional[int] = None
) -> list[Cycle]:
    """All simple cycles of the underlying undirected graph, classified.

    mode="chordless" keeps only induced cycles. Order is deterministic:
    lexicographic by sorted vertex set, then by the canonical sequence.
    Raises CycleBudgetExceeded past the configured cap.
    """
    if mode not in ("all-simple", "chordless"):
        raise ValueError(f"unknown cycle mode {mode!r}")
    cap = cycle_budget(budget)
    und = G.undirected_pairs()
    nbrs: dict[int, list[int]] = {v: [] for v in range(G.n)}
    for e in und:
        a, b = sorted(e)
        nbrs[a].append(b)
        nbrs[b].append(a)
    for v in nbrs:
        nbrs[v].sort()

    found: set[tuple[int, ...]] = set()
    work = 0
    # cycles are rooted at their smallest vertex s; the path never revisits
    # a vertex below s, and v1 < last kills the mirror duplicate
    for s in range(G.n):
        path = [s]
        on_path = {s}

        def extend():
            nonlocal work
            v = path[-1]
            for w in nbrs[v]:
                work += 1
                if work > cap:
                    raise CycleBudgetExceeded(f"cycle enumeration exceeded {cap} steps")
                if w == s and len(path) >= 3 and path[1] < path[-1]:
                    found.add(tuple(path))
                elif w > s and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    extend()
                    on_path.discard(w)
                    path.pop()

        extend()

    cycles = []
    for vs in found:
        if mode == "chordless":
            vset = set(vs)
            inside = sum(1 for e in und if e <= vset)
            if inside != len(vs):
                continue
        cvs = _canonical(vs)
        cycles.append(Cycle(cvs, _orientation(G, cvs)))
    cycles.sort(key=lambda c: (tuple(sorted(c.vertices)), c.vertices))
    return cycles


def positive_edges(B: ExchangeMatrix, A: Companion) -> EdgeCut:
    """Undirected edges {i,j} with A_ij > 0 (well-defined by symmetrizability)."""
    G = diagram_of(B)
    cut = {e for e in G.undirected_pairs() if A.entries[min(e)][max(e)] > 0}
    return EdgeCut(frozenset(cut))


def is_admissible_cut(
    G: Diagram, C: EdgeCut, mode: str = "chordless", budget: Optional[int] = None
) -> bool:
    """Exactly one cut edge on every oriented cycle, an even number on every
    non-oriented cycle. Cycles are chordless by default, the reading under
    which the c-vector cut is always admissible."""
    for cycle in enumerate_cycles(G, mode=mode, budget=budget):
        k = sum(1 for e in cycle.undirected_edges() if e in C.edges)
        if cycle.oriented and k != 1:
            return False
        if not cycle.oriented and k % 2 != 0:
            return False
    return True


def _directed_paths_ok(
    G: Diagram, cut: set[frozenset[int]], cap: int
) -> tuple[bool, Optional[tuple[int, ...]]]:
    # DFS over induced (chordless) directed paths, counting cut edges along
    # the way; a chord would close a cycle, which the cycle conditions own
    adj: dict[int, list[int]] = {v: [] for v in range(G.n)}
    for s, t, _ in G.edges:
        adj[s].append(t)
    for v in adj:
        adj[v].sort()
    und = G.undirected_pairs()
    work = 0

    def walk(path: list[int], count: int) -> Optional[tuple[int, ...]]:
        nonlocal work
        for w in adj[path[-1]]:
            work += 1
            if work > cap:
                raise CycleBudgetExceeded(f"path enumeration exceeded {cap} steps")
            if w in path or any(
                frozenset((v, w)) in und for v in path[:-1]
            ):
                continue
            c = count + (frozenset((path[-1], w)) in cut)
            path.append(w)
            if c > 1:
                return tuple(path)
            bad = walk(path, c)
            if bad:
                return bad
            path.pop()
        return None

    for v in range(G.n):
        bad = walk([v], 0)
        if bad:
            return False, bad
    return True, None


@dataclass(frozen=True)
class CompanionReport:
    """Outcome of the three cycle/path conditions for a companion of B.

    oriented_condition is the strong "exactly one positive edge" statement
    that holds for c-vector companions; the admissible verdict only needs an
    odd count, which is what sign changes preserve.
    """

    path_condition: bool
    oriented_condition: bool
    nonoriented_condition: bool
    oriented_parity: bool = field(default=True)
    witness: Optional[tuple[int, ...]] = field(default=None)

    @property
    def admissible(self) -> bool:
        return self.oriented_parity and self.nonoriented_condition

    @property
    def all_ok(self) -> bool:
        return self.path_condition and self.admissible


def check_companion_conditions(
    B: ExchangeMatrix,
    A: Companion,
    mode: str = "chordless",
    budget: Optional[int] = None,
) -> CompanionReport:
    """Check the path and both cycle conditions, with a first violating
    path/cycle as witness.

    Paths and (by default) cycles are induced subdiagrams: a chord would
    close a shorter cycle, and the conditions hold cycle by cycle only in
    that reading. mode="all-simple" checks the unrestricted reading.
    """
    G = diagram_of(B)
    cut = set(positive_edges(B, A).edges)
    cap = cycle_budget(budget)
    path_ok, witness = _directed_paths_ok(G, cut, cap)
    oriented_ok = True
    oriented_parity = True
    nonoriented_ok = True
    for cycle in enumerate_cycles(G, mode=mode, budget=budget):
        k = sum(1 for e in cycle.undirected_edges() if e in cut)
        if cycle.oriented and k != 1:
            oriented_ok = False
            oriented_parity &= k % 2 == 1
            witness = witness or cycle.vertices
        elif not cycle.oriented and k % 2 != 0:
            nonoriented_ok = False
            witness = witness or cycle.vertices
    return CompanionReport(path_ok, oriented_ok, nonoriented_ok, oriented_parity, witness)


def to_dot(G: Diagram, A: Optional[Companion] = None) -> str:
    """Byte-stable DOT rendering; vertices 1-based, positive edges dashed."""
    cut: set[frozenset[int]] = set()
    if A is not None:
        cut = {
            frozenset((s, t)) for s, t, _ in G.edges if A.entries[s][t] > 0
        }
    lines = ["digraph diagram {"]
    for v in range(G.n):
        lines.append(f"  {v + 1};")
    for s, t, w in sorted(G.edges):
        attrs = []
        label = ""
        if w > 1:
            label = str(w)
        if frozenset((s, t)) in cut:
            label += "+"
            attrs.append('style="dashed"')
        if label:
            attrs.insert(0, f'label="{label}"')
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {s + 1} -> {t + 1}{suffix};")
    lines.append("}")
    return "\n".join(lines) + "\n"
