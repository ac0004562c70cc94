"""Colored directed multigraphs, set partitions, and traffic-state evaluation.

The central objects are directed multigraphs whose edges carry one of two
colors (red for a matrix with i.i.d. unit-circle entries, blue for its
adjoint), set partitions of the vertex set in restricted-growth-string form,
and the quotient construction that merges the vertices inside each block
while keeping every edge.

A colored graph is *balanced* (a double directed colored graph, d.d.c.g.)
when for every ordered vertex pair (u, v), loops included, the number of red
edges u -> v equals the number of blue edges v -> u.  Balanced quotients are
exactly the ones that survive expectation over the unit circle, and each one
contributes a falling factorial to the trace of the graph operation.  This
module evaluates those contributions exactly, and also carries brute-force
Monte Carlo evaluators that serve as independent oracles at small scale.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

import numpy as np

from .errors import ScaleLimitError
from .sampling import sample_unimodular

__all__ = [
    "Color",
    "ColoredDigraph",
    "SetPartition",
    "alternating_cycle",
    "quotient",
    "is_ddcg",
    "injective_traffic_value",
    "tau_via_quotients",
    "traffic_state_brute",
    "injective_traffic_brute",
    "iter_partitions",
]

# Brute-force evaluators sum over N**V (or (N)_V) vertex maps per sample.
BRUTE_MAX_N = 6
BRUTE_MAX_VERTICES = 6

# Full partition-lattice enumeration; Bell(12) is ~4.2e6.
QUOTIENT_SUM_MAX_VERTICES = 12


class Color(Enum):
    RED = "red"
    BLUE = "blue"


@dataclass(frozen=True)
class ColoredDigraph:
    """Directed multigraph with an ordered edge list and red/blue edge colors.

    Edges are (tail, head, color) triples; loops and parallel edges are
    allowed, and the edge order is preserved by every transformation.
    """

    vertex_count: int
    edges: tuple[tuple[int, int, Color], ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        for tail, head, color in self.edges:
            if not (0 <= tail < self.vertex_count and 0 <= head < self.vertex_count):
                raise ValueError(f"edge ({tail}, {head}) out of range for {self.vertex_count} vertices")
            if not isinstance(color, Color):
                raise ValueError(f"edge color must be a Color, got {color!r}")

    @property
    def edge_count(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class SetPartition:
    """Partition of {0, ..., n-1} encoded as a restricted growth string.

    ``rgs[i]`` is the block index of element i; blocks are numbered by first
    appearance, so ``rgs[0] == 0`` and each entry exceeds the running maximum
    by at most one.
    """

    rgs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "rgs", tuple(self.rgs))
        mx = -1
        for i, b in enumerate(self.rgs):
            if b > mx + 1 or b < 0:
                raise ValueError(f"not a restricted growth string at position {i}: {self.rgs}")
            if b == mx + 1:
                mx = b

    @property
    def size(self) -> int:
        return len(self.rgs)

    @property
    def block_count(self) -> int:
        return max(self.rgs) + 1 if self.rgs else 0

    def blocks(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.block_count)]
        for i, b in enumerate(self.rgs):
            out[b].append(i)
        return out

    @classmethod
    def from_blocks(cls, blocks, n: int | None = None) -> "SetPartition":
        """Build a partition from an iterable of blocks, renumbering canonically."""
        assignment: dict[int, int] = {}
        for b, block in enumerate(blocks):
            for x in block:
                if x in assignment:
                    raise ValueError(f"element {x} appears in two blocks")
                assignment[x] = b
        if n is None:
            n = len(assignment)
        if sorted(assignment) != list(range(n)):
            raise ValueError(f"blocks do not partition range({n})")
        relabel: dict[int, int] = {}
        rgs = []
        for i in range(n):
            b = assignment[i]
            if b not in relabel:
                relabel[b] = len(relabel)
            rgs.append(relabel[b])
        return cls(tuple(rgs))

    @classmethod
    def singletons(cls, n: int) -> "SetPartition":
        return cls(tuple(range(n)))


def _iter_rgs(n: int):
    """Yield every restricted growth string of length n, reusing one buffer.

    Callers must copy the yielded list if they keep it.
    """
    if n == 0:
        yield []
        return
    rgs = [0] * n

    def extend(i, mx):
        if i == n:
            yield rgs
            return
        for c in range(mx + 2):
            rgs[i] = c
            yield from extend(i + 1, mx if c <= mx else c)

    yield from extend(1, 0)


def iter_partitions(n: int):
    """Iterate over all set partitions of {0, ..., n-1}."""
    for rgs in _iter_rgs(n):
        yield SetPartition(tuple(rgs))


def alternating_cycle(k: int) -> ColoredDigraph:
    """The 2k-cycle whose edge colors alternate red, blue, red, blue, ...

    Vertex i connects to (i+1) mod 2k by edge e_i, red at even i.  This is
    the graph whose trace encodes the k-th power of the squared ensemble.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    two_k = 2 * k
    edges = tuple(
        (i, (i + 1) % two_k, Color.RED if i % 2 == 0 else Color.BLUE)
        for i in range(two_k)
    )
    return ColoredDigraph(two_k, edges)


def quotient(g: ColoredDigraph, partition: SetPartition) -> ColoredDigraph:
    """Merge the vertices inside each block of ``partition``, keeping all edges.

    The result has one vertex per block; the edge list keeps its length,
    order, and colors, with endpoints remapped to block indices.
    """
    if partition.size != g.vertex_count:
        raise ValueError(
            f"partition of {partition.size} elements does not match {g.vertex_count} vertices"
        )
    rgs = partition.rgs
    edges = tuple((rgs[t], rgs[h], c) for t, h, c in g.edges)
    return ColoredDigraph(partition.block_count, edges)


def is_ddcg(g: ColoredDigraph) -> bool:
    """True iff red edges u -> v and blue edges v -> u are equinumerous for all (u, v).

    Single pass over the edge list accumulating a signed count per ordered
    pair: +1 for a red edge (u, v), -1 for a blue edge whose reversal is
    (u, v).  Balanced means every accumulated count is zero.
    """
    balance: dict[tuple[int, int], int] = {}
    for tail, head, color in g.edges:
        key = (tail, head) if color is Color.RED else (head, tail)
        delta = 1 if color is Color.RED else -1
        new = balance.get(key, 0) + delta
        if new:
            balance[key] = new
        else:
            balance.pop(key, None)
    return not balance


def injective_traffic_value(g: ColoredDigraph, n: int) -> Fraction:
    """Exact injective traffic state of ``g`` with red = U, blue = U*.

    Equals (n)_|V| / n when the colored graph is balanced and 0 otherwise;
    (n)_j is the falling factorial, which vanishes once |V| > n.
    """
    if n < 1:
        raise ValueError("matrix dimension must be >= 1")
    if not is_ddcg(g):
        return Fraction(0)
    return Fraction(math.perm(n, g.vertex_count), n)


def tau_via_quotients(g: ColoredDigraph, n: int) -> Fraction:
    """Exact traffic state of ``g`` as the sum of injective values over all quotients.

    Enumerates the full partition lattice of the vertex set, so the graph is
    capped at QUOTIENT_SUM_MAX_VERTICES vertices.
    """
    if n < 1:
        raise ValueError("matrix dimension must be >= 1")
    if g.vertex_count > QUOTIENT_SUM_MAX_VERTICES:
        raise ScaleLimitError(
            f"refusing full partition enumeration for {g.vertex_count} > "
            f"{QUOTIENT_SUM_MAX_VERTICES} vertices"
        )
    edges = g.edges
    total = 0
    for rgs in _iter_rgs(g.vertex_count):
        balance: dict[tuple[int, int], int] = {}
        for tail, head, color in edges:
            key = (rgs[tail], rgs[head]) if color is Color.RED else (rgs[head], rgs[tail])
            delta = 1 if color is Color.RED else -1
            new = balance.get(key, 0) + delta
            if new:
                balance[key] = new
            else:
                balance.pop(key, None)
        if not balance:
            blocks = (max(rgs) + 1) if rgs else 0
            total += math.perm(n, blocks)
    return Fraction(total, n)


def _check_brute_scale(g: ColoredDigraph, n: int):
    if n > BRUTE_MAX_N or g.vertex_count > BRUTE_MAX_VERTICES:
        raise ScaleLimitError(
            f"brute-force evaluator limited to N <= {BRUTE_MAX_N} and "
            f"<= {BRUTE_MAX_VERTICES} vertices (got N={n}, V={g.vertex_count})"
        )
    if n < 1:
        raise ValueError("matrix dimension must be >= 1")


def _edge_products(u: np.ndarray, edges, maps: np.ndarray) -> np.ndarray:
    """Product over edges of the matrix entry each vertex map selects.

    ``maps`` has shape (V, M): column m is one map from vertices to indices.
    A red edge contributes U[head, tail]; a blue edge contributes the
    conjugate of U[tail, head] (the adjoint's (head, tail) entry).
    """
    prod = np.ones(maps.shape[1], dtype=np.complex128)
    for tail, head, color in edges:
        if color is Color.RED:
            prod *= u[maps[head], maps[tail]]
        else:
            prod *= np.conj(u[maps[tail], maps[head]])
    return prod


def _brute_estimate(g, n, samples, seed, maps, with_stderr):
    values = np.empty(samples, dtype=np.complex128)
    for s in range(samples):
        u = sample_unimodular(n, seed, s)
        values[s] = _edge_products(u, g.edges, maps).sum() / n
    mean = complex(values.mean())
    if not with_stderr:
        return mean
    if samples < 2:
        return mean, 0.0
    # combined real+imaginary sample variance of the per-sample values
    var = float((np.abs(values - values.mean()) ** 2).sum() / (samples - 1))
    return mean, math.sqrt(var / samples)


def traffic_state_brute(g: ColoredDigraph, n: int, samples: int, seed: int,
                        with_stderr: bool = False):
    """Monte Carlo estimate of the traffic state by literal summation over all vertex maps.

    Deterministic given (seed, samples).  Exponential in the vertex count,
    hence the small-scale guard; this is an oracle, not a production path.
    With ``with_stderr`` returns (mean, standard error) instead of the mean.
    """
    _check_brute_scale(g, n)
    v = g.vertex_count
    if v == 0:
        maps = np.zeros((0, 1), dtype=np.intp)
    else:
        maps = np.indices((n,) * v).reshape(v, -1)
    return _brute_estimate(g, n, samples, seed, maps, with_stderr)


def injective_traffic_brute(g: ColoredDigraph, n: int, samples: int, seed: int,
                            with_stderr: bool = False):
    """Monte Carlo estimate of the injective traffic state (injective vertex maps only)."""
    _check_brute_scale(g, n)
    v = g.vertex_count
    perms = list(itertools.permutations(range(n), v))
    if not perms:
        return (0j, 0.0) if with_stderr else 0j
    maps = np.array(perms, dtype=np.intp).T.reshape(v, -1)
    return _brute_estimate(g, n, samples, seed, maps, with_stderr)
