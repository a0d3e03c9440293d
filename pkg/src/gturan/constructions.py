"""Generators for the complete multipartite and join constructions."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetError, CapacityError, DomainError
from .graph import MAX_VERTICES, Graph, join


@dataclass(frozen=True)
class PartitionSpec:
    """Part sizes of a complete multipartite graph, largest first."""

    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if any(p <= 0 for p in self.parts):
            raise ValueError(f"part sizes must be positive: {self.parts}")
        if self.total > MAX_VERTICES:
            raise CapacityError(f"partition of {self.total} vertices exceeds capacity")

    @property
    def total(self) -> int:
        return sum(self.parts)

    def __str__(self):
        return "K[" + ",".join(map(str, self.parts)) + "]"


def turan_parts(n: int, k: int) -> tuple[int, ...]:
    """As-equal-as-possible split of n into at most k positive parts."""
    if n < 0 or k < 1:
        raise DomainError(f"turan split needs n >= 0 and k >= 1, got n={n}, k={k}")
    q, m = divmod(n, k)
    parts = [q + 1] * m + [q] * (k - m)
    return tuple(p for p in parts if p > 0)


def complete_multipartite(spec) -> Graph:
    if not isinstance(spec, PartitionSpec):
        spec = PartitionSpec(tuple(spec))
    n = spec.total
    rows = []
    start = 0
    full = (1 << n) - 1
    for size in spec.parts:
        part = ((1 << size) - 1) << start
        rows.extend([full & ~part] * size)
        start += size
    return Graph(n, tuple(rows))


def turan_graph(n: int, k: int) -> Graph:
    return complete_multipartite(PartitionSpec(turan_parts(n, k)))


def g_parts(n: int, k: int, s: int) -> tuple[int, ...]:
    if not 0 <= s <= n or k < 1:
        raise DomainError(f"G_k(n,s) needs n >= s >= 0 and k >= 1, got n={n}, k={k}, s={s}")
    if k == 1:
        # degenerate: a single part holds every vertex
        return (n,) if n else ()
    parts = [n - s, *turan_parts(s, k - 1)]
    return tuple(sorted((p for p in parts if p > 0), reverse=True))


def g_graph(n: int, k: int, s: int) -> Graph:
    """Empty graph on n - s vertices joined to the Turan graph T_{k-1}(s)."""
    return complete_multipartite(PartitionSpec(g_parts(n, k, s)))


def matching_graph(s: int) -> Graph:
    if s < 0:
        raise DomainError("matching size must be non-negative")
    if 2 * s > MAX_VERTICES:
        raise CapacityError(f"matching of {s} edges needs {2 * s} vertices")
    return Graph.from_edges(2 * s, [(2 * i, 2 * i + 1) for i in range(s)])


def d_h_graph(H: Graph, n: int, s: int, r: int, *, budget: int = 8, workers=None) -> Graph:
    """Empty graph on n - s vertices joined to an s-vertex graph D.

    D maximises the number of (r-1)-cliques among graphs free of every
    member of the colour-class-deletion family of H. Among co-extremal
    candidates the one with the smallest canonical edge mask is used.
    """
    from .oracle import ForbiddenSet, chromatic_number, color_family, extremal_search

    if chromatic_number(H) < 3:
        raise DomainError("D_H(n, s) needs a forbidden graph with chromatic number >= 3")
    if not 0 <= s <= n:
        raise DomainError(f"need n >= s >= 0, got n={n}, s={s}")
    if r < 1:
        raise DomainError("clique order must be at least 1")
    if s > budget:
        raise BudgetError(f"s={s} exceeds the exhaustive search budget of {budget}")
    if n > MAX_VERTICES:
        raise CapacityError(f"D_H graph of order {n} exceeds capacity")
    family = ForbiddenSet(color_family(H).members)
    report = extremal_search(s, r - 1, family, workers=workers)
    D = min(report.witness_graphs(), key=lambda g: g.edge_mask())
    return join(Graph.empty(n - s), D)
