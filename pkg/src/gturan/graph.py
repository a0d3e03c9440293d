"""Compact simple graphs on at most 64 vertices.

Adjacency is stored as one integer bit row per vertex, so neighbourhood
intersections are single ``&`` operations. Graphs are immutable; every
operation returns a new :class:`Graph`.

Vertex sets are passed either as an iterable of indices or as an integer
bit mask; :func:`vertex_mask` normalises both.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import CapacityError, PreconditionError

MAX_VERTICES = 64
COUNT_CAPACITY = (1 << 128) - 1


def checked_count(value: int) -> int:
    """Return ``value`` if it fits the 128-bit counter, else raise."""
    if value < 0 or value > COUNT_CAPACITY:
        raise OverflowError(f"count {value} exceeds 128-bit capacity")
    return value


def vertex_mask(vertices) -> int:
    if isinstance(vertices, int):
        if vertices < 0:
            raise ValueError("vertex mask must be non-negative")
        return vertices
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def edge_index(i: int, j: int) -> int:
    """Bit position of pair {i, j} in an edge mask.

    Pairs are ordered column by column over the upper triangle, the same
    order graph6 uses, so the mask of a graph on n vertices is also a valid
    mask on n + 1 vertices.
    """
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise CapacityError(f"graph order {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has neighbours outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for w in members(row):
                if not self.adj[w] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {w}")

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if not 0 <= n <= MAX_VERTICES:
            raise CapacityError(f"graph order {n} outside 0..{MAX_VERTICES}")
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_edge_mask(cls, n: int, mask: int) -> Graph:
        rows = [0] * n
        for j in range(1, n):
            base = j * (j - 1) // 2
            for i in range(j):
                if mask >> (base + i) & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        return cls(n, tuple(rows))

    def edge_mask(self) -> int:
        mask = 0
        for j in range(1, self.n):
            lower = self.adj[j] & ((1 << j) - 1)
            base = j * (j - 1) // 2
            for i in members(lower):
                mask |= 1 << (base + i)
        return mask

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in members(self.adj[u] >> (u + 1)):
                yield u, u + 1 + v

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> int:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    @property
    def vertex_set(self) -> int:
        return (1 << self.n) - 1

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges())})"


def _count_in(adj: tuple[int, ...], cand: int, r: int) -> int:
    if r == 1:
        return cand.bit_count()
    total = 0
    if r == 2:
        while cand:
            low = cand & -cand
            cand ^= low
            total += (cand & adj[low.bit_length() - 1]).bit_count()
        return total
    while cand:
        low = cand & -cand
        cand ^= low
        rest = cand & adj[low.bit_length() - 1]
        if rest.bit_count() >= r - 1:
            total += _count_in(adj, rest, r - 1)
    return total


def count_cliques(G: Graph, r: int) -> int:
    """Number of r-vertex subsets of G that induce a complete graph."""
    if not 0 <= r <= MAX_VERTICES:
        raise ValueError(f"clique order {r} outside 0..{MAX_VERTICES}")
    if r == 0:
        return 1
    return checked_count(_count_in(G.adj, G.vertex_set, r))


def clique_degree(G: Graph, v: int, r: int) -> int:
    """Number of r-cliques inside N(v), i.e. (r+1)-cliques through v."""
    if not 0 <= v < G.n:
        raise ValueError(f"vertex {v} out of range")
    if r < 0:
        raise ValueError("clique order must be non-negative")
    if r == 0:
        return 1
    return checked_count(_count_in(G.adj, G.adj[v], r))


def switch_vertex(G: Graph, u: int, v: int) -> Graph:
    """Rewire u so that its neighbourhood becomes N(v); u keeps its index."""
    if u == v:
        raise PreconditionError("switch needs two distinct vertices", ["u == v"])
    if G.has_edge(u, v):
        raise PreconditionError(f"vertices {u} and {v} are adjacent", ["u adjacent to v"])
    target = G.adj[v]
    ubit = 1 << u
    rows = list(G.adj)
    for w in members(rows[u]):
        rows[w] &= ~ubit
    for w in members(target):
        rows[w] |= ubit
    rows[u] = target
    return Graph(G.n, tuple(rows))


def switch_class(G: Graph, S, T) -> Graph:
    """Rewire every vertex of S to the common neighbourhood of T."""
    S = vertex_mask(S)
    T = vertex_mask(T)
    violations = []
    if S & ~G.vertex_set or T & ~G.vertex_set:
        violations.append("vertex out of range")
    if S & T:
        violations.append("S and T are not disjoint")
    if not S or not T:
        violations.append("S and T must be non-empty")
    for name, X in (("S", S), ("T", T)):
        xs = [x for x in members(X) if x < G.n]
        if any(G.adj[x] & X for x in xs):
            violations.append(f"{name} is not independent")
        if len({G.adj[x] for x in xs}) > 1:
            violations.append(f"{name} vertices have unequal neighbourhoods")
    if any(G.adj[x] & T for x in members(S) if x < G.n):
        violations.append("edge between S and T")
    if violations:
        raise PreconditionError("; ".join(violations), violations)
    t = members(T)[0]
    for x in members(S):
        G = switch_vertex(G, x, t)
    return G


def neighborhood_classes(G: Graph, B=None) -> list[tuple[int, ...]]:
    """Partition B by equality of full neighbourhoods, ordered by least member."""
    B = G.vertex_set if B is None else vertex_mask(B)
    groups: dict[int, list[int]] = {}
    for v in members(B):
        groups.setdefault(G.adj[v], []).append(v)
    return sorted((tuple(g) for g in groups.values()), key=lambda g: g[0])


def induced_subgraph(G: Graph, U) -> Graph:
    keep = members(vertex_mask(U))
    if keep and keep[-1] >= G.n:
        raise ValueError("vertex out of range")
    pos = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        row = 0
        for w in members(G.adj[v] & vertex_mask(keep)):
            row |= 1 << pos[w]
        rows.append(row)
    return Graph(len(keep), tuple(rows))


def disjoint_union(G1: Graph, G2: Graph) -> Graph:
    n = G1.n + G2.n
    if n > MAX_VERTICES:
        raise CapacityError(f"union has {n} vertices")
    return Graph(n, G1.adj + tuple(row << G1.n for row in G2.adj))


def join(G1: Graph, G2: Graph) -> Graph:
    n = G1.n + G2.n
    if n > MAX_VERTICES:
        raise CapacityError(f"join has {n} vertices")
    right = ((1 << G2.n) - 1) << G1.n
    left = (1 << G1.n) - 1
    rows = tuple(row | right for row in G1.adj) + tuple(
        (row << G1.n) | left for row in G2.adj
    )
    return Graph(n, rows)


def complement(G: Graph) -> Graph:
    full = G.vertex_set
    return Graph(G.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(G.adj)))


def relabel(G: Graph, order: list[int]) -> Graph:
    """Graph whose vertex i is G's vertex ``order[i]``."""
    pos = [0] * G.n
    for i, v in enumerate(order):
        pos[v] = i
    rows = [0] * G.n
    for u, v in G.edges():
        rows[pos[u]] |= 1 << pos[v]
        rows[pos[v]] |= 1 << pos[u]
    return Graph(G.n, tuple(rows))


def components(G: Graph, within=None) -> list[int]:
    """Connected components of G[within] as vertex masks, by least member."""
    left = G.vertex_set if within is None else vertex_mask(within)
    comps = []
    while left:
        seed = left & -left
        comp = frontier = seed
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = G.adj[low.bit_length() - 1] & left & ~comp
            comp |= new
            frontier |= new
        comps.append(comp)
        left &= ~comp
    return comps
