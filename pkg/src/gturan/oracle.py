"""Forbidden-subgraph tests, colour-class families and brute-force extremal search.

The exhaustive search treats every n-vertex graph as an integer edge mask
(see :func:`gturan.graph.edge_index`). A graph contains a fixed copy of a
pattern iff ``mask & copy == copy``, so freeness and clique counts for a
whole block of masks reduce to a few numpy comparisons per pattern copy.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterable

import numpy as np

from .canon import canonical_key
from .errors import BudgetError, DomainError, Graph6Error
from .graph import Graph, components, count_cliques, edge_index, induced_subgraph, members
from .graph6 import decode_graph6, encode_graph6
from .matching import matching_number

EXHAUSTIVE_MAX_N = 8
COLORING_MAX_N = 12
WITNESS_MASK_LIMIT = 100_000
_CHUNK_BITS = 22
_VECTOR_MAX_N = 11


@dataclass(frozen=True)
class ForbiddenSet:
    """Forbidden subgraphs plus an optional bound s on the matching number."""

    subgraphs: tuple[Graph, ...] = ()
    matching_bound: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "subgraphs", tuple(self.subgraphs))
        for H in self.subgraphs:
            if H.num_edges == 0:
                raise DomainError("forbidden graphs must have at least one edge")
        if self.matching_bound is not None and self.matching_bound < 0:
            raise DomainError("matching bound must be non-negative")

    def to_dict(self) -> dict:
        return {
            "subgraphs": [encode_graph6(H) for H in self.subgraphs],
            "matching_bound": self.matching_bound,
        }


def _is_complete(H: Graph) -> bool:
    return H.num_edges == H.n * (H.n - 1) // 2


def _is_perfect_matching(H: Graph) -> bool:
    return H.n > 0 and all(row.bit_count() == 1 for row in H.adj)


def contains_subgraph(G: Graph, H: Graph) -> bool:
    """Whether G has a (not necessarily induced) subgraph isomorphic to H."""
    if H.n > G.n or H.num_edges > G.num_edges:
        return False
    if H.num_edges == 0:
        return True
    if _is_complete(H):
        return count_cliques(G, H.n) > 0
    if _is_perfect_matching(H):
        return matching_number(G) >= H.n // 2

    core = [v for v in range(H.n) if H.adj[v]]
    order = [max(core, key=H.degree)]
    placed = 1 << order[0]
    while len(order) < len(core):
        nxt = max(
            (v for v in core if not placed >> v & 1),
            key=lambda v: ((H.adj[v] & placed).bit_count(), H.degree(v)),
        )
        order.append(nxt)
        placed |= 1 << nxt
    back = [[w for w in order[:i] if H.has_edge(w, h)] for i, h in enumerate(order)]
    need = [H.degree(h) for h in order]
    gdeg = [G.degree(v) for v in range(G.n)]
    image = {}

    def extend(i, used):
        if i == len(order):
            return True
        cand = G.vertex_set & ~used
        for w in back[i]:
            cand &= G.adj[image[w]]
        for g in members(cand):
            if gdeg[g] >= need[i]:
                image[order[i]] = g
                if extend(i + 1, used | 1 << g):
                    return True
        return False

    return extend(0, 0)


def is_family_free(G: Graph, fam: ForbiddenSet) -> bool:
    if fam.matching_bound is not None and matching_number(G) > fam.matching_bound:
        return False
    return not any(contains_subgraph(G, H) for H in fam.subgraphs)


def _colorable(H: Graph, k: int) -> bool:
    order = sorted(range(H.n), key=lambda v: -H.degree(v))
    colors = [-1] * H.n

    def assign(i, used):
        if i == len(order):
            return True
        v = order[i]
        taken = {colors[w] for w in members(H.adj[v])}
        for c in range(min(used + 1, k)):
            if c not in taken:
                colors[v] = c
                if assign(i + 1, max(used, c + 1)):
                    return True
        colors[v] = -1
        return False

    return assign(0, 0)


def chromatic_number(H: Graph) -> int:
    if H.n > COLORING_MAX_N:
        raise BudgetError(f"chromatic number is limited to {COLORING_MAX_N} vertices")
    if H.n == 0:
        return 0
    if H.num_edges == 0:
        return 1
    k = 2
    while not _colorable(H, k):
        k += 1
    return k


@dataclass(frozen=True)
class ColorFamily:
    """Chromatic number, colour-class deletions up to isomorphism, and p."""

    chi: int
    members: tuple[Graph, ...]
    p: int | None = None


def _color_classes(H: Graph, k: int) -> set[int]:
    """Every class (as a vertex mask) of every proper colouring with
    exactly k non-empty classes."""
    classes: set[int] = set()
    colors = [0] * H.n

    def assign(v, used):
        if H.n - v < k - used:
            return
        if v == H.n:
            for c in range(k):
                classes.add(sum(1 << u for u in range(H.n) if colors[u] == c))
            return
        for c in range(min(used + 1, k)):
            if all(colors[w] != c for w in members(H.adj[v] & ((1 << v) - 1))):
                colors[v] = c
                assign(v + 1, max(used, c + 1))

    assign(0, 0)
    return classes


def _min_side(H: Graph) -> int:
    total = 0
    for comp in components(H):
        if comp.bit_count() == 1:
            continue
        side = {members(comp)[0]: 0}
        stack = list(side)
        while stack:
            v = stack.pop()
            for w in members(H.adj[v]):
                if w not in side:
                    side[w] = 1 - side[v]
                    stack.append(w)
        ones = sum(side.values())
        total += min(ones, len(side) - ones)
    return total


def color_family(H: Graph) -> ColorFamily:
    if H.n == 0:
        raise DomainError("colour family needs at least one vertex")
    chi = chromatic_number(H)
    seen = {}
    for cls in _color_classes(H, chi):
        rest = induced_subgraph(H, H.vertex_set & ~cls)
        seen.setdefault(canonical_key(rest), rest)
    fam = tuple(seen[key] for key in sorted(seen))
    return ColorFamily(chi, fam, _min_side(H) if chi == 2 else None)


def p_value(H: Graph) -> int:
    if H.n > COLORING_MAX_N:
        raise BudgetError(f"p(H) is limited to {COLORING_MAX_N} vertices")
    if H.num_edges == 0 or chromatic_number(H) != 2:
        raise DomainError("p(H) is defined for bipartite graphs with at least one edge")
    return _min_side(H)


def copy_masks(H: Graph, n: int) -> list[int]:
    """Edge masks of every copy of H inside K_n."""
    if H.n > n:
        return []
    if _is_complete(H):
        return sorted(
            sum(1 << edge_index(a, b) for a, b in combinations(sub, 2))
            for sub in combinations(range(n), H.n)
        )
    if _is_perfect_matching(H):
        return sorted(_matching_masks(H.n // 2, (1 << n) - 1))
    core = [v for v in range(H.n) if H.adj[v]]
    pos = {v: i for i, v in enumerate(core)}
    edges = [(pos[u], pos[v]) for u, v in H.edges()]
    found = set()
    for image in permutations(range(n), len(core)):
        found.add(sum(1 << edge_index(image[a], image[b]) for a, b in edges))
    return sorted(found)


def _matching_masks(k: int, free: int) -> set[int]:
    if k == 0:
        return {0}
    if free.bit_count() < 2 * k:
        return set()
    out = set()
    low = free & -free
    v = low.bit_length() - 1
    rest = free ^ low
    # v unmatched
    out |= _matching_masks(k, rest)
    for w in members(rest):
        bit = 1 << edge_index(v, w)
        out |= {bit | m for m in _matching_masks(k - 1, rest & ~(1 << w))}
    return out


def _pattern_masks(n: int, fam: ForbiddenSet) -> list[int]:
    masks = set()
    for H in fam.subgraphs:
        masks.update(copy_masks(H, n))
    if fam.matching_bound is not None:
        masks.update(_matching_masks(fam.matching_bound + 1, (1 << n) - 1))
    # supersets of another pattern copy are redundant
    ordered = sorted(masks, key=lambda m: (m.bit_count(), m))
    kept: list[int] = []
    for m in ordered:
        if not any(m & k == k for k in kept):
            kept.append(m)
    return kept


def _clique_masks(n: int, r: int) -> list[int]:
    return [
        sum(1 << edge_index(a, b) for a, b in combinations(sub, 2))
        for sub in combinations(range(n), r)
    ]


def _scan(masks: np.ndarray, n: int, r: int, patterns: list[int], limit: int):
    """(free count, best count, witness masks) over one block of masks."""
    survivors = masks
    ok = None
    for i, p in enumerate(patterns):
        pm = np.uint64(p)
        hit = (survivors & pm) != pm
        ok = hit if ok is None else ok & hit
        if i % 8 == 7:
            survivors = survivors[ok]
            ok = None
            if survivors.size == 0:
                break
    if ok is not None:
        survivors = survivors[ok]
    if survivors.size == 0:
        return 0, None, []
    if r == 0:
        counts = np.ones(survivors.size, dtype=np.int64)
    elif r == 1:
        counts = np.full(survivors.size, n, dtype=np.int64)
    else:
        counts = np.zeros(survivors.size, dtype=np.int64)
        for c in _clique_masks(n, r):
            cm = np.uint64(c)
            counts += (survivors & cm) == cm
    best = int(counts.max())
    wit = survivors[counts == best][:limit]
    return int(survivors.size), best, [int(m) for m in wit]


def _scan_range(n, r, patterns, start, stop, limit):
    masks = np.arange(start, stop, dtype=np.uint64)
    return _scan(masks, n, r, patterns, limit)


def _merge(acc, part, limit):
    free, best, wit = acc
    pfree, pbest, pwit = part
    free += pfree
    if pbest is None:
        return free, best, wit
    if best is None or pbest > best:
        return free, pbest, pwit[:limit]
    if pbest == best and len(wit) < limit:
        wit = wit + pwit[: limit - len(wit)]
    return free, best, wit


def default_workers() -> int:
    env = os.environ.get("GTURAN_WORKERS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


@dataclass
class ExtremalReport:
    """Result of a brute-force extremal search.

    ``value`` is None only when a stream contained no admissible graph.
    ``witnesses`` are graph6 strings of canonical forms, one per
    isomorphism class.
    """

    n: int
    r: int
    forbidden: ForbiddenSet
    value: int | None
    witnesses: list[str]
    graphs_examined: int
    free_graphs: int
    source: str
    elapsed: float = 0.0
    witnesses_truncated: bool = False
    extra: dict = field(default_factory=dict)

    def witness_graphs(self) -> list[Graph]:
        return [decode_graph6(w) for w in self.witnesses]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "forbidden": self.forbidden.to_dict(),
            "value": self.value,
            "witnesses": list(self.witnesses),
            "witnesses_truncated": self.witnesses_truncated,
            "graphs_examined": self.graphs_examined,
            "free_graphs": self.free_graphs,
            "source": self.source,
            "complete": self.source == "exhaustive",
            **self.extra,
            "timing": {"elapsed_seconds": round(self.elapsed, 6)},
        }


def _finish(n, r, fam, source, examined, free, best, wit_masks, limit, started) -> ExtremalReport:
    classes = {}
    for m in sorted(set(wit_masks)):
        G = Graph.from_edge_mask(n, m)
        key = canonical_key(G)
        if key not in classes:
            classes[key] = Graph.from_edge_mask(n, key[1])
    witnesses = [classes[key] for key in sorted(classes)]
    for G in witnesses:
        if not is_family_free(G, fam) or count_cliques(G, r) != best:
            raise AssertionError(f"witness {encode_graph6(G)} failed the self-audit")
    return ExtremalReport(
        n=n,
        r=r,
        forbidden=fam,
        value=best,
        witnesses=[encode_graph6(G) for G in witnesses],
        graphs_examined=examined,
        free_graphs=free,
        source=source,
        elapsed=time.perf_counter() - started,
        witnesses_truncated=len(wit_masks) >= limit,
    )


def extremal_search(
    n: int,
    r: int,
    fam: ForbiddenSet | None = None,
    source: str = "exhaustive",
    *,
    candidates: Iterable[Graph | str] | None = None,
    workers: int | None = None,
    max_n: int = EXHAUSTIVE_MAX_N,
    witness_limit: int = WITNESS_MASK_LIMIT,
) -> ExtremalReport:
    """Largest number of r-cliques over n-vertex graphs avoiding ``fam``.

    ``source="exhaustive"`` tries every labelled graph (n <= 8).
    ``source="graph6_stream"`` scans externally supplied ``candidates``
    (Graph objects or graph6 lines) and is only as complete as that list.
    """
    fam = fam or ForbiddenSet()
    if not 0 <= r <= 64:
        raise DomainError(f"clique order {r} out of range")
    started = time.perf_counter()
    if source == "exhaustive":
        if not 0 <= n <= min(max_n, EXHAUSTIVE_MAX_N):
            raise BudgetError(f"exhaustive search is limited to n <= {min(max_n, EXHAUSTIVE_MAX_N)}")
        total = 1 << (n * (n - 1) // 2)
        patterns = _pattern_masks(n, fam)
        step = 1 << _CHUNK_BITS
        ranges = [(a, min(a + step, total)) for a in range(0, total, step)]
        workers = workers or default_workers()
        acc = (0, None, [])
        if workers > 1 and len(ranges) > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                futures = [
                    pool.submit(_scan_range, n, r, patterns, a, b, witness_limit)
                    for a, b in ranges
                ]
                for fut in futures:
                    acc = _merge(acc, fut.result(), witness_limit)
        else:
            for a, b in ranges:
                acc = _merge(acc, _scan_range(n, r, patterns, a, b, witness_limit), witness_limit)
        free, best, wit = acc
        return _finish(n, r, fam, source, total, free, best, wit, witness_limit, started)

    if source != "graph6_stream":
        raise DomainError(f"unknown source {source!r}")
    if candidates is None:
        raise DomainError("stream mode needs candidate graphs")
    graphs = []
    for number, item in enumerate(candidates, start=1):
        if isinstance(item, str):
            if not item.strip():
                continue
            item = decode_graph6(item, line=number)
        if item.n != n:
            raise Graph6Error(f"graph has {item.n} vertices, expected {n}", number)
        graphs.append(item)
    if n <= _VECTOR_MAX_N:
        masks = np.array([G.edge_mask() for G in graphs], dtype=np.uint64)
        free, best, wit = _scan(masks, n, r, _pattern_masks(n, fam), witness_limit)
    else:
        free, best, wit = 0, None, []
        for G in graphs:
            if is_family_free(G, fam):
                free += 1
                c = count_cliques(G, r)
                if best is None or c > best:
                    best, wit = c, []
                if c == best and len(wit) < witness_limit:
                    wit.append(G.edge_mask())
    return _finish(n, r, fam, source, len(graphs), free, best, wit, witness_limit, started)
