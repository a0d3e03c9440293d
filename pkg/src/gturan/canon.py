"""Canonical labelling by individualisation-refinement.

The canonical form of G is the relabelling with the smallest edge mask
among the leaves of the search tree. Colour refinement prunes most of the
tree; within a cell, vertices that are twins (equal neighbourhoods up to
each other) are interchangeable, so only one of them is branched on.
"""

from __future__ import annotations

from .graph import Graph, members, relabel


def _refine(nbrs: list[list[int]], colors: list[int]) -> list[int]:
    ncolors = len(set(colors))
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[w] for w in nbrs[v])))
            for v in range(len(colors))
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if len(rank) == ncolors:
            return new
        colors, ncolors = new, len(rank)


def _twin_representatives(G: Graph, cell: list[int]) -> list[int]:
    reps: list[int] = []
    for v in cell:
        for u in reps:
            if G.adj[u] & ~(1 << v) == G.adj[v] & ~(1 << u):
                break
        else:
            reps.append(v)
    return reps


def canonical_mask(G: Graph) -> int:
    n = G.n
    if n <= 1:
        return 0
    nbrs = [members(G.adj[v]) for v in range(n)]
    best = None
    stack = [_refine(nbrs, [0] * n)]
    while stack:
        colors = stack.pop()
        if len(set(colors)) == n:
            order = sorted(range(n), key=colors.__getitem__)
            mask = relabel(G, order).edge_mask()
            if best is None or mask < best:
                best = mask
            continue
        sizes: dict[int, int] = {}
        for c in colors:
            sizes[c] = sizes.get(c, 0) + 1
        target = min(c for c, size in sizes.items() if size > 1)
        cell = [v for v in range(n) if colors[v] == target]
        for v in _twin_representatives(G, cell):
            split = [2 * c for c in colors]
            split[v] -= 1
            stack.append(_refine(nbrs, split))
    return best


def canonical_key(G: Graph) -> tuple[int, int]:
    return G.n, canonical_mask(G)


def canonical_form(G: Graph) -> Graph:
    return Graph.from_edge_mask(G.n, canonical_mask(G))


def is_isomorphic(G1: Graph, G2: Graph) -> bool:
    if G1.n != G2.n or G1.num_edges != G2.num_edges:
        return False
    return canonical_mask(G1) == canonical_mask(G2)
