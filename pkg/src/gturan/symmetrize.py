"""Switching-based local search that never loses r-cliques.

Moving a vertex u onto the neighbourhood of a non-adjacent v changes the
r-clique count by d(v) - d(u), where d is the (r-1)-clique-degree. Moving
a whole neighbourhood class S onto class T (independent, uniform, no S-T
edges) changes it by |S| * (d(t) - d(s)). The engine applies such moves
in the non-negative direction while the forbidden family still holds.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import PreconditionError
from .graph import Graph, clique_degree, count_cliques, neighborhood_classes, switch_class, switch_vertex, vertex_mask
from .graph6 import encode_graph6
from .oracle import ForbiddenSet, is_family_free

FIXED_POINT = "fixed_point"
BUDGET = "budget"


@dataclass(frozen=True)
class Step:
    kind: str  # "class-switch" or "vertex-switch"
    source: tuple[int, ...]
    target: tuple[int, ...]
    count_before: int
    count_after: int
    graph6: str

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "source": list(self.source),
            "target": list(self.target),
            "count_before": self.count_before,
            "count_after": self.count_after,
            "graph6": self.graph6,
        }


@dataclass
class SymmetrizeTrace:
    initial: str
    final: str = ""
    steps: list[Step] = field(default_factory=list)
    iterations: int = 0
    terminated_by: str = FIXED_POINT

    def to_dict(self) -> dict:
        return {
            "initial": self.initial,
            "final": self.final,
            "iterations": self.iterations,
            "terminated_by": self.terminated_by,
            "steps": [s.to_dict() for s in self.steps],
        }


def _class_moves(G: Graph, classes, deg):
    moves = []
    for i, S in enumerate(classes):
        for T in classes[i + 1:]:
            if G.adj[S[0]] & vertex_mask(T):
                continue
            ds, dt = deg[S[0]], deg[T[0]]
            if dt >= ds:
                moves.append((len(S) * (dt - ds), S, T))
            if ds >= dt:
                moves.append((len(T) * (ds - dt), T, S))
    moves.sort(key=lambda m: (-m[0], m[1][0], m[2][0]))
    return moves


def _vertex_moves(G: Graph, deg):
    moves = []
    for u in range(G.n):
        for v in range(G.n):
            if u == v or G.has_edge(u, v) or G.adj[u] == G.adj[v]:
                continue
            if deg[v] >= deg[u]:
                moves.append((deg[v] - deg[u], u, v))
    moves.sort(key=lambda m: (-m[0], m[1], m[2]))
    return moves


def find_move(G: Graph, fam: ForbiddenSet, r: int):
    """The first committable move as (kind, source, target, new graph), or None.

    A move is committable when the result avoids ``fam`` and either gains
    cliques or merges neighbourhood classes without losing any.
    """
    deg = [clique_degree(G, v, r - 1) for v in range(G.n)]
    classes = neighborhood_classes(G)
    nclasses = len(classes)
    for gain, S, T in _class_moves(G, classes, deg):
        H = switch_class(G, S, T)
        if gain == 0 and len(neighborhood_classes(H)) >= nclasses:
            continue
        if is_family_free(H, fam):
            return "class-switch", tuple(S), tuple(T), H, gain
    for gain, u, v in _vertex_moves(G, deg):
        H = switch_vertex(G, u, v)
        if gain == 0 and len(neighborhood_classes(H)) >= nclasses:
            continue
        if is_family_free(H, fam):
            return "vertex-switch", (u,), (v,), H, gain
    return None


def symmetrize(G: Graph, fam: ForbiddenSet, r: int, budget: int = 1000) -> tuple[Graph, SymmetrizeTrace]:
    """Apply committable switching moves until none is left or ``budget``
    moves have been made.

    Each committed move strictly increases the pair (r-clique count,
    -number of neighbourhood classes) lexicographically, so the loop ends
    even without a budget.
    """
    if r < 1:
        raise PreconditionError("clique order must be at least 1", ["r < 1"])
    if budget < 0:
        raise PreconditionError("budget must be non-negative", ["budget < 0"])
    if not is_family_free(G, fam):
        raise PreconditionError("input graph is not free of the forbidden family", ["input not fam-free"])
    trace = SymmetrizeTrace(initial=encode_graph6(G))
    count = count_cliques(G, r)
    while True:
        move = find_move(G, fam, r)
        if move is None:
            trace.terminated_by = FIXED_POINT
            break
        if trace.iterations >= budget:
            trace.terminated_by = BUDGET
            break
        kind, source, target, H, gain = move
        after = count_cliques(H, r)
        if after != count + gain:
            raise AssertionError(f"predicted gain {gain} but count went {count} -> {after}")
        trace.steps.append(Step(kind, source, target, count, after, encode_graph6(H)))
        trace.iterations += 1
        G, count = H, after
    trace.final = encode_graph6(G)
    return G, trace
