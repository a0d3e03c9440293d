"""Maximum matchings and Tutte-Berge certificates.

``max_matching`` is Edmonds' blossom algorithm. The Berge routines are a
separate, exponential route to the same number: the matching number is
(n - d) / 2 where d is the largest value of odd(G - B) - |B| over vertex
sets B.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import BudgetError, CertificateError
from .graph import Graph, components, members, vertex_mask

CERTIFICATE_BUDGET = 20


@dataclass(frozen=True)
class Matching:
    edges: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.edges)


def _blossom(n: int, nbrs: list[list[int]]) -> list[int]:
    match = [-1] * n
    for v in range(n):
        if match[v] == -1:
            for w in nbrs[v]:
                if match[w] == -1:
                    match[v], match[w] = w, v
                    break

    def augmenting_path(root):
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))

        def lca(a, b):
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if match[a] == -1:
                    break
                a = parent[match[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[match[b]]

        def mark(v, b, child, blossom):
            while base[v] != b:
                blossom[base[v]] = blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        used[root] = True
        queue = [root]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for to in nbrs[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    b = lca(v, to)
                    blossom = [False] * n
                    mark(v, b, to, blossom)
                    mark(to, b, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = b
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        return to, parent
                    used[match[to]] = True
                    queue.append(match[to])
        return -1, parent

    for root in range(n):
        if match[root] != -1:
            continue
        end, parent = augmenting_path(root)
        while end != -1:
            pv = parent[end]
            nxt = match[pv]
            match[end], match[pv] = pv, end
            end = nxt
    return match


def max_matching(G: Graph) -> Matching:
    match = _blossom(G.n, [members(row) for row in G.adj])
    return Matching(tuple((v, w) for v, w in enumerate(match) if v < w))


def matching_number(G: Graph) -> int:
    return max_matching(G).size


def matching_number_rows(n: int, adj) -> int:
    """Matching number straight from bit rows, skipping Graph validation."""
    match = _blossom(n, [members(row) for row in adj])
    return sum(1 for v, w in enumerate(match) if w > v)


def _odd_count(G: Graph, B: int) -> tuple[int, bool]:
    comps = components(G, G.vertex_set & ~B)
    odd = sum(c.bit_count() & 1 for c in comps)
    return odd, odd == len(comps)


def berge_deficiency(G: Graph) -> int:
    """max over B of odd(G - B) - |B|, evaluated for every B at once.

    Each vertex outside B carries the mask of vertices it can reach in
    G - B; a vertex that is the least member of its reach set stands for
    one component.
    """
    n = G.n
    if n > CERTIFICATE_BUDGET:
        raise BudgetError(f"Berge brute force is limited to {CERTIFICATE_BUDGET} vertices")
    if n == 0:
        return 0
    one = np.uint32(1)
    Bs = np.arange(1 << n, dtype=np.uint32)
    keep = np.uint32((1 << n) - 1) & ~Bs
    reach = []
    for v in range(n):
        outside = one - ((Bs >> np.uint32(v)) & one)
        reach.append(((np.uint32(G.adj[v]) & keep) | np.uint32(1 << v)) * outside)
    span = 1
    while span < n - 1:
        for v in range(n):
            acc = reach[v].copy()
            for u in range(n):
                if u != v:
                    acc |= reach[u] * ((reach[v] >> np.uint32(u)) & one)
            reach[v] = acc
        span *= 2
    odd = np.zeros(1 << n, dtype=np.int32)
    for v, rv in enumerate(reach):
        lowest = (rv != 0) & ((rv & np.uint32((1 << v) - 1)) == 0)
        odd += lowest & ((np.bitwise_count(rv) & 1) == 1)
    return int((odd - np.bitwise_count(Bs).astype(np.int32)).max())


def berge_matching_number(G: Graph) -> int:
    return (G.n - berge_deficiency(G)) // 2


@dataclass(frozen=True)
class BergeCertificate:
    """A vertex set B and the components of G - B."""

    B: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]

    @property
    def parities(self) -> tuple[bool, ...]:
        return tuple(len(c) % 2 == 1 for c in self.components)

    @property
    def s_witness(self) -> int:
        return len(self.B) + sum((len(c) - 1) // 2 for c in self.components)

    def to_dict(self) -> dict:
        return {
            "B": sorted(self.B),
            "components": [sorted(c) for c in self.components],
            "s_witness": self.s_witness,
        }

    @classmethod
    def from_dict(cls, data: dict) -> BergeCertificate:
        cert = cls(
            tuple(sorted(data["B"])),
            tuple(tuple(sorted(c)) for c in data["components"]),
        )
        if "s_witness" in data and data["s_witness"] != cert.s_witness:
            raise CertificateError(
                f"stored s_witness {data['s_witness']} != {cert.s_witness} computed from fields"
            )
        return cert


def berge_certificate(G: Graph, s: int) -> BergeCertificate | None:
    """Certificate that G has no matching of s + 1 edges, or None.

    Searches B by increasing size, then lexicographically, for a set that
    attains the maximum deficiency with only odd components left over.
    """
    if G.n > CERTIFICATE_BUDGET:
        raise BudgetError(f"certificate search is limited to {CERTIFICATE_BUDGET} vertices")
    nu = matching_number(G)
    if nu > s:
        return None
    target = G.n - 2 * nu
    for size in range(G.n + 1):
        for Bs in combinations(range(G.n), size):
            B = vertex_mask(Bs)
            odd, all_odd = _odd_count(G, B)
            if all_odd and odd - size == target:
                comps = components(G, G.vertex_set & ~B)
                return BergeCertificate(Bs, tuple(tuple(members(c)) for c in comps))
    # a maximal barrier always leaves only odd components
    raise AssertionError("no all-odd maximum-deficiency set found")


def verify_certificate(G: Graph, cert: BergeCertificate, s: int) -> bool:
    """True iff the listed components are exactly the (odd) components of
    G - B and the certified bound is at most s.

    Raises CertificateError when the certificate names vertices outside G
    or uses a vertex twice.
    """
    problems = []
    seen = 0
    for v in list(cert.B) + [v for c in cert.components for v in c]:
        if not 0 <= v < G.n:
            problems.append(f"vertex {v} out of range")
        elif seen >> v & 1:
            problems.append(f"vertex {v} listed twice")
        seen |= 1 << v if 0 <= v < G.n else 0
    if any(len(c) == 0 for c in cert.components):
        problems.append("empty component")
    if problems:
        raise CertificateError("malformed certificate: " + "; ".join(problems))
    B = vertex_mask(cert.B)
    actual = {tuple(members(c)) for c in components(G, G.vertex_set & ~B)}
    listed = {tuple(sorted(c)) for c in cert.components}
    if actual != listed or len(listed) != len(cert.components):
        return False
    if not all(cert.parities):
        return False
    return cert.s_witness <= s


_POPCOUNT8 = np.array([bin(x).count("1") for x in range(256)], dtype=np.uint8)


def berge_matching_numbers(n: int, masks: np.ndarray | None = None) -> np.ndarray:
    """Matching numbers of many n-vertex graphs given as edge masks.

    Vectorised Berge brute force for n <= 8. Only sets B with
    n - 2|B| > n mod 2 are tried besides B = {}: the empty set already
    reaches deficiency at least n mod 2, and odd(G - B) - |B| <= n - 2|B|.
    """
    if n > 8:
        raise BudgetError("vectorised Berge search supports n <= 8")
    if masks is None:
        masks = np.arange(1 << (n * (n - 1) // 2), dtype=np.int64)
    masks = np.asarray(masks, dtype=np.int64)
    adj = [np.zeros(len(masks), dtype=np.uint8) for _ in range(n)]
    for j in range(1, n):
        for i in range(j):
            bit = ((masks >> (j * (j - 1) // 2 + i)) & 1).astype(np.uint8)
            adj[i] |= bit << j
            adj[j] |= bit << i
    full = (1 << n) - 1
    best = np.full(len(masks), -n - 1, dtype=np.int16)
    for B in range(1 << n):
        size = B.bit_count()
        if B and n - 2 * size <= n % 2:
            continue
        rest = [v for v in range(n) if not B >> v & 1]
        keep = np.uint8(full & ~B)
        reach = {v: (adj[v] & keep) | np.uint8(1 << v) for v in rest}
        span = 1
        while span < len(rest) - 1:
            for v in rest:
                acc = reach[v].copy()
                for u in rest:
                    if u != v:
                        acc |= reach[u] * ((reach[v] >> u) & 1)
                reach[v] = acc
            span *= 2
        odd = np.zeros(len(masks), dtype=np.int16)
        for v in rest:
            lowest = (reach[v] & np.uint8((1 << v) - 1)) == 0
            odd += lowest & (_POPCOUNT8[reach[v]] & 1).astype(bool)
        np.maximum(best, odd - size, out=best)
    return ((n - best) // 2).astype(np.int8)
