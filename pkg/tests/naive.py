"""Deliberately slow reference implementations used as test oracles.

They work on plain edge sets and share no code with the package.
"""

from itertools import combinations, permutations


def edge_set(G):
    return {frozenset(e) for e in G.edges()}


def naive_count_cliques(G, r):
    E = edge_set(G)
    return sum(
        all(frozenset(p) in E for p in combinations(sub, 2))
        for sub in combinations(range(G.n), r)
    )


def naive_contains(G, H):
    """Try every injective placement of H's vertices."""
    if H.n > G.n:
        return False
    E = edge_set(G)
    h_edges = list(H.edges())
    for image in permutations(range(G.n), H.n):
        if all(frozenset((image[a], image[b])) in E for a, b in h_edges):
            return True
    return False


def naive_matching_number(G):
    edges = list(G.edges())
    for size in range(len(edges), 0, -1):
        if size * 2 > G.n:
            continue
        for subset in combinations(edges, size):
            used = [v for e in subset for v in e]
            if len(set(used)) == len(used):
                return size
    return 0


def naive_graph6(n, edges):
    """graph6 written straight from the format description."""
    E = {frozenset(e) for e in edges}
    bits = [1 if frozenset((i, j)) in E else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = chr(n + 63)
    for k in range(0, len(bits), 6):
        out += chr(int("".join(map(str, bits[k:k + 6])), 2) + 63)
    return out
