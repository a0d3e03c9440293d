"""Parameter sweeps that compare closed forms against brute force."""

from __future__ import annotations

import random

from .closed_forms import (
    CheckReport,
    delta_recurrences_check,
    matching_only_value,
    monotonicity_convexity_check,
    theorem_value_kk,
    turan_clique_count,
)
from .canon import canonical_key
from .constructions import turan_graph
from .graph import Graph
from .matching import (
    berge_certificate,
    berge_matching_number,
    berge_matching_numbers,
    matching_number,
    matching_number_rows,
    verify_certificate,
)
from .oracle import ForbiddenSet, extremal_search


def theorem_grid(r_values, k_max: int, s_values, n_max: int):
    """(n, k, r, s) with r <= k <= k_max and max(2s+1, k) <= n <= n_max."""
    for r in r_values:
        for k in range(max(r, 2), k_max + 1):
            for s in s_values:
                for n in range(max(2 * s + 1, k), n_max + 1):
                    yield n, k, r, s


def theorem_sweep(points, *, source="exhaustive", candidates=None, workers=None, name="theorem-kk") -> CheckReport:
    """Oracle value against the max-of-two-constructions formula."""
    report = CheckReport(name)
    for n, k, r, s in points:
        fam = ForbiddenSet((Graph.complete(k + 1),), s)
        oracle = extremal_search(
            n, r, fam, source, candidates=candidates.get(n) if candidates else None, workers=workers
        )
        formula = theorem_value_kk(n, k, r, s)
        report.cases += 1
        report.rows.append({"n": n, "k": k, "r": r, "s": s, "oracle": oracle.value, "formula": formula.value})
        if oracle.value != formula.value:
            report.fail(n=n, k=k, r=r, s=s, oracle=oracle.value, formula=formula.value)
    return report


def gtr_sweep(n_max: int = 7, r_min: int = 3, workers=None) -> CheckReport:
    """ex(n, K_r, K_{k+1}) = Delta^r_{n,k} with T_k(n) the only extremal graph."""
    report = CheckReport("erdos-turan")
    for r in range(r_min, n_max + 1):
        for k in range(r, n_max + 1):
            for n in range(k, n_max + 1):
                rep = extremal_search(n, r, ForbiddenSet((Graph.complete(k + 1),)), workers=workers)
                expected = turan_clique_count(n, k, r)
                keys = {canonical_key(G) for G in rep.witness_graphs()}
                report.cases += 1
                if rep.value != expected:
                    report.fail(n=n, k=k, r=r, oracle=rep.value, formula=expected)
                elif keys != {canonical_key(turan_graph(n, k))}:
                    report.fail(n=n, k=k, r=r, witnesses=rep.witnesses)
    return report


def matching_only_sweep(H: Graph, r: int, s: int, n_values, workers=None) -> CheckReport:
    report = CheckReport("matching-only")
    for n in n_values:
        rep = extremal_search(n, r, ForbiddenSet((H,), s), workers=workers)
        expected = matching_only_value(n, r, s).value
        report.cases += 1
        if rep.value != expected:
            report.fail(n=n, r=r, s=s, oracle=rep.value, formula=expected)
    return report


def recurrence_report(t_max: int = 50, k_max: int = 10) -> CheckReport:
    return delta_recurrences_check(t_max, k_max)


def convexity_sweep(n_max: int = 200, s_max: int = 40, k_max: int = 8) -> CheckReport:
    report = CheckReport("monotonicity-convexity")
    for k in range(3, k_max + 1):
        for r in range(3, k + 1):
            for s in range(1, s_max + 1):
                for n in range(2 * s + 1, n_max + 1):
                    monotonicity_convexity_check(n, k, r, s, report)
    return report


def random_graph(n: int, rng: random.Random, p: float | None = None) -> Graph:
    p = rng.random() if p is None else p
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def berge_sweep(n_max: int = 7, random_count: int = 500, random_n=(8, 16), seed: int = 0) -> CheckReport:
    """Blossom against the Berge brute force: every graph up to n_max, then
    random graphs, with certificate round trips on the random ones."""
    report = CheckReport("tutte-berge")
    for n in range(n_max + 1):
        berge = berge_matching_numbers(n)
        for mask in range(len(berge)):
            G = Graph.from_edge_mask(n, mask)
            nu = matching_number_rows(n, G.adj)
            report.cases += 1
            if nu != berge[mask]:
                report.fail(n=n, mask=mask, blossom=nu, berge=int(berge[mask]))
    rng = random.Random(seed)
    lo, hi = random_n
    for _ in range(random_count):
        G = random_graph(rng.randint(lo, hi), rng)
        nu = matching_number(G)
        report.cases += 1
        if nu != berge_matching_number(G):
            report.fail(graph=list(G.edges()), n=G.n, blossom=nu)
        cert = berge_certificate(G, nu)
        if cert is None or cert.s_witness != nu or not verify_certificate(G, cert, nu):
            report.fail(graph=list(G.edges()), n=G.n, certificate=cert and cert.to_dict())
    return report
