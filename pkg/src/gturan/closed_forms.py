"""Exact integer evaluation of the clique-count formulas.

``turan_clique_count(t, k, r)`` is the number of r-cliques in the Turan
graph T_k(t); everything else is assembled from it. No floating point is
used anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

from .constructions import PartitionSpec, complete_multipartite, g_parts, turan_parts
from .errors import DomainError
from .graph import Graph, checked_count, disjoint_union

TURAN_SIDE = "turan-side"
JOIN_SIDE = "join-side"
TIE = "tie"


@lru_cache(maxsize=1 << 16)
def turan_clique_count(t: int, k: int, r: int) -> int:
    """Number of r-cliques in T_k(t).

    With q = t // k and m = t % k the graph has m parts of size q + 1 and
    k - m parts of size q, and an r-clique picks r distinct parts.
    """
    if min(t, k, r) < 0:
        raise DomainError(f"negative argument: t={t}, k={k}, r={r}")
    if r == 0:
        return 1
    if k == 0 or r > k or t < r:
        return 0
    q, m = divmod(t, k)
    total = sum(
        comb(m, i) * comb(k - m, r - i) * (q + 1) ** i * q ** (r - i)
        for i in range(max(0, r - (k - m)), min(m, r) + 1)
    )
    return checked_count(total)


def g_value(n: int, k: int, r: int, t: int) -> int:
    """(n - t) * Delta^{r-1}_{t,k-1} + Delta^r_{t,k-1}: r-cliques of G_k(n, t)."""
    if k < 2 or r < 1 or not 0 <= t <= n:
        raise DomainError(f"g needs n >= t >= 0, k >= 2, r >= 1; got n={n}, k={k}, r={r}, t={t}")
    return checked_count(
        (n - t) * turan_clique_count(t, k - 1, r - 1) + turan_clique_count(t, k - 1, r)
    )


def f_value(n: int, k: int, r: int, s: int, b: int) -> int:
    """Delta^r_{2s-b+1,k} + (n - 2s + b - 1) * Delta^{r-1}_{b,k-1}."""
    if not 0 <= b <= s or n < 2 * s + 1 or k < 2 or r < 1:
        raise DomainError(
            f"f needs 0 <= b <= s, n >= 2s+1, k >= 2, r >= 1; got n={n}, k={k}, r={r}, s={s}, b={b}"
        )
    return checked_count(
        turan_clique_count(2 * s - b + 1, k, r)
        + (n - 2 * s + b - 1) * turan_clique_count(b, k - 1, r - 1)
    )


@dataclass(frozen=True)
class TheoremValue:
    """An extremal value together with the constructions attaining it.

    Each witness is ``(spec, isolated)``: the complete multipartite graph
    ``spec`` plus ``isolated`` extra isolated vertices.
    """

    value: int
    dominant_side: str
    witnesses: tuple[tuple[PartitionSpec, int], ...] = field(default=())

    @property
    def witness_spec(self) -> PartitionSpec:
        return self.witnesses[0][0]

    def witness_graphs(self) -> list[Graph]:
        return [
            disjoint_union(complete_multipartite(spec), Graph.empty(isolated))
            for spec, isolated in self.witnesses
        ]

    def describe(self) -> str:
        labels = []
        for spec, isolated in self.witnesses:
            label = str(spec)
            if isolated:
                label += f" + {isolated}K_1"
            labels.append(label)
        return f"{self.value} ({self.dominant_side}, {' | '.join(labels)})"

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "dominant_side": self.dominant_side,
            "witnesses": [
                {"parts": list(spec.parts), "isolated": isolated}
                for spec, isolated in self.witnesses
            ],
        }


def _pick(a_value, a_witness, b_value, b_witness) -> TheoremValue:
    if a_value > b_value:
        return TheoremValue(a_value, TURAN_SIDE, (a_witness,))
    if b_value > a_value:
        return TheoremValue(b_value, JOIN_SIDE, (b_witness,))
    return TheoremValue(a_value, TIE, (a_witness, b_witness))


def theorem_value_kk(n: int, k: int, r: int, s: int) -> TheoremValue:
    """Maximum number of r-cliques in an n-vertex graph with no K_{k+1}
    and no matching of s + 1 edges.

    The maximum is taken over T_k(2s+1) padded with isolated vertices and
    G_k(n, s). Valid for n >= 2s + 1 and k >= r >= 2.
    """
    if n < 2 * s + 1 or s < 0:
        raise DomainError(f"need n >= 2s + 1, got n={n}, s={s}")
    if not k >= r >= 2:
        raise DomainError(f"need k >= r >= 2, got k={k}, r={r}")
    turan = turan_clique_count(2 * s + 1, k, r)
    joined = g_value(n, k, r, s)
    return _pick(
        turan,
        (PartitionSpec(turan_parts(2 * s + 1, k)), n - 2 * s - 1),
        joined,
        (PartitionSpec(g_parts(n, k, s)), 0),
    )


def matching_only_value(n: int, r: int, s: int) -> TheoremValue:
    """Maximum number of r-cliques in an n-vertex graph with matching
    number at most s: the better of K_{2s+1} and G_{s+1}(n, s)."""
    if n < 2 * s + 1 or s < 0:
        raise DomainError(f"need n >= 2s + 1, got n={n}, s={s}")
    if r < 2:
        raise DomainError(f"need r >= 2, got r={r}")
    clique = comb(2 * s + 1, r)
    joined = comb(s, r) + (n - s) * comb(s, r - 1)
    return _pick(
        checked_count(clique),
        (PartitionSpec((1,) * (2 * s + 1)), n - 2 * s - 1),
        checked_count(joined),
        (PartitionSpec(g_parts(n, s + 1, s)), 0),
    )


def bipartite_slope(H: Graph, r: int) -> int:
    """Leading coefficient binom(p(H) - 1, r - 1) for bipartite H."""
    from .oracle import chromatic_number, p_value

    if H.num_edges == 0 or chromatic_number(H) != 2:
        raise DomainError("bipartite slope needs a bipartite graph with at least one edge")
    if r < 1:
        raise DomainError("clique order must be at least 1")
    return comb(p_value(H) - 1, r - 1)


def crossover(k: int, r: int, s: int) -> int | None:
    """Smallest n >= 2s + 1 where the join construction catches up with
    T_k(2s+1), or None if it never does."""
    if not k >= r >= 2 or s < 1:
        raise DomainError(f"need k >= r >= 2 and s >= 1, got k={k}, r={r}, s={s}")
    target = turan_clique_count(2 * s + 1, k, r)
    slope = turan_clique_count(s, k - 1, r - 1)
    intercept = turan_clique_count(s, k - 1, r)
    n0 = 2 * s + 1
    if slope == 0:
        return n0 if intercept >= target else None
    # smallest n with (n - s) * slope + intercept >= target
    need = -(-(target - intercept) // slope)
    return max(n0, s + need)


@dataclass
class CheckReport:
    """Outcome of an identity sweep: cases checked and the first failure."""

    name: str
    cases: int = 0
    counterexample: dict | None = None
    rows: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def fail(self, **details):
        if self.counterexample is None:
            self.counterexample = details

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "cases": self.cases,
            "counterexample": self.counterexample,
        }


def delta_recurrences_check(t_max: int, k_max: int, *, t_min: int | None = None) -> CheckReport:
    """Check both Turan-count recurrences for 1 <= r <= k <= k_max and
    k <= t <= t_max (or t_min <= t when given)."""
    if t_max < 1 or k_max < 1:
        raise DomainError("bounds must be positive")
    report = CheckReport("delta-recurrences")
    D = turan_clique_count
    for k in range(1, k_max + 1):
        for r in range(1, k + 1):
            for t in range(max(k, t_min or k), t_max + 1):
                q = t // k
                step_lhs = D(t + 1, k, r) - D(t, k, r)
                step_rhs = D(t - q, k - 1, r - 1)
                split_rhs = D(t - q, k - 1, r) + q * D(t - q, k - 1, r - 1)
                report.cases += 1
                if step_lhs != step_rhs:
                    report.fail(identity="increment", t=t, k=k, r=r, lhs=step_lhs, rhs=step_rhs)
                if D(t, k, r) != split_rhs:
                    report.fail(identity="split", t=t, k=k, r=r, lhs=D(t, k, r), rhs=split_rhs)
    return report


def monotonicity_convexity_check(n: int, k: int, r: int, s: int, report: CheckReport | None = None) -> CheckReport:
    """Check that g increases strictly on k <= t <= s, that the first
    differences of f are non-decreasing on 0 <= b <= s - 1, and that f
    never exceeds max(f(0), f(s))."""
    if n < 2 * s + 1 or not k >= r >= 3 or s < 0:
        raise DomainError(f"need n >= 2s+1 and k >= r >= 3; got n={n}, k={k}, r={r}, s={s}")
    report = report or CheckReport("monotonicity-convexity")
    for t in range(k, s):
        report.cases += 1
        lo, hi = g_value(n, k, r, t), g_value(n, k, r, t + 1)
        if hi <= lo:
            report.fail(property="g-increasing", n=n, k=k, r=r, t=t, g_t=lo, g_next=hi)
        closed = (n - 1 - t - t // (k - 1)) * turan_clique_count(t - t // (k - 1), k - 2, r - 2)
        if hi - lo != closed:
            report.fail(property="g-difference", n=n, k=k, r=r, t=t, diff=hi - lo, closed=closed)
    fs = [f_value(n, k, r, s, b) for b in range(s + 1)]
    diffs = [fs[b + 1] - fs[b] for b in range(s)]
    for b in range(len(diffs) - 1):
        report.cases += 1
        if diffs[b + 1] < diffs[b]:
            report.fail(property="f-convex", n=n, k=k, r=r, s=s, b=b, d_b=diffs[b], d_next=diffs[b + 1])
    report.cases += 1
    if max(fs) > max(fs[0], fs[s]):
        report.fail(property="f-endpoints", n=n, k=k, r=r, s=s, f=fs)
    return report
