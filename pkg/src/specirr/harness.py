"""Corpus-wide bound verification, extremal searches, and monotonicity grids.

verify_corpus enumerates every isomorphism class up to a vertex cap and
runs each registered inequality check on each graph, emitting a
ViolationReport per failure; a clean run returns an empty list.  The
searches scan connected classes for the smallest (Hong's question) and the
largest irregularity at fixed (n, m), recording outcomes without asserting
them: the minimal-gap question is open and the harness gathers evidence.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping

from .graphs import (
    ENUMERATION_CAP,
    DegreeStats,
    Graph,
    RegularityClass,
    canonical_form,
    classify,
    degree_stats,
    enumerate_graphs,
    is_connected,
    parse_graph6,
    to_graph6,
)
from .spectral import spectral_oracle, spectral_summary
from .bounds import (
    BoundReport,
    bound_report,
    l_high_exact,
    l_low_exact,
    l_high_two_term_exact,
    l_low_two_term_exact,
    low_subregular_rho_upper,
)

DEFAULT_CHECK_TOL = 1e-9
TIE_TOL = 1e-12
SEARCH_CAP = 8


# ---------------------------------------------------------------------------
# Violation reporting
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ViolationReport:
    """One failed inequality on one graph.

    lhs and rhs are oriented so the claim was lhs <= rhs; margin = lhs - rhs
    exceeds the tolerance in a genuine violation.
    """

    graph6: str
    canonical: str
    check_name: str
    lhs: float
    rhs: float
    margin: float
    tolerance: float


@dataclass(frozen=True)
class GraphContext:
    """Everything the checks need about one graph, computed once."""

    graph: Graph
    graph6: str
    canonical: str
    stats: DegreeStats
    regularity: RegularityClass
    connected: bool
    rho: float
    q1: float
    epsilon: float
    report: BoundReport


def build_context(g: Graph) -> GraphContext:
    s = degree_stats(g)
    summary = spectral_summary(g)
    report = bound_report(g)
    return GraphContext(
        graph=g,
        graph6=to_graph6(g),
        canonical=canonical_form(g).hex(),
        stats=s,
        regularity=classify(g),
        connected=is_connected(g),
        rho=summary.rho,
        q1=summary.q1 if summary.q1 is not None else 0.0,
        epsilon=report.epsilon,
        report=report,
    )


CheckFn = Callable[[GraphContext, float], list[tuple[str, float, float]]]


def _le(name: str, lhs: float, rhs: float) -> tuple[str, float, float]:
    return (name, lhs, rhs)


# Each check returns claims of the form lhs <= rhs (checked with tolerance).

def _check_cs_lower(ctx: GraphContext, tol: float):
    return [_le("cs-lower", ctx.stats.avg_degree_float, ctx.rho)]


def _check_cs_equality(ctx: GraphContext, tol: float):
    gap = ctx.rho - ctx.stats.avg_degree_float
    if ctx.regularity is RegularityClass.REGULAR:
        return [_le("cs-equality", abs(gap), 0.0)]
    # Non-regular graphs must sit strictly above the average degree; the
    # claim is framed so the report fires exactly when gap < tol.
    return [_le("cs-equality", 2 * tol, gap)]


def _check_epsilon_sign(ctx: GraphContext, tol: float):
    return [_le("epsilon-nonnegative", -ctx.epsilon, 0.0)]


def _check_variance_sandwich(ctx: GraphContext, tol: float):
    # Compared exactly in rational arithmetic; the emitted claim keeps the
    # true endpoint values but pads the margin so the report always fires.
    s = ctx.stats
    gap = s.max_degree - s.min_degree
    lo = Fraction(gap * gap, 2 * s.n)
    hi = Fraction(gap * gap, 4)
    out = []
    if s.variance < lo:
        out.append(_le("variance-sandwich-lower", float(lo), float(s.variance) - 2 * tol))
    if s.variance > hi:
        out.append(_le("variance-sandwich-upper", float(s.variance), float(hi) - 2 * tol))
    return out


def _check_nikiforov(ctx: GraphContext, tol: float):
    return [_le("nikiforov", ctx.report.nikiforov, ctx.epsilon)]


def _check_main(ctx: GraphContext, tol: float):
    return [_le("main", ctx.report.main, ctx.epsilon)]


def _check_dominance(ctx: GraphContext, tol: float):
    claims = [_le("dominance", ctx.report.nikiforov, ctx.report.main)]
    if ctx.stats.variance > 0:
        # Strictly better whenever the degrees are not all equal; framed so
        # the report fires exactly when the margin drops to TIE_TOL or less.
        diff = ctx.report.main - ctx.report.nikiforov
        claims.append(_le("dominance-strict", tol + TIE_TOL, diff))
    return claims


def _check_cg_degree(ctx: GraphContext, tol: float):
    return [_le("cg-degree", ctx.report.cg_degree, ctx.epsilon)]


def _check_cgs(ctx: GraphContext, tol: float):
    if ctx.report.cgs is None:
        return []
    return [_le("cgs", ctx.report.cgs, ctx.epsilon)]


def _check_hofmeister(ctx: GraphContext, tol: float):
    hof = ctx.report.hofmeister_lb
    return [
        _le("hofmeister", hof, ctx.rho),
        _le("hofmeister-chain", ctx.stats.avg_degree_float, hof),
    ]


def _check_yu_lu_tian(ctx: GraphContext, tol: float):
    ylt = ctx.report.ylt_lb
    if ylt is None:
        return []
    return [
        _le("yu-lu-tian", ylt, ctx.rho),
        _le("yu-lu-tian-chain", ctx.stats.avg_degree_float, ylt),
    ]


def _check_hong_shu_fang(ctx: GraphContext, tol: float):
    if ctx.report.hsf_ub is None:
        return []
    return [_le("hong-shu-fang", ctx.rho, ctx.report.hsf_ub)]


def _check_liu_liu(ctx: GraphContext, tol: float):
    s = ctx.stats
    if s.m == 0:
        return []
    return [
        _le("liu-liu-q1", s.sum_sq_degrees, s.m * ctx.q1),
        _le("liu-liu-degree", s.sum_sq_degrees, 2 * s.m * s.max_degree),
        _le("q1-max-degree", ctx.q1, 2 * s.max_degree),
    ]


def _check_rho_max_degree(ctx: GraphContext, tol: float):
    return [_le("rho-max-degree", ctx.rho, ctx.stats.max_degree)]


def _check_subregular_bounds(ctx: GraphContext, tol: float):
    out = []
    if ctx.report.sub_high is not None:
        out.append(_le("subregular-high", ctx.report.sub_high, ctx.epsilon))
    if ctx.report.sub_low is not None:
        out.append(_le("subregular-low", ctx.report.sub_low, ctx.epsilon))
    return out


def _check_subregular_chain(ctx: GraphContext, tol: float):
    # For connected high subregular graphs on n >= 7 the squared-bound gap
    # divided by 2*Dmax already lower-bounds the irregularity.
    if ctx.report.sub_high is None:
        return []
    n, dmax = ctx.stats.n, ctx.stats.max_degree
    lhs = float(l_high_exact(n, dmax)) / (2 * dmax)
    return [_le("subregular-high-chain", lhs, ctx.epsilon)]


def _check_subregular_delta_cap(ctx: GraphContext, tol: float):
    # A high subregular graph cannot have a dominating vertex.
    if ctx.regularity is not RegularityClass.HIGH_SUBREGULAR:
        return []
    return [_le("subregular-delta-cap", ctx.stats.max_degree, ctx.stats.n - 2)]


def _check_low_subregular_rho_cap(ctx: GraphContext, tol: float):
    if ctx.regularity is not RegularityClass.LOW_SUBREGULAR or not ctx.connected:
        return []
    cap = low_subregular_rho_upper(ctx.stats.max_degree)
    return [_le("low-subregular-rho-cap", ctx.rho, cap)]


def _check_oracle_agreement(ctx: GraphContext, tol: float):
    oracle = spectral_oracle(ctx.graph)
    return [_le("oracle-agreement", abs(ctx.rho - oracle), 0.0)]


CHECK_GROUPS: dict[str, tuple[str, ...]] = {
    "core": ("cs-lower", "cs-equality", "epsilon-sign", "variance-sandwich",
             "rho-max-degree"),
    "bounds": ("nikiforov", "main", "dominance", "cg-degree", "cgs",
               "hofmeister", "yu-lu-tian", "hong-shu-fang", "liu-liu"),
    "subregular": ("subregular-bounds", "subregular-chain",
                   "subregular-delta-cap", "low-subregular-rho-cap"),
    "oracle": ("oracle-agreement",),
}

ALL_CHECKS: dict[str, CheckFn] = {
    "cs-lower": _check_cs_lower,
    "cs-equality": _check_cs_equality,
    "epsilon-sign": _check_epsilon_sign,
    "variance-sandwich": _check_variance_sandwich,
    "rho-max-degree": _check_rho_max_degree,
    "nikiforov": _check_nikiforov,
    "main": _check_main,
    "dominance": _check_dominance,
    "cg-degree": _check_cg_degree,
    "cgs": _check_cgs,
    "hofmeister": _check_hofmeister,
    "yu-lu-tian": _check_yu_lu_tian,
    "hong-shu-fang": _check_hong_shu_fang,
    "liu-liu": _check_liu_liu,
    "subregular-bounds": _check_subregular_bounds,
    "subregular-chain": _check_subregular_chain,
    "subregular-delta-cap": _check_subregular_delta_cap,
    "low-subregular-rho-cap": _check_low_subregular_rho_cap,
    "oracle-agreement": _check_oracle_agreement,
}

# The oracle cross-check is opt-in: it is a consistency check on the
# spectral computation, not one of the corpus inequalities.
DEFAULT_CHECKS: tuple[str, ...] = tuple(
    name for name in ALL_CHECKS if name != "oracle-agreement"
)


def select_checks(only: Iterable[str] | None) -> dict[str, CheckFn]:
    """Resolve check or group names into a registry subset."""
    if only is None:
        return {name: ALL_CHECKS[name] for name in DEFAULT_CHECKS}
    selected: dict[str, CheckFn] = {}
    for token in only:
        if token in CHECK_GROUPS:
            for name in CHECK_GROUPS[token]:
                selected[name] = ALL_CHECKS[name]
        elif token in ALL_CHECKS:
            selected[token] = ALL_CHECKS[token]
        else:
            raise ValueError(f"unknown check or group: {token!r}")
    return selected


def verify_graphs(
    graphs: Iterable[Graph],
    tol: float = DEFAULT_CHECK_TOL,
    checks: Mapping[str, CheckFn] | None = None,
) -> list[ViolationReport]:
    """Run the inequality checks on each graph; return all violations."""
    registry = dict(checks) if checks is not None else select_checks(None)
    violations: list[ViolationReport] = []
    for g in graphs:
        ctx = build_context(g)
        for fn in registry.values():
            for name, lhs, rhs in fn(ctx, tol):
                margin = lhs - rhs
                if margin > tol:
                    violations.append(ViolationReport(
                        graph6=ctx.graph6,
                        canonical=ctx.canonical,
                        check_name=name,
                        lhs=lhs,
                        rhs=rhs,
                        margin=margin,
                        tolerance=tol,
                    ))
    return violations


def verify_corpus(
    n_max: int,
    connected_only: bool = True,
    tol: float = DEFAULT_CHECK_TOL,
    checks: Mapping[str, CheckFn] | None = None,
) -> list[ViolationReport]:
    """Run every check on every isomorphism class with n <= n_max."""
    if not 1 <= n_max <= ENUMERATION_CAP:
        raise ValueError(f"corpus cap is 1 <= n_max <= {ENUMERATION_CAP}, got {n_max}")
    violations: list[ViolationReport] = []
    for n in range(1, n_max + 1):
        violations.extend(
            verify_graphs(enumerate_graphs(n, connected_only=connected_only), tol, checks)
        )
    return violations


# ---------------------------------------------------------------------------
# Extremal searches
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SearchRecord:
    """Extremal graph for one (n, m) cell.

    `graph6` is the arg-optimal connected class (first in enumeration order
    among ties); `ties` lists every co-optimal class within TIE_TOL of the
    optimum together with its degree gap, including the winner.
    """

    objective: str  # "min" or "max"
    n: int
    m: int
    graph6: str
    epsilon: float
    degree_gap: int
    ties: tuple[tuple[str, int], ...]


def _epsilon_of(g: Graph) -> float:
    ctx_rho = spectral_summary(g).rho
    return ctx_rho - 2 * g.m / g.n


def _search_cell(n: int, m: int, objective: str, include_regular: bool) -> SearchRecord | None:
    best: list[tuple[Graph, float]] = []
    sign = 1.0 if objective == "min" else -1.0
    for g in enumerate_graphs(n, m=m, connected_only=True):
        if not include_regular and classify(g) is RegularityClass.REGULAR:
            continue
        eps = _epsilon_of(g)
        if not best:
            best = [(g, eps)]
            continue
        delta = sign * (eps - best[0][1])
        if delta < -TIE_TOL:
            best = [(g, eps)]
        elif delta <= TIE_TOL:
            best.append((g, eps))
    if not best:
        return None
    winner, eps = best[0]
    stats = degree_stats(winner)
    ties = tuple(
        (to_graph6(g), degree_stats(g).max_degree - degree_stats(g).min_degree)
        for g, _ in best
    )
    return SearchRecord(
        objective=objective,
        n=n,
        m=m,
        graph6=to_graph6(winner),
        epsilon=eps,
        degree_gap=stats.max_degree - stats.min_degree,
        ties=ties,
    )


def hong_search(n_values: Iterable[int]) -> list[SearchRecord]:
    """Minimal-irregularity connected non-regular graph for each (n, m).

    One record per feasible cell; cells whose only connected realizations
    are regular produce no record.  Whether every minimizer has degree gap
    1 is recorded, never asserted.
    """
    records: list[SearchRecord] = []
    for n in n_values:
        if not 2 <= n <= SEARCH_CAP:
            raise ValueError(f"search capped at 2 <= n <= {SEARCH_CAP}, got {n}")
        for m in range(n - 1, n * (n - 1) // 2 + 1):
            record = _search_cell(n, m, "min", include_regular=False)
            if record is not None:
                records.append(record)
    return records


def bell_max_search(n: int, m: int) -> SearchRecord:
    """Maximal-irregularity connected graph with n vertices and m edges."""
    if not 2 <= n <= SEARCH_CAP:
        raise ValueError(f"search capped at 2 <= n <= {SEARCH_CAP}, got {n}")
    record = _search_cell(n, m, "max", include_regular=True)
    if record is None:
        raise ValueError(f"no connected graph with n={n}, m={m}")
    return record


# ---------------------------------------------------------------------------
# Monotonicity grid for the closed-form gap functions
# ---------------------------------------------------------------------------

def l_monotonicity_grid(n_min: int = 7, n_max: int = 60) -> dict:
    """Verify, exactly, the structural claims about the gap functions.

    For each n in range: both gap functions are non-increasing in Dmax over
    their domains, the simplified forms coincide with the raw
    quotient-minus-square forms, and the endpoint values dominate their
    simplified tail estimates (2n - 4 + 6/n) / n^2 resp. (2n - 4 - 3/n) / n^2.
    """
    if n_min < 7:
        raise ValueError(f"grid requires n >= 7, got {n_min}")
    if n_max < n_min:
        raise ValueError("empty grid range")
    failures: list[str] = []
    for n in range(n_min, n_max + 1):
        highs = [l_high_exact(n, d) for d in range(2, n - 1)]
        lows = [l_low_exact(n, d) for d in range(2, n)]
        for d in range(2, n - 1):
            if l_high_exact(n, d) != l_high_two_term_exact(n, d):
                failures.append(f"high-form-mismatch n={n} dmax={d}")
        for d in range(2, n):
            if l_low_exact(n, d) != l_low_two_term_exact(n, d):
                failures.append(f"low-form-mismatch n={n} dmax={d}")
        if any(a < b for a, b in zip(highs, highs[1:])):
            failures.append(f"high-not-nonincreasing n={n}")
        if any(a < b for a, b in zip(lows, lows[1:])):
            failures.append(f"low-not-nonincreasing n={n}")
        high_tail = Fraction(2 * n - 4, 1) + Fraction(6, n)
        if l_high_exact(n, n - 2) < high_tail / n**2:
            failures.append(f"high-tail n={n}")
        low_tail = Fraction(2 * n - 4, 1) - Fraction(3, n)
        if l_low_exact(n, n - 1) < low_tail / n**2:
            failures.append(f"low-tail n={n}")
    return {
        "n_min": n_min,
        "n_max": n_max,
        "cells_checked": sum(2 * n - 3 for n in range(n_min, n_max + 1)),
        "violations": failures,
        "ok": not failures,
    }


# ---------------------------------------------------------------------------
# Record reproducibility helper
# ---------------------------------------------------------------------------

def reevaluate_record(record: SearchRecord) -> float:
    """Recompute the irregularity of a stored record's graph6 string."""
    return _epsilon_of(parse_graph6(record.graph6))
