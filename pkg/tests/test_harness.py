"""Verification harness: corpus sweeps, check injection, searches, grids."""

import math

import pytest

from specirr import (
    bell_max_search,
    hong_search,
    l_monotonicity_grid,
    parse_graph6,
    verify_corpus,
    verify_graphs,
)
from specirr.bounds import l_high_exact
from specirr.graphs import enumerate_graphs
from specirr.harness import reevaluate_record, select_checks


# ---------------------------------------------------------------------------
# Corpus verification
# ---------------------------------------------------------------------------

def test_verify_small_connected_corpus_clean():
    assert verify_corpus(5, connected_only=True) == []


def test_verify_small_full_corpus_clean():
    # Disconnected graphs included: the unconditional bounds must hold there
    # too, and the connectivity-gated ones must stay silent.
    assert verify_corpus(5, connected_only=False) == []


def test_verify_rejects_oversized_cap():
    with pytest.raises(ValueError, match="corpus cap"):
        verify_corpus(10)


def test_corrupted_check_is_detected():
    # Harness self-test: a deliberately broken inequality must produce
    # violations with the right metadata.
    def corrupted(ctx, tol):
        return [("corrupted-main", ctx.report.main * 10.0, ctx.epsilon)]

    violations = verify_corpus(4, checks={"corrupted-main": corrupted})
    assert violations
    sample = violations[0]
    assert sample.check_name == "corrupted-main"
    assert sample.margin > sample.tolerance
    assert parse_graph6(sample.graph6).n <= 4


def test_strictness_checks_fire_on_degenerate_values():
    # Tampered contexts: equal bounds must trip dominance-strict, and a
    # non-regular graph pinned at the average degree must trip cs-equality.
    import dataclasses
    from specirr.harness import ALL_CHECKS, build_context
    from specirr.graphs import from_edges

    paw = from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    ctx = build_context(paw)
    tol = 1e-9

    flattened = dataclasses.replace(
        ctx, report=dataclasses.replace(ctx.report, main=ctx.report.nikiforov))
    claims = ALL_CHECKS["dominance"](flattened, tol)
    assert any(name == "dominance-strict" and lhs - rhs > tol
               for name, lhs, rhs in claims)

    pinned = dataclasses.replace(ctx, rho=ctx.stats.avg_degree_float)
    claims = ALL_CHECKS["cs-equality"](pinned, tol)
    assert any(lhs - rhs > tol for _, lhs, rhs in claims)


def test_select_checks_groups_and_names():
    sub = select_checks(["subregular"])
    assert set(sub) == {"subregular-bounds", "subregular-chain",
                        "subregular-delta-cap", "low-subregular-rho-cap"}
    single = select_checks(["nikiforov"])
    assert set(single) == {"nikiforov"}
    with pytest.raises(ValueError, match="unknown check"):
        select_checks(["no-such-check"])


def test_default_checks_exclude_oracle():
    assert "oracle-agreement" not in select_checks(None)
    assert "oracle-agreement" in select_checks(["oracle"])


def test_oracle_group_clean_on_small_corpus():
    checks = select_checks(["oracle"])
    assert verify_graphs(enumerate_graphs(5), checks=checks) == []


# ---------------------------------------------------------------------------
# Hong search
# ---------------------------------------------------------------------------

def test_hong_n4():
    records = hong_search([4])
    by_m = {r.m: r for r in records}
    # m=3: P4 beats the star (0.118 < 0.232)
    assert set(by_m) == {3, 4, 5}
    p4 = by_m[3]
    assert sorted(parse_graph6(p4.graph6).degrees) == [1, 1, 2, 2]
    assert p4.epsilon == pytest.approx(2 * math.cos(math.pi / 5) - 1.5, abs=1e-9)
    assert p4.degree_gap == 1
    # m=6 is K4 only (regular): no record
    assert 6 not in by_m
    assert all(r.objective == "min" for r in records)


def test_hong_records_are_deterministic_and_reproducible():
    first = hong_search([4, 5])
    second = hong_search([4, 5])
    assert first == second
    for record in first:
        assert abs(reevaluate_record(record) - record.epsilon) <= 1e-12


def test_hong_ties_include_winner():
    for record in hong_search([4]):
        assert record.graph6 == record.ties[0][0]
        assert record.degree_gap == record.ties[0][1]


def test_hong_cap():
    with pytest.raises(ValueError, match="capped"):
        hong_search([9])


# ---------------------------------------------------------------------------
# Bell max search
# ---------------------------------------------------------------------------

def test_bell_n4_m3_star_wins():
    record = bell_max_search(4, 3)
    assert sorted(parse_graph6(record.graph6).degrees) == [1, 1, 1, 3]
    assert record.epsilon == pytest.approx(math.sqrt(3) - 1.5, abs=1e-9)
    assert record.objective == "max"


def test_bell_n4_m6_complete_only():
    record = bell_max_search(4, 6)
    assert record.epsilon == pytest.approx(0.0, abs=1e-9)


def test_bell_n5_trees_star_wins():
    record = bell_max_search(5, 4)
    assert sorted(parse_graph6(record.graph6).degrees) == [1, 1, 1, 1, 4]


def test_bell_infeasible_cell():
    with pytest.raises(ValueError, match="no connected graph"):
        bell_max_search(5, 2)


def test_bell_cap():
    with pytest.raises(ValueError, match="capped"):
        bell_max_search(9, 8)


# ---------------------------------------------------------------------------
# Monotonicity grid
# ---------------------------------------------------------------------------

def test_grid_clean_up_to_60():
    report = l_monotonicity_grid(7, 60)
    assert report["ok"]
    assert report["violations"] == []


def test_grid_rejects_small_n():
    with pytest.raises(ValueError, match="n >= 7"):
        l_monotonicity_grid(6, 10)


def test_l_high_strictly_decreasing_at_seven():
    values = [l_high_exact(7, d) for d in range(2, 6)]
    assert all(a > b for a, b in zip(values, values[1:]))
