"""Law catalog: grids, verdicts, witnesses, determinism, budgets."""

from __future__ import annotations

import itertools

import pytest

from pftopo import (
    CATALOG,
    CATALOG_ORDER,
    Exhaustive,
    Fixtures,
    InclusionMode,
    Randomized,
    SearchDomain,
    check_law,
    check_law_default,
    generate_from_subbase,
    rank_of,
    run_catalog,
)
from pftopo.errors import DomainTooLarge
from pftopo.families import Family
from pftopo.laws import grid_sets, grid_triples

from helpers import brute_grid_triples, closed_form_grid_count

LITERAL = InclusionMode.LITERAL
REVERSED = InclusionMode.REVERSED


# -------------------------------------------------------------------- grid

def test_grid_matches_brute_force_and_closed_form():
    ours = grid_triples(2500)
    brute = tuple(brute_grid_triples(2500))
    assert ours == brute
    assert len(ours) == closed_form_grid_count() == 23
    assert list(ours) == sorted(ours)


def test_grid_sets_counts():
    assert len(grid_sets(1, 2500)) == 23
    assert len(grid_sets(2, 2500)) == 23 ** 2


def test_catalog_is_total():
    assert CATALOG_ORDER == tuple(f"L{i:02d}" for i in range(1, 20))
    assert set(CATALOG) == set(CATALOG_ORDER)


# ---------------------------------------------------------------- verdicts

def test_distributivity_exhaustive_count():
    verdict = check_law("L06", SearchDomain(1, "0.25", 3), LITERAL)
    assert verdict.holds
    assert verdict.instances == 23 ** 3 == 12167
    for clause in verdict.clauses:
        assert clause.evaluated == 12167


def test_between_null_and_full_split_verdict():
    verdict = check_law_default("L15", LITERAL)
    outcomes = {c.clause: c for c in verdict.clauses}
    assert not outcomes["below-full"].holds
    assert outcomes["above-null"].holds
    assert not verdict.holds
    # canonical first witness: the first grid set with a positive neutral grade
    witness = outcomes["below-full"].witness
    assert witness.sets[0].raw_vector() == (0, 2500, 0)


def test_class_pair_constants_counterexample():
    verdict = check_law_default("L14", LITERAL)
    outcomes = {c.clause: c for c in verdict.clauses}
    assert not outcomes["below-full"].holds
    assert outcomes["above-null"].holds
    witness = outcomes["below-full"].witness
    assert [s.raw_vector() for s in witness.sets] == [(0, 2500, 0), (0, 2500, 0)]
    # evaluated = number of neutral-equivalent ordered pairs, recomputed
    by_rho = {}
    for m, r, s in brute_grid_triples():
        by_rho[r] = by_rho.get(r, 0) + 1
    assert outcomes["below-full"].evaluated == sum(n * n for n in by_rho.values())


def test_chain_law_advisory_clause():
    verdict = check_law_default("L17", LITERAL)
    outcomes = {c.clause: c for c in verdict.clauses}
    assert outcomes["closed-form"].holds
    assert not outcomes["bare-chain"].holds
    assert outcomes["bare-chain"].advisory
    assert verdict.holds  # advisory failures do not flip the law


def test_rank_bound_counterexample_from_fixture():
    verdict = check_law_default("L18", LITERAL)
    assert not verdict.holds
    failing = [c for c in verdict.clauses if not c.holds]
    assert len(failing) == 1
    clause = failing[0]
    assert clause.domain.startswith("fixtures")
    assert "rank 4" in clause.witness.detail
    # replay the witness through the pipeline
    sets = clause.witness.sets
    family = Family.build(sets[0].universe, ((f"S{i}", s) for i, s in enumerate(sets)))
    assert rank_of(generate_from_subbase(family).topology) == 4 > len(frozenset(sets)) + 1
    # the grid portion of the domain finds no counterexample
    grid_clauses = [c for c in verdict.clauses if c.domain.startswith("exhaustive")]
    assert all(c.holds for c in grid_clauses)


def test_literal_catalog_pattern_small():
    expected_failing = {"L14", "L15", "L18"}
    for law_id in CATALOG_ORDER:
        verdict = check_law_default(law_id, LITERAL) if CATALOG[law_id].arity < 3 \
            else check_law(law_id, SearchDomain(1, "0.25", 3), LITERAL)
        assert verdict.holds == (law_id not in expected_failing), law_id


def test_reversed_catalog_pattern_small():
    expected_failing = {"L07", "L08", "L09", "L10", "L14", "L15", "L18"}
    for law_id in CATALOG_ORDER:
        verdict = check_law_default(law_id, REVERSED) if CATALOG[law_id].arity < 3 \
            else check_law(law_id, SearchDomain(1, "0.25", 3), REVERSED)
        assert verdict.holds == (law_id not in expected_failing), law_id


def test_reversed_flips_the_split():
    verdict = check_law_default("L15", REVERSED)
    outcomes = {c.clause: c for c in verdict.clauses}
    assert outcomes["below-full"].holds
    assert not outcomes["above-null"].holds


def test_witnesses_self_certify_on_literal_defaults():
    for law_id in ("L14", "L15", "L18"):
        law = CATALOG[law_id]
        verdict = check_law_default(law_id, LITERAL)
        for outcome in verdict.clauses:
            if outcome.witness is None:
                continue
            clause = next(c for c in law.clauses if c.id == outcome.clause)
            assert clause.check(outcome.witness.sets, LITERAL) is False


# ------------------------------------------------------- strategies/budget

def test_vacuous_randomized_domain():
    domain = SearchDomain(1, "0.25", 2, Randomized(0, seed=5))
    for law_id in ("L02", "L14"):
        verdict = check_law(law_id, domain, LITERAL)
        assert verdict.holds
        assert verdict.instances == 0
        assert verdict.vacuous


def test_randomized_is_deterministic():
    domain = SearchDomain(2, "0.10", 2, Randomized(500, seed=99))
    first = check_law("L09", domain, LITERAL)
    second = check_law("L09", domain, LITERAL)
    assert first == second
    assert first.instances == 500


def test_domain_budget_guards_exhaustive():
    with pytest.raises(DomainTooLarge):
        check_law("L06", SearchDomain(2, "0.25", 3), LITERAL)
    with pytest.raises(DomainTooLarge):
        check_law("L16", SearchDomain(2, "0.25", 2), LITERAL)


def test_run_catalog_subset_and_order():
    verdicts = run_catalog(LITERAL, law_ids=("L01", "L19"),
                           domain=SearchDomain(1, "0.25", 1))
    assert [v.law for v in verdicts] == ["L01", "L19"]
    with pytest.raises(KeyError):
        run_catalog(LITERAL, law_ids=("L99",))
    with pytest.raises(KeyError):
        check_law("L00", SearchDomain(1, "0.25", 2))


def test_explicit_domain_substitutes_arity():
    verdicts = run_catalog(LITERAL, law_ids=("L03",), domain=SearchDomain(1, "0.25", 1))
    assert verdicts[0].instances == 23 ** 3


def test_fixture_domain_only_feeds_fixture_laws():
    verdict = check_law("L18", SearchDomain(3, "0.25", 2, Fixtures()), LITERAL)
    assert verdict.instances == 1
    assert not verdict.holds


def test_search_domain_validation():
    with pytest.raises(ValueError):
        SearchDomain(4, "0.25", 2)
    with pytest.raises(ValueError):
        SearchDomain(1, "0.33", 2)
    with pytest.raises(ValueError):
        SearchDomain(1, "0.25", 0)


# -------------------------------------------- independent spot verification

def test_disproved_inclusion_claim_verified_by_hand():
    """Under the literal mode the full set only contains zero-neutral sets:
    re-derive the below-full failures by direct comparison."""
    from pftopo import full, includes
    from helpers import mk
    from pftopo import Universe

    u = Universe.of("x")
    for raw in brute_grid_triples():
        s = mk(u, raw)
        assert includes(s, full(u), LITERAL) == (raw[1] == 0)
