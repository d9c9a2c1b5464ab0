"""Closure pipelines: bases from sub-bases, topologies from bases."""

from __future__ import annotations

import itertools
import random

import pytest

from pftopo import (
    Family,
    Grade,
    MembershipTriple,
    PictureFuzzySet,
    Universe,
    chain_topology,
    check_axioms,
    check_base,
    full,
    generate_from_base,
    generate_from_subbase,
    intersection,
    intersection_closure,
    null,
    pfs_from_decimals,
    rank_of,
    trivial_topology,
    union,
    union_closure,
    zero_rho_join,
)
from pftopo.errors import (
    ContainsBoundary,
    EmptyFamily,
    NotABalancedChain,
    NotABase,
    NotMinimal,
)
from pftopo.expr import evaluate

from helpers import brute_grid_triples, mk, naive_closure, vec_of
from printed import printed_family, printed_values

U1 = Universe.of("x")


# ---------------------------------------------------------------- closures

def test_intersection_closure_adds_new_member(incomparable_pair):
    closed = intersection_closure(incomparable_pair)
    k1, k2 = incomparable_pair.get("K1"), incomparable_pair.get("K2")
    assert closed.value_set() == frozenset((k1, k2, intersection(k1, k2)))
    assert check_base(closed).is_base


def test_intersection_closure_of_nested_pair_is_itself(nested_pair):
    closed = intersection_closure(nested_pair)
    assert closed.value_set() == nested_pair.value_set()
    assert len(closed) == 2


def test_intersection_closure_singleton(abc, incomparable_pair):
    single = Family.build(abc, [("K1", incomparable_pair.get("K1"))])
    assert intersection_closure(single).value_set() == single.value_set()


def test_closure_rejects_boundary_and_empty(abc):
    with pytest.raises(ContainsBoundary):
        intersection_closure(Family.build(abc, [("I", full(abc))]))
    with pytest.raises(EmptyFamily):
        intersection_closure(Family.build(abc, []))
    with pytest.raises(EmptyFamily):
        union_closure(Family.build(abc, []))


def test_union_closure_published_values(incomparable_pair, abc):
    k1, k2 = incomparable_pair.get("K1"), incomparable_pair.get("K2")
    k3 = intersection(k1, k2)
    base = Family.build(abc, [("K1", k1), ("K2", k2), ("K3", k3)])
    closed = union_closure(base)
    assert closed.value_set() == frozenset((k1, k2, k3, union(k1, k2)))


def test_union_closure_of_mixed_base(mixed_pair, abc):
    n1, n2 = mixed_pair.get("K1"), mixed_pair.get("K2")
    n3 = intersection(n1, n2)
    base = Family.build(abc, [("N1", n1), ("N2", n2), ("N3", n3)])
    closed = union_closure(base)
    expected = frozenset((n1, n2, n3, union(n1, n2), union(n1, n3), union(n2, n3)))
    assert closed.value_set() == expected
    assert len(expected) == 6


def test_union_closure_of_balanced_chain_is_itself(balanced_pair):
    # along a balanced chain the union of two members is the lower one
    closed = union_closure(balanced_pair)
    assert closed.value_set() == balanced_pair.value_set()


def test_union_closure_of_plain_nested_pair_adds_member(nested_pair):
    # inclusion alone does not make unions absorb: the union takes the
    # smaller neutral grade from the lower member and is a new value
    k1, k2 = nested_pair.get("K1"), nested_pair.get("K2")
    closed = union_closure(nested_pair)
    assert closed.value_set() == frozenset((k1, k2, union(k1, k2)))
    assert union(k1, k2) != k2


# ------------------------------------------------------------- generation

def test_generate_published_ten(incomparable_pair):
    trace = generate_from_subbase(incomparable_pair)
    assert len(trace.topology) == 10
    assert trace.topology.value_set() == printed_values("incomparable_topology")
    assert rank_of(trace.topology) == 2


def test_generate_published_seven(nested_pair):
    trace = generate_from_subbase(nested_pair)
    assert len(trace.topology) == 7
    assert trace.topology.value_set() == printed_values("nested_topology")
    assert rank_of(trace.topology) == 3


def test_generate_published_five(balanced_pair):
    trace = generate_from_subbase(balanced_pair)
    assert len(trace.topology) == 5
    assert trace.topology.value_set() == printed_values("balanced_topology")
    assert rank_of(trace.topology) == 3


def test_generate_published_twelve(mixed_pair):
    trace = generate_from_subbase(mixed_pair)
    assert len(trace.topology) == 12
    assert trace.topology.value_set() == printed_values("mixed_topology")
    assert rank_of(trace.topology) == 4


def test_generate_double_chain_closure(double_chain):
    trace = generate_from_subbase(double_chain)
    assert len(trace.topology) == 8
    assert trace.topology.value_set() == printed_values("double_chain_closure")
    # the two members beyond the published six are the null-joins
    published_six = frozenset(
        (full(double_chain.universe), null(double_chain.universe))
    ) | double_chain.value_set()
    extras = trace.topology.value_set() - published_six
    assert extras == frozenset(
        (zero_rho_join(double_chain.get("C1")), zero_rho_join(double_chain.get("C2")))
    )


def test_generate_from_base_directly(balanced_pair):
    trace = generate_from_base(balanced_pair)
    assert trace.topology.value_set() == printed_values("balanced_topology")


def test_generate_rejects_non_base(incomparable_pair):
    with pytest.raises(NotABase):
        generate_from_base(incomparable_pair)


def test_generate_singleton_with_zero_rho(abc):
    k = pfs_from_decimals(abc, [("0.25", "0.00", "0.30")] * 3)
    trace = generate_from_subbase(Family.build(abc, [("K1", k)]))
    assert trace.topology.value_set() == frozenset((full(abc), null(abc), k))
    assert rank_of(trace.topology) == 1


def test_generate_requires_minimality_when_asked(double_chain, incomparable_pair, abc):
    with pytest.raises(NotMinimal) as err:
        generate_from_subbase(double_chain, require_minimal=True)
    assert err.value.witness == ("C1", "C4")
    # vacuously minimal sub-bases pass the flag
    trace = generate_from_subbase(incomparable_pair, require_minimal=True)
    assert len(trace.topology) == 10


def test_generate_rejects_boundary_members(abc, incomparable_pair):
    family = Family.build(abc, [("K1", incomparable_pair.get("K1")), ("FULL", full(abc))])
    with pytest.raises(ContainsBoundary):
        generate_from_subbase(family)


def test_intersection_closure_reaching_null_raises():
    u = Universe.of("p", "q")
    k1 = mk(u, (0, 0, 10000), (3000, 0, 2000))
    k2 = mk(u, (5000, 0, 3000), (0, 0, 10000))
    family = Family.build(u, [("K1", k1), ("K2", k2)])
    assert intersection(k1, k2) == null(u)
    with pytest.raises(NotABase):
        generate_from_subbase(family)


def test_union_closure_reaching_full_is_deduplicated():
    u = Universe.of("p", "q")
    k1 = mk(u, (10000, 0, 0), (3000, 0, 0))
    k2 = mk(u, (2000, 0, 0), (10000, 0, 0))
    k3 = intersection(k1, k2)
    base = Family.build(u, [("K1", k1), ("K2", k2), ("K3", k3)])
    trace = generate_from_base(base)
    assert union(k1, k2) == full(u)
    assert check_axioms(trace.topology).is_topology
    assert trace.topology.value_set() == frozenset((full(u), null(u), k1, k2, k3))
    assert trace.topology.members[0].name == "I"


# ------------------------------------------------------------------ chains

def test_chain_topology_of_balanced_pair(balanced_pair):
    trace = chain_topology(balanced_pair)
    assert trace.topology.value_set() == printed_values("balanced_topology")
    assert len(trace.topology) == 5


def test_chain_topology_zero_rho_chain(abc):
    rows = [("0.10", "0.00", "0.50"), ("0.20", "0.00", "0.40"), ("0.30", "0.00", "0.30")]
    chain = [pfs_from_decimals(abc, [row] * 3) for row in rows]
    family = Family.build(abc, [(f"C{i}", s) for i, s in enumerate(chain, 1)])
    trace = chain_topology(family)
    assert trace.topology.value_set() == frozenset((full(abc), null(abc), *chain))
    assert len(trace.topology) == 5  # exactly k + 2 when a member has zero rho


def test_chain_topology_positive_rho_chain(abc):
    rows = [("0.10", "0.10", "0.50"), ("0.10", "0.20", "0.50"), ("0.10", "0.30", "0.50")]
    chain = [pfs_from_decimals(abc, [row] * 3) for row in rows]
    family = Family.build(abc, [(f"C{i}", s) for i, s in enumerate(chain, 1)])
    trace = chain_topology(family)
    # k + 3 members: the null-join of the first member is new
    assert len(trace.topology) == 6
    assert trace.topology.value_set() == frozenset(
        (full(abc), null(abc), *chain, zero_rho_join(chain[0]))
    )


def test_chain_topology_rejects_unbalanced(incomparable_pair):
    with pytest.raises(NotABalancedChain) as err:
        chain_topology(incomparable_pair)
    assert err.value.witness == ("K1", "K2")


def test_trivial_topology(abc):
    family = trivial_topology(abc)
    assert len(family) == 2
    assert check_axioms(family).is_topology
    assert rank_of(family) == 1


# -------------------------------------------------------------- provenance

@pytest.mark.parametrize("fixture_name", [
    "incomparable_pair", "nested_pair", "balanced_pair", "mixed_pair", "double_chain",
])
def test_provenance_reevaluates(fixture_name, request):
    subbase = request.getfixturevalue(fixture_name)
    trace = generate_from_subbase(subbase)
    for layer in (trace.base, trace.union_layer, trace.topology):
        for member in layer:
            expr = trace.provenance_for(member.name)
            assert evaluate(expr, trace.subbase) == member.value


def test_input_names_win_over_synthetic(nested_pair):
    trace = generate_from_subbase(nested_pair)
    # the nested pair is already intersection-closed: names are preserved
    assert set(trace.base.names()) == {"K1", "K2"}
    assert "K1" in trace.topology.names()


def test_topology_canonical_order(mixed_pair):
    trace = generate_from_subbase(mixed_pair)
    names = trace.topology.names()
    assert names[0] == "I"
    assert names[1] == "O"
    vectors = [m.value.raw_vector() for m in trace.topology.members[2:]]
    assert vectors == sorted(vectors)


def test_generation_is_deterministic(mixed_pair):
    a = generate_from_subbase(mixed_pair)
    b = generate_from_subbase(mixed_pair)
    assert a.topology.names() == b.topology.names()
    assert a.topology.value_set() == b.topology.value_set()
    assert a.provenance == b.provenance


# -------------------------------------------------------------- properties

def test_generated_equals_brute_closure_for_sample_pairs():
    triples = brute_grid_triples()
    rng = random.Random(7)
    full_vec = ((10000, 0, 0),)
    null_vec = ((0, 0, 10000),)
    for _ in range(40):
        va, vb = rng.sample(triples, 2)
        a, b = mk(U1, va), mk(U1, vb)
        trace = generate_from_subbase(Family.build(U1, [("A", a), ("B", b)]))
        generated = {vec_of(m.value) for m in trace.topology}
        assert generated == set(naive_closure({(va,), (vb,), full_vec, null_vec}))


def test_soundness_exhaustive_small_subbases():
    triples = brute_grid_triples()
    for va in triples:
        trace = generate_from_subbase(Family.build(U1, [("A", mk(U1, va))]))
        assert check_axioms(trace.topology).is_topology
    for va, vb in itertools.combinations(triples, 2):
        trace = generate_from_subbase(Family.build(U1, [("A", mk(U1, va)), ("B", mk(U1, vb))]))
        assert check_axioms(trace.topology).is_topology


def test_soundness_randomized_smoke():
    rng = random.Random(20)
    fine = brute_grid_triples(step=500)
    for _ in range(150):
        size = rng.randint(1, 4)
        universe = Universe.of(*("a", "b", "c")[: rng.randint(1, 3)])
        members = []
        for i in range(size):
            raws = tuple(rng.choice(fine) for _ in range(len(universe)))
            members.append((f"S{i}", mk(universe, *raws)))
        trace = generate_from_subbase(Family.build(universe, members))
        assert check_axioms(trace.topology).is_topology


def test_monotonicity_of_generation():
    triples = brute_grid_triples()
    rng = random.Random(13)
    for _ in range(30):
        va, vb, vc = rng.sample(triples, 3)
        small = Family.build(U1, [("A", mk(U1, va)), ("B", mk(U1, vb))])
        large = Family.build(U1, [("A", mk(U1, va)), ("B", mk(U1, vb)), ("C", mk(U1, vc))])
        small_top = generate_from_subbase(small).topology.value_set()
        large_top = generate_from_subbase(large).topology.value_set()
        assert small_top <= large_top


def test_rank_bound_via_closure_classes():
    triples = brute_grid_triples()
    rng = random.Random(17)
    for _ in range(30):
        va, vb = rng.sample(triples, 2)
        subbase = Family.build(U1, [("A", mk(U1, va)), ("B", mk(U1, vb))])
        trace = generate_from_subbase(subbase)
        closure_rho = {tuple(t.rho.raw for t in m.value.triples) for m in trace.base}
        assert rank_of(trace.topology) <= len(closure_rho) + 1
