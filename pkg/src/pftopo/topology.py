"""Verification of the topology axioms, the base test, and sub-base
minimality, each with explicit counterexample witnesses.

A family is a topology when it contains the full and null sets and is
closed under pairwise union and pairwise intersection; for finite
families pairwise closure is equivalent to closure under arbitrary finite
combinations, by associativity.  Every witness in a report re-checks as a
genuine violation using only the core operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import (
    InclusionMode,
    PictureFuzzySet,
    full,
    includes,
    intersection,
    null,
    union,
    union_many,
)
from .errors import EmptyFamily, NotATopology, UniverseMismatch
from .families import Family
from .relations import rho_equivalent, zero_rho_join


class ViolationKind(Enum):
    MISSING_FULL = "missing-full"
    MISSING_NULL = "missing-null"
    UNION_ESCAPE = "union-escape"
    INTERSECTION_ESCAPE = "intersection-escape"
    CONTAINS_FULL = "contains-full"
    CONTAINS_NULL = "contains-null"


# Report ordering: fixed kind precedence, then member position.
_KIND_ORDER = {k: i for i, k in enumerate(ViolationKind)}


@dataclass(frozen=True)
class Violation:
    """One broken requirement: which members are involved and, for closure
    escapes, the combined value that is missing from the family."""

    kind: ViolationKind
    members: tuple[str, ...]
    escaped: PictureFuzzySet | None = None


@dataclass(frozen=True)
class AxiomReport:
    is_topology: bool
    violations: tuple[Violation, ...]


def check_axioms(family: Family) -> AxiomReport:
    """Check full/null membership and pairwise union/intersection closure.

    All violations are reported, ordered by kind (missing constants, union
    escapes, intersection escapes) and then by member position.
    """
    if len(family) == 0:
        raise EmptyFamily("cannot check axioms of an empty family")
    values = family.value_set()
    violations: list[Violation] = []
    if full(family.universe) not in values:
        violations.append(Violation(ViolationKind.MISSING_FULL, ()))
    if null(family.universe) not in values:
        violations.append(Violation(ViolationKind.MISSING_NULL, ()))
    members = family.members
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            u = union(members[i].value, members[j].value)
            if u not in values:
                violations.append(
                    Violation(ViolationKind.UNION_ESCAPE,
                              (members[i].name, members[j].name), u)
                )
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            w = intersection(members[i].value, members[j].value)
            if w not in values:
                violations.append(
                    Violation(ViolationKind.INTERSECTION_ESCAPE,
                              (members[i].name, members[j].name), w)
                )
    violations.sort(key=lambda v: (_KIND_ORDER[v.kind], v.members))
    return AxiomReport(not violations, tuple(violations))


@dataclass(frozen=True)
class BaseReport:
    is_base: bool
    witness: Violation | None


def check_base(family: Family) -> BaseReport:
    """A base may not contain the full or null set (by value) and must hold
    every pairwise intersection of its members (by value)."""
    if len(family) == 0:
        raise EmptyFamily("cannot check an empty candidate base")
    i_value = full(family.universe)
    o_value = null(family.universe)
    for m in family:
        if m.value == i_value:
            return BaseReport(False, Violation(ViolationKind.CONTAINS_FULL, (m.name,)))
        if m.value == o_value:
            return BaseReport(False, Violation(ViolationKind.CONTAINS_NULL, (m.name,)))
    values = family.value_set()
    members = family.members
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            w = intersection(members[i].value, members[j].value)
            if w not in values:
                return BaseReport(
                    False,
                    Violation(ViolationKind.INTERSECTION_ESCAPE,
                              (members[i].name, members[j].name), w),
                )
    return BaseReport(True, None)


@dataclass(frozen=True)
class MinimalityReport:
    is_minimal: bool
    witness: tuple[str, str] | None


def check_subbase_minimality(family: Family) -> MinimalityReport:
    """Whenever the intersection of two members is itself a member (by
    value), the two members must be comparable under LITERAL inclusion, in
    one direction or the other."""
    if len(family) == 0:
        raise EmptyFamily("cannot check an empty candidate sub-base")
    values = family.value_set()
    members = family.members
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            a, b = members[i].value, members[j].value
            if intersection(a, b) not in values:
                continue
            if not (includes(a, b, InclusionMode.LITERAL)
                    or includes(b, a, InclusionMode.LITERAL)):
                return MinimalityReport(False, (members[i].name, members[j].name))
    return MinimalityReport(True, None)


@dataclass(frozen=True)
class CoverageReport:
    is_base_for: bool
    failing_member: str | None


def verify_base_for(topology: Family, base: Family) -> CoverageReport:
    """Check that `base` generates `topology`.

    Every member other than the full and null sets must be either a union
    of base members, or, when its neutral grades are all zero, the
    null-join of such a union.  Decomposability is decided by the maximal
    candidate test: m is a union of base members iff the union of every
    base member absorbed by m reproduces m (union is componentwise
    monotone, so no smaller candidate set can do better).  For the
    null-join case the neutral component is ignored when the candidates
    are selected.
    """
    if topology.universe != base.universe:
        raise UniverseMismatch("topology and base are over different universes")
    report = check_axioms(topology)
    if not report.is_topology:
        raise NotATopology(
            f"the given family fails {len(report.violations)} axiom check(s)"
        )
    i_value = full(topology.universe)
    o_value = null(topology.universe)
    o_like = null(topology.universe)
    for m in topology:
        if m.value in (i_value, o_value):
            continue
        if rho_equivalent(m.value, o_like):
            candidates = [
                b.value for b in base
                if all(x.mu.raw <= y.mu.raw and x.sigma.raw >= y.sigma.raw
                       for x, y in zip(b.value.triples, m.value.triples))
            ]
            if not candidates or zero_rho_join(union_many(candidates)) != m.value:
                return CoverageReport(False, m.name)
        else:
            candidates = [b.value for b in base if union(b.value, m.value) == m.value]
            if not candidates or union_many(candidates) != m.value:
                return CoverageReport(False, m.name)
    return CoverageReport(True, None)
