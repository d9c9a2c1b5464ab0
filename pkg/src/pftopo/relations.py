"""The balanced and neutral-equivalence relations, class partitions, rank.

Two sets are *balanced* (a partial order) when their positive and negative
grades agree pointwise and the first neutral grade is pointwise <= the
second; balanced pairs absorb each other under union and intersection.
Two sets are *rho-equivalent* (an equivalence) when their neutral grades
agree pointwise; the number of rho-classes appearing in a family is its
rank.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Grade, PictureFuzzySet, _require_same_universe, null, union
from .errors import EmptyFamily
from .families import Family


def balanced(a: PictureFuzzySet, b: PictureFuzzySet) -> bool:
    """True iff mu and sigma agree pointwise and rho_a <= rho_b pointwise."""
    _require_same_universe(a, b)
    return all(
        x.mu == y.mu and x.rho.raw <= y.rho.raw and x.sigma == y.sigma
        for x, y in zip(a.triples, b.triples)
    )


def rho_equivalent(a: PictureFuzzySet, b: PictureFuzzySet) -> bool:
    """True iff the neutral grade functions are pointwise identical."""
    _require_same_universe(a, b)
    return all(x.rho == y.rho for x, y in zip(a.triples, b.triples))


def rho_vector(s: PictureFuzzySet) -> tuple[Grade, ...]:
    """The neutral grades of a set, in universe order."""
    return tuple(t.rho for t in s.triples)


def zero_rho_join(a: PictureFuzzySet) -> PictureFuzzySet:
    """Union with the null set: keeps mu and sigma, zeroes the neutral grade.

    The result is always rho-equivalent to the null set, and the operation
    is idempotent.
    """
    return union(null(a.universe), a)


@dataclass(frozen=True)
class RhoClass:
    """One equivalence class: the shared neutral vector and the member names."""

    key: tuple[Grade, ...]
    members: tuple[str, ...]


@dataclass(frozen=True)
class RhoPartition:
    """Disjoint rho-classes covering a family, ordered by ascending key."""

    classes: tuple[RhoClass, ...]

    @property
    def rank(self) -> int:
        return len(self.classes)


def partition_by_rho(family: Family) -> RhoPartition:
    """Group family members by exact neutral vector.

    Class order is lexicographic on the scaled neutral vector in universe
    order; members keep family order within a class.
    """
    if len(family) == 0:
        raise EmptyFamily("cannot partition an empty family")
    groups: dict[tuple[Grade, ...], list[str]] = {}
    for m in family:
        groups.setdefault(rho_vector(m.value), []).append(m.name)
    classes = tuple(
        RhoClass(key, tuple(groups[key]))
        for key in sorted(groups, key=lambda k: tuple(g.raw for g in k))
    )
    return RhoPartition(classes)


def rank_of(family: Family) -> int:
    """Number of distinct rho-classes among the family's members."""
    return partition_by_rho(family).rank
