"""Named, ordered collections of picture fuzzy sets over one universe.

A family is how topologies, bases and sub-bases travel through the
package.  Names are unique and purely for reporting; membership tests
always use value equality of the sets themselves.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .core import PictureFuzzySet, Universe, full, null
from .errors import DuplicateName, UniverseMismatch, UnknownName


@dataclass(frozen=True)
class NamedSet:
    name: str
    value: PictureFuzzySet


@dataclass(frozen=True, eq=False)
class Family:
    """An ordered sequence of uniquely named sets sharing one universe.

    Equality is by value and ignores member order, so a family survives a
    round trip through the canonically ordered file format.
    """

    universe: Universe
    members: tuple[NamedSet, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))
        seen: set[str] = set()
        for m in self.members:
            if m.name in seen:
                raise DuplicateName(f"family member name {m.name!r} is not unique")
            seen.add(m.name)
            if m.value.universe != self.universe:
                raise UniverseMismatch(
                    f"member {m.name!r} is defined over a different universe"
                )

    @classmethod
    def build(cls, universe: Universe,
              pairs: Iterable[tuple[str, PictureFuzzySet]]) -> "Family":
        return cls(universe, tuple(NamedSet(n, v) for n, v in pairs))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[NamedSet]:
        return iter(self.members)

    def names(self) -> tuple[str, ...]:
        return tuple(m.name for m in self.members)

    def sets(self) -> tuple[PictureFuzzySet, ...]:
        return tuple(m.value for m in self.members)

    def get(self, name: str) -> PictureFuzzySet:
        for m in self.members:
            if m.name == name:
                return m.value
        raise UnknownName(name)

    def value_set(self) -> frozenset[PictureFuzzySet]:
        return frozenset(m.value for m in self.members)

    def contains_value(self, s: PictureFuzzySet) -> bool:
        return any(m.value == s for m in self.members)

    def name_of_value(self, s: PictureFuzzySet) -> str | None:
        """First member name carrying this value, if any."""
        for m in self.members:
            if m.value == s:
                return m.name
        return None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Family):
            return NotImplemented
        return self.universe == other.universe and frozenset(self.members) == frozenset(
            other.members
        )

    def __hash__(self) -> int:
        return hash((self.universe, frozenset(self.members)))


def canonical_order(family: Family) -> Family:
    """Reorder members: full-set values first, null second, then ascending
    by the concatenated raw (mu, rho, sigma) vector, ties broken by name."""
    i_value = full(family.universe)
    o_value = null(family.universe)

    def key(m: NamedSet):
        if m.value == i_value:
            cat = 0
        elif m.value == o_value:
            cat = 1
        else:
            cat = 2
        return (cat, m.value.raw_vector(), m.name)

    return Family(family.universe, tuple(sorted(family.members, key=key)))
