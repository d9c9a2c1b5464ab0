"""Exact algebra of picture fuzzy sets over finite universes.

A picture fuzzy set assigns each universe element a triple of membership
grades (mu = positive, rho = neutral, sigma = negative) with
mu + rho + sigma <= 1; the residual 1 - (mu + rho + sigma) is the refusal
degree.  Grades are scaled integers on a 1/10000 lattice so every
operation is exact and equality is reliable: no floating point is used
anywhere in this module.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .errors import (
    DuplicateName,
    EmptyFamily,
    GradeSumExceeded,
    LengthMismatch,
    MalformedNumber,
    OutOfRange,
    PrecisionExceeded,
    UniverseMismatch,
    UnknownElement,
)

#: Denominator of the grade lattice: raw 10000 == semantic 1.0.
SCALE = 10_000

_DECIMAL_RE = re.compile(r"[+-]?(?:\d+(?:\.(\d*))?|\.(\d+))\Z")


@dataclass(frozen=True, order=True, slots=True)
class Grade:
    """A membership degree in [0, 1], stored as raw/10000."""

    raw: int

    def __post_init__(self):
        if not isinstance(self.raw, int) or isinstance(self.raw, bool):
            raise TypeError(f"grade raw value must be int, got {type(self.raw).__name__}")
        if not 0 <= self.raw <= SCALE:
            raise OutOfRange(f"grade {self.raw}/{SCALE} outside [0, 1]")

    @classmethod
    def from_decimal(cls, text: str) -> "Grade":
        """Parse a decimal numeral with at most 4 fractional digits, exactly.

        "0.25" -> raw 2500.  More than 4 fractional digits raises
        PrecisionExceeded rather than rounding.
        """
        if not isinstance(text, str):
            raise MalformedNumber(f"expected a decimal string, got {type(text).__name__}")
        m = _DECIMAL_RE.match(text)
        if m is None:
            raise MalformedNumber(f"not a decimal numeral: {text!r}")
        frac = m.group(1) or m.group(2) or ""
        if len(frac) > 4:
            raise PrecisionExceeded(
                f"{text!r} has {len(frac)} fractional digits; at most 4 are representable"
            )
        negative = text.lstrip()[:1] == "-"
        whole = int(text.lstrip("+-").split(".")[0] or "0")
        raw = whole * SCALE + int(frac.ljust(4, "0") or "0")
        if negative and raw > 0:
            raise OutOfRange(f"{text!r} is negative")
        if raw > SCALE:
            raise OutOfRange(f"{text!r} exceeds 1")
        return cls(raw)

    def decimal(self) -> str:
        """Canonical decimal text: two digits when exact, else up to four."""
        digits = f"{self.raw % SCALE:04d}"
        while len(digits) > 2 and digits.endswith("0"):
            digits = digits[:-1]
        return f"{self.raw // SCALE}.{digits}"

    def __str__(self) -> str:
        return self.decimal()


ZERO = Grade(0)
ONE = Grade(SCALE)

# Ops below build many grades; reuse instances instead of re-validating.
_GRADE_CACHE: dict[int, Grade] = {0: ZERO, SCALE: ONE}


def _grade(raw: int) -> Grade:
    g = _GRADE_CACHE.get(raw)
    if g is None:
        g = _GRADE_CACHE.setdefault(raw, Grade(raw))
    return g


@dataclass(frozen=True, slots=True)
class MembershipTriple:
    """One element's (mu, rho, sigma) grades; their sum may not exceed 1.

    The constructor enforces the sum bound.  `unchecked` skips it: the
    published literature contains listings that break the bound, and the
    toolkit must be able to hold such data to analyse it.  Operations in
    this module build their results unchecked because the bound is closed
    under them for in-contract inputs (and the algebra stays total for
    out-of-contract ones).
    """

    mu: Grade
    rho: Grade
    sigma: Grade

    def __post_init__(self):
        if self.mu.raw + self.rho.raw + self.sigma.raw > SCALE:
            raise GradeSumExceeded(self.mu.raw, self.rho.raw, self.sigma.raw)

    @classmethod
    def unchecked(cls, mu: Grade, rho: Grade, sigma: Grade) -> "MembershipTriple":
        self = object.__new__(cls)
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "rho", rho)
        object.__setattr__(self, "sigma", sigma)
        return self

    def sum_ok(self) -> bool:
        return self.mu.raw + self.rho.raw + self.sigma.raw <= SCALE

    def refusal(self) -> Grade:
        """1 - (mu + rho + sigma); raises OutOfRange for an out-of-contract
        triple, whose residual would be negative."""
        return _grade(SCALE - self.mu.raw - self.rho.raw - self.sigma.raw)

    @classmethod
    def from_decimals(cls, mu: str, rho: str, sigma: str) -> "MembershipTriple":
        return cls(Grade.from_decimal(mu), Grade.from_decimal(rho), Grade.from_decimal(sigma))

    def as_decimals(self) -> tuple[str, str, str]:
        return (self.mu.decimal(), self.rho.decimal(), self.sigma.decimal())


FULL_TRIPLE = MembershipTriple(ONE, ZERO, ZERO)
NULL_TRIPLE = MembershipTriple(ZERO, ZERO, ONE)


@dataclass(frozen=True)
class Universe:
    """A non-empty ordered collection of distinct element labels."""

    elements: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        if not self.elements:
            raise EmptyFamily("a universe needs at least one element")
        if any(not isinstance(e, str) for e in self.elements):
            raise TypeError("universe labels must be strings")
        if len(set(self.elements)) != len(self.elements):
            raise DuplicateName("universe labels must be pairwise distinct")

    @classmethod
    def of(cls, *labels: str) -> "Universe":
        return cls(tuple(labels))

    def index(self, label: str) -> int:
        try:
            return self.elements.index(label)
        except ValueError:
            raise UnknownElement(f"element {label!r} not in universe {self.elements}") from None

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


@dataclass(frozen=True)
class PictureFuzzySet:
    """A picture fuzzy set: one membership triple per universe element."""

    universe: Universe
    triples: tuple[MembershipTriple, ...]

    def __post_init__(self):
        object.__setattr__(self, "triples", tuple(self.triples))
        if len(self.triples) != len(self.universe):
            raise LengthMismatch(
                f"{len(self.triples)} triples for a universe of size {len(self.universe)}"
            )

    def triple(self, label: str) -> MembershipTriple:
        return self.triples[self.universe.index(label)]

    def raw_vector(self) -> tuple[int, ...]:
        """(mu, rho, sigma) raw values concatenated in universe order."""
        out: list[int] = []
        for t in self.triples:
            out.extend((t.mu.raw, t.rho.raw, t.sigma.raw))
        return tuple(out)


class InclusionMode(Enum):
    """Direction of the neutral-grade comparison used by `includes`.

    LITERAL requires rho_a <= rho_b; REVERSED requires rho_a >= rho_b.
    The positive and negative comparisons (mu_a <= mu_b, sigma_a >= sigma_b)
    are the same in both modes.  LITERAL is the default.
    """

    LITERAL = "literal"
    REVERSED = "reversed"


def pfs_from_decimals(
    universe: Universe, rows: Sequence[tuple[str, str, str]], strict: bool = True
) -> PictureFuzzySet:
    """Build a set from decimal strings, one (mu, rho, sigma) row per element.

    Grade errors are re-raised with the offending element label attached.
    With strict=False the grade-sum bound is not enforced, so published
    listings that violate it can still be represented and analysed.
    """
    if len(rows) != len(universe):
        raise LengthMismatch(f"{len(rows)} rows for a universe of size {len(universe)}")
    triples = []
    for label, row in zip(universe, rows):
        grades = tuple(Grade.from_decimal(text) for text in row)
        if strict:
            try:
                triples.append(MembershipTriple(*grades))
            except GradeSumExceeded as e:
                raise GradeSumExceeded(e.mu, e.rho, e.sigma, element=label) from None
        else:
            triples.append(MembershipTriple.unchecked(*grades))
    return PictureFuzzySet(universe, tuple(triples))


def full(universe: Universe) -> PictureFuzzySet:
    """The constant set (1, 0, 0): total positive membership everywhere."""
    return PictureFuzzySet(universe, (FULL_TRIPLE,) * len(universe))


def null(universe: Universe) -> PictureFuzzySet:
    """The constant set (0, 0, 1): total negative membership everywhere."""
    return PictureFuzzySet(universe, (NULL_TRIPLE,) * len(universe))


def refusal(s: PictureFuzzySet, label: str) -> Grade:
    """Refusal degree 1 - (mu + rho + sigma) at the given element."""
    return s.triple(label).refusal()


def _require_same_universe(a: PictureFuzzySet, b: PictureFuzzySet) -> None:
    if a.universe != b.universe:
        raise UniverseMismatch(
            f"universes differ: {a.universe.elements} vs {b.universe.elements}"
        )


def union(a: PictureFuzzySet, b: PictureFuzzySet) -> PictureFuzzySet:
    """Pointwise (max mu, min rho, min sigma)."""
    _require_same_universe(a, b)
    triples = tuple(
        MembershipTriple.unchecked(
            _grade(max(x.mu.raw, y.mu.raw)),
            _grade(min(x.rho.raw, y.rho.raw)),
            _grade(min(x.sigma.raw, y.sigma.raw)),
        )
        for x, y in zip(a.triples, b.triples)
    )
    return PictureFuzzySet(a.universe, triples)


def intersection(a: PictureFuzzySet, b: PictureFuzzySet) -> PictureFuzzySet:
    """Pointwise (min mu, min rho, max sigma)."""
    _require_same_universe(a, b)
    triples = tuple(
        MembershipTriple.unchecked(
            _grade(min(x.mu.raw, y.mu.raw)),
            _grade(min(x.rho.raw, y.rho.raw)),
            _grade(max(x.sigma.raw, y.sigma.raw)),
        )
        for x, y in zip(a.triples, b.triples)
    )
    return PictureFuzzySet(a.universe, triples)


def complement(a: PictureFuzzySet) -> PictureFuzzySet:
    """Swap mu and sigma pointwise; rho is unchanged (sum is invariant
    under the swap, so validity is preserved as-is)."""
    triples = tuple(
        MembershipTriple.unchecked(t.sigma, t.rho, t.mu) for t in a.triples
    )
    return PictureFuzzySet(a.universe, triples)


def includes(a: PictureFuzzySet, b: PictureFuzzySet,
             mode: InclusionMode = InclusionMode.LITERAL) -> bool:
    """Whether a is included in b, pointwise.

    mu_a <= mu_b and sigma_a >= sigma_b always; the rho comparison follows
    the mode (LITERAL: rho_a <= rho_b, REVERSED: rho_a >= rho_b).
    """
    _require_same_universe(a, b)
    if mode is InclusionMode.LITERAL:
        return all(
            x.mu.raw <= y.mu.raw and x.rho.raw <= y.rho.raw and x.sigma.raw >= y.sigma.raw
            for x, y in zip(a.triples, b.triples)
        )
    return all(
        x.mu.raw <= y.mu.raw and x.rho.raw >= y.rho.raw and x.sigma.raw >= y.sigma.raw
        for x, y in zip(a.triples, b.triples)
    )


def equals(a: PictureFuzzySet, b: PictureFuzzySet) -> bool:
    """Pointwise identity of all three grade functions.

    Mutual inclusion collapses to this under either mode.
    """
    _require_same_universe(a, b)
    return a.triples == b.triples


def union_many(sets: Iterable[PictureFuzzySet]) -> PictureFuzzySet:
    """Left fold of union; order-independent. Raises EmptyFamily on no input."""
    return _fold(union, sets, "union_many")


def intersection_many(sets: Iterable[PictureFuzzySet]) -> PictureFuzzySet:
    """Left fold of intersection; order-independent. Raises EmptyFamily on no input."""
    return _fold(intersection, sets, "intersection_many")


def _fold(op, sets: Iterable[PictureFuzzySet], what: str) -> PictureFuzzySet:
    it = iter(sets)
    try:
        acc = next(it)
    except StopIteration:
        # Neither the full nor the null set is a two-sided identity, so an
        # empty fold has no principled value.
        raise EmptyFamily(f"{what} over an empty family") from None
    for s in it:
        acc = op(acc, s)
    return acc
