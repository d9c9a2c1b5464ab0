"""Exception types raised across the package.

Every domain error derives from PftError so callers (and the CLI) can
catch one base class and map it to a diagnostic.
"""

from __future__ import annotations


class PftError(Exception):
    """Base class for all pftopo domain errors."""


# ---------------------------------------------------------------- grades

class MalformedNumber(PftError):
    """Input text is not a decimal numeral."""


class OutOfRange(PftError):
    """A grade value lies outside [0, 1]."""


class PrecisionExceeded(PftError):
    """A decimal carries more than 4 fractional digits; never rounded."""


# ------------------------------------------------------------------ sets

class GradeSumExceeded(PftError):
    """mu + rho + sigma exceeds 1 at some element."""

    def __init__(self, mu: int, rho: int, sigma: int, element: str | None = None):
        self.mu, self.rho, self.sigma = mu, rho, sigma
        self.element = element
        where = f" at element {element!r}" if element is not None else ""
        super().__init__(
            f"membership sum {(mu + rho + sigma) / 10000:.4f} exceeds 1{where} "
            f"(mu={mu / 10000:.4f}, rho={rho / 10000:.4f}, sigma={sigma / 10000:.4f})"
        )


class LengthMismatch(PftError):
    """Triple count does not match the universe size."""


class UnknownElement(PftError):
    """Element label not present in the universe."""


class UniverseMismatch(PftError):
    """Operands are defined over different universes."""


class EmptyFamily(PftError):
    """An operation that needs at least one member got none."""


class DuplicateName(PftError):
    """Two family members share a name, or two universe labels collide."""


# --------------------------------------------------- topology/construction

class ContainsBoundary(PftError):
    """The full or the null set appears where it is not allowed."""

    def __init__(self, name: str, which: str):
        self.name = name
        self.which = which  # "full" or "null"
        super().__init__(f"member {name!r} is the {which} set, which is not allowed here")


class NotABase(PftError):
    """Family fails the base test; carries the failing witness."""

    def __init__(self, witness, message: str):
        self.witness = witness
        super().__init__(message)


class NotMinimal(PftError):
    """Sub-base violates the minimality condition; witness is the pair."""

    def __init__(self, witness: tuple[str, str]):
        self.witness = witness
        super().__init__(
            f"members {witness[0]!r} and {witness[1]!r} have a member intersection "
            "but are not comparable"
        )


class NotABalancedChain(PftError):
    """Consecutive chain members fail the balanced relation."""

    def __init__(self, witness: tuple[str, str]):
        self.witness = witness
        super().__init__(f"consecutive members {witness[0]!r}, {witness[1]!r} are not balanced")


class NotATopology(PftError):
    """A family expected to satisfy the topology axioms does not."""


# ------------------------------------------------------------------ laws

class DomainTooLarge(PftError):
    """An exhaustive search request exceeds the configured budget."""


# -------------------------------------------------------------------- io

class ParseError(PftError):
    """Input bytes are not well-formed JSON/UTF-8."""


class SchemaError(PftError):
    """Document shape does not match the family schema."""


class ValidationError(PftError):
    """Document values violate an invariant (named kind, set and element)."""

    def __init__(self, kind: str, message: str, set_name: str | None = None,
                 element: str | None = None):
        self.kind = kind
        self.set_name = set_name
        self.element = element
        super().__init__(message)


# ------------------------------------------------------------------ expr

class ExprSyntaxError(PftError):
    """Expression text fails to parse; offset is in bytes."""

    def __init__(self, offset: int, expected: tuple[str, ...], found: str):
        self.offset = offset
        self.expected = expected
        self.found = found
        super().__init__(
            f"syntax error at byte {offset}: expected {' or '.join(expected)}, found {found}"
        )


class UnknownName(PftError):
    """A name does not resolve against the given family."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unknown set name {name!r}")
