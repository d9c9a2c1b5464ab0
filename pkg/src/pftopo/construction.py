"""Closure pipelines that build picture fuzzy topologies from sub-bases,
bases, and balanced chains.

The pipeline is: intersection-close the sub-base into a base, union-close
the base, then adjoin the full set, the null set, and the null-join of
every union-layer member, deduplicating by value.  Closures are computed
by fixpoint iteration over pairs rather than by enumerating subsets; the
two coincide for finite inputs and the fixpoint stays output-polynomial.
Every derived member carries a provenance expression over the named
inputs that re-evaluates to its value.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import SCALE, InclusionMode, PictureFuzzySet, Universe, _grade
from .core import MembershipTriple, full, includes, null
from .errors import ContainsBoundary, EmptyFamily, NotABalancedChain, NotABase
from .expr import Expr, Full, Intersection, Name, Null, Union, format_expr
from .families import Family, NamedSet, canonical_order
from .relations import balanced
from .topology import check_base, check_subbase_minimality
from .errors import NotMinimal

# Closure internals work on plain integer triples to keep the fixpoint
# cheap; PictureFuzzySet objects are only built for the returned families.
Vec = tuple[tuple[int, int, int], ...]


def _vec(s: PictureFuzzySet) -> Vec:
    return tuple((t.mu.raw, t.rho.raw, t.sigma.raw) for t in s.triples)


def _pfs(universe: Universe, vec: Vec) -> PictureFuzzySet:
    # Unchecked: closure results of in-contract inputs stay in contract,
    # and out-of-contract published listings must survive the pipeline.
    return PictureFuzzySet(
        universe,
        tuple(
            MembershipTriple.unchecked(_grade(m), _grade(r), _grade(s))
            for m, r, s in vec
        ),
    )


def _vec_union(x: Vec, y: Vec) -> Vec:
    return tuple(
        (max(a[0], b[0]), min(a[1], b[1]), min(a[2], b[2])) for a, b in zip(x, y)
    )


def _vec_intersection(x: Vec, y: Vec) -> Vec:
    return tuple(
        (min(a[0], b[0]), min(a[1], b[1]), max(a[2], b[2])) for a, b in zip(x, y)
    )


def _vec_zero_rho(x: Vec) -> Vec:
    return tuple((a[0], 0, a[2]) for a in x)


# A record is (name or None, vec, provenance); derived members stay
# nameless until _finalize_names runs.
_Record = tuple[str | None, Vec, Expr]


def _closure(records: list[_Record], vec_op, expr_op) -> list[_Record]:
    """Least superset closed under the pairwise operation.

    Pairs are visited in a fixed order (each member against all earlier
    ones), so discovery order and provenance are deterministic.  The loop
    terminates because every derived grade is drawn from the finite set of
    input grades.
    """
    out = list(records)
    index = {vec: i for i, (_, vec, _) in enumerate(out)}
    k = 1
    while k < len(out):
        _, vk, ek = out[k]
        for i in range(k):
            _, vi, ei = out[i]
            combined = vec_op(vi, vk)
            if combined not in index:
                index[combined] = len(out)
                out.append((None, combined, expr_op(ei, ek)))
        k += 1
    return out


def _finalize_names(records: list[_Record], taken: set[str]) -> list[tuple[str, Vec, Expr]]:
    """Give derived members deterministic names printed from their
    provenance; suffix on the rare collision with an existing name."""
    named: list[tuple[str, Vec, Expr]] = []
    for name, vec, expr in records:
        if name is None:
            name = _claim(format_expr(expr), taken)
        else:
            taken.add(name)
        named.append((name, vec, expr))
    return named


def _family_of(universe: Universe, records: list[tuple[str, Vec, Expr]]) -> Family:
    return Family(universe, tuple(NamedSet(n, _pfs(universe, v)) for n, v, _ in records))


@dataclass(frozen=True)
class ConstructionTrace:
    """All pipeline layers plus, for every named member, the expression
    over the sub-base inputs that produced it."""

    subbase: Family
    base: Family
    union_layer: Family
    topology: Family
    provenance: tuple[tuple[str, Expr], ...]

    def provenance_for(self, name: str) -> Expr:
        for n, e in self.provenance:
            if n == name:
                return e
        raise KeyError(name)


def _reject_boundary(family: Family) -> None:
    i_value = full(family.universe)
    o_value = null(family.universe)
    for m in family:
        if m.value == i_value:
            raise ContainsBoundary(m.name, "full")
        if m.value == o_value:
            raise ContainsBoundary(m.name, "null")


def intersection_closure(family: Family) -> Family:
    """Close a family under pairwise intersection (valuewise smallest)."""
    if len(family) == 0:
        raise EmptyFamily("cannot close an empty family")
    _reject_boundary(family)
    records: list[_Record] = [(m.name, _vec(m.value), Name(m.name)) for m in family]
    closed = _closure(records, _vec_intersection, Intersection)
    named = _finalize_names(closed, set(family.names()) | {"I", "O"})
    return _family_of(family.universe, named)


def union_closure(family: Family) -> Family:
    """Close a family under pairwise union (valuewise smallest)."""
    if len(family) == 0:
        raise EmptyFamily("cannot close an empty family")
    records: list[_Record] = [(m.name, _vec(m.value), Name(m.name)) for m in family]
    closed = _closure(records, _vec_union, Union)
    named = _finalize_names(closed, set(family.names()) | {"I", "O"})
    return _family_of(family.universe, named)


def _claim(name: str, taken: set[str]) -> str:
    if name in taken:
        k = 2
        while f"{name}#{k}" in taken:
            k += 1
        name = f"{name}#{k}"
    taken.add(name)
    return name


def _assemble(subbase: Family, base_records: list[tuple[str, Vec, Expr]]) -> ConstructionTrace:
    universe = subbase.universe
    taken = {name for name, _, _ in base_records}
    i_name = _claim("I", taken)
    o_name = _claim("O", taken)
    base_family = _family_of(universe, base_records)

    base_report = check_base(base_family)
    if not base_report.is_base:
        w = base_report.witness
        raise NotABase(w, f"candidate base fails the base test ({w.kind.value})")

    u_records = _finalize_names(
        _closure(list(base_records), _vec_union, Union), taken
    )
    union_layer = _family_of(universe, u_records)

    n = len(universe)
    i_vec: Vec = tuple(((SCALE, 0, 0),) * n)
    o_vec: Vec = tuple(((0, 0, SCALE),) * n)
    members: dict[Vec, tuple[str, Expr]] = {
        i_vec: (i_name, Full()),
        o_vec: (o_name, Null()),
    }
    for name, vec, expr in u_records:
        if vec not in members:
            members[vec] = (name, expr)
    # Null-joins of the whole union layer, not just the base: unions with
    # nonzero neutral grades need their own zero-neutral companions.
    for name, vec, expr in u_records:
        joined = _vec_zero_rho(vec)
        if joined not in members:
            jexpr = Union(Null(), expr)
            members[joined] = (_claim(format_expr(jexpr), taken), jexpr)

    topology = canonical_order(
        Family(universe, tuple(NamedSet(nm, _pfs(universe, v)) for v, (nm, _) in members.items()))
    )

    provenance: dict[str, Expr] = {}
    for m in subbase:
        provenance[m.name] = Name(m.name)
    for name, _, expr in base_records:
        provenance.setdefault(name, expr)
    for name, _, expr in u_records:
        provenance.setdefault(name, expr)
    for name, expr in members.values():
        provenance.setdefault(name, expr)

    return ConstructionTrace(
        subbase=subbase,
        base=base_family,
        union_layer=union_layer,
        topology=topology,
        provenance=tuple(provenance.items()),
    )


def generate_from_base(base: Family) -> ConstructionTrace:
    """Generate the topology a base induces: its union closure plus the
    full set, the null set, and all null-joins, deduplicated by value."""
    if len(base) == 0:
        raise EmptyFamily("cannot generate from an empty base")
    records = [(m.name, _vec(m.value), Name(m.name)) for m in base]
    return _assemble(base, records)


def generate_from_subbase(subbase: Family, require_minimal: bool = False) -> ConstructionTrace:
    """Intersection-close the sub-base into a base, then generate.

    With require_minimal, every pair of members whose intersection is
    itself a member must be inclusion-comparable, else NotMinimal.
    """
    if len(subbase) == 0:
        raise EmptyFamily("cannot generate from an empty sub-base")
    _reject_boundary(subbase)
    if require_minimal:
        report = check_subbase_minimality(subbase)
        if not report.is_minimal:
            raise NotMinimal(report.witness)
    records: list[_Record] = [(m.name, _vec(m.value), Name(m.name)) for m in subbase]
    closed = _closure(records, _vec_intersection, Intersection)
    named = _finalize_names(closed, set(subbase.names()) | {"I", "O"})
    return _assemble(subbase, named)


def _chain_linked(a: PictureFuzzySet, b: PictureFuzzySet) -> bool:
    # Consecutive members must absorb each other: either balanced, or an
    # inclusion step inside the zero-neutral class (where the null-join is
    # the identity and unions plainly absorb).
    if balanced(a, b):
        return True
    zero = all(t.rho.raw == 0 for t in a.triples) and all(
        t.rho.raw == 0 for t in b.triples
    )
    return zero and includes(a, b, InclusionMode.LITERAL)


def chain_topology(chain: Family) -> ConstructionTrace:
    """Generate from a chain whose consecutive members are balanced (or
    form a zero-neutral inclusion chain).

    For such a chain the result is the chain itself plus the full set, the
    null set, and the null-join of the first member (at most k + 3 values).
    """
    if len(chain) == 0:
        raise EmptyFamily("cannot generate from an empty chain")
    for first, second in zip(chain.members, chain.members[1:]):
        if not _chain_linked(first.value, second.value):
            raise NotABalancedChain((first.name, second.name))
    return generate_from_subbase(chain)


def trivial_topology(universe: Universe) -> Family:
    """The two-member topology containing only the full and null sets."""
    return Family(universe, (NamedSet("I", full(universe)), NamedSet("O", null(universe))))
