"""Exhaustive and randomized checking of the law catalog over finite
search domains, with machine-verifiable verdicts and counterexample
witnesses.

The catalog (L01-L19, descriptive statements):

  L01  equal sets absorb each other under union and intersection
  L02  union and intersection commute
  L03  union and intersection associate
  L04  mutual absorption holds exactly for balanced pairs
  L05  union and intersection respect the grade-sum bound
  L06  union and intersection distribute over each other
  L07  an intersection is included in both operands
  L08  inclusion is equivalent to intersection-absorption
  L09  inclusion in the union is equivalent to the neutral comparison
  L10  both operands include into their union iff neutral grades agree
  L11  within a neutral class, inclusion is equivalent to union-absorption
  L12  equality is neutral equivalence plus balance
  L13  neutral-equivalent pairs satisfy the four lattice inclusion laws
  L14  neutral-equivalent pairs sit between the null and full sets
  L15  every set sits between the null and full sets
  L16  every sub-base generates a family passing the topology axioms
  L17  a balanced chain generates exactly the chain, the two constants,
       and one null-join (the bare chain-plus-constants form is also
       reported, as an advisory clause)
  L18  the rank of a generated topology is at most the sub-base size
       plus one
  L19  complement interchanges union and intersection

Each biconditional is split into directions so a failing direction is
pinpointed; a counterexample is always the first witness in canonical
enumeration order (ascending raw grade vectors, row-major tuples).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator

from .core import (
    SCALE,
    Grade,
    InclusionMode,
    MembershipTriple,
    PictureFuzzySet,
    Universe,
    _grade,
    complement,
    full,
    includes,
    intersection,
    null,
    union,
)
from .construction import chain_topology, generate_from_subbase
from .errors import DomainTooLarge
from .families import Family
from .relations import balanced, rank_of, rho_equivalent, zero_rho_join
from .topology import check_axioms

#: Grid values run over multiples of the step up to 1/2; together with the
#: grade-sum bound this yields 23 triples per element at step 0.25.
GRID_CAP = SCALE // 2

DEFAULT_SEED = 1729
DEFAULT_SAMPLES = 100_000

#: Weighted instance budget for exhaustive requests ("desk scale").
EXHAUSTIVE_BUDGET = 4_000_000
#: Per-instance weight for laws that run the whole generation pipeline.
HEAVY_WEIGHT = 200

STEPS = ("0.25", "0.10", "0.05")


@dataclass(frozen=True)
class Exhaustive:
    def label(self) -> str:
        return "exhaustive"


@dataclass(frozen=True)
class Randomized:
    sample_count: int
    seed: int = DEFAULT_SEED

    def label(self) -> str:
        return f"randomized({self.sample_count}, seed {self.seed})"


@dataclass(frozen=True)
class Fixtures:
    """Built-in named instances for laws whose refutation needs a larger
    universe than the default grids reach."""

    def label(self) -> str:
        return "fixtures"


Strategy = Exhaustive | Randomized | Fixtures


@dataclass(frozen=True)
class SearchDomain:
    universe_size: int
    step: str
    arity: int
    strategy: Strategy = field(default_factory=Exhaustive)

    def __post_init__(self):
        if self.universe_size not in (1, 2, 3):
            raise ValueError("universe_size must be 1, 2 or 3")
        if self.step not in STEPS:
            raise ValueError(f"step must be one of {STEPS}")
        if self.arity < 1:
            raise ValueError("arity must be positive")

    def label(self) -> str:
        return f"{self.strategy.label()} |X|={self.universe_size} step {self.step}"


_UNIVERSE_LABELS = ("a", "b", "c")


@lru_cache(maxsize=None)
def _domain_universe(size: int) -> Universe:
    return Universe(_UNIVERSE_LABELS[:size])


@lru_cache(maxsize=None)
def grid_triples(step_raw: int) -> tuple[tuple[int, int, int], ...]:
    """All (mu, rho, sigma) raw triples with components on the step lattice
    up to 1/2 and sum at most 1, in ascending lexicographic order."""
    values = range(0, GRID_CAP + 1, step_raw)
    return tuple(
        (m, r, s)
        for m in values
        for r in values
        for s in values
        if m + r + s <= SCALE
    )


@lru_cache(maxsize=None)
def grid_sets(universe_size: int, step_raw: int) -> tuple[PictureFuzzySet, ...]:
    """Every grid-valued set over the canonical universe of the given size,
    in canonical enumeration order."""
    universe = _domain_universe(universe_size)
    triples = grid_triples(step_raw)
    out = []
    for combo in itertools.product(triples, repeat=universe_size):
        out.append(
            PictureFuzzySet(
                universe,
                tuple(
                    MembershipTriple(_grade(m), _grade(r), _grade(s))
                    for m, r, s in combo
                ),
            )
        )
    return tuple(out)


# --------------------------------------------------------------- verdicts

Check = Callable[[tuple[PictureFuzzySet, ...], InclusionMode], "bool | None"]
Explain = Callable[[tuple[PictureFuzzySet, ...], InclusionMode], str]


@dataclass(frozen=True)
class Clause:
    id: str
    description: str
    check: Check
    advisory: bool = False
    explain: Explain | None = None


@dataclass(frozen=True)
class Law:
    id: str
    title: str
    arity: int
    clauses: tuple[Clause, ...]
    heavy: bool = False
    fixture_instances: tuple[tuple[PictureFuzzySet, ...], ...] = ()


@dataclass(frozen=True)
class Witness:
    """A failing instance; replaying the clause on these sets reproduces
    the violation."""

    sets: tuple[PictureFuzzySet, ...]
    clause: str
    detail: str = ""


@dataclass(frozen=True)
class ClauseOutcome:
    clause: str
    description: str
    domain: str
    holds: bool
    advisory: bool
    evaluated: int
    witness: Witness | None

    @property
    def vacuous(self) -> bool:
        return self.evaluated == 0


@dataclass(frozen=True)
class LawVerdict:
    law: str
    title: str
    mode: InclusionMode
    instances: int
    clauses: tuple[ClauseOutcome, ...]
    domain_counts: tuple[tuple[str, int], ...] = ()

    @property
    def holds(self) -> bool:
        return all(c.holds for c in self.clauses if not c.advisory)

    @property
    def outcome(self) -> str:
        return "Holds" if self.holds else "Counterexample"

    @property
    def vacuous(self) -> bool:
        return all(c.vacuous for c in self.clauses)

    def witnesses(self) -> tuple[Witness, ...]:
        return tuple(c.witness for c in self.clauses if c.witness is not None)


# ------------------------------------------------------- clause predicates

def _rho_le(a: PictureFuzzySet, b: PictureFuzzySet) -> bool:
    return all(x.rho.raw <= y.rho.raw for x, y in zip(a.triples, b.triples))


def _c_equal_absorbs(sets, mode):
    a, b = sets
    if a != b:
        return None
    return union(a, b) == a and intersection(b, a) == a


def _c_union_commutes(sets, mode):
    a, b = sets
    return union(a, b) == union(b, a)


def _c_intersection_commutes(sets, mode):
    a, b = sets
    return intersection(a, b) == intersection(b, a)


def _c_union_associates(sets, mode):
    a, b, c = sets
    return union(a, union(b, c)) == union(union(a, b), c)


def _c_intersection_associates(sets, mode):
    a, b, c = sets
    return intersection(a, intersection(b, c)) == intersection(intersection(a, b), c)


def _c_balanced_forward(sets, mode):
    a, b = sets
    if not balanced(a, b):
        return None
    return union(a, b) == a and intersection(b, a) == a


def _c_balanced_backward(sets, mode):
    a, b = sets
    if not (union(a, b) == a and intersection(b, a) == a):
        return None
    return balanced(a, b)


def _c_union_sum_bound(sets, mode):
    a, b = sets
    return all(
        max(x.mu.raw, y.mu.raw) + min(x.rho.raw, y.rho.raw) + min(x.sigma.raw, y.sigma.raw)
        <= SCALE
        for x, y in zip(a.triples, b.triples)
    )


def _c_intersection_sum_bound(sets, mode):
    a, b = sets
    return all(
        min(x.mu.raw, y.mu.raw) + min(x.rho.raw, y.rho.raw) + max(x.sigma.raw, y.sigma.raw)
        <= SCALE
        for x, y in zip(a.triples, b.triples)
    )


def _c_union_distributes(sets, mode):
    a, b, c = sets
    return union(a, intersection(b, c)) == intersection(union(a, b), union(a, c))


def _c_intersection_distributes(sets, mode):
    a, b, c = sets
    return intersection(a, union(b, c)) == union(intersection(a, b), intersection(a, c))


def _c_meet_below_both(sets, mode):
    a, b = sets
    w = intersection(a, b)
    return includes(w, a, mode) and includes(w, b, mode)


def _c_meet_absorption_forward(sets, mode):
    a, b = sets
    if not includes(a, b, mode):
        return None
    return intersection(a, b) == a


def _c_meet_absorption_backward(sets, mode):
    a, b = sets
    if intersection(a, b) != a:
        return None
    return includes(a, b, mode)


def _c_join_neutral_forward(sets, mode):
    a, b = sets
    if not includes(a, union(a, b), mode):
        return None
    return _rho_le(a, b)


def _c_join_neutral_backward(sets, mode):
    a, b = sets
    if not _rho_le(a, b):
        return None
    return includes(a, union(a, b), mode)


def _c_both_join_forward(sets, mode):
    a, b = sets
    u = union(a, b)
    if not (includes(a, u, mode) and includes(b, u, mode)):
        return None
    return rho_equivalent(a, b)


def _c_both_join_backward(sets, mode):
    a, b = sets
    if not rho_equivalent(a, b):
        return None
    u = union(a, b)
    return includes(a, u, mode) and includes(b, u, mode)


def _c_class_join_forward(sets, mode):
    a, b = sets
    if not (rho_equivalent(a, b) and includes(a, b, mode)):
        return None
    return union(a, b) == b


def _c_class_join_backward(sets, mode):
    a, b = sets
    if not (rho_equivalent(a, b) and union(a, b) == b):
        return None
    return includes(a, b, mode)


def _c_equality_decomposes_forward(sets, mode):
    a, b = sets
    if a != b:
        return None
    return rho_equivalent(a, b) and balanced(a, b)


def _c_equality_decomposes_backward(sets, mode):
    a, b = sets
    if not (rho_equivalent(a, b) and balanced(a, b)):
        return None
    return a == b


def _in_class(sets) -> bool:
    return rho_equivalent(sets[0], sets[1])


def _c_class_meet_below(sets, mode):
    if not _in_class(sets):
        return None
    return _c_meet_below_both(sets, mode)


def _c_class_meet_forward(sets, mode):
    if not _in_class(sets):
        return None
    return _c_meet_absorption_forward(sets, mode)


def _c_class_meet_backward(sets, mode):
    if not _in_class(sets):
        return None
    return _c_meet_absorption_backward(sets, mode)


def _c_class_join_above(sets, mode):
    if not _in_class(sets):
        return None
    a, b = sets
    u = union(a, b)
    return includes(a, u, mode) and includes(b, u, mode)


def _c_class_union_forward(sets, mode):
    if not _in_class(sets):
        return None
    return _c_class_join_forward(sets, mode)


def _c_class_union_backward(sets, mode):
    if not _in_class(sets):
        return None
    return _c_class_join_backward(sets, mode)


def _c_class_below_full(sets, mode):
    if not _in_class(sets):
        return None
    a = sets[0]
    return includes(a, full(a.universe), mode)


def _c_class_above_null(sets, mode):
    if not _in_class(sets):
        return None
    a = sets[0]
    return includes(null(a.universe), a, mode)


def _c_below_full(sets, mode):
    a = sets[0]
    return includes(a, full(a.universe), mode)


def _c_above_null(sets, mode):
    a = sets[0]
    return includes(null(a.universe), a, mode)


def _subbase_of(sets) -> Family:
    universe = sets[0].universe
    return Family.build(universe, ((f"S{i + 1}", s) for i, s in enumerate(sets)))


def _c_generation_sound(sets, mode):
    trace = generate_from_subbase(_subbase_of(sets))
    return check_axioms(trace.topology).is_topology


def _chain_of(sets) -> Family:
    universe = sets[0].universe
    return Family.build(universe, ((f"C{i + 1}", s) for i, s in enumerate(sets)))


def _c_chain_closed_form(sets, mode):
    a, b = sets
    if not balanced(a, b):
        return None
    trace = chain_topology(_chain_of(sets))
    expected = frozenset((full(a.universe), null(a.universe), a, b, zero_rho_join(a)))
    return trace.topology.value_set() == expected and check_axioms(trace.topology).is_topology


def _c_chain_bare_form(sets, mode):
    a, b = sets
    if not balanced(a, b):
        return None
    trace = chain_topology(_chain_of(sets))
    return trace.topology.value_set() == frozenset((full(a.universe), null(a.universe), a, b))


def _c_rank_bound(sets, mode):
    trace = generate_from_subbase(_subbase_of(sets))
    return rank_of(trace.topology) <= len(frozenset(sets)) + 1


def _e_rank_bound(sets, mode):
    trace = generate_from_subbase(_subbase_of(sets))
    r = rank_of(trace.topology)
    bound = len(frozenset(sets)) + 1
    return f"generated rank {r} exceeds sub-base size + 1 = {bound}"


def _c_complement_union(sets, mode):
    a, b = sets
    return complement(union(a, b)) == intersection(complement(a), complement(b))


def _c_complement_intersection(sets, mode):
    a, b = sets
    return complement(intersection(a, b)) == union(complement(a), complement(b))


def _rank_overshoot_pair() -> tuple[tuple[PictureFuzzySet, ...], ...]:
    """Two incomparable sets over a three-element universe whose generated
    topology has four neutral classes: their intersection mixes the two
    neutral vectors into a third one.  Single-element universes cannot do
    this, so the default grid search is supplemented with this instance."""
    universe = _domain_universe(3)

    def mk(rows):
        return PictureFuzzySet(
            universe,
            tuple(
                MembershipTriple(Grade(m), Grade(r), Grade(s)) for m, r, s in rows
            ),
        )

    s1 = mk([(1000, 3500, 3000), (2000, 2500, 4000), (5000, 4000, 500)])
    s2 = mk([(3500, 3000, 3500), (2500, 3000, 3000), (3000, 3500, 1000)])
    return ((s1, s2),)


# ----------------------------------------------------------------- catalog

def _law(law_id, title, arity, clauses, heavy=False, fixtures=()):
    return Law(law_id, title, arity, tuple(clauses), heavy, tuple(fixtures))


CATALOG: dict[str, Law] = {
    law.id: law
    for law in (
        _law("L01", "equal sets absorb each other", 2, [
            Clause("equal-absorbs", "if a = b then a|b = a and b&a = a", _c_equal_absorbs),
        ]),
        _law("L02", "union and intersection commute", 2, [
            Clause("union-commutes", "a|b = b|a", _c_union_commutes),
            Clause("intersection-commutes", "a&b = b&a", _c_intersection_commutes),
        ]),
        _law("L03", "union and intersection associate", 3, [
            Clause("union-associates", "a|(b|c) = (a|b)|c", _c_union_associates),
            Clause("intersection-associates", "a&(b&c) = (a&b)&c", _c_intersection_associates),
        ]),
        _law("L04", "mutual absorption characterizes balance", 2, [
            Clause("balanced-absorbs", "a balanced b implies a|b = b&a = a",
                   _c_balanced_forward),
            Clause("absorption-balances", "a|b = b&a = a implies a balanced b",
                   _c_balanced_backward),
        ]),
        _law("L05", "operations respect the grade-sum bound", 2, [
            Clause("union-sum", "mu+rho+sigma of a|b stays within 1", _c_union_sum_bound),
            Clause("intersection-sum", "mu+rho+sigma of a&b stays within 1",
                   _c_intersection_sum_bound),
        ]),
        _law("L06", "union and intersection distribute", 3, [
            Clause("union-over-intersection", "a|(b&c) = (a|b)&(a|c)", _c_union_distributes),
            Clause("intersection-over-union", "a&(b|c) = (a&b)|(a&c)",
                   _c_intersection_distributes),
        ]),
        _law("L07", "intersection is below both operands", 2, [
            Clause("meet-below", "a&b is included in a and in b", _c_meet_below_both),
        ]),
        _law("L08", "inclusion is intersection-absorption", 2, [
            Clause("inclusion-absorbs", "a in b implies a&b = a", _c_meet_absorption_forward),
            Clause("absorption-includes", "a&b = a implies a in b", _c_meet_absorption_backward),
        ]),
        _law("L09", "inclusion in the union is the neutral comparison", 2, [
            Clause("inclusion-gives-neutral", "a in a|b implies rho_a <= rho_b",
                   _c_join_neutral_forward),
            Clause("neutral-gives-inclusion", "rho_a <= rho_b implies a in a|b",
                   _c_join_neutral_backward),
        ]),
        _law("L10", "both below the union iff neutral grades agree", 2, [
            Clause("joint-inclusion-gives-equality", "a,b in a|b implies rho_a = rho_b",
                   _c_both_join_forward),
            Clause("equality-gives-joint-inclusion", "rho_a = rho_b implies a,b in a|b",
                   _c_both_join_backward),
        ]),
        _law("L11", "in a neutral class, inclusion is union-absorption", 2, [
            Clause("inclusion-gives-union", "rho-equal and a in b imply a|b = b",
                   _c_class_join_forward),
            Clause("union-gives-inclusion", "rho-equal and a|b = b imply a in b",
                   _c_class_join_backward),
        ]),
        _law("L12", "equality is neutral equivalence plus balance", 2, [
            Clause("equality-decomposes", "a = b implies a ~rho b and a balanced b",
                   _c_equality_decomposes_forward),
            Clause("decomposition-equates", "a ~rho b and a balanced b imply a = b",
                   _c_equality_decomposes_backward),
        ]),
        _law("L13", "neutral-equivalent pairs obey the inclusion laws", 2, [
            Clause("class-meet-below", "a&b included in both", _c_class_meet_below),
            Clause("class-meet-forward", "a in b implies a&b = a", _c_class_meet_forward),
            Clause("class-meet-backward", "a&b = a implies a in b", _c_class_meet_backward),
            Clause("class-join-above", "a and b included in a|b", _c_class_join_above),
            Clause("class-join-forward", "a in b implies a|b = b", _c_class_union_forward),
            Clause("class-join-backward", "a|b = b implies a in b", _c_class_union_backward),
        ]),
        _law("L14", "neutral-equivalent sets sit between null and full", 2, [
            Clause("below-full", "a is included in the full set", _c_class_below_full),
            Clause("above-null", "the null set is included in a", _c_class_above_null),
        ]),
        _law("L15", "every set sits between null and full", 1, [
            Clause("below-full", "a is included in the full set", _c_below_full),
            Clause("above-null", "the null set is included in a", _c_above_null),
        ]),
        _law("L16", "generation from any sub-base yields a topology", 2, [
            Clause("generation-sound", "generated family passes the axioms",
                   _c_generation_sound),
        ], heavy=True),
        _law("L17", "a balanced chain generates its closed form", 2, [
            Clause("closed-form", "topology equals chain + constants + one null-join",
                   _c_chain_closed_form),
            Clause("bare-chain", "topology equals chain + constants (no null-join)",
                   _c_chain_bare_form, advisory=True),
        ], heavy=True),
        _law("L18", "generated rank is at most sub-base size + 1", 2, [
            Clause("rank-bound", "rank(generated) <= |subbase| + 1", _c_rank_bound,
                   explain=_e_rank_bound),
        ], heavy=True, fixtures=_rank_overshoot_pair()),
        _law("L19", "complement interchanges union and intersection", 2, [
            Clause("complement-union", "~(a|b) = ~a & ~b", _c_complement_union),
            Clause("complement-intersection", "~(a&b) = ~a | ~b", _c_complement_intersection),
        ]),
    )
}

CATALOG_ORDER: tuple[str, ...] = tuple(sorted(CATALOG))


# --------------------------------------------------------------- execution

def _instances(law: Law, domain: SearchDomain) -> Iterator[tuple[PictureFuzzySet, ...]]:
    if isinstance(domain.strategy, Fixtures):
        yield from law.fixture_instances
        return
    step_raw = Grade.from_decimal(domain.step).raw
    sets = grid_sets(domain.universe_size, step_raw)
    if isinstance(domain.strategy, Exhaustive):
        weight = HEAVY_WEIGHT if law.heavy else 1
        cost = (len(sets) ** domain.arity) * weight
        if cost > EXHAUSTIVE_BUDGET:
            raise DomainTooLarge(
                f"exhaustive domain for {law.id} needs {len(sets) ** domain.arity} "
                f"instances (weighted cost {cost} > budget {EXHAUSTIVE_BUDGET})"
            )
        yield from itertools.product(sets, repeat=domain.arity)
        return
    rng = random.Random(domain.strategy.seed)
    n = len(sets)
    for _ in range(domain.strategy.sample_count):
        yield tuple(sets[rng.randrange(n)] for _ in range(domain.arity))


def _run(law: Law, domains: tuple[SearchDomain, ...], mode: InclusionMode) -> LawVerdict:
    outcomes: list[ClauseOutcome] = []
    domain_counts: list[tuple[str, int]] = []
    total = 0
    for domain in domains:
        label = domain.label()
        evaluated = [0] * len(law.clauses)
        witnesses: list[Witness | None] = [None] * len(law.clauses)
        count = 0
        for sets in _instances(law, domain):
            count += 1
            for i, clause in enumerate(law.clauses):
                result = clause.check(sets, mode)
                if result is None:
                    continue
                evaluated[i] += 1
                if not result and witnesses[i] is None:
                    detail = clause.explain(sets, mode) if clause.explain else ""
                    witnesses[i] = Witness(sets, clause.id, detail)
        total += count
        domain_counts.append((label, count))
        for i, clause in enumerate(law.clauses):
            outcomes.append(
                ClauseOutcome(
                    clause=clause.id,
                    description=clause.description,
                    domain=label,
                    holds=witnesses[i] is None,
                    advisory=clause.advisory,
                    evaluated=evaluated[i],
                    witness=witnesses[i],
                )
            )
    return LawVerdict(law.id, law.title, mode, total, tuple(outcomes), tuple(domain_counts))


def default_domains(law_id: str) -> tuple[SearchDomain, ...]:
    """The default schedule: exhaustive pairs/triples over the 0.25 grid on
    one element; arity-3 laws add a seeded randomized pass over two
    elements; the rank-bound law adds its built-in fixture instance."""
    law = CATALOG[law_id]
    domains = [SearchDomain(1, "0.25", law.arity)]
    if law.arity >= 3:
        domains.append(
            SearchDomain(2, "0.25", law.arity, Randomized(DEFAULT_SAMPLES, DEFAULT_SEED))
        )
    if law.fixture_instances:
        domains.append(SearchDomain(3, "0.25", law.arity, Fixtures()))
    return tuple(domains)


def check_law(law_id: str, domain: SearchDomain,
              mode: InclusionMode = InclusionMode.LITERAL) -> LawVerdict:
    """Check one law over one domain."""
    if law_id not in CATALOG:
        raise KeyError(f"unknown law {law_id!r}")
    return _run(CATALOG[law_id], (domain,), mode)


def check_law_default(law_id: str,
                      mode: InclusionMode = InclusionMode.LITERAL) -> LawVerdict:
    """Check one law over its default schedule."""
    if law_id not in CATALOG:
        raise KeyError(f"unknown law {law_id!r}")
    return _run(CATALOG[law_id], default_domains(law_id), mode)


def run_catalog(mode: InclusionMode = InclusionMode.LITERAL,
                law_ids: tuple[str, ...] | None = None,
                domain: SearchDomain | None = None) -> tuple[LawVerdict, ...]:
    """Verdicts for the requested laws (default: all) in catalog order.

    With an explicit domain, every law runs on that domain with its own
    arity substituted; otherwise each law runs its default schedule.
    """
    ids = CATALOG_ORDER if law_ids is None else tuple(law_ids)
    verdicts = []
    for law_id in ids:
        if law_id not in CATALOG:
            raise KeyError(f"unknown law {law_id!r}")
        law = CATALOG[law_id]
        if domain is None:
            domains = default_domains(law_id)
        else:
            domains = (
                SearchDomain(domain.universe_size, domain.step, law.arity, domain.strategy),
            )
        verdicts.append(_run(law, domains, mode))
    return tuple(verdicts)
