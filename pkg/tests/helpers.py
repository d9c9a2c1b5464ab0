"""Independent oracles used by the tests.

Everything here recomputes expectations from first principles (plain
loops over integer tuples) without calling the code paths under test.
"""

from __future__ import annotations

import itertools

from pftopo import Grade, MembershipTriple, PictureFuzzySet, Universe

SCALE = 10_000
CAP = SCALE // 2

RawTriple = tuple[int, int, int]
Vec = tuple[RawTriple, ...]


def brute_grid_triples(step: int = 2500, cap: int = CAP) -> list[RawTriple]:
    """All (mu, rho, sigma) on the step lattice up to the cap with sum <= 1,
    ascending lexicographic - written as bare loops."""
    out = []
    for m in range(0, cap + 1, step):
        for r in range(0, cap + 1, step):
            for s in range(0, cap + 1, step):
                if m + r + s <= SCALE:
                    out.append((m, r, s))
    return out


def closed_form_grid_count() -> int:
    """Lattice points (i, j, k) in {0, 1, 2}^3 with i + j + k <= 4."""
    return sum(
        1
        for i in range(3)
        for j in range(3)
        for k in range(3)
        if i + j + k <= 4
    )


def mk(universe: Universe, *raw_triples: RawTriple) -> PictureFuzzySet:
    return PictureFuzzySet(
        universe,
        tuple(MembershipTriple(Grade(m), Grade(r), Grade(s)) for m, r, s in raw_triples),
    )


def vec_of(s: PictureFuzzySet) -> Vec:
    return tuple((t.mu.raw, t.rho.raw, t.sigma.raw) for t in s.triples)


def raw_union(x: Vec, y: Vec) -> Vec:
    return tuple((max(a[0], b[0]), min(a[1], b[1]), min(a[2], b[2])) for a, b in zip(x, y))


def raw_intersection(x: Vec, y: Vec) -> Vec:
    return tuple((min(a[0], b[0]), min(a[1], b[1]), max(a[2], b[2])) for a, b in zip(x, y))


def naive_closure(start: set[Vec]) -> frozenset[Vec]:
    """Saturate a set of raw vectors under both binary operations."""
    closed = set(start)
    frontier = list(start)
    while frontier:
        nxt = []
        for x in frontier:
            for y in list(closed):
                for combined in (raw_union(x, y), raw_intersection(x, y),
                                 raw_union(y, x), raw_intersection(y, x)):
                    if combined not in closed:
                        closed.add(combined)
                        nxt.append(combined)
        frontier = nxt
    return frozenset(closed)


def is_closed_family(vecs: frozenset[Vec], full_vec: Vec, null_vec: Vec) -> bool:
    """Independent check of the axioms over raw vectors."""
    if full_vec not in vecs or null_vec not in vecs:
        return False
    for x, y in itertools.combinations_with_replacement(vecs, 2):
        if raw_union(x, y) not in vecs or raw_intersection(x, y) not in vecs:
            return False
    return True
