"""Shared enumeration helpers for the test suite."""

import itertools
from functools import lru_cache

from rtoric import SimplicialComplex, is_free_action
from rtoric.group_data import gf2_rref


@lru_cache(maxsize=None)
def all_complexes(m: int):
    """Every simplicial complex on m labeled vertices (downward-closed
    nonempty families of subsets, ghost vertices allowed); practical m <= 4."""
    subsets = [
        frozenset(s)
        for k in range(1, m + 1)
        for s in itertools.combinations(range(m), k)
    ]
    out = []
    for bits in itertools.product((0, 1), repeat=len(subsets)):
        fam = {s for s, b in zip(subsets, bits) if b}
        if all(f - {x} in fam or len(f) == 1 for f in fam for x in f):
            facets = [tuple(sorted(f)) for f in fam if not any(f < g for g in fam)]
            out.append(SimplicialComplex(m, facets or [()]))
    return tuple(out)


@lru_cache(maxsize=None)
def all_subgroups(m: int):
    """Row-reduced bases of every subgroup of (Z_2)^m."""
    vectors = list(itertools.product((0, 1), repeat=m))[1:]
    seen = {(): ()}
    for r in range(1, m + 1):
        for gens in itertools.combinations(vectors, r):
            _, red = gf2_rref(list(gens), m)
            if len(red) == r:
                seen.setdefault(tuple(red), tuple(red))
    return tuple(seen.values())


def free_subgroups(sc: SimplicialComplex):
    return [list(b) for b in all_subgroups(sc.m) if is_free_action(sc, list(b))]


def random_complex(rng, m: int) -> SimplicialComplex:
    facets = []
    for _ in range(rng.randint(1, m + 2)):
        size = rng.randint(1, m)
        facets.append(tuple(sorted(rng.sample(range(m), size))))
    if rng.random() < 0.15:
        facets = [()]
    return SimplicialComplex(m, facets)


def random_matrix_doc(rng, n: int, m: int) -> dict:
    return {
        "n": n,
        "m": m,
        "rows": [[rng.randint(0, 1) for _ in range(m)] for _ in range(n)],
    }


# named complexes used across files
def boundary_triangle() -> SimplicialComplex:
    return SimplicialComplex(3, [(0, 1), (1, 2), (0, 2)])


def four_cycle() -> SimplicialComplex:
    return SimplicialComplex(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


def two_points(m: int = 2) -> SimplicialComplex:
    return SimplicialComplex(m, [(0,), (1,)])


def full_simplex(m: int) -> SimplicialComplex:
    return SimplicialComplex(m, [tuple(range(m))])
