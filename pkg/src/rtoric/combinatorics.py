"""Simplicial complexes on a ground set of m vertices, with ghost vertices.

Vertices are 1-based in all external documents and 0-based in memory; the
parser and the formatting helpers are the only code that translates.  A
complex always contains the empty face.  The empty complex {emptyset} is the
document {"m": m, "facets": [[]]}; a document with no facets at all is
rejected.

Also hosts the multi-index bookkeeping shared by the chain and cochain
models: a multi-index is a length-m tuple of nonnegative integers, its
support must be a face, and the two sign exponents below fix all Koszul
signs used elsewhere.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb
from typing import Iterable

from .errors import ValidationError


def shuffle_exponent(beta, gamma) -> int:
    """Exponent of the sign picked up when the gamma block moves past the
    beta block: sum over j < j' of gamma_j * beta_{j'}."""
    if len(beta) != len(gamma):
        raise ValueError("multi-index lengths differ")
    total = 0
    seen = 0
    for j in range(len(beta) - 1, -1, -1):
        total += gamma[j] * seen
        seen += beta[j]
    return total


def prefix_sum(alpha, j: int) -> int:
    """Sum of the first j entries of alpha (j = 0..m)."""
    if not 0 <= j <= len(alpha):
        raise ValidationError("prefix length out of range")
    return sum(alpha[:j])


def support(alpha) -> frozenset:
    return frozenset(j for j, a in enumerate(alpha) if a)


class SimplicialComplex:
    """Finite simplicial complex on vertices 0..m-1 (internal numbering).

    Stored as the full downward-closed face set; `facets` are the maximal
    faces.  Instances are immutable and hashable.
    """

    __slots__ = ("m", "faces", "face_set", "facets", "_mi_cache")

    def __init__(self, m: int, facets: Iterable[Iterable[int]]):
        if m < 0:
            raise ValidationError("vertex count m must be nonnegative")
        facets = [frozenset(f) for f in facets]
        if not facets:
            raise ValidationError("a complex needs at least one facet ([[]] for the empty complex)")
        for f in facets:
            for v in f:
                if not 0 <= v < m:
                    raise ValidationError(f"vertex {v} out of range 0..{m - 1}")
        face_set = {frozenset()}
        for f in facets:
            for k in range(1, len(f) + 1):
                face_set.update(frozenset(c) for c in itertools.combinations(sorted(f), k))
        self.m = m
        self.face_set = frozenset(face_set)
        self.faces = tuple(sorted(face_set, key=lambda s: (len(s), tuple(sorted(s)))))
        maximal = [f for f in face_set if not any(f < g for g in face_set)]
        self.facets = tuple(sorted(maximal, key=lambda s: (len(s), tuple(sorted(s)))))
        self._mi_cache = {}

    def __setattr__(self, name, value):
        if hasattr(self, "_mi_cache") and name != "_mi_cache":
            raise AttributeError("SimplicialComplex is immutable")
        object.__setattr__(self, name, value)

    def __eq__(self, other):
        return (
            isinstance(other, SimplicialComplex)
            and self.m == other.m
            and self.face_set == other.face_set
        )

    def __hash__(self):
        return hash((self.m, self.face_set))

    def __repr__(self):
        shown = [sorted(v + 1 for v in f) for f in self.facets]
        return f"SimplicialComplex(m={self.m}, facets={shown})"

    def is_face(self, vertices) -> bool:
        return frozenset(vertices) in self.face_set

    def contains_complex(self, other: "SimplicialComplex") -> bool:
        """True when every face of `other` is a face of self (same m)."""
        return self.m == other.m and other.face_set <= self.face_set

    @property
    def max_face_size(self) -> int:
        return max(len(f) for f in self.face_set)

    def face_count_by_size(self):
        counts = [0] * (self.max_face_size + 1)
        for f in self.face_set:
            counts[len(f)] += 1
        return counts

    def multi_indices(self, degree: int):
        """All multi-indices of total degree `degree` whose support is a
        face, in ascending lexicographic order."""
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        cached = self._mi_cache.get(degree)
        if cached is not None:
            return cached
        if degree == 0:
            result = ((0,) * self.m,)
        else:
            found = []
            for face in self.face_set:
                if 0 < len(face) <= degree:
                    verts = sorted(face)
                    for split in _compositions(degree, len(verts)):
                        alpha = [0] * self.m
                        for v, a in zip(verts, split):
                            alpha[v] = a
                        found.append(tuple(alpha))
            found.sort()
            result = tuple(found)
        self._mi_cache[degree] = result
        return result

    def multi_index_count(self, degree: int) -> int:
        """Stars-and-bars count: sum over nonempty faces tau with |tau| <= d
        of C(d-1, |tau|-1); used as an independent check on enumeration."""
        if degree == 0:
            return 1
        return sum(
            comb(degree - 1, len(f) - 1)
            for f in self.face_set
            if 0 < len(f) <= degree
        )

    def euler_characteristic(self, group_order: int = 1) -> Fraction:
        """Euler characteristic of the associated cube complex divided by
        the order of a freely acting subgroup."""
        total = sum((-1) ** len(f) * 2 ** (self.m - len(f)) for f in self.face_set)
        return Fraction(total, group_order)


def _compositions(total: int, parts: int):
    """All tuples of `parts` positive integers summing to `total`."""
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def parse_complex(doc) -> SimplicialComplex:
    """Build a complex from {"m": int, "facets": [[1-based vertices]]}."""
    if not isinstance(doc, dict):
        raise ValidationError("complex document must be a JSON object")
    try:
        m = doc["m"]
        facets = doc["facets"]
    except KeyError as missing:
        raise ValidationError(f"complex document lacks key {missing}") from None
    if not isinstance(m, int) or m < 0:
        raise ValidationError("'m' must be a nonnegative integer")
    if not isinstance(facets, list) or not facets:
        raise ValidationError("'facets' must be a nonempty list ([[]] for the empty complex)")
    internal = []
    for pos, facet in enumerate(facets):
        if not isinstance(facet, list):
            raise ValidationError(f"facet {pos} is not a list")
        seen = set()
        verts = []
        for entry_pos, v in enumerate(facet):
            if not isinstance(v, int) or not 1 <= v <= m:
                raise ValidationError(
                    f"facet {pos} entry {entry_pos}: vertex {v!r} out of range 1..{m}"
                )
            if v in seen:
                raise ValidationError(f"facet {pos} entry {entry_pos}: vertex {v} repeated")
            seen.add(v)
            verts.append(v - 1)
        internal.append(verts)
    return SimplicialComplex(m, internal)


def complex_document(sc: SimplicialComplex) -> dict:
    """Inverse of parse_complex (1-based facet lists)."""
    return {
        "m": sc.m,
        "facets": [sorted(v + 1 for v in f) for f in sc.facets],
    }
