"""Elementary abelian 2-group bookkeeping.

G = (Z/2)^m acts on the cube complex of a simplicial complex on m vertices;
a characteristic matrix x (n rows, m columns, entries mod 2) presents a
quotient map G -> L = (Z/2)^n with kernel K.  Group elements are plain 0/1
tuples; G-elements have length m and L-elements length n, and every
operation checks the length it expects.
"""

from __future__ import annotations

import itertools
from typing import Sequence

from .errors import ValidationError


def xor(a, b):
    if len(a) != len(b):
        raise ValueError("group element lengths differ")
    return tuple(x ^ y for x, y in zip(a, b))


def gf2_rref(rows: Sequence[Sequence[int]], width: int):
    """Reduced row echelon form over F_2.

    Returns (pivot column list, reduced nonzero rows as tuples)."""
    work = [list(r) for r in rows]
    for r in work:
        if len(r) != width:
            raise ValueError("row width mismatch")
    pivots = []
    reduced = []
    rank = 0
    for col in range(width):
        pivot_row = None
        for i in range(rank, len(work)):
            if work[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[rank], work[pivot_row] = work[pivot_row], work[rank]
        for i in range(len(work)):
            if i != rank and work[i][col]:
                work[i] = [a ^ b for a, b in zip(work[i], work[rank])]
        pivots.append(col)
        rank += 1
    reduced = [tuple(work[i]) for i in range(rank)]
    return pivots, reduced


def gf2_nullspace(rows: Sequence[Sequence[int]], width: int):
    """Row-reduced basis of {v : M v = 0} over F_2, rows of M given."""
    pivots, reduced = gf2_rref(rows, width)
    pivot_set = set(pivots)
    basis = []
    for free in range(width):
        if free in pivot_set:
            continue
        vec = [0] * width
        vec[free] = 1
        for row, pcol in zip(reduced, pivots):
            if row[free]:
                vec[pcol] = 1
        basis.append(tuple(vec))
    return gf2_rref(basis, width)[1]


class CharMatrix:
    """n x m matrix over F_2: column j is the image p_j in L of the j-th
    coordinate generator of G."""

    __slots__ = ("n", "m", "rows", "_cols", "_rank")

    def __init__(self, n: int, m: int, rows):
        rows = tuple(tuple(int(v) for v in r) for r in rows)
        if n < 0 or m < 0:
            raise ValidationError("matrix dimensions must be nonnegative")
        if len(rows) != n:
            raise ValidationError(f"expected {n} rows, got {len(rows)}")
        for i, r in enumerate(rows):
            if len(r) != m:
                raise ValidationError(f"row {i} has length {len(r)}, expected {m}")
            for j, v in enumerate(r):
                if v not in (0, 1):
                    raise ValidationError(f"entry ({i},{j}) is {v}, not 0/1")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "_cols", None)
        object.__setattr__(self, "_rank", None)

    def __setattr__(self, name, value):
        raise AttributeError("CharMatrix is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, CharMatrix)
            and (self.n, self.m, self.rows) == (other.n, other.m, other.rows)
        )

    def __hash__(self):
        return hash((self.n, self.m, self.rows))

    def __repr__(self):
        return f"CharMatrix(n={self.n}, m={self.m}, rows={[list(r) for r in self.rows]})"

    def columns(self):
        """p_j for j = 0..m-1, each an element of L."""
        if self._cols is None:
            cols = tuple(tuple(self.rows[i][j] for i in range(self.n)) for j in range(self.m))
            object.__setattr__(self, "_cols", cols)
        return self._cols

    def rank2(self) -> int:
        if self._rank is None:
            object.__setattr__(self, "_rank", len(gf2_rref(self.rows, self.m)[0]))
        return self._rank

    def kernel_basis(self):
        """Row-reduced basis of K = ker(x) inside G."""
        return gf2_nullspace(self.rows, self.m)


def parse_char_matrix(doc) -> CharMatrix:
    """Build from {"n": int, "m": int, "rows": [[0/1,...]]}."""
    if not isinstance(doc, dict):
        raise ValidationError("matrix document must be a JSON object")
    for key in ("n", "m", "rows"):
        if key not in doc:
            raise ValidationError(f"matrix document lacks key '{key}'")
    if not isinstance(doc["rows"], list):
        raise ValidationError("'rows' must be a list")
    return CharMatrix(doc["n"], doc["m"], doc["rows"])


def parse_subgroup(doc):
    """Build a K-basis from {"m": int, "generators": [[0/1,...]]}.

    Returns (m, row-reduced basis tuple)."""
    if not isinstance(doc, dict):
        raise ValidationError("subgroup document must be a JSON object")
    for key in ("m", "generators"):
        if key not in doc:
            raise ValidationError(f"subgroup document lacks key '{key}'")
    m = doc["m"]
    gens = doc["generators"]
    if not isinstance(m, int) or m < 0:
        raise ValidationError("'m' must be a nonnegative integer")
    if not isinstance(gens, list):
        raise ValidationError("'generators' must be a list")
    for pos, g in enumerate(gens):
        if not isinstance(g, list) or len(g) != m:
            raise ValidationError(f"generator {pos} must be a list of length {m}")
        for j, v in enumerate(g):
            if v not in (0, 1):
                raise ValidationError(f"generator {pos} entry {j} is {v!r}, not 0/1")
    return m, gf2_rref(gens, m)[1]


def subgroup_elements(basis, m=None):
    """All elements spanned by the basis vectors (includes zero)."""
    basis = list(basis)
    if m is None:
        if not basis:
            raise ValueError("need m for an empty basis")
        m = len(basis[0])
    elements = []
    for picks in itertools.product((0, 1), repeat=len(basis)):
        v = (0,) * m
        for take, b in zip(picks, basis):
            if take:
                v = xor(v, b)
        elements.append(v)
    return sorted(set(elements))


def char_matrix_for_subgroup(m: int, basis) -> CharMatrix:
    """A canonical characteristic matrix whose kernel is exactly span(basis):
    n = m - dim K, rows = row-reduced basis of the annihilator of K."""
    basis = list(basis)
    if not basis:
        rows = [[1 if j == i else 0 for j in range(m)] for i in range(m)]
        return CharMatrix(m, m, rows)
    ann = gf2_nullspace(basis, m)
    return CharMatrix(len(ann), m, ann)


def free_action_violation(sc, basis):
    """Nonzero element of span(basis) whose support is a face, or None.

    The subgroup acts freely on the cube complex iff no such element
    exists."""
    for k in subgroup_elements(basis, sc.m):
        if any(k) and sc.is_face(j for j, bit in enumerate(k) if bit):
            return k
    return None


def is_free_action(sc, basis) -> bool:
    return free_action_violation(sc, basis) is None


def assert_free_action(sc, basis):
    bad = free_action_violation(sc, basis)
    if bad is not None:
        supp = sorted(j + 1 for j, bit in enumerate(bad) if bit)
        raise ValidationError(
            f"subgroup does not act freely: element {''.join(map(str, bad))} "
            f"has support {supp} in the complex"
        )
