"""Exact linear algebra over Z, Q and F_p for graded integer complexes.

Matrices are sparse integer maps; a GradedIntegerComplex is a cochain
complex with differentials raising degree by one.  Integral cohomology and
rational dimensions come from one Smith reduction per differential; field
dimensions run an independent modular elimination so that the universal
coefficient bookkeeping remains a genuine cross-check between two pipelines.

Set RTORIC_DEBUG=1 (or linalg.DEBUG = True) to verify Smith transforms on
every smith_normal_form(with_transforms=True) call.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import _kernels_py, kernels
from .errors import CrossCheckError, ValidationError

DEBUG = bool(os.environ.get("RTORIC_DEBUG"))


class SparseMat:
    """Immutable sparse integer matrix: entries maps (row, col) to a nonzero
    int.  Acts on coordinate columns: entry (i, j) is the coefficient of
    output basis element i in the image of input basis element j."""

    __slots__ = ("nrows", "ncols", "entries")

    def __init__(self, nrows: int, ncols: int, entries: dict):
        object.__setattr__(self, "nrows", nrows)
        object.__setattr__(self, "ncols", ncols)
        object.__setattr__(self, "entries", {k: v for k, v in entries.items() if v})
        for (r, c) in self.entries:
            if not (0 <= r < nrows and 0 <= c < ncols):
                raise ValueError(f"entry ({r},{c}) outside {nrows}x{ncols}")

    def __setattr__(self, name, value):
        raise AttributeError("SparseMat is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, SparseMat)
            and (self.nrows, self.ncols) == (other.nrows, other.ncols)
            and self.entries == other.entries
        )

    def __repr__(self):
        return f"SparseMat({self.nrows}x{self.ncols}, nnz={len(self.entries)})"

    def transpose(self, scale: int = 1) -> "SparseMat":
        return SparseMat(
            self.ncols, self.nrows, {(c, r): scale * v for (r, c), v in self.entries.items()}
        )

    def compose(self, other: "SparseMat") -> "SparseMat":
        """self after other (matrix product self @ other)."""
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in composition")
        by_row: dict = {}
        for (r, c), v in other.entries.items():
            by_row.setdefault(r, []).append((c, v))
        out: dict = {}
        for (r, k), v in self.entries.items():
            for c, w in by_row.get(k, ()):
                key = (r, c)
                acc = out.get(key, 0) + v * w
                if acc:
                    out[key] = acc
                else:
                    out.pop(key, None)
        return SparseMat(self.nrows, other.ncols, out)

    def is_zero(self) -> bool:
        return not self.entries

    def triplets(self):
        return sorted((r, c, v) for (r, c), v in self.entries.items())

    def to_dense(self):
        rows = [[0] * self.ncols for _ in range(self.nrows)]
        for (r, c), v in self.entries.items():
            rows[r][c] = v
        return rows

    @classmethod
    def from_dense(cls, rows) -> "SparseMat":
        entries = {}
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                if v:
                    entries[(i, j)] = int(v)
        ncols = len(rows[0]) if rows else 0
        return cls(len(rows), ncols, entries)


def smith_normal_form(mat, with_transforms: bool = False):
    """Invariant factors d1 | d2 | ... of an integer matrix (SparseMat or
    rows).  With transforms, also returns unimodular U, V (dense lists) with
    U * M * V = diag(factors, 0...); transforms are verified when DEBUG."""
    if isinstance(mat, SparseMat):
        sp = mat
    else:
        sp = SparseMat.from_dense(mat)
    if not with_transforms:
        return tuple(kernels.invariant_factors(sp.nrows, sp.ncols, sp.entries))
    dense = sp.to_dense()
    factors, u, v = _kernels_py.dense_snf_with_transforms(dense)
    factors = tuple(_kernels_py.chainify(factors))
    if DEBUG:
        _verify_transforms(sp, factors, u, v)
    return factors, u, v


def _verify_transforms(sp: SparseMat, factors, u, v):
    um = SparseMat.from_dense(u).compose(sp) if u else SparseMat(0, sp.ncols, {})
    umv = um.compose(SparseMat.from_dense(v)) if v else um
    expect = {}
    for i, f in enumerate(factors):
        expect[(i, i)] = f
    if umv.entries != expect:
        raise CrossCheckError("Smith transforms do not reproduce the diagonal")
    for name, t in (("U", u), ("V", v)):
        d = _bareiss_det(t)
        if d not in (1, -1):
            raise CrossCheckError(f"Smith transform {name} has determinant {d}")


def _bareiss_det(rows) -> int:
    n = len(rows)
    if n == 0:
        return 1
    a = [list(map(int, r)) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class DegreeData:
    degree: int
    rank: int
    torsion: tuple = ()

    def to_json_obj(self, with_torsion=True):
        obj = {"d": self.degree, "rank": self.rank}
        if with_torsion:
            obj["torsion"] = list(self.torsion)
        return obj


@dataclass(frozen=True)
class CohomologyResult:
    """Per-degree cohomology: free rank and invariant-factor torsion over Z,
    dimension (torsion empty) over a field."""

    coeff: str
    degrees: tuple

    def dim(self, k: int) -> int:
        for d in self.degrees:
            if d.degree == k:
                return d.rank
        return 0

    def torsion(self, k: int) -> tuple:
        for d in self.degrees:
            if d.degree == k:
                return d.torsion
        return ()

    def dims(self):
        return [d.rank for d in self.degrees]

    def euler(self) -> int:
        return sum((-1) ** d.degree * d.rank for d in self.degrees)

    def scaled(self, copies: int) -> "CohomologyResult":
        """Result for a disjoint union of `copies` identical spaces."""
        if copies == 1:
            return self
        return CohomologyResult(
            self.coeff,
            tuple(
                DegreeData(d.degree, d.rank * copies, tuple(sorted(d.torsion * copies)))
                for d in self.degrees
            ),
        )

    def to_json_obj(self):
        with_torsion = self.coeff == "Z"
        return {
            "coeff": self.coeff,
            "degrees": [d.to_json_obj(with_torsion) for d in self.degrees],
        }

    def table(self) -> str:
        lines = [f"{'d':>3}  {'rank':>5}  torsion"]
        for d in self.degrees:
            tor = ",".join(str(t) for t in d.torsion) if d.torsion else "-"
            lines.append(f"{d.degree:>3}  {d.rank:>5}  {tor}")
        return "\n".join(lines)


def parse_coeff(text: str):
    """Coefficient descriptor: "Z", "Q", or "F<p>" with p prime.

    Returns (descriptor, characteristic) with characteristic None for Z."""
    if text == "Z":
        return "Z", None
    if text == "Q":
        return "Q", 0
    if text.startswith("F") and text[1:].isdigit():
        p = int(text[1:])
        if p >= 2 and all(p % q for q in range(2, int(p**0.5) + 1)):
            return f"F{p}", p
        raise ValidationError(f"characteristic {p} is not prime")
    raise ValidationError(f"unknown coefficient descriptor {text!r} (use Z, Q, or F<p>)")


class GradedIntegerComplex:
    """Cochain complex of free Z-modules in degrees 0..len(sizes)-1 with
    differentials diffs[k]: degree k -> k+1.  Cohomology is computable in
    degrees 0..len(diffs)-1."""

    def __init__(self, sizes: Sequence[int], diffs: Sequence[SparseMat], check: bool = True):
        self.sizes = list(sizes)
        self.diffs = list(diffs)
        if len(self.diffs) != len(self.sizes) - 1:
            raise ValueError("need exactly one differential per adjacent degree pair")
        for k, d in enumerate(self.diffs):
            if d.ncols != self.sizes[k] or d.nrows != self.sizes[k + 1]:
                raise ValueError(f"differential {k} has shape {d.nrows}x{d.ncols}, "
                                 f"expected {self.sizes[k + 1]}x{self.sizes[k]}")
        if check:
            for k in range(len(self.diffs) - 1):
                if not self.diffs[k + 1].compose(self.diffs[k]).is_zero():
                    raise CrossCheckError(f"differential squared is nonzero in degree {k}")
        self._factors: dict = {}
        self._rank_mod: dict = {}

    @property
    def top_degree(self) -> int:
        return len(self.diffs) - 1

    def invariant_factors(self, k: int) -> tuple:
        if k < 0 or k >= len(self.diffs):
            return ()
        if k not in self._factors:
            d = self.diffs[k]
            self._factors[k] = tuple(kernels.invariant_factors(d.nrows, d.ncols, d.entries))
        return self._factors[k]

    def rank_q(self, k: int) -> int:
        return len(self.invariant_factors(k))

    def rank_mod(self, k: int, p: int) -> int:
        if k < 0 or k >= len(self.diffs):
            return 0
        key = (k, p)
        if key not in self._rank_mod:
            d = self.diffs[k]
            self._rank_mod[key] = kernels.rank_mod_p(d.nrows, d.ncols, d.entries, p)
        return self._rank_mod[key]


def cohomology_integral(cx: GradedIntegerComplex, degrees=None) -> CohomologyResult:
    if degrees is None:
        degrees = range(cx.top_degree + 1)
    out = []
    for k in degrees:
        if k < 0 or k > cx.top_degree:
            raise ValueError(f"degree {k} outside computable range 0..{cx.top_degree}")
        free = cx.sizes[k] - cx.rank_q(k) - cx.rank_q(k - 1)
        torsion = tuple(f for f in cx.invariant_factors(k - 1) if f > 1)
        out.append(DegreeData(k, free, torsion))
    return CohomologyResult("Z", tuple(out))


def cohomology_field(cx: GradedIntegerComplex, characteristic: int, degrees=None) -> CohomologyResult:
    """Dimensions over Q (characteristic 0) or F_p (p prime)."""
    if degrees is None:
        degrees = range(cx.top_degree + 1)
    out = []
    for k in degrees:
        if k < 0 or k > cx.top_degree:
            raise ValueError(f"degree {k} outside computable range 0..{cx.top_degree}")
        if characteristic == 0:
            dim = cx.sizes[k] - cx.rank_q(k) - cx.rank_q(k - 1)
        else:
            dim = cx.sizes[k] - cx.rank_mod(k, characteristic) - cx.rank_mod(k - 1, characteristic)
        out.append(DegreeData(k, dim))
    coeff = "Q" if characteristic == 0 else f"F{characteristic}"
    return CohomologyResult(coeff, tuple(out))


def cohomology(cx: GradedIntegerComplex, coeff: str, degrees=None) -> CohomologyResult:
    _, characteristic = parse_coeff(coeff)
    if characteristic is None:
        return cohomology_integral(cx, degrees)
    return cohomology_field(cx, characteristic, degrees)


def universal_coefficients_ok(zres: CohomologyResult, pres: CohomologyResult, p: int) -> bool:
    """dim_{F_p} H^k == rank H^k + #p-torsion of H^k + #p-torsion of H^{k+1}."""
    for d in pres.degrees:
        k = d.degree
        expected = (
            zres.dim(k)
            + sum(1 for t in zres.torsion(k) if t % p == 0)
            + sum(1 for t in zres.torsion(k + 1) if t % p == 0)
        )
        if d.rank != expected:
            return False
    return True


# ---------------------------------------------------------------------------
# ring tables


def _fraction_rref(rows, width):
    """RREF over Q.  Returns (pivot cols, reduced rows as Fraction lists)."""
    work = [[Fraction(v) for v in r] for r in rows]
    pivots = []
    rank = 0
    for col in range(width):
        piv = next((i for i in range(rank, len(work)) if work[i][col]), None)
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        inv = 1 / work[rank][col]
        work[rank] = [v * inv for v in work[rank]]
        for i in range(len(work)):
            if i != rank and work[i][col]:
                f = work[i][col]
                work[i] = [a - f * b for a, b in zip(work[i], work[rank])]
        pivots.append(col)
        rank += 1
    return pivots, work[:rank]


def _rref(mat: SparseMat, characteristic: int):
    if characteristic == 0:
        return _fraction_rref(mat.to_dense(), mat.ncols)
    pivots, rows = kernels.rref_mod_p(mat.nrows, mat.ncols, mat.entries, characteristic)
    return pivots, rows


def _nullspace_from_rref(pivots, rows, width, characteristic):
    pivot_set = set(pivots)
    basis = []
    for free in range(width):
        if free in pivot_set:
            continue
        vec = [Fraction(0) if characteristic == 0 else 0] * width
        vec[free] = Fraction(1) if characteristic == 0 else 1
        for row, pcol in zip(rows, pivots):
            if row[free]:
                vec[pcol] = -row[free] if characteristic == 0 else (-row[free]) % characteristic
        basis.append(vec)
    return basis


@dataclass(frozen=True)
class RingTable:
    """Multiplication table of the cohomology ring over a field.

    classes[d] is a list of (name, cocycle coordinate vector) pairs giving a
    basis of H^d by reduced-echelon representatives; products maps
    ((d1, i1), (d2, i2)) to the coordinate vector of the product class in
    the H^{d1+d2} basis."""

    coeff: str
    max_degree: int
    classes: tuple
    products: dict
    pretty: dict

    def class_count(self, d: int) -> int:
        return len(self.classes[d]) if 0 <= d <= self.max_degree else 0

    def product(self, a, b):
        return self.products[(a, b)]

    def graded_commutative(self, characteristic: int) -> bool:
        for (a, b), coords in self.products.items():
            (d1, _), (d2, _) = a, b
            other = self.products.get((b, a))
            if other is None:
                return False
            sign = (-1) ** (d1 * d2)
            for x, y in zip(coords, other):
                if characteristic == 0:
                    if x != sign * y:
                        return False
                elif (x - sign * y) % characteristic:
                    return False
        return True

    def to_json_obj(self):
        return {
            "coeff": self.coeff,
            "max_degree": self.max_degree,
            "classes": [
                [{"name": name, "pretty": self.pretty[name]} for name, _ in per_degree]
                for per_degree in self.classes
            ],
            "products": {
                f"{a[0]}.{a[1]}*{b[0]}.{b[1]}": [str(v) for v in coords]
                for (a, b), coords in sorted(self.products.items())
            },
        }


def ring_table(model, characteristic: int, max_degree: int) -> RingTable:
    """Multiplication table of H(model) over Q (characteristic 0) or F_p.

    `model` provides basis(d), differential_matrix(d), element_from_vector,
    product and vector_from_element; representatives are the reduced-echelon
    cocycles whose pivots are not boundary pivots, so the table is a pure
    function of the model and the field."""
    if characteristic != 0:
        parse_coeff(f"F{characteristic}")
    coeff = "Q" if characteristic == 0 else f"F{characteristic}"
    classes = []
    class_data = []  # per degree: (reps, boundary rows/pivots) for coordinates
    for d in range(max_degree + 1):
        nd = len(model.basis(d))
        dn = model.differential_matrix(d)
        # cocycles in degree d: nullspace of d^d, re-reduced to canonical RREF
        pivots, rows = _rref(dn, characteristic)
        null = _nullspace_from_rref(pivots, rows, nd, characteristic)
        zpiv, zrows = (
            _fraction_rref(null, nd) if characteristic == 0
            else kernels.rref_mod_p(
                len(null), nd,
                {(i, j): v for i, vec in enumerate(null) for j, v in enumerate(vec) if v},
                characteristic,
            )
        )
        if d == 0:
            bpiv, brows = [], []
        else:
            prev = model.differential_matrix(d - 1)
            bpiv, brows = _rref(prev.transpose(), characteristic)
        bset = set(bpiv)
        reps = [
            (f"h{d}_{idx}", list(row))
            for idx, (pc, row) in enumerate(
                (pc, row) for pc, row in zip(zpiv, zrows) if pc not in bset
            )
        ]
        classes.append(reps)
        class_data.append((zpiv, zrows, bpiv, brows, bset))
    # coordinates of an arbitrary cocycle: reduce by boundaries, read rep pivots
    def class_coords(vec, d):
        zpiv, zrows, bpiv, brows, bset = class_data[d]
        if characteristic == 0:
            v = list(vec)
        else:
            v = [x % characteristic for x in vec]
        for row, pc in zip(brows, bpiv):
            f = v[pc]
            if f:
                if characteristic == 0:
                    v = [a - f * b for a, b in zip(v, row)]
                else:
                    v = [(a - f * b) % characteristic for a, b in zip(v, row)]
        coords = []
        rep_rows = []
        for pc, row in zip(zpiv, zrows):
            if pc not in bset:
                coords.append(v[pc])
                rep_rows.append(row)
        for c, row in zip(coords, rep_rows):
            if c:
                if characteristic == 0:
                    v = [a - c * b for a, b in zip(v, row)]
                else:
                    v = [(a - c * b) % characteristic for a, b in zip(v, row)]
        if any(v):
            raise CrossCheckError("product of cocycles is not a cocycle modulo boundaries")
        return coords
    products = {}
    pretty = {}
    for d, reps in enumerate(classes):
        for name, vec in reps:
            pretty[name] = model.pretty_vector(d, vec)
    for d1, reps1 in enumerate(classes):
        for d2, reps2 in enumerate(classes):
            if d1 + d2 > max_degree:
                continue
            for i1, (_, v1) in enumerate(reps1):
                for i2, (_, v2) in enumerate(reps2):
                    prod = model.product_vector(d1, v1, d2, v2)
                    products[((d1, i1), (d2, i2))] = class_coords(prod, d1 + d2)
    return RingTable(coeff, max_degree, tuple(tuple(c) for c in classes), products, pretty)
