"""Independent cellular ground truth.

The cube complex of a simplicial complex on m vertices has one cell per pair
(tau, eps) with tau a face (interval coordinates) and eps a sign vector on
the remaining coordinates; the subcomplex of the full cube selected by the
face family.  G = (Z_2)^m acts by flipping coordinates; a freely acting
subgroup K yields the quotient cell structure with one generator per orbit.

Everything here is deliberately disjoint from the algebraic model: only the
shared exact linear algebra is reused.
"""

from __future__ import annotations

import itertools

from .combinatorics import SimplicialComplex
from .errors import ValidationError
from .group_data import assert_free_action, gf2_rref, subgroup_elements
from .linalg import GradedIntegerComplex, SparseMat, cohomology


class CubeComplex:
    """Cells (tau, eps): tau a sorted face tuple, eps a length-m tuple that
    is 0 on tau and +-1 elsewhere; dimension = |tau|."""

    def __init__(self, sc: SimplicialComplex):
        self.sc = sc
        self.m = sc.m
        self._cells: dict = {}

    def cells(self, dim: int):
        if dim not in self._cells:
            out = []
            for face in self.sc.faces:
                if len(face) != dim:
                    continue
                tau = tuple(sorted(face))
                rest = [j for j in range(self.m) if j not in face]
                for signs in itertools.product((-1, 1), repeat=len(rest)):
                    eps = [0] * self.m
                    for j, s in zip(rest, signs):
                        eps[j] = s
                    out.append((tau, tuple(eps)))
            out.sort()
            self._cells[dim] = tuple(out)
        return self._cells[dim]

    def boundary_term(self, tau, eps) -> dict:
        """d(tau, eps) with the product orientation: interval factors ordered
        by vertex index, d[-1,1] = {1} - {-1}."""
        out = {}
        for pos, j in enumerate(tau):
            sub = tuple(x for x in tau if x != j)
            sign = -1 if pos % 2 else 1
            for val, s in ((1, sign), (-1, -sign)):
                e = list(eps)
                e[j] = val
                out[(sub, tuple(e))] = s
        return out

    def act(self, g, tau, eps):
        """g.(tau, eps) = (sign, cell): flipped intervals each reverse
        orientation, free coordinates flip sign."""
        if len(g) != self.m:
            raise ValidationError("group element has wrong length")
        flipped = sum(1 for j in tau if g[j])
        e = tuple(-v if g[j] and v else v for j, v in enumerate(eps))
        return (-1 if flipped % 2 else 1), (tau, e)

    def boundary_matrix(self, dim: int) -> SparseMat:
        rows = {cell: i for i, cell in enumerate(self.cells(dim - 1))}
        cols = self.cells(dim)
        entries = {}
        for ci, (tau, eps) in enumerate(cols):
            for cell, c in self.boundary_term(tau, eps).items():
                entries[(rows[cell], ci)] = c
        return SparseMat(len(rows), len(cols), entries)


class QuotientComplex:
    """Cell structure on the quotient by a freely acting subgroup K: one
    generator per K-orbit, named by the lexicographically smallest eps."""

    def __init__(self, sc: SimplicialComplex, k_basis):
        basis = [tuple(v) for v in k_basis]
        for v in basis:
            if len(v) != sc.m or any(x not in (0, 1) for x in v):
                raise ValidationError("subgroup generator must be a 0/1 vector of length m")
        _, reduced = gf2_rref(basis, sc.m)
        assert_free_action(sc, reduced)
        self.sc = sc
        self.cube = CubeComplex(sc)
        self.elements = subgroup_elements(reduced, sc.m)
        self.order = len(self.elements)
        self._cells: dict = {}

    def reduce(self, tau, eps):
        """(sign, representative) of the orbit of (tau, eps); the minimizing
        k is unique because the action is free."""
        best = eps
        best_sign = 1
        for k in self.elements:
            flipped = 0
            cand = list(eps)
            for j, v in enumerate(cand):
                if k[j]:
                    if v:
                        cand[j] = -v
                    else:
                        flipped += 1
            cand = tuple(cand)
            if cand < best:
                best = cand
                best_sign = -1 if flipped % 2 else 1
        return best_sign, (tau, best)

    def cells(self, dim: int):
        if dim not in self._cells:
            reps = []
            for tau, eps in self.cube.cells(dim):
                sign, (_, rep) = self.reduce(tau, eps)
                if rep == eps:
                    reps.append((tau, eps))
            self._cells[dim] = tuple(reps)
        return self._cells[dim]

    def boundary_matrix(self, dim: int) -> SparseMat:
        rows = {cell: i for i, cell in enumerate(self.cells(dim - 1))}
        cols = self.cells(dim)
        entries = {}
        for ci, (tau, eps) in enumerate(cols):
            for (sub, e), c in self.cube.boundary_term(tau, eps).items():
                sign, rep = self.reduce(sub, e)
                key = (rows[rep], ci)
                acc = entries.get(key, 0) + sign * c
                if acc:
                    entries[key] = acc
                else:
                    entries.pop(key, None)
        return SparseMat(len(rows), len(cols), entries)

    def cochain_complex(self) -> GradedIntegerComplex:
        """Dual complex with d^k = -(-1)^k (boundary_{k+1})^T."""
        top = self.sc.max_face_size
        sizes = [len(self.cells(d)) for d in range(top + 1)] + [0]
        diffs = []
        for k in range(top):
            scale = -1 if k % 2 == 0 else 1
            diffs.append(self.boundary_matrix(k + 1).transpose(scale))
        diffs.append(SparseMat(0, sizes[top], {}))
        return GradedIntegerComplex(sizes, diffs, check=False)

    def chain_complex(self) -> GradedIntegerComplex:
        """Homological complex reindexed as a cochain complex (degree k holds
        the (top-k)-cells) so that the same machinery computes homology."""
        top = self.sc.max_face_size
        sizes = [len(self.cells(top - d)) for d in range(top + 1)] + [0]
        diffs = [self.boundary_matrix(top - k) for k in range(top)]
        diffs.append(SparseMat(0, sizes[top], {}))
        return GradedIntegerComplex(sizes, diffs, check=False)


def build_cellular_complex(sc: SimplicialComplex) -> CubeComplex:
    return CubeComplex(sc)


def quotient_complex(sc: SimplicialComplex, k_basis) -> QuotientComplex:
    return QuotientComplex(sc, k_basis)


def oracle_cohomology(sc: SimplicialComplex, k_basis, coeff: str = "Z", dualize: bool = True):
    """Cellular cohomology of the quotient space in degrees 0..max face size.

    With dualize=False the chain complex is used instead (homology, reported
    with degree k meaning H_k)."""
    q = QuotientComplex(sc, k_basis)
    top = sc.max_face_size
    if dualize:
        cx = q.cochain_complex()
        res = cohomology(cx, coeff, range(top + 1))
        return res
    cx = q.chain_complex()
    res = cohomology(cx, coeff, range(top + 1))
    degrees = [type(d)(top - d.degree, d.rank, d.torsion) for d in reversed(res.degrees)]
    return type(res)(res.coeff, degrees)


def cells_document(sc: SimplicialComplex, k_basis) -> dict:
    """JSON-friendly dump of cells with orbit identifiers (debugging aid)."""
    q = QuotientComplex(sc, k_basis)
    dims = []
    for d in range(sc.max_face_size + 1):
        reps = {cell: i for i, cell in enumerate(q.cells(d))}
        cells = []
        for tau, eps in q.cube.cells(d):
            _, rep = q.reduce(tau, eps)
            cells.append(
                {
                    "tau": [j + 1 for j in tau],
                    "eps": list(eps),
                    "orbit": reps[rep],
                }
            )
        dims.append(cells)
    return {"m": sc.m, "dims": dims}
