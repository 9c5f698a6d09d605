"""Equivariant chain coalgebra of a real toric space.

Basis elements are pairs (alpha, g): alpha a multi-index whose support is a
face, g an element of L = (Z/2)^n.  The differential and the diagonal are
the tensor-product extension of the one-vertex building block: on a single
interval coordinate, d w_k = w_{k-1} + (-1)^k w_{k-1} o and
Delta w_k = sum_{i+j=k} w_i o^j (x) w_j, where o is the image p_j in L of
the j-th coordinate involution.  All signs are fixed by shuffle_exponent
and prefix_sum from rtoric.combinatorics.
"""

from __future__ import annotations

import itertools

from .combinatorics import SimplicialComplex, prefix_sum, shuffle_exponent, support
from .errors import ValidationError
from .group_data import CharMatrix, xor
from .linalg import SparseMat


class MElement:
    """Homogeneous integer combination of chain basis pairs (alpha, g)."""

    __slots__ = ("terms", "degree")

    def __init__(self, terms: dict, degree=None):
        clean = {}
        for key, coeff in terms.items():
            if coeff:
                alpha, g = key
                d = sum(alpha)
                if degree is None:
                    degree = d
                elif d != degree:
                    raise ValidationError("terms of mixed degree in one element")
                clean[(tuple(alpha), tuple(g))] = coeff
        self.terms = clean
        self.degree = degree if clean else None

    @classmethod
    def zero(cls):
        return cls({})

    @classmethod
    def basis(cls, alpha, g):
        return cls({(tuple(alpha), tuple(g)): 1})

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            out[key] = out.get(key, 0) + coeff
        return MElement(out)

    def __sub__(self, other):
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            out[key] = out.get(key, 0) - coeff
        return MElement(out)

    def __rmul__(self, scalar: int):
        return MElement({key: scalar * coeff for key, coeff in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, MElement) and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "MElement(0)"
        parts = [f"{c}*u{list(a)}(x){''.join(map(str, g))}" for (a, g), c in sorted(self.terms.items())]
        return "MElement(" + " + ".join(parts) + ")"


class ChainModel:
    """Chains of the real toric space defined by (complex, characteristic
    matrix); provides the basis, differential, diagonal and L-action."""

    def __init__(self, sc: SimplicialComplex, chi: CharMatrix):
        if chi.m != sc.m:
            raise ValidationError(f"matrix has m={chi.m}, complex has m={sc.m}")
        self.sc = sc
        self.chi = chi
        self.cols = chi.columns()  # p_j, elements of L
        self.group = tuple(itertools.product((0, 1), repeat=chi.n))  # L, lex order
        self._basis_cache = {}
        self._index_cache = {}

    def basis(self, degree: int):
        """Pairs (alpha, g): alpha ascending lex, then g ascending lex."""
        if degree not in self._basis_cache:
            self._basis_cache[degree] = tuple(
                (alpha, g)
                for alpha in self.sc.multi_indices(degree)
                for g in self.group
            )
        return self._basis_cache[degree]

    def index(self, degree: int):
        if degree not in self._index_cache:
            self._index_cache[degree] = {
                key: i for i, key in enumerate(self.basis(degree))
            }
        return self._index_cache[degree]

    def _check_term(self, alpha, g):
        if len(alpha) != self.sc.m or len(g) != self.chi.n:
            raise ValidationError("term has wrong multi-index or group length")
        if not self.sc.is_face(support(alpha)):
            raise ValidationError(f"support of {alpha} is not a face")

    def differential_term(self, alpha, g) -> dict:
        """Image of the basis element (alpha, g) as {(alpha', g'): coeff}."""
        self._check_term(alpha, g)
        out: dict = {}
        running = 0  # prefix_sum(alpha, j) maintained incrementally
        for j, aj in enumerate(alpha):
            if aj:
                lowered = alpha[:j] + (aj - 1,) + alpha[j + 1 :]
                sign = -1 if running & 1 else 1
                for g2, extra in ((g, 1), (xor(self.cols[j], g), (-1) ** aj)):
                    key = (lowered, g2)
                    acc = out.get(key, 0) + sign * extra
                    if acc:
                        out[key] = acc
                    else:
                        out.pop(key, None)
                running += aj
        return out

    def differential(self, elem: MElement) -> MElement:
        out: dict = {}
        for (alpha, g), coeff in elem.terms.items():
            for key, c in self.differential_term(alpha, g).items():
                acc = out.get(key, 0) + coeff * c
                if acc:
                    out[key] = acc
                else:
                    out.pop(key, None)
        return MElement(out)

    def diagonal_term(self, alpha, g) -> dict:
        """Image under the diagonal: {((beta, g1), (gamma, g2)): coeff}."""
        self._check_term(alpha, g)
        out = {}
        for beta in itertools.product(*(range(a + 1) for a in alpha)):
            gamma = tuple(a - b for a, b in zip(alpha, beta))
            twist = g
            for j, c in enumerate(gamma):
                if c & 1:
                    twist = xor(self.cols[j], twist)
            sign = -1 if shuffle_exponent(beta, gamma) & 1 else 1
            out[((beta, twist), (gamma, g))] = sign
        return out

    def diagonal(self, elem: MElement) -> dict:
        out: dict = {}
        for (alpha, g), coeff in elem.terms.items():
            for key, c in self.diagonal_term(alpha, g).items():
                acc = out.get(key, 0) + coeff * c
                if acc:
                    out[key] = acc
                else:
                    out.pop(key, None)
        return out

    def act(self, h, elem: MElement) -> MElement:
        """Translation action of h in L."""
        if len(h) != self.chi.n:
            raise ValidationError("group element has wrong length")
        return MElement(
            {(alpha, xor(h, g)): coeff for (alpha, g), coeff in elem.terms.items()}
        )

    def differential_matrix(self, degree: int) -> SparseMat:
        """Matrix of the differential from degree to degree-1 in the
        canonical bases."""
        if degree <= 0:
            return SparseMat(0, len(self.basis(degree)) if degree == 0 else 0, {})
        rows = self.index(degree - 1)
        cols = self.basis(degree)
        entries = {}
        for ci, (alpha, g) in enumerate(cols):
            for key, coeff in self.differential_term(alpha, g).items():
                entries[(rows[key], ci)] = coeff
        return SparseMat(len(rows), len(cols), entries)
