"""Cochain algebra model of a real toric space.

The degree-d basis is dual to the chain basis: t^alpha delta_g with alpha a
multi-index of total degree d supported on a face and g in L.  Differential
and product are the signed transposes of the chain-level differential and
diagonal; the pairing conventions are

    <d a, c>        = -(-1)^{deg a} <a, d c>
    <a (x) b, c'(x)c''> = (-1)^{deg b * deg c'} <a, c'> <b, c''>

so the matrix of the differential in degree d is -(-1)^d times the
transposed chain matrix from degree d+1, and products carry the sign
(-1)^{deg a * deg b} in front of the transposed diagonal.

Beware that the monomial generators do not match the dual basis one-to-one:
t_j^2 = -(sum_g t^{2 beta(j)} delta_g), with a minus sign.

Also hosts the square-free quotient model of the cube complex itself, the
Koszul complex computing the mod-2 Tor dimensions, and the cohomology
pipeline with its guard-degree, Euler and component checks.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .chain_model import ChainModel
from .combinatorics import SimplicialComplex, support
from .errors import CrossCheckError, ValidationError
from .group_data import CharMatrix, assert_free_action, xor
from .kernels import rank_mod_p
from .linalg import GradedIntegerComplex, SparseMat, cohomology, parse_coeff


class AElement:
    """Homogeneous combination of dual basis elements t^alpha delta_g."""

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
        return AElement(out)

    def __sub__(self, other):
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            out[key] = out.get(key, 0) - coeff
        return AElement(out)

    def __rmul__(self, scalar):
        return AElement({key: scalar * coeff for key, coeff in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, AElement) and self.terms == other.terms

    def reduced_mod(self, p: int) -> "AElement":
        return AElement({key: coeff % p for key, coeff in self.terms.items()})

    def __repr__(self):
        return f"AElement({format_element(self.terms) or '0'})"


def _monomial_str(alpha) -> str:
    parts = []
    for j, a in enumerate(alpha):
        if a == 1:
            parts.append(f"t{j + 1}")
        elif a > 1:
            parts.append(f"t{j + 1}^{a}")
    return "*".join(parts)


def format_element(terms, s_basis: bool = False) -> str:
    """Render a terms dict; with s_basis the group part is converted from
    delta functions to monomials in the s_i."""
    if s_basis:
        terms = _to_s_terms(terms)
        def tail(key):
            sigma = key
            return "*".join(f"s{i + 1}" for i in sorted(sigma))
    else:
        def tail(key):
            return "d(" + "".join(map(str, key)) + ")"
    parts = []
    for (alpha, rest), coeff in sorted(terms.items()):
        names = "*".join(x for x in (_monomial_str(alpha), tail(rest)) if x)
        if not names:
            names = "1"
        if coeff == 1:
            parts.append(names)
        elif coeff == -1:
            parts.append(f"-{names}")
        else:
            parts.append(f"{coeff}*{names}")
    return " + ".join(parts).replace("+ -", "- ")


def _to_s_terms(terms) -> dict:
    """Rewrite sum_g c_g delta_g as sum_sigma k_sigma s_sigma per alpha
    (subset Moebius inversion; exact over Z and Q)."""
    out: dict = {}
    by_alpha: dict = {}
    for (alpha, g), coeff in terms.items():
        by_alpha.setdefault(alpha, {})[g] = coeff
    for alpha, fun in by_alpha.items():
        n = len(next(iter(fun)))
        for sigma_bits in itertools.product((0, 1), repeat=n):
            sigma = tuple(i for i, b in enumerate(sigma_bits) if b)
            acc = 0
            for tau in itertools.product(*(((0, 1) if b else (0,)) for b in sigma_bits)):
                c = fun.get(tau)
                if c:
                    sign = (-1) ** (len(sigma) - sum(tau))
                    acc += sign * c
            if acc:
                out[(alpha, sigma)] = acc
    return out


class CochainAlgebra:
    """The cochain algebra of the pair (complex, characteristic matrix)."""

    def __init__(self, sc: SimplicialComplex, chi: CharMatrix):
        self.sc = sc
        self.chi = chi
        self.chains = ChainModel(sc, chi)
        self.cols = chi.columns()

    def basis(self, degree: int):
        return self.chains.basis(degree)

    def index(self, degree: int):
        return self.chains.index(degree)

    # -- differential ------------------------------------------------------

    def differential(self, a: AElement) -> AElement:
        """Signed transpose of the chain differential, term by term: only
        parents (alpha + e_j, g or g + p_j) can hit (alpha, g)."""
        out: dict = {}
        for (alpha, g), coeff in a.terms.items():
            d = sum(alpha)
            front = -coeff if d % 2 == 0 else coeff
            for j in range(self.sc.m):
                raised = alpha[:j] + (alpha[j] + 1,) + alpha[j + 1 :]
                if not self.sc.is_face(support(raised)):
                    continue
                parents = {g, xor(self.cols[j], g)}
                for gp in parents:
                    c = self.chains.differential_term(raised, gp).get((alpha, g), 0)
                    if c:
                        key = (raised, gp)
                        acc = out.get(key, 0) + front * c
                        if acc:
                            out[key] = acc
                        else:
                            out.pop(key, None)
        return AElement(out)

    def differential_matrix(self, degree: int) -> SparseMat:
        """Matrix of the differential from degree to degree+1: the signed
        transpose of the chain matrix from degree+1."""
        scale = -1 if degree % 2 == 0 else 1
        return self.chains.differential_matrix(degree + 1).transpose(scale)

    # -- product -----------------------------------------------------------

    def product(self, a: AElement, b: AElement) -> AElement:
        out: dict = {}
        for (beta, g1), ca in a.terms.items():
            p = sum(beta)
            for (gamma, g2), cb in b.terms.items():
                q = sum(gamma)
                total = tuple(x + y for x, y in zip(beta, gamma))
                if not self.sc.is_face(support(total)):
                    continue
                c = self.chains.diagonal_term(total, g2).get(((beta, g1), (gamma, g2)), 0)
                if c:
                    sign = -1 if (p * q) % 2 else 1
                    key = (total, g2)
                    acc = out.get(key, 0) + sign * ca * cb * c
                    if acc:
                        out[key] = acc
                    else:
                        out.pop(key, None)
        return AElement(out)

    def product_vector(self, d1: int, v1, d2: int, v2):
        """Coordinate-level product for ring tables; scalars may be ints or
        Fractions."""
        basis1 = self.basis(d1)
        basis2 = self.basis(d2)
        out_index = self.index(d1 + d2)
        out = [0] * len(out_index)
        sign = -1 if (d1 * d2) % 2 else 1
        for i1, c1 in enumerate(v1):
            if not c1:
                continue
            beta, g1 = basis1[i1]
            for i2, c2 in enumerate(v2):
                if not c2:
                    continue
                gamma, g2 = basis2[i2]
                total = tuple(x + y for x, y in zip(beta, gamma))
                if not self.sc.is_face(support(total)):
                    continue
                c = self.chains.diagonal_term(total, g2).get(((beta, g1), (gamma, g2)), 0)
                if c:
                    out[out_index[(total, g2)]] += sign * c * c1 * c2
        return out

    # -- generators and helpers ---------------------------------------------

    def unit(self) -> AElement:
        zero = (0,) * self.sc.m
        return AElement({(zero, g): 1 for g in self.chains.group})

    def delta(self, g) -> AElement:
        zero = (0,) * self.sc.m
        if len(g) != self.chi.n:
            raise ValidationError("group element has wrong length")
        return AElement({(zero, tuple(g)): 1})

    def t(self, j: int) -> AElement:
        """Degree-1 generator for vertex j (0-based); zero when {j} is a
        ghost vertex."""
        if not 0 <= j < self.sc.m:
            raise ValidationError("vertex index out of range")
        if not self.sc.is_face({j}):
            return AElement.zero()
        alpha = tuple(1 if k == j else 0 for k in range(self.sc.m))
        return AElement({(alpha, g): 1 for g in self.chains.group})

    def s(self, i: int) -> AElement:
        """Degree-0 generator: indicator of {g : g_i = 1}."""
        if not 0 <= i < self.chi.n:
            raise ValidationError("row index out of range")
        zero = (0,) * self.sc.m
        return AElement({(zero, g): 1 for g in self.chains.group if g[i] == 1})

    def generators(self) -> dict:
        return {
            "one": self.unit(),
            "t": [self.t(j) for j in range(self.sc.m)],
            "s": [self.s(i) for i in range(self.chi.n)],
        }

    def act(self, h, a: AElement) -> AElement:
        if len(h) != self.chi.n:
            raise ValidationError("group element has wrong length")
        return AElement({(alpha, xor(h, g)): c for (alpha, g), c in a.terms.items()})

    def element_from_vector(self, degree: int, vec) -> AElement:
        basis = self.basis(degree)
        return AElement({basis[i]: c for i, c in enumerate(vec) if c})

    def vector_from_element(self, a: AElement, degree: int):
        index = self.index(degree)
        vec = [0] * len(index)
        for key, c in a.terms.items():
            vec[index[key]] = c
        return vec

    def pretty_vector(self, degree: int, vec) -> str:
        basis = self.basis(degree)
        terms = {basis[i]: c for i, c in enumerate(vec) if c}
        return format_element(terms, s_basis=True)

    def complex(self, top: int) -> GradedIntegerComplex:
        """Cochain complex in degrees 0..top+1 (differentials 0..top)."""
        sizes = [len(self.basis(d)) for d in range(top + 2)]
        diffs = [self.differential_matrix(d) for d in range(top + 1)]
        return GradedIntegerComplex(sizes, diffs, check=False)


def restrict(a: AElement, sub: SimplicialComplex) -> AElement:
    """Image of a cochain under the surjection onto the algebra of a
    subcomplex: terms whose support is no longer a face are dropped."""
    return AElement(
        {
            (alpha, g): c
            for (alpha, g), c in a.terms.items()
            if sub.is_face(support(alpha))
        }
    )


# ---------------------------------------------------------------------------
# cohomology pipeline


def space_cohomology(
    sc: SimplicialComplex,
    chi: CharMatrix,
    coeff: str = "Z",
    max_degree=None,
    verify: bool = True,
):
    """Cohomology of the model algebra in degrees 0..D (D = max facet size,
    or the explicit max_degree).

    With verify, the kernel of chi must act freely, one guard degree above
    the range must vanish, and the alternating dimension sum must match the
    cube-complex Euler characteristic scaled to the model's 2^{n-rank}
    components."""
    parse_coeff(coeff)
    if verify:
        assert_free_action(sc, chi.kernel_basis())
    natural = sc.max_face_size
    target = natural if max_degree is None else max_degree
    if target < 0:
        raise ValidationError("max degree must be nonnegative")
    algebra = CochainAlgebra(sc, chi)
    check_guard = verify and target >= natural
    top = target + 1 if check_guard else target
    cx = algebra.complex(top)
    result = cohomology(cx, coeff, range(top + 1))
    if check_guard:
        guard = result.degrees[-1]
        if guard.rank != 0 or guard.torsion:
            raise CrossCheckError(
                f"guard degree {guard.degree} does not vanish: {guard}"
            )
        result = type(result)(result.coeff, result.degrees[:-1])
        expected = sc.euler_characteristic(2**sc.m) * 2**chi.n
        if result.euler() != expected:
            raise CrossCheckError(
                f"Euler characteristic {result.euler()} != expected {expected}"
            )
    return result


# ---------------------------------------------------------------------------
# square-free quotient model of the cube complex


class SquarefreeModel:
    """Small cochain model of the cube complex itself (the case chi = id,
    trivial subgroup), obtained by forcing s_i t_i = t_i t_i = 0.

    Basis in degree d: pairs (sigma, omega) with sigma a d-face and omega a
    vertex set disjoint from sigma; the basis size in degree d equals the
    number of d-cells of the cube complex."""

    def __init__(self, sc: SimplicialComplex):
        self.sc = sc
        self._basis = {}
        self._index = {}

    def basis(self, degree: int):
        if degree not in self._basis:
            if degree > self.sc.max_face_size or degree < 0:
                self._basis[degree] = ()
            else:
                items = []
                for face in self.sc.faces:
                    if len(face) != degree:
                        continue
                    rest = sorted(set(range(self.sc.m)) - face)
                    for k in range(len(rest) + 1):
                        for omega in itertools.combinations(rest, k):
                            items.append((tuple(sorted(face)), omega))
                items.sort()
                self._basis[degree] = tuple(items)
        return self._basis[degree]

    def index(self, degree: int):
        if degree not in self._index:
            self._index[degree] = {key: i for i, key in enumerate(self.basis(degree))}
        return self._index[degree]

    def differential_term(self, sigma, omega) -> dict:
        out = {}
        lead = -1 if (len(sigma) + 1) % 2 else 1
        for i in omega:
            new_face = tuple(sorted(sigma + (i,)))
            if not self.sc.is_face(new_face):
                continue
            after = sum(1 for j in sigma if j > i)
            sign = lead * (-1 if after % 2 else 1)
            out[(new_face, tuple(x for x in omega if x != i))] = sign
        return out

    def differential_matrix(self, degree: int) -> SparseMat:
        rows = self.index(degree + 1)
        cols = self.basis(degree)
        entries = {}
        for ci, (sigma, omega) in enumerate(cols):
            for key, c in self.differential_term(sigma, omega).items():
                entries[(rows[key], ci)] = c
        return SparseMat(len(rows), len(cols), entries)

    def product_term(self, key1, key2):
        """Product of two basis elements: (coeff, key) or None."""
        sigma1, omega1 = key1
        sigma2, omega2 = key2
        s1, s2 = set(sigma1), set(sigma2)
        if s1 & s2 or set(omega1) & s2:
            return None
        union = tuple(sorted(s1 | s2))
        if not self.sc.is_face(union):
            return None
        inv = sum(1 for a in sigma1 for b in sigma2 if a > b)
        omega = tuple(sorted((set(omega1) | set(omega2)) - set(union)))
        return ((-1) ** inv, (union, omega))

    def product_vector(self, d1: int, v1, d2: int, v2):
        basis1 = self.basis(d1)
        basis2 = self.basis(d2)
        out_index = self.index(d1 + d2)
        out = [0] * len(out_index)
        for i1, c1 in enumerate(v1):
            if not c1:
                continue
            for i2, c2 in enumerate(v2):
                if not c2:
                    continue
                hit = self.product_term(basis1[i1], basis2[i2])
                if hit:
                    coeff, key = hit
                    out[out_index[key]] += coeff * c1 * c2
        return out

    def pretty_vector(self, degree: int, vec) -> str:
        basis = self.basis(degree)
        parts = []
        for i, c in enumerate(vec):
            if not c:
                continue
            sigma, omega = basis[i]
            names = [f"t{j + 1}" for j in sigma] + [f"s{j + 1}" for j in omega]
            mono = "*".join(names) or "1"
            parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts) or "0"

    def complex(self) -> GradedIntegerComplex:
        top = self.sc.max_face_size
        sizes = [len(self.basis(d)) for d in range(top + 2)]
        diffs = [self.differential_matrix(d) for d in range(top + 1)]
        return GradedIntegerComplex(sizes, diffs, check=False)


def squarefree_model(sc: SimplicialComplex) -> SquarefreeModel:
    return SquarefreeModel(sc)


# ---------------------------------------------------------------------------
# Koszul complex / Tor dimensions over F_2


def koszul_tor(
    sc: SimplicialComplex,
    chi: CharMatrix,
    variant: str = "real",
    characteristic: int = 2,
    with_guard: bool = False,
):
    """Per-degree F_2 dimensions of the Koszul homology identifying the
    model cohomology (variant "real") or the even-degree polynomial grading
    of the associated complexified data (variant "complex-even").

    Degrees run to the vanishing bound (max facet size, resp. 2n); with
    with_guard one further degree is appended."""
    if characteristic != 2:
        raise ValidationError(
            f"variant {variant!r} of the Koszul complex requires characteristic 2"
        )
    if variant not in ("real", "complex-even"):
        raise ValidationError(f"unknown Koszul variant {variant!r}")
    if chi.m != sc.m:
        raise ValidationError(f"matrix has m={chi.m}, complex has m={sc.m}")
    n = chi.n
    sigmas = sorted(
        (tuple(s) for k in range(n + 1) for s in itertools.combinations(range(n), k)),
        key=lambda s: (len(s), s),
    )
    if variant == "real":
        bound = sc.max_face_size
        def basis_at(d):
            return [(s, alpha) for alpha in sc.multi_indices(d) for s in sigmas]
    else:
        bound = 2 * n
        def basis_at(d):
            out = []
            start = min(d, n)
            if (d - start) % 2:
                start -= 1
            for k in range(start, -1, -2):
                for alpha in sc.multi_indices((d - k) // 2):
                    for s in sigmas:
                        if len(s) == k:
                            out.append((s, alpha))
            return sorted(out)
    top = bound + 1 if with_guard else bound
    bases = [basis_at(d) for d in range(top + 2)]
    indexes = [{key: i for i, key in enumerate(b)} for b in bases]

    def diff_matrix(d):
        entries = {}
        idx = indexes[d + 1]
        for ci, (sigma, alpha) in enumerate(bases[d]):
            for i in sigma:
                s_rest = tuple(x for x in sigma if x != i)
                for j in range(sc.m):
                    if not chi.rows[i][j]:
                        continue
                    raised = alpha[:j] + (alpha[j] + 1,) + alpha[j + 1 :]
                    if not sc.is_face(support(raised)):
                        continue
                    key = (s_rest, raised)
                    pos = idx.get(key)
                    if pos is not None:
                        entries[(pos, ci)] = entries.get((pos, ci), 0) ^ 1
        return {k: v for k, v in entries.items() if v}

    ranks = []
    for d in range(top + 1):
        entries = diff_matrix(d)
        ranks.append(rank_mod_p(len(bases[d + 1]), len(bases[d]), entries, 2))
    dims = []
    for d in range(top + 1):
        prev = ranks[d - 1] if d else 0
        dims.append(len(bases[d]) - ranks[d] - prev)
    return dims
