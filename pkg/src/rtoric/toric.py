"""Fan front-end for real points of smooth toric varieties.

Fans are treated combinatorially: rays are primitivized, every maximal cone
must be simplicial and unimodular (all Smith invariant factors 1), and the
cone index family is read as a simplicial complex.  Convexity and overlap of
cones are NOT verified; they are irrelevant to every formula computed here.

The real locus is modelled by the cochain algebra of the underlying complex
with the mod-2 ray matrix as characteristic data; the compact complex side
enters only through the even Koszul complex used by the maximality check.
"""

from __future__ import annotations

import itertools
from math import gcd

from .combinatorics import SimplicialComplex
from .dga import koszul_tor, space_cohomology
from .errors import CrossCheckError, ValidationError
from .group_data import CharMatrix
from .kernels import invariant_factors


class Fan:
    __slots__ = ("n", "rays", "max_cones", "complex", "warnings")

    def __init__(self, n, rays, max_cones, complex, warnings):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rays", rays)
        object.__setattr__(self, "max_cones", max_cones)
        object.__setattr__(self, "complex", complex)
        object.__setattr__(self, "warnings", warnings)

    def __setattr__(self, name, value):
        raise AttributeError("Fan is immutable")

    @property
    def m(self):
        return len(self.rays)

    def __repr__(self):
        return f"Fan(n={self.n}, rays={list(self.rays)}, max_cones={list(self.max_cones)})"


def _primitivize(ray, pos, warnings):
    if all(x == 0 for x in ray):
        raise ValidationError(f"rays[{pos}]: zero ray")
    g = 0
    for x in ray:
        g = gcd(g, abs(x))
    if g > 1:
        scaled = tuple(x // g for x in ray)
        warnings.append(f"rays[{pos}]: {list(ray)} normalized to {list(scaled)}")
        return scaled
    return tuple(ray)


def _check_cone(rays, cone, pos):
    """Simpliciality and unimodularity via the Smith invariant factors of the
    ray matrix (columns = the cone's rays)."""
    if not cone:
        return
    n = len(rays[cone[0]])
    entries = {}
    for ci, j in enumerate(cone):
        for i in range(n):
            if rays[j][i]:
                entries[(i, ci)] = rays[j][i]
    factors = invariant_factors(n, len(cone), entries)
    if len(factors) < len(cone):
        raise ValidationError(
            f"max_cones[{pos}]: rays {[j + 1 for j in cone]} are linearly dependent"
        )
    if any(f != 1 for f in factors):
        raise ValidationError(
            f"max_cones[{pos}]: not unimodular, invariant factors {tuple(factors)}"
        )


def parse_fan(doc) -> Fan:
    """Validate a fan document {"n", "rays", "max_cones"} (1-based indices)."""
    if not isinstance(doc, dict):
        raise ValidationError("fan document must be an object")
    n = doc.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValidationError("n: must be a nonnegative integer")
    raw_rays = doc.get("rays")
    if not isinstance(raw_rays, list):
        raise ValidationError("rays: must be a list of integer vectors")
    warnings: list = []
    rays = []
    for pos, ray in enumerate(raw_rays):
        if (
            not isinstance(ray, list)
            or len(ray) != n
            or any(not isinstance(x, int) or isinstance(x, bool) for x in ray)
        ):
            raise ValidationError(f"rays[{pos}]: must be an integer vector of length {n}")
        rays.append(_primitivize(ray, pos, warnings))
    m = len(rays)
    raw_cones = doc.get("max_cones")
    if not isinstance(raw_cones, list):
        raise ValidationError("max_cones: must be a list of index lists")
    cones = []
    for pos, cone in enumerate(raw_cones):
        if not isinstance(cone, list) or any(
            not isinstance(j, int) or isinstance(j, bool) for j in cone
        ):
            raise ValidationError(f"max_cones[{pos}]: must be a list of ray indices")
        for j in cone:
            if not 1 <= j <= m:
                raise ValidationError(f"max_cones[{pos}]: ray index {j} out of range 1..{m}")
        if len(set(cone)) != len(cone):
            raise ValidationError(f"max_cones[{pos}]: repeated ray index")
        zero_based = tuple(sorted(j - 1 for j in cone))
        _check_cone(rays, zero_based, pos)
        cones.append(zero_based)
    sc = SimplicialComplex(m, cones or [()])
    return Fan(n, tuple(rays), tuple(cones), sc, warnings)


def fan_document(fan: Fan) -> dict:
    return {
        "n": fan.n,
        "rays": [list(r) for r in fan.rays],
        "max_cones": [[j + 1 for j in cone] for cone in fan.max_cones] or [[]],
    }


def characteristic_data(fan: Fan) -> CharMatrix:
    rows = [tuple(ray[i] % 2 for ray in fan.rays) for i in range(fan.n)]
    return CharMatrix(fan.n, fan.m, rows)


def component_count(fan: Fan) -> int:
    return 2 ** (fan.n - characteristic_data(fan).rank2())


def variety_cohomology(fan: Fan, coeff: str = "Z"):
    """Cohomology of the real locus in degrees 0..n; the guard degree n+1
    must vanish and dim H^0 must equal the component count."""
    chi = characteristic_data(fan)
    result = space_cohomology(fan.complex, chi, coeff, max_degree=fan.n)
    components = component_count(fan)
    if result.dim(0) != components:
        raise CrossCheckError(
            f"dim H^0 = {result.dim(0)} but the fan has {components} components"
        )
    return result


def maximality_check(fan: Fan) -> dict:
    """Compare the mod-2 Betti sum of the real locus (degrees <= n) against
    the even Koszul dimension sum of the complex side (degrees <= 2n)."""
    chi = characteristic_data(fan)
    real = space_cohomology(fan.complex, chi, "F2", max_degree=fan.n)
    real_sum = sum(real.dims())
    complex_dims = koszul_tor(fan.complex, chi, "complex-even", with_guard=True)
    if complex_dims[-1] != 0:
        raise CrossCheckError(
            f"even Koszul guard degree {2 * fan.n + 1} does not vanish: {complex_dims[-1]}"
        )
    complex_sum = sum(complex_dims[:-1])
    return {
        "real_sum": real_sum,
        "complex_sum": complex_sum,
        "maximal": real_sum == complex_sum,
    }


def maximality_diagnostic(fan: Fan) -> dict:
    """Per-degree dimensions behind the maximality record."""
    chi = characteristic_data(fan)
    real = space_cohomology(fan.complex, chi, "F2", max_degree=fan.n)
    return {
        "real_dims": real.dims(),
        "complex_dims": koszul_tor(fan.complex, chi, "complex-even"),
    }


# ---------------------------------------------------------------------------
# catalog of standard fans (test and demo inputs)


def _fan(n, rays, cones) -> Fan:
    return parse_fan({"n": n, "rays": rays, "max_cones": cones})


def projective_space(n: int) -> Fan:
    if not 1 <= n <= 3:
        raise ValidationError("projective_space supports n = 1, 2, 3")
    rays = [[1 if i == k else 0 for i in range(n)] for k in range(n)]
    rays.append([-1] * n)
    cones = [list(c) for c in itertools.combinations(range(1, n + 2), n)]
    return _fan(n, rays, cones)


def product_p1_p1() -> Fan:
    return _fan(
        2,
        [[1, 0], [0, 1], [-1, 0], [0, -1]],
        [[1, 2], [2, 3], [3, 4], [4, 1]],
    )


def hirzebruch(a: int) -> Fan:
    return _fan(
        2,
        [[1, 0], [0, 1], [-1, a], [0, -1]],
        [[1, 2], [2, 3], [3, 4], [4, 1]],
    )


def blowup_p2(k: int) -> Fan:
    """P^2 blown up at k torus-fixed points (k = 1, 2, 3): each blowup
    replaces a maximal cone by the two cones through the sum of its rays."""
    if k not in (1, 2, 3):
        raise ValidationError("blowup_p2 supports k = 1, 2, 3")
    rays = [[1, 0], [0, 1], [-1, -1]]
    cones = [[1, 2], [2, 3], [3, 1]]
    extra = [[1, 1], [-1, 0], [0, -1]]
    for i in range(k):
        new = 4 + i
        rays.append(extra[i])
        a, b = cones.pop(0)
        cones.extend([[a, new], [new, b]])
    return _fan(2, rays, cones)


def affine_space(n: int) -> Fan:
    rays = [[1 if i == k else 0 for i in range(n)] for k in range(n)]
    return _fan(n, rays, [list(range(1, n + 1))])


def two_circles() -> Fan:
    """Two rays in the plane spanning a rank-one mod-2 lattice: the real
    locus deformation retracts onto two disjoint circles."""
    return _fan(2, [[1, 0], [-1, 2]], [[1], [2]])


def p1_times_affine_line() -> Fan:
    return _fan(2, [[1, 0], [-1, 0], [0, 1]], [[1, 3], [2, 3]])


def fan_suite() -> dict:
    """Named fans used by the validation suite; complete entries map to
    their maximal cone count."""
    return {
        "p1": projective_space(1),
        "p2": projective_space(2),
        "p3": projective_space(3),
        "p1xp1": product_p1_p1(),
        "hirzebruch1": hirzebruch(1),
        "hirzebruch2": hirzebruch(2),
        "hirzebruch3": hirzebruch(3),
        "blowup_p2_1": blowup_p2(1),
        "blowup_p2_2": blowup_p2(2),
        "blowup_p2_3": blowup_p2(3),
        "affine1": affine_space(1),
        "affine2": affine_space(2),
        "two_circles": two_circles(),
        "p1xa1": p1_times_affine_line(),
    }


COMPLETE_FANS = ("p1", "p2", "p3", "p1xp1", "hirzebruch1", "hirzebruch2", "hirzebruch3", "blowup_p2_1", "blowup_p2_2", "blowup_p2_3")
