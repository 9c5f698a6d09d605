import random

import pytest

from rtoric import (
    SimplicialComplex,
    ValidationError,
    build_cellular_complex,
    cells_document,
    oracle_cohomology,
    quotient_complex,
    universal_coefficients_ok,
)
from conftest import (
    all_complexes,
    all_subgroups,
    boundary_triangle,
    four_cycle,
    free_subgroups,
    random_complex,
    two_points,
)


def test_cube_cell_counts_boundary_triangle():
    cube = build_cellular_complex(boundary_triangle())
    assert [len(cube.cells(d)) for d in range(3)] == [8, 12, 6]


def test_cube_cells_empty_complex():
    cube = build_cellular_complex(SimplicialComplex(2, [()]))
    assert len(cube.cells(0)) == 4
    assert len(cube.cells(1)) == 0


def test_cube_cell_shape_and_order():
    cube = build_cellular_complex(two_points(2))
    cells0 = cube.cells(0)
    assert list(cells0) == sorted(cells0)
    for tau, eps in cube.cells(1):
        assert len(eps) == 2
        for j in range(2):
            assert (eps[j] == 0) == (j in tau)


def test_cube_cell_count_formula():
    # d-cells: one per (face of size d) x (sign pattern off the face)
    for sc in all_complexes(3):
        cube = build_cellular_complex(sc)
        for d in range(sc.max_face_size + 1):
            expect = sum(2 ** (sc.m - d) for f in sc.faces if len(f) == d)
            assert len(cube.cells(d)) == expect
        total = sum(
            (-1) ** d * len(cube.cells(d)) for d in range(sc.max_face_size + 1)
        )
        assert total == sc.euler_characteristic(1)


def test_cube_boundary_squares_to_zero():
    for sc in all_complexes(3):
        cube = build_cellular_complex(sc)
        for d in range(2, sc.max_face_size + 1):
            assert cube.boundary_matrix(d - 1).compose(cube.boundary_matrix(d)).is_zero()


def test_cube_boundary_example_edge():
    # boundary of the edge tau={0} with eps=(0,+1): endpoints at x0 = +1, -1
    cube = build_cellular_complex(two_points(2))
    terms = cube.boundary_term((0,), (0, 1))
    assert terms == {((), (1, 1)): 1, ((), (-1, 1)): -1}


def test_action_is_chain_map_with_signs():
    rng = random.Random(12)
    for sc in all_complexes(3):
        cube = build_cellular_complex(sc)
        for _ in range(4):
            g = tuple(rng.randint(0, 1) for _ in range(sc.m))
            for d in range(1, sc.max_face_size + 1):
                cells = cube.cells(d)
                if not cells:
                    continue
                tau, eps = cells[rng.randrange(len(cells))]
                sign, (tau2, eps2) = cube.act(g, tau, eps)
                lhs = {}
                for cell, c in cube.boundary_term(tau2, eps2).items():
                    lhs[cell] = lhs.get(cell, 0) + sign * c
                rhs = {}
                for (t, e), c in cube.boundary_term(tau, eps).items():
                    s2, cell2 = cube.act(g, t, e)
                    rhs[cell2] = rhs.get(cell2, 0) + s2 * c
                assert {k: v for k, v in lhs.items() if v} == {
                    k: v for k, v in rhs.items() if v
                }


def test_action_signs_on_fixed_cells():
    # g inside the span of tau flips orientation by (-1)^(overlap)
    cube = build_cellular_complex(boundary_triangle())
    sign, cell = cube.act((1, 0, 0), (0,), (0, 1, 1))
    assert sign == -1 and cell == ((0,), (0, 1, 1))
    sign, cell = cube.act((0, 1, 0), (0,), (0, 1, 1))
    assert sign == 1 and cell == ((0,), (0, -1, 1))


def test_quotient_reduces_cell_counts():
    q = quotient_complex(boundary_triangle(), [(1, 1, 1)])
    assert [len(q.cells(d)) for d in range(3)] == [4, 6, 3]
    trivial = quotient_complex(boundary_triangle(), [])
    cube = build_cellular_complex(boundary_triangle())
    for d in range(3):
        assert trivial.cells(d) == cube.cells(d)


def test_quotient_rejects_non_free_action():
    with pytest.raises(ValidationError):
        quotient_complex(boundary_triangle(), [(1, 1, 0)])
    with pytest.raises(ValidationError):
        quotient_complex(SimplicialComplex(2, [(0, 1)]), [(1, 0)])


def test_quotient_rejects_bad_vectors():
    with pytest.raises(ValidationError):
        quotient_complex(boundary_triangle(), [(1, 1)])
    with pytest.raises(ValidationError):
        quotient_complex(boundary_triangle(), [(2, 0, 0)])


def test_quotient_boundary_squares_to_zero():
    for sc in all_complexes(3):
        for k in free_subgroups(sc):
            q = quotient_complex(sc, list(k))
            for d in range(2, sc.max_face_size + 1):
                assert q.boundary_matrix(d - 1).compose(q.boundary_matrix(d)).is_zero()


def test_sphere_and_projective_plane():
    sphere = oracle_cohomology(boundary_triangle(), [], "Z")
    assert [(d.rank, d.torsion) for d in sphere.degrees] == [(1, ()), (0, ()), (1, ())]
    rp2 = oracle_cohomology(boundary_triangle(), [(1, 1, 1)], "Z")
    assert [(d.rank, d.torsion) for d in rp2.degrees] == [(1, ()), (0, ()), (0, (2,))]
    assert oracle_cohomology(boundary_triangle(), [(1, 1, 1)], "F2").dims() == [1, 1, 1]


def test_torus_and_klein_bottle():
    torus = oracle_cohomology(four_cycle(), [], "Z")
    assert [(d.rank, d.torsion) for d in torus.degrees] == [(1, ()), (2, ()), (1, ())]
    klein = oracle_cohomology(four_cycle(), [(1, 1, 1, 0)], "Z")
    assert [(d.rank, d.torsion) for d in klein.degrees] == [(1, ()), (1, ()), (0, (2,))]
    assert oracle_cohomology(four_cycle(), [(1, 1, 1, 0)], "F2").dims() == [1, 2, 1]


def test_circle_from_two_points():
    res = oracle_cohomology(two_points(2), [(1, 1)], "Z")
    assert [(d.rank, d.torsion) for d in res.degrees] == [(1, ()), (1, ())]
    halves = quotient_complex(two_points(2), [(1, 1)])
    assert [len(halves.cells(d)) for d in range(2)] == [2, 2]


def test_homology_route_consistent_with_cohomology():
    # free parts agree in every degree; torsion shifts one degree up under
    # duality for these closed examples
    cases = [
        (boundary_triangle(), []),
        (boundary_triangle(), [(1, 1, 1)]),
        (four_cycle(), [(1, 1, 1, 0)]),
        (two_points(2), [(1, 1)]),
    ]
    for sc, k in cases:
        co = oracle_cohomology(sc, k, "Z", dualize=True)
        ho = oracle_cohomology(sc, k, "Z", dualize=False)
        for d in range(sc.max_face_size + 1):
            assert co.dim(d) == ho.dim(d)
            assert co.torsion(d) == ho.torsion(d - 1) if d else co.torsion(0) == ()


def test_oracle_field_counts_obey_universal_coefficients():
    rng = random.Random(33)
    for _ in range(10):
        sc = random_complex(rng, rng.randint(1, 4))
        subs = [k for k in all_subgroups(sc.m) if k in free_subgroups(sc)]
        k = list(subs[rng.randrange(len(subs))]) if subs else []
        z = oracle_cohomology(sc, k, "Z")
        for p in (2, 3):
            fp = oracle_cohomology(sc, k, f"F{p}")
            assert universal_coefficients_ok(z, fp, p)


def test_disconnected_quotient():
    # one hollow square component per residual group element
    sc = two_points(2)
    res = oracle_cohomology(sc, [], "Z")
    assert res.dim(0) == 1 and res.dim(1) == 1


def test_cells_document_shape():
    doc = cells_document(boundary_triangle(), [(1, 1, 1)])
    assert doc["m"] == 3
    assert [len(cells) for cells in doc["dims"]] == [8, 12, 6]
    orbits0 = {c["orbit"] for c in doc["dims"][0]}
    assert orbits0 == set(range(4))
    for c in doc["dims"][1]:
        assert len(c["tau"]) == 1 and 1 <= c["tau"][0] <= 3
