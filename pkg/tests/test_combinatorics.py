import itertools
from fractions import Fraction
from math import comb

import pytest

from rtoric import (
    SimplicialComplex,
    ValidationError,
    complex_document,
    parse_complex,
    prefix_sum,
    shuffle_exponent,
    support,
)
from conftest import all_complexes, boundary_triangle, four_cycle, full_simplex, two_points


def test_parse_boundary_triangle():
    sc = parse_complex({"m": 3, "facets": [[1, 2], [2, 3], [1, 3]]})
    assert sc.m == 3
    assert len(sc.faces) == 7
    assert sc.is_face(())
    assert sc.is_face((0, 1))
    assert not sc.is_face((0, 1, 2))


def test_parse_empty_complex_with_ghosts():
    sc = parse_complex({"m": 2, "facets": [[]]})
    assert sc.faces == (frozenset(),)
    assert sc.max_face_size == 0


def test_parse_four_cycle():
    sc = parse_complex({"m": 4, "facets": [[1, 2], [2, 3], [3, 4], [4, 1]]})
    assert len(sc.faces) == 9


def test_parse_rejects_bad_documents():
    with pytest.raises(ValidationError):
        parse_complex({"m": 2, "facets": [[3]]})
    with pytest.raises(ValidationError):
        parse_complex({"m": 2, "facets": [[1, 1]]})
    with pytest.raises(ValidationError):
        parse_complex({"m": 2, "facets": []})
    with pytest.raises(ValidationError):
        parse_complex({"m": -1, "facets": [[]]})
    with pytest.raises(ValidationError):
        parse_complex({"facets": [[1]]})


def test_complex_document_round_trip():
    for sc in all_complexes(3):
        assert parse_complex(complex_document(sc)).faces == sc.faces


def test_faces_are_downward_closed():
    for sc in all_complexes(4):
        for face in sc.faces:
            for k in range(len(face)):
                for sub in itertools.combinations(face, k):
                    assert sc.is_face(sub)


def test_multi_indices_examples():
    assert two_points().multi_indices(2) == ((0, 2), (2, 0))
    assert full_simplex(2).multi_indices(2) == ((0, 2), (1, 1), (2, 0))
    for sc in (two_points(), full_simplex(2), boundary_triangle()):
        assert sc.multi_indices(0) == ((0,) * sc.m,)


def test_multi_indices_of_boundary_triangle_degree_two():
    got = set(boundary_triangle().multi_indices(2))
    assert got == {(2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (0, 1, 1), (1, 0, 1)}


def test_multi_index_support_is_a_face():
    for sc in all_complexes(3):
        for d in range(5):
            for alpha in sc.multi_indices(d):
                assert sum(alpha) == d
                assert sc.is_face(support(alpha))


def test_multi_index_count_stars_and_bars():
    # |{alpha : |alpha| = d, supp alpha in Sigma}| = sum over nonempty faces
    # of C(d-1, |tau|-1)
    for m in range(0, 6):
        if m <= 4:
            targets = all_complexes(m)
        else:
            targets = (
                SimplicialComplex(5, [(0, 1, 2), (2, 3, 4), (0, 4)]),
                SimplicialComplex(5, [(0, 1, 2, 3, 4)]),
                SimplicialComplex(5, [()]),
            )
        for sc in targets:
            for d in range(1, 7):
                expected = sum(
                    comb(d - 1, len(tau) - 1)
                    for tau in sc.faces
                    if 0 < len(tau) <= d
                )
                assert len(sc.multi_indices(d)) == expected
                assert sc.multi_index_count(d) == expected


def test_multi_indices_sorted_lexicographically():
    for sc in all_complexes(3):
        for d in range(4):
            idx = sc.multi_indices(d)
            assert list(idx) == sorted(idx)


def test_shuffle_exponent_examples():
    assert shuffle_exponent((0, 1), (1, 0)) == 1
    assert shuffle_exponent((0, 0), (0, 0)) == 0
    assert shuffle_exponent((1, 0), (0, 1)) == 0


def test_shuffle_exponent_symmetry_identity():
    # eps(beta,gamma) + eps(gamma,beta) = |beta||gamma| - sum beta_j gamma_j (mod 2)
    for m in range(1, 5):
        for beta in itertools.product(range(3), repeat=m):
            for gamma in itertools.product(range(3), repeat=m):
                lhs = shuffle_exponent(beta, gamma) + shuffle_exponent(gamma, beta)
                rhs = sum(beta) * sum(gamma) - sum(b * c for b, c in zip(beta, gamma))
                assert (lhs - rhs) % 2 == 0


def test_prefix_sum_examples():
    assert prefix_sum((2, 1, 3), 2) == 3
    assert prefix_sum((2, 1, 3), 0) == 0
    assert prefix_sum((1, 1), 1) == 1
    with pytest.raises(ValidationError):
        prefix_sum((1, 1), 3)


def test_euler_characteristic_examples():
    assert boundary_triangle().euler_characteristic(1) == 2
    assert boundary_triangle().euler_characteristic(2) == 1
    for m in range(1, 5):
        assert full_simplex(m).euler_characteristic(1) == 1


def test_euler_characteristic_is_rational():
    sc = two_points(2)
    # chi(Z) = 4 - 4 = 0 for the 4-cell circle
    assert sc.euler_characteristic(1) == 0
    assert isinstance(boundary_triangle().euler_characteristic(4), (int, Fraction))


def test_immutability():
    sc = boundary_triangle()
    with pytest.raises(AttributeError):
        sc.m = 5
