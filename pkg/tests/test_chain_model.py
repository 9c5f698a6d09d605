import itertools
import random

import pytest

from rtoric import (
    ChainModel,
    CharMatrix,
    MElement,
    SimplicialComplex,
    ValidationError,
    char_matrix_for_subgroup,
    parse_char_matrix,
)
from rtoric.combinatorics import prefix_sum, shuffle_exponent
from conftest import (
    all_complexes,
    boundary_triangle,
    four_cycle,
    full_simplex,
    random_matrix_doc,
    two_points,
)


def one_vertex_model():
    return ChainModel(SimplicialComplex(1, [(0,)]), CharMatrix(1, 1, [(1,)]))


E = (0,)
L = (1,)


def test_basis_single_vertex_degree_one():
    cm = one_vertex_model()
    assert cm.basis(1) == (((1,), E), ((1,), L))


def test_basis_degree_zero_is_group_sized():
    cm = ChainModel(boundary_triangle(), parse_char_matrix({"n": 2, "m": 3, "rows": [[1, 0, 1], [0, 1, 1]]}))
    basis = cm.basis(0)
    assert len(basis) == 4
    assert all(alpha == (0, 0, 0) for alpha, _ in basis)


def test_basis_boundary_triangle_degree_two_size():
    cm = ChainModel(boundary_triangle(), parse_char_matrix({"n": 2, "m": 3, "rows": [[1, 0, 1], [0, 1, 1]]}))
    assert len(cm.basis(2)) == 24


def test_basis_is_ordered_alpha_then_group():
    cm = ChainModel(two_points(), CharMatrix(2, 2, [(1, 0), (0, 1)]))
    basis = cm.basis(1)
    assert list(basis) == sorted(basis)


def test_differential_single_vertex_printed_cases():
    # d(u_(1) x e) = u_0 x e - u_0 x l ; d(u_(2) x e) = u_(1) x e + u_(1) x l
    cm = one_vertex_model()
    d1 = cm.differential(MElement.basis((1,), E))
    assert d1 == MElement({((0,), E): 1, ((0,), L): -1})
    d2 = cm.differential(MElement.basis((2,), E))
    assert d2 == MElement({((1,), E): 1, ((1,), L): 1})


def test_differential_degree_zero_vanishes():
    cm = one_vertex_model()
    assert cm.differential(MElement.basis((0,), E)).is_zero()


def test_differential_trivial_group_specialization():
    # with L = 1: d u_alpha = 2 * sum over even-exponent slots of
    # (-1)^prefix u_(alpha lowered); odd slots cancel
    sc = full_simplex(3)
    chi = CharMatrix(0, 3, [])
    cm = ChainModel(sc, chi)
    for alpha in [(2, 1, 0), (1, 1, 1), (2, 0, 2), (3, 2, 1)]:
        got = cm.differential(MElement.basis(alpha, ()))
        expected = {}
        for j in range(3):
            if alpha[j] > 0 and alpha[j] % 2 == 0:
                lowered = alpha[:j] + (alpha[j] - 1,) + alpha[j + 1 :]
                sign = -1 if prefix_sum(alpha, j) % 2 else 1
                expected[(lowered, ())] = 2 * sign
        assert got == MElement(expected)


def test_differential_squares_to_zero_exhaustive_small():
    rng = random.Random(3)
    for m in range(0, 4):
        for sc in all_complexes(m):
            for n in range(0, 3):
                doc = random_matrix_doc(rng, n, m)
                cm = ChainModel(sc, parse_char_matrix(doc))
                for d in range(2, 5):
                    a = cm.differential_matrix(d)
                    b = cm.differential_matrix(d - 1)
                    assert b.compose(a).is_zero()


def test_differential_squares_to_zero_random_m5():
    rng = random.Random(17)
    from conftest import random_complex

    for _ in range(12):
        sc = random_complex(rng, 5)
        cm = ChainModel(sc, parse_char_matrix(random_matrix_doc(rng, 3, 5)))
        for d in range(2, 5):
            a = cm.differential_matrix(d)
            b = cm.differential_matrix(d - 1)
            assert b.compose(a).is_zero()


def test_diagonal_printed_special_cases():
    cm = one_vertex_model()
    # Delta(u_0 x g) = (u_0 x g) x (u_0 x g)
    diag = cm.diagonal(MElement.basis((0,), L))
    assert diag == {(((0,), L), ((0,), L)): 1}
    # Delta(u_j x g) = (u_j x g)x(u_0 x g) + (u_0 x p_j g)x(u_j x g)
    diag = cm.diagonal(MElement.basis((1,), E))
    assert diag == {
        (((1,), E), ((0,), E)): 1,
        (((0,), L), ((1,), E)): 1,
    }


def test_diagonal_two_vertex_four_terms():
    # Delta(u_(1,1) x g): four terms with sign -1 on the (0,1)|(1,0) split
    sc = full_simplex(2)
    chi = CharMatrix(2, 2, [(1, 0), (0, 1)])
    cm = ChainModel(sc, chi)
    g = (0, 0)
    p1, p2 = (1, 0), (0, 1)
    diag = cm.diagonal(MElement.basis((1, 1), g))
    assert diag == {
        (((1, 1), g), ((0, 0), g)): 1,
        (((1, 0), p2), ((0, 1), g)): 1,
        (((0, 1), p1), ((1, 0), g)): -1,
        (((0, 0), (1, 1)), ((1, 1), g)): 1,
    }
    assert shuffle_exponent((0, 1), (1, 0)) % 2 == 1


def test_one_vertex_full_coalgebra_formulas():
    # d w_n = w_(n-1) + (-1)^n w_(n-1) o ; Delta w_n = sum w_i o^j x w_j
    cm = one_vertex_model()
    for n in range(1, 6):
        d = cm.differential(MElement.basis((n,), E))
        sign = 1 if n % 2 == 0 else -1
        assert d == MElement({((n - 1,), E): 1, ((n - 1,), L): sign})
    for n in range(0, 5):
        diag = cm.diagonal(MElement.basis((n,), E))
        expected = {}
        for i in range(n + 1):
            j = n - i
            left_g = L if j % 2 else E
            expected[(((i,), left_g), ((j,), E))] = 1
        assert diag == expected


def test_diagonal_is_coassociative():
    rng = random.Random(23)
    for m in range(1, 4):
        for sc in all_complexes(m)[:8]:
            chi = parse_char_matrix(random_matrix_doc(rng, 2, m))
            cm = ChainModel(sc, chi)
            for d in range(0, 4):
                for key in cm.basis(d)[:6]:
                    left = {}
                    for (k1, k2), c in cm.diagonal_term(*key).items():
                        for (k11, k12), c2 in cm.diagonal_term(*k1).items():
                            tkey = (k11, k12, k2)
                            left[tkey] = left.get(tkey, 0) + c * c2
                    right = {}
                    for (k1, k2), c in cm.diagonal_term(*key).items():
                        for (k21, k22), c2 in cm.diagonal_term(*k2).items():
                            tkey = (k1, k21, k22)
                            right[tkey] = right.get(tkey, 0) + c * c2
                    left = {k: v for k, v in left.items() if v}
                    right = {k: v for k, v in right.items() if v}
                    assert left == right


def test_diagonal_counit():
    # projecting either factor to degree 0 recovers the element
    cm = ChainModel(boundary_triangle(), char_matrix_for_subgroup(3, [(1, 1, 1)]))
    for d in range(0, 3):
        for key in cm.basis(d):
            diag = cm.diagonal_term(*key)
            left = {}
            right = {}
            for ((b, g1), (c, g2)), coeff in diag.items():
                if sum(b) == 0:
                    right[(c, g2)] = right.get((c, g2), 0) + coeff
                if sum(c) == 0:
                    left[(b, g1)] = left.get((b, g1), 0) + coeff
            assert {k: v for k, v in left.items() if v} == {key: 1}
            assert {k: v for k, v in right.items() if v} == {key: 1}


def test_diagonal_is_a_chain_map():
    # d_tensor(Delta e) = Delta(d e) with Koszul sign on the second factor
    rng = random.Random(31)
    for _ in range(10):
        m = rng.randint(1, 4)
        sc = all_complexes(m)[rng.randrange(len(all_complexes(m)))]
        chi = parse_char_matrix(random_matrix_doc(rng, 2, m))
        cm = ChainModel(sc, chi)
        for d in range(1, 4):
            basis = cm.basis(d)
            if not basis:
                continue
            key = basis[rng.randrange(len(basis))]
            lhs = {}
            for (k1, k2), c in cm.diagonal_term(*key).items():
                for t, c2 in cm.differential_term(*k1).items():
                    tk = (t, k2)
                    lhs[tk] = lhs.get(tk, 0) + c * c2
                sign = -1 if sum(k1[0]) % 2 else 1
                for t, c2 in cm.differential_term(*k2).items():
                    tk = (k1, t)
                    lhs[tk] = lhs.get(tk, 0) + sign * c * c2
            rhs = {}
            for t, c in cm.differential_term(*key).items():
                for (k1, k2), c2 in cm.diagonal_term(*t).items():
                    tk = (k1, k2)
                    rhs[tk] = rhs.get(tk, 0) + c * c2
            lhs = {k: v for k, v in lhs.items() if v}
            rhs = {k: v for k, v in rhs.items() if v}
            assert lhs == rhs


def test_group_action_examples_and_equivariance():
    cm = one_vertex_model()
    e = MElement.basis((1,), E)
    assert cm.act((0,), e) == e
    assert cm.act(L, e) == MElement.basis((1,), L)
    assert cm.act(L, cm.differential(e)) == cm.differential(cm.act(L, e))


def test_group_action_commutes_with_diagonal():
    cm = ChainModel(four_cycle(), char_matrix_for_subgroup(4, [(1, 1, 1, 0)]))
    h = (1, 0, 1)
    for key in cm.basis(2)[:10]:
        alpha, g = key
        moved = cm.diagonal_term(alpha, tuple(a ^ b for a, b in zip(g, h)))
        expected = {}
        for ((b, g1), (c, g2)), coeff in cm.diagonal_term(alpha, g).items():
            k1 = (b, tuple(a ^ x for a, x in zip(g1, h)))
            k2 = (c, tuple(a ^ x for a, x in zip(g2, h)))
            expected[(k1, k2)] = coeff
        assert moved == expected


def test_melement_validation():
    with pytest.raises(ValidationError):
        MElement({((1, 0), (0,)): 1, ((0, 0), (0,)): 1})
    z = MElement.zero()
    assert z.is_zero() and z.degree is None


def test_matrix_shapes_and_determinism():
    cm = ChainModel(boundary_triangle(), char_matrix_for_subgroup(3, [(1, 1, 1)]))
    m2 = cm.differential_matrix(2)
    assert (m2.nrows, m2.ncols) == (len(cm.basis(1)), len(cm.basis(2)))
    again = ChainModel(boundary_triangle(), char_matrix_for_subgroup(3, [(1, 1, 1)]))
    assert again.differential_matrix(2).triplets() == m2.triplets()
