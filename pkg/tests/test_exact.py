from fractions import Fraction

import pytest

from gias3.cutpoly.dd import extreme_rays
from gias3.cutpoly.errors import ValidationError
from gias3.cutpoly.exact import (affine_hull_equations, affine_rank, format_rational, independent_rows, inverse,
                                 normalize_equation, normalize_inequality, nullspace, primitive, rank, rational_str,
                                 rationalize, rref, to_fraction, to_matrix, to_number)
from gias3.cutpoly.lp import phase_one


def test_number_parsing():
    assert to_fraction('3/4') == Fraction(3, 4)
    assert to_fraction(0.5) == Fraction(1, 2)
    assert to_number('6/3') == 2
    assert to_number(0.25) == 0.25
    assert format_rational(Fraction(3, 6)) == '1/2'
    assert format_rational(4) == 4
    assert rational_str(Fraction(-5, 1)) == '-5'
    with pytest.raises(ValidationError):
        to_fraction(True)
    with pytest.raises(ValidationError):
        to_fraction('1/0')


def test_primitive_scales_positively():
    assert primitive((2, 4, -6)) == (1, 2, -3)
    assert primitive((Fraction(1, 2), Fraction(1, 3))) == (3, 2)
    assert primitive((-2, -4)) == (-1, -2)
    assert primitive((0, 0)) == (0, 0)


def test_normalization():
    assert normalize_inequality((-2, 4), -6) == ((-1, 2), -3)
    assert normalize_equation((-2, 4), -6) == ((1, -2), 3)


def test_rank_and_hull():
    assert rank([(1, 2), (2, 4), (0, 1)]) == 2
    assert rank([(1, 0, 0), (0, 1, 0), (0, 0, 1)], limit=2) == 2
    assert affine_rank([(0, 1), (1, 0), (2, -1)]) == 1
    assert affine_rank([]) == -1
    assert affine_hull_equations([(0, 1), (1, 0), (2, -1)], 2) == [((1, 1), 1)]
    for y in nullspace([(1, 1, 1)], 3):
        assert sum(y) == 0


def test_inverse_and_rationalize():
    assert inverse([[2, 1], [1, 1]]) == [[1, -1], [-1, 2]]
    with pytest.raises(ValidationError):
        inverse([[1, 2], [2, 4]])
    assert rationalize(0.49999999999999994, 10 ** 12) == Fraction(1, 2)


def test_rank_runs_past_one_chunk():
    # 100 multiples of (1, 1, 0) and one independent vector at the end
    vectors = [(k, k, 0) for k in range(1, 101)] + [(0, 0, Fraction(1, 3))]
    assert rank(vectors) == 2
    assert rank(vectors, limit=1) == 1
    assert rank([]) == 0


def test_rref_and_independent_rows():
    reduced, pivots = rref([(2, 4, 2), (1, 2, 3)], 3)
    assert pivots == [0, 2]
    assert reduced == [[1, 2, 0], [0, 0, 1]]
    assert all(isinstance(a, Fraction) for row in reduced for a in row)
    rows = [(1, 0), (2, 0), (0, 1), (1, 1)]
    assert independent_rows(rows, [1, 0, 3, 2], 2) == [1, 3]
    assert independent_rows(rows, [0, 1], 2) == [0]


def test_exact_matrix_helpers():
    M = to_matrix([(Fraction(1, 2), 0.25)])
    assert M.shape == (1, 2)
    assert M[0, 1] * 4 == 1
    assert nullspace([], 2) == [(1, 0), (0, 1)]
    assert nullspace([(1, -2)], 2) == [(2, 1)]
    assert inverse([[Fraction(1, 2)]]) == [[2]]
    with pytest.raises(ValidationError):
        inverse([[1, 2]])
    with pytest.raises(ValidationError):
        to_matrix([(1, 2), (3,)])


def test_phase_one_feasible():
    # lam_0 (0, 0) + lam_1 (2, 0) + lam_2 (0, 2) = (1/2, 1/2), sum lam = 1
    rows = [[0, 2, 0], [0, 0, 2], [1, 1, 1]]
    res = phase_one(rows, [Fraction(1, 2), Fraction(1, 2), 1])
    assert res.feasible
    lam = [res.solution.get(k, 0) for k in range(3)]
    assert all(v >= 0 for v in lam)
    assert [sum(r[k] * lam[k] for k in range(3)) for r in rows] == [Fraction(1, 2), Fraction(1, 2), 1]


def test_phase_one_farkas():
    rows = [[0, 2, 0], [0, 0, 2], [1, 1, 1]]
    rhs = [2, 2, 1]
    res = phase_one(rows, rhs)
    assert not res.feasible
    y = res.farkas
    for k in range(3):
        assert sum(y[r] * rows[r][k] for r in range(3)) <= 0
    assert sum(a * b for a, b in zip(y, rhs)) > 0


def test_extreme_rays_of_orthant_cut():
    # {y >= 0, y0 >= y1} in the plane
    rays = extreme_rays([(1, 0), (0, 1), (1, -1)], 2)
    assert sorted(rays) == [(1, 0), (1, 1)]


def test_extreme_rays_need_pointed_cone():
    with pytest.raises(ValidationError):
        extreme_rays([(1, 0)], 2)
