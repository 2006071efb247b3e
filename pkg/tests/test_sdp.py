import numpy as np
import pytest

from gias3.cutpoly import catalog
from gias3.cutpoly.errors import SolverError, ValidationError
from gias3.cutpoly.graphs import BipartiteShape
from gias3.cutpoly.inequalities import LinearInequality
from gias3.cutpoly.mappings import CorrelationVector, SuspensionVector, behavior_from_gram, lift_to_bipartite_gram
from gias3.cutpoly.polyhedra import cut_vectors, rmet_hrep
from gias3.cutpoly.sdp import (I3322_RELAXATION_VECTORS, EdgeWeightedObjective, InteriorPointSolver, cut_condition,
                               elliptope_max, elliptope_membership, elliptope_rmet_max, i3322_relaxation_vectors,
                               normal_equation_solver, objective_from_inequality, rmet_gap_search)

TSIRELSON = 2 * np.sqrt(2)
I3322_RELAXED = 2 * (np.sqrt(3) + 1)
R = 1 / np.sqrt(2)


def test_interior_point_on_a_2x2_block():
    solver = InteriorPointSolver([2], [(0, 1, 1.0)], [[(0, 0, 1.0)], [(1, 1, 1.0)]], [1.0, 1.0])
    res = solver.solve()
    assert res.primal == pytest.approx(1.0, abs=1e-6)
    assert res.dual == pytest.approx(1.0, abs=1e-6)
    np.testing.assert_allclose(res.X, np.ones((2, 2)), atol=1e-4)


def test_interior_point_input_checks():
    with pytest.raises(ValidationError):
        InteriorPointSolver([1, 1], [(0, 1, 1.0)], [[(0, 0, 1.0)], [(1, 1, 1.0)]], [1.0, 1.0])
    with pytest.raises(ValidationError):
        InteriorPointSolver([2], [(0, 1, 1.0)], [[(0, 0, 1.0)]], [1.0, 1.0])
    with pytest.raises(ValidationError):
        InteriorPointSolver([2], [(0, 2, 1.0)], [[(0, 0, 1.0)]], [1.0])
    with pytest.raises(ValidationError):
        InteriorPointSolver([0], [], [], [])


def test_solver_error_carries_a_bracket():
    with pytest.raises(SolverError) as info:
        elliptope_max(objective_from_inequality(catalog.chsh()), max_iter=1)
    assert len(info.value.bracket) == 2
    assert info.value.iterations == 1


def test_chsh_tsirelson_bound():
    sol = elliptope_max(objective_from_inequality(catalog.chsh()))
    assert sol.value == pytest.approx(TSIRELSON, abs=1e-6)
    assert sol.bracket[1] >= sol.value - 1e-5
    np.testing.assert_allclose(np.diag(sol.gram), 1.0, atol=1e-7)
    np.testing.assert_allclose(np.abs(sol.realization.edge_values()), R, atol=1e-4)

    rmet = elliptope_rmet_max(objective_from_inequality(catalog.chsh()))
    assert rmet.value == pytest.approx(TSIRELSON, abs=1e-5)
    assert len(rmet.slacks) == 16
    assert rmet.realization.shape == BipartiteShape(2, 2).suspension()


def test_chsh_in_p_coordinates():
    obj = objective_from_inequality(catalog.chsh_cor())
    assert obj.shape == BipartiteShape(2, 2).suspension()
    assert obj.offset == pytest.approx(-0.5)
    assert elliptope_max(obj).value == pytest.approx((TSIRELSON - 2) / 4, abs=1e-5)


def test_triangle_over_the_elliptope():
    assert elliptope_max(objective_from_inequality(catalog.triangle())).value == pytest.approx(1.5, abs=1e-5)


def test_i3322_relaxation():
    obj = objective_from_inequality(catalog.i3322())
    g = i3322_relaxation_vectors()
    x = g.edge_values()
    assert obj.value(x) == pytest.approx(I3322_RELAXED, abs=1e-9)
    for ineq in rmet_hrep(BipartiteShape(3, 3)).inequalities:
        assert ineq.value(x) <= ineq.rhs + 1e-9

    sol = elliptope_rmet_max(obj)
    assert sol.value == pytest.approx(I3322_RELAXED, abs=1e-4)
    assert elliptope_max(obj).value >= I3322_RELAXED - 1e-5
    V = I3322_RELAXATION_VECTORS
    assert np.abs(sol.gram - V @ V.T).max() < 1e-4
    q = behavior_from_gram(lift_to_bipartite_gram(sol.realization))
    assert q.is_behavior(tol=1e-6)


def test_i3322_relaxation_lifts_to_a_behavior():
    q = behavior_from_gram(lift_to_bipartite_gram(i3322_relaxation_vectors()))
    assert q.shape == BipartiteShape(3, 3)
    assert q.is_behavior(tol=1e-9)


def test_objective_checks(k22):
    with pytest.raises(ValidationError):
        EdgeWeightedObjective(k22, (1.0, 1.0))
    with pytest.raises(ValidationError):
        EdgeWeightedObjective(k22, (1.0, np.inf, 0.0, 0.0))
    with pytest.raises(ValidationError):
        objective_from_inequality(LinearInequality.raw((1, 1), 1))
    suspended = objective_from_inequality(catalog.chsh()).suspended()
    assert suspended.weights == (0.0,) * 4 + (1.0, 1.0, 1.0, -1.0)


def test_membership_of_the_origin(k33):
    res = elliptope_membership(CorrelationVector(k33, (0.0,) * 9))
    assert res.member
    assert res.margin == pytest.approx(1.0, abs=1e-5)


def test_membership_inside(k22):
    x = CorrelationVector(k22, tuple(0.9 * v for v in (R, R, R, -R)))
    res = elliptope_membership(x)
    assert res.member
    assert not res.boundary
    np.testing.assert_allclose(np.diag(res.witness), 1.0, atol=1e-7)
    np.testing.assert_allclose(res.realization.edge_values(), x.coords, atol=1e-5)


def test_membership_outside(k22):
    x = CorrelationVector(k22, (1.0, 1.0, 1.0, -1.0))
    res = elliptope_membership(x)
    assert not res.member
    assert res.realization is None
    assert res.margin == pytest.approx(1 - np.sqrt(2), abs=1e-5)
    assert np.dot(res.separator, x.coords) > 1
    with pytest.raises(ValidationError):
        elliptope_membership(CorrelationVector(k22, (1.5, 0.0, 0.0, 0.0)))


def test_membership_on_the_suspension(sk22):
    res = elliptope_membership(SuspensionVector(sk22, (-0.25,) * 8))
    assert res.member
    assert res.witness.shape == (5, 5)


def test_cut_condition(k22):
    tsirelson = cut_condition(CorrelationVector(k22, (R, R, R, -R)))
    assert tsirelson.passes
    np.testing.assert_allclose(tsirelson.y.coords, (0.5, 0.5, 0.5, -0.5), atol=1e-12)
    assert not cut_condition(CorrelationVector(k22, (1.0, 1.0, 1.0, -1.0))).passes
    origin = cut_condition(CorrelationVector(k22, (0.0,) * 4))
    assert origin.passes
    assert origin.certificate.inside


def test_cut_condition_agrees_with_membership_on_k22(rng, k22):
    compared = 0
    for _ in range(500):
        x = CorrelationVector(k22, tuple(rng.uniform(-1.0, 1.0, size=4)))
        res = elliptope_membership(x)
        if abs(res.margin) < 1e-6:
            continue
        cc = cut_condition(x)
        if cc.within_tolerance:
            continue
        assert cc.passes == res.member
        compared += 1
    assert compared > 450


def test_elliptope_dominates_the_cut_polytope(rng, k33):
    V = np.array(cut_vectors(k33).vertices, dtype=float)
    for _ in range(100):
        w = rng.normal(size=9)
        sol = elliptope_max(EdgeWeightedObjective(k33, tuple(w)))
        assert sol.value >= (V @ w).max() - 1e-5


@pytest.mark.parametrize('m, n', [(2, 2), (2, 3), (3, 3)])
def test_relaxation_chain(rng, m, n):
    shape = BipartiteShape(m, n)
    V = np.array(cut_vectors(shape).vertices, dtype=float)
    for _ in range(100):
        w = rng.normal(size=m * n)
        obj = EdgeWeightedObjective(shape, tuple(w))
        rmet = elliptope_rmet_max(obj)
        # bracket[1] is the dual bound, above the true optimum
        assert (V @ w).max() <= rmet.bracket[1] + 1e-6
        assert rmet.value <= elliptope_max(obj).bracket[1] + 1e-6
        assert rmet.value == pytest.approx(rmet.bracket[1], abs=1e-3)


def test_rmet_max_on_a_degenerate_objective(k22):
    sol = elliptope_rmet_max(EdgeWeightedObjective(k22, (2.041, -2.556, 0.418, -0.568)))
    assert sol.bracket[1] - sol.bracket[0] < 1e-3
    assert min(sol.slacks) > -1e-6


def test_normal_equations_survive_a_singular_schur_matrix():
    M = np.diag([4.0, 9.0])
    np.testing.assert_allclose(normal_equation_solver(M)(np.array([8.0, 9.0])), [2.0, 1.0])
    M = np.ones((3, 3))
    r = np.array([3.0, 3.0, 3.0])
    dy = normal_equation_solver(M)(r)
    assert np.all(np.isfinite(dy))
    np.testing.assert_allclose(M @ dy, r, atol=1e-6)


def test_gap_search_is_reproducible(k22):
    a = rmet_gap_search(k22, 5, seed=7)
    b = rmet_gap_search(k22, 5, seed=7)
    assert a.trials == 5
    assert a.projected_members == b.projected_members
    assert len(a.hits) == len(b.hits)
    with pytest.raises(ValidationError):
        rmet_gap_search(k22, -1)


def test_matches_a_generic_sdp_solver():
    cp = pytest.importorskip('cvxpy')
    obj = objective_from_inequality(catalog.get('gisin-4b'))
    N = obj.shape.num_nodes
    X = cp.Variable((N, N), PSD=True)
    terms = [w * X[a, b] for a, b, w in obj.entries()]
    problem = cp.Problem(cp.Maximize(sum(terms)), [cp.diag(X) == 1])
    problem.solve()
    assert elliptope_max(obj).value == pytest.approx(problem.value, abs=1e-4)
