import itertools
import logging
from fractions import Fraction

import numpy as np
import pytest

from gias3.cutpoly import catalog
from gias3.cutpoly.errors import DegenerateInputError, GuardError, UnboundedError, ValidationError
from gias3.cutpoly.exact import normalize_inequality
from gias3.cutpoly.graphs import BipartiteShape
from gias3.cutpoly.inequalities import LinearInequality, canonical_form, classify
from gias3.cutpoly.mappings import BehaviorVector, CorVector, SuspensionVector, covariance_inv, iota
from gias3.cutpoly.polyhedra import (HRep, VRep, cor_vertices, cut_vectors, dd_convert, facet_check,
                                     facet_check_float, hrep_contains, hull_membership, hull_membership_float,
                                     max_value, rcmet_hrep, rmet_hrep)
from gias3.cutpoly.sdp import sample_rmet


def _half_integral(vrep):
    return all(2 * c == int(2 * c) for v in vrep.vertices for c in v)


def test_cut_vectors(k22, sk22):
    vrep = cut_vectors(k22)
    assert len(vrep) == 8
    assert vrep.dim == 4
    assert vrep.name(0) == '++++'
    assert vrep.vertices[0] == (1, 1, 1, 1)
    # A1 fixed to +1, B2 flips fastest
    assert vrep.name(1) == '+++-'
    assert vrep.vertices[1] == (1, -1, 1, -1)
    assert len(cut_vectors(sk22)) == 16
    assert len(cor_vertices(k22)) == 16
    assert cor_vertices(k22).vertices[-1] == (1,) * 8


def test_chsh_facet_report(k22):
    vrep = cut_vectors(k22)
    assert max_value(catalog.chsh(), vrep) == 2
    report = facet_check(catalog.chsh(), vrep)
    assert report.valid and report.is_facet
    assert report.tight_value == 2
    assert report.root_count == 4
    assert report.affine_rank == 3


def test_loose_inequality_is_not_a_facet(k22):
    ineq = LinearInequality.from_matrix([[1, 0], [0, 0]], 2)
    report = facet_check(ineq, cut_vectors(k22))
    assert report.valid
    assert report.root_count == 0
    assert not report.is_facet


def test_invalid_inequality(k22):
    ineq = LinearInequality.from_matrix([[1, 1], [1, -1]], 1)
    report = facet_check(ineq, cut_vectors(k22))
    assert not report.valid
    assert not report.is_facet
    with pytest.raises(ValidationError):
        facet_check(ineq, cut_vectors(BipartiteShape(2, 3)))


def test_facets_of_k22(k22):
    hrep = dd_convert(cut_vectors(k22))
    assert len(hrep) == 16
    classes = classify(list(hrep.inequalities))
    assert sorted(c.orbit_size for c in classes) == [8, 8]
    assert sorted(c.representative.rhs for c in classes) == [1, 2]


def test_facets_of_k33(k33):
    hrep = dd_convert(cut_vectors(k33))
    assert len(hrep) == 90
    classes = classify(list(hrep.inequalities))
    assert sorted(c.orbit_size for c in classes) == [18, 72]
    assert sum(len(c.members) for c in classes) == 90


def test_facets_of_k5(k5):
    hrep = dd_convert(cut_vectors(k5))
    assert len(hrep) == 56
    classes = classify(list(hrep.inequalities))
    assert sorted(c.orbit_size for c in classes) == [16, 40]
    pent = [c for c in classes if c.orbit_size == 16][0]
    assert pent.representative.rhs == 2


@pytest.mark.slow
def test_facets_of_k44():
    vrep = cut_vectors(BipartiteShape(4, 4))
    with pytest.raises(GuardError):
        dd_convert(vrep)
    hrep = dd_convert(vrep, force=True)
    classes = classify(list(hrep.inequalities))
    assert len(classes) == 4
    reps = {(c.representative.coefficients, c.representative.rhs) for c in classes}
    for name in ('gisin-4a', 'gisin-4b'):
        canon = canonical_form(catalog.get(name))
        assert (canon.coefficients, canon.rhs) in reps


def test_facet_vertex_round_trip(k22):
    vrep = cut_vectors(k22)
    back = dd_convert(dd_convert(vrep))
    assert set(back.vertices) == set(vrep.vertices)


@pytest.mark.parametrize('m, n, count', [(1, 1, 4), (2, 2, 24), (2, 3, None)])
def test_rcmet_vertices_are_half_integral(m, n, count):
    shape = BipartiteShape(m, n)
    hrep = rcmet_hrep(shape)
    assert len(hrep) == 4 * m * n
    vrep = dd_convert(hrep)
    assert _half_integral(vrep)
    if count is not None:
        assert len(vrep) == count
    # every deterministic point is a vertex
    assert set(cor_vertices(shape).vertices) <= set(vrep.vertices)


@pytest.mark.slow
def test_rcmet_k33_is_half_integral(k33):
    assert _half_integral(dd_convert(rcmet_hrep(k33)))


def test_hull_membership_inside(k22):
    vrep = cut_vectors(k22)
    cert = hull_membership((0, 0, 0, 0), vrep)
    assert cert.inside
    assert set(cert.weights) <= set(vrep.names)
    assert sum(cert.weights.values()) == 1
    combo = [sum(w * vrep.vertices[vrep.names.index(name)][c] for name, w in cert.weights.items())
             for c in range(4)]
    assert combo == [0, 0, 0, 0]


def test_hull_membership_outside(k22):
    point = (Fraction(4, 5), Fraction(4, 5), Fraction(4, 5), Fraction(-4, 5))
    cert = hull_membership(point, cut_vectors(k22))
    assert not cert.inside
    sep = cert.separator
    assert sep.value(point) > sep.rhs
    assert all(sep.value(v) <= sep.rhs for v in cut_vectors(k22).vertices)
    with pytest.raises(ValidationError):
        hull_membership((0, 0), cut_vectors(k22))


def test_float_hull_membership_agrees_with_the_exact_one(rng, k22):
    vrep = cut_vectors(k22)
    facets = dd_convert(vrep).inequalities
    for _ in range(50):
        point = tuple(Fraction(int(k), 8) for k in rng.integers(-8, 9, size=4))
        exact = hull_membership(point, vrep)
        approx = hull_membership_float([float(v) for v in point], vrep)
        if exact.inside:
            assert approx.inside
            assert sum(approx.weights.values()) == pytest.approx(1.0)
        elif max(f.value(point) - f.rhs for f in facets) > Fraction(1, 100):
            assert not approx.inside
            sep = approx.separator
            assert sep is not None
            assert sep.value(point) > sep.rhs
            assert all(sep.value(v) <= sep.rhs for v in vrep.vertices)


def test_float_facet_check(k22):
    report = facet_check_float(catalog.chsh(), cut_vectors(k22))
    assert report.is_facet
    assert report.root_count == 4
    assert report.tight_value == pytest.approx(2.0)
    loose = LinearInequality.raw((1, 1, 1, -1), 3)
    report = facet_check_float(loose, VRep(4, cut_vectors(k22).vertices))
    assert report.valid
    assert not report.is_facet
    assert report.root_count == 0


def test_degenerate_vertex_list():
    vrep = VRep(3, ((0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0)))
    with pytest.raises(DegenerateInputError) as info:
        dd_convert(vrep)
    assert info.value.equations == [((0, 0, 1), 0)]


def test_unbounded_hrep():
    hrep = HRep(2, (LinearInequality.raw((-1, 0), 0), LinearInequality.raw((0, -1), 0)))
    with pytest.raises(UnboundedError):
        dd_convert(hrep)


def test_hrep_with_equation():
    # segment x + y = 1 inside the unit box
    hrep = HRep(2, (LinearInequality.raw((-1, 0), 0), LinearInequality.raw((0, -1), 0)), (((2, 2), 2),))
    assert hrep.equations == (((1, 1), 1),)
    assert dd_convert(hrep).vertices == ((0, 1), (1, 0))
    assert hrep_contains(hrep, ('1/2', '1/2'))
    assert not hrep_contains(hrep, (1, 1))
    assert hrep.violations((1, 1)) == [-1]


def test_guards(caplog):
    shape = BipartiteShape(5, 5)
    with pytest.raises(GuardError) as info:
        cut_vectors(shape, max_nodes=8)
    assert info.value.value == 10
    assert info.value.limit == 8
    with caplog.at_level(logging.WARNING, logger='gias3.cutpoly.guards'):
        vrep = cut_vectors(shape, force=True, max_nodes=8)
    assert len(vrep) == 512
    assert 'overridden' in caplog.text
    with pytest.raises(GuardError):
        hull_membership((0,) * 4, cut_vectors(BipartiteShape(2, 2)), max_vertices=4)


def test_rmet_contains_hypercube_at_zero_roots(rng, k33):
    hrep = rmet_hrep(k33)
    assert len(hrep) == 36
    for _ in range(1000):
        edges = [Fraction(int(k), 8) for k in rng.integers(-8, 9, size=9)]
        assert hrep_contains(hrep, [0] * 6 + edges)
    assert not hrep_contains(hrep, [0] * 6 + [Fraction(9, 8)] + [0] * 8)


def test_sampled_rmet_points(rng, k22):
    for _ in range(100):
        x = sample_rmet(k22, rng)
        assert all(-1 <= v <= 1 for v in x.coords)
        ineqs = rmet_hrep(k22).inequalities
        assert all(f.value(x.coords) <= f.rhs + 1e-12 for f in ineqs)


def test_rmet_is_the_no_signaling_polytope(rng, k22):
    hrep = rmet_hrep(k22)
    sk22 = k22.suspension()
    for _ in range(200):
        x = tuple(Fraction(int(k), 4) for k in rng.integers(-4, 5, size=8))
        q = iota(covariance_inv(SuspensionVector(sk22, x)))
        assert hrep_contains(hrep, x) == q.is_behavior()


def test_facets_agree_with_cddlib(k33):
    cdd = pytest.importorskip('cdd')
    if not hasattr(cdd, 'Matrix'):
        pytest.skip('needs the pycddlib 2 interface')
    vrep = cut_vectors(k33)
    mat = cdd.Matrix([[1] + list(v) for v in vrep.vertices], number_type='fraction')
    mat.rep_type = cdd.RepType.GENERATOR
    H = cdd.Polyhedron(mat).get_inequalities()
    # rows are b + A.x >= 0
    theirs = {normalize_inequality([-Fraction(a) for a in row[1:]], Fraction(row[0])) for row in H}
    ours = {(f.coefficients, f.rhs) for f in dd_convert(vrep).inequalities}
    assert ours == theirs


def _relabelings(k):
    """Orders of the 2k outcome nodes of one party under input
    permutations and per-input outcome flips."""
    orders = []
    for perm in itertools.permutations(range(k)):
        for flips in itertools.product((0, 1), repeat=k):
            orders.append([2 * perm[i] + (s ^ flips[i]) for i in range(k) for s in (0, 1)])
    return np.array(orders)


@pytest.mark.slow
def test_no_signaling_vertices_lie_in_the_cut_polytope_of_k66(k33):
    vertices = dd_convert(rcmet_hrep(k33)).vertices
    cut = cut_vectors(BipartiteShape(6, 6))

    # node relabelings of K6,6 map Cut(K6,6) onto itself; test one vertex per orbit
    orders = _relabelings(3)
    perms = []
    for ro in orders:
        for co in orders:
            perms.append(np.add.outer(6 * ro, co).ravel())
            perms.append(np.add.outer(ro, 6 * co).ravel())
    perms = np.array(perms)
    powers = 3 ** np.arange(36, dtype=np.int64)
    orbits = {}
    for p in vertices:
        q = iota(CorVector(k33, p)).coords
        digits = np.array([int(2 * v) for v in q], dtype=np.int64)
        key = int((digits[perms] * powers).sum(axis=1).min())
        orbits.setdefault(key, q)

    assert len(orbits) < len(vertices)
    for q in orbits.values():
        assert hull_membership(q, cut).inside

    # the inclusion is proper: a cut vector with negative entries is no behavior
    corner = (-1,) * 36
    assert corner in set(cut.vertices)
    assert BehaviorVector(k33, corner).violations()
