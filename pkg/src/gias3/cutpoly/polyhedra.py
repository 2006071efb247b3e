"""
FILE: polyhedra.py
LAST MODIFIED: 17-10-2026
DESCRIPTION: exact polyhedral computation: cut vectors and correlation
polytope vertices, the no-signaling H-representations, hull membership
with certificates, double description conversion and facet checks

Everything here is exact: ints and Fractions, never floats.

===============================================================================
This file is part of GIAS3.

This Source Code Form is subject to the terms of the Mozilla Public
License, v. 2.0. If a copy of the MPL was not distributed with this
file, You can obtain one at http://mozilla.org/MPL/2.0/.
===============================================================================
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.optimize import linprog

from gias3.cutpoly import config
from gias3.cutpoly.dd import extreme_rays
from gias3.cutpoly.errors import DegenerateInputError, UnboundedError, ValidationError
from gias3.cutpoly.exact import (Number, affine_hull_equations, affine_rank, dot, normalize_equation,
                                 primitive, rank, rationalize, to_fraction)
from gias3.cutpoly.graphs import BipartiteShape, CompleteShape, Shape, SuspensionShape, node_position
from gias3.cutpoly.inequalities import (COMPLETE, COR, CORRELATION, RAW, SUSPENSION, LinearInequality,
                                        space_dim)
from gias3.cutpoly.lp import phase_one

log = logging.getLogger(__name__)

Vector = Tuple[Number, ...]
Equation = Tuple[Tuple[int, ...], int]


def _exact_vector(values: Sequence) -> Vector:
    out = []
    for v in values:
        f = to_fraction(v)
        out.append(int(f) if f.denominator == 1 else f)
    return tuple(out)


@dataclass(frozen=True)
class VRep:
    """Finite point set in R^dim, optionally named and tied to a coordinate space."""
    dim: int
    vertices: Tuple[Vector, ...]
    names: Optional[Tuple[str, ...]] = None
    space: str = RAW
    shape: Optional[Shape] = None

    def __post_init__(self):
        verts = tuple(_exact_vector(v) for v in self.vertices)
        for k, v in enumerate(verts):
            if len(v) != self.dim:
                raise ValidationError('vertex {} has dimension {}, expected {}'.format(k, len(v), self.dim))
        if len(set(verts)) != len(verts):
            raise ValidationError('vertex list has duplicates')
        if self.names is not None and len(self.names) != len(verts):
            raise ValidationError('{} names for {} vertices'.format(len(self.names), len(verts)))
        expected = space_dim(self.space, self.shape) if self.space != RAW else None
        if expected is not None and expected != self.dim:
            raise ValidationError('{} space on {} has dimension {}, not {}'.format(
                self.space, self.shape.label, expected, self.dim))
        object.__setattr__(self, 'vertices', verts)

    def __len__(self):
        return len(self.vertices)

    def name(self, k: int) -> str:
        if self.names is not None:
            return self.names[k]
        return 'v{}'.format(k)


@dataclass(frozen=True)
class HRep:
    """{x : a.x <= a0 for each inequality, b.x = b0 for each equation}."""
    dim: int
    inequalities: Tuple[LinearInequality, ...]
    equations: Tuple[Equation, ...] = ()
    space: str = RAW
    shape: Optional[Shape] = None

    def __post_init__(self):
        ineqs = tuple(self.inequalities)
        for k, ineq in enumerate(ineqs):
            if ineq.dim != self.dim:
                raise ValidationError('inequality {} has dimension {}, expected {}'.format(k, ineq.dim, self.dim))
            if ineq.is_zero:
                raise ValidationError('inequality {} has no nonzero coefficient'.format(k))
        eqs = []
        for coeffs, rhs in self.equations:
            if len(coeffs) != self.dim:
                raise ValidationError('equation has dimension {}, expected {}'.format(len(coeffs), self.dim))
            if not any(coeffs):
                raise ValidationError('equation has no nonzero coefficient')
            eqs.append(normalize_equation(coeffs, rhs))
        object.__setattr__(self, 'inequalities', ineqs)
        object.__setattr__(self, 'equations', tuple(eqs))

    def __len__(self):
        return len(self.inequalities)

    def violations(self, point: Sequence[Number]) -> List[int]:
        """Indices of violated inequalities; equations violated are reported as -1-k."""
        if len(point) != self.dim:
            raise ValidationError('point has dimension {}, expected {}'.format(len(point), self.dim))
        bad = [k for k, ineq in enumerate(self.inequalities) if ineq.value(point) > ineq.rhs]
        bad += [-1 - k for k, (a, a0) in enumerate(self.equations) if dot(a, point) != a0]
        return bad

    def contains(self, point: Sequence[Number]) -> bool:
        return not self.violations(point)


@dataclass(frozen=True)
class MembershipCertificate:
    """Convex weights by vertex name (inside) or a separating inequality (outside)."""
    inside: bool
    weights: Optional[Dict[str, Fraction]] = None
    separator: Optional[LinearInequality] = None


@dataclass(frozen=True)
class FacetReport:
    valid: bool
    tight_value: Number
    root_count: int
    affine_rank: int
    is_facet: bool


def _space_of(shape: Shape) -> str:
    if isinstance(shape, SuspensionShape):
        return SUSPENSION
    if isinstance(shape, CompleteShape):
        return COMPLETE
    return CORRELATION


def cut_vectors(shape: Shape, force: bool = False, max_nodes: Optional[int] = None) -> VRep:
    """All 2^(|V|-1) cut vectors x_uv = c_u c_v with c of the first node fixed to +1.

    Signs of the remaining nodes run in binary order, +1 before -1, with the
    last node changing fastest.
    """
    N = shape.num_nodes
    config.guard('cut enumeration nodes', N, config.MAX_ENUM_NODES if max_nodes is None else max_nodes, force)
    nodes = shape.nodes
    pairs = [(node_position(shape, u), node_position(shape, v)) for u, v in shape.edges]
    vertices = []
    names = []
    for k in range(2 ** (N - 1)):
        c = [1] + [-1 if (k >> (N - 1 - p)) & 1 else 1 for p in range(1, N)]
        vertices.append(tuple(c[a] * c[b] for a, b in pairs))
        names.append(''.join('+' if s > 0 else '-' for s in c))
    log.debug('enumerated %d cut vectors of %s', len(vertices), shape.label)
    return VRep(len(pairs), tuple(vertices), tuple(names), _space_of(shape), shape)


def cor_vertices(shape: BipartiteShape, force: bool = False, max_nodes: Optional[int] = None) -> VRep:
    """The 2^(m+n) deterministic points p_AiBj = p_Ai p_Bj with 0/1 node values."""
    m, n = shape.m, shape.n
    N = m + n
    config.guard('correlation polytope nodes', N, config.MAX_ENUM_NODES if max_nodes is None else max_nodes, force)
    vertices = []
    names = []
    for k in range(2 ** N):
        bits = [(k >> (N - 1 - p)) & 1 for p in range(N)]
        edges = [bits[i] * bits[m + j] for i in range(m) for j in range(n)]
        vertices.append(tuple(bits + edges))
        names.append(''.join(str(b) for b in bits))
    return VRep(m * n + m + n, tuple(vertices), tuple(names), COR, shape)


def rcmet_hrep(shape: BipartiteShape) -> HRep:
    """Rooted correlation semimetric polytope in p-coordinates: 4 inequalities per edge."""
    m, n = shape.m, shape.n
    dim = m * n + m + n
    ineqs = []
    for i in range(m):
        for j in range(n):
            a, b, e = i, m + j, m + n + i * n + j

            def make(terms, rhs):
                coeffs = [0] * dim
                for idx, c in terms:
                    coeffs[idx] += c
                return LinearInequality(COR, shape, tuple(coeffs), rhs)

            ineqs.append(make([(e, -1)], 0))
            ineqs.append(make([(e, 1), (a, -1)], 0))
            ineqs.append(make([(e, 1), (b, -1)], 0))
            ineqs.append(make([(a, 1), (b, 1), (e, -1)], 1))
    return HRep(dim, tuple(ineqs), (), COR, shape)


def rmet_hrep(shape: Union[SuspensionShape, BipartiteShape]) -> HRep:
    """Rooted semimetric polytope of the suspension: for each edge A_iB_j,
    the four sign patterns of x_XAi, x_XBj, x_AiBj with an odd number of
    minus signs, each <= 1."""
    if isinstance(shape, BipartiteShape):
        shape = shape.suspension()
    m, n = shape.m, shape.n
    dim = shape.num_edges
    patterns = ((-1, -1, -1), (1, 1, -1), (-1, 1, 1), (1, -1, 1))
    ineqs = []
    for i in range(m):
        for j in range(n):
            a, b, e = i, m + j, m + n + i * n + j
            for sa, sb, se in patterns:
                coeffs = [0] * dim
                coeffs[a], coeffs[b], coeffs[e] = sa, sb, se
                ineqs.append(LinearInequality(SUSPENSION, shape, tuple(coeffs), 1))
    return HRep(dim, tuple(ineqs), (), SUSPENSION, shape)


def _separator(space: str, shape: Optional[Shape], coeffs: Sequence, rhs) -> LinearInequality:
    if space == RAW:
        return LinearInequality.raw(coeffs, rhs)
    return LinearInequality(space, shape, tuple(coeffs), rhs)


def hull_membership(point: Sequence[Number], vrep: VRep, force: bool = False,
                    max_vertices: Optional[int] = None) -> MembershipCertificate:
    """Exact test of point in conv(vrep) with a verified certificate."""
    limit = config.MAX_HULL_VERTICES if max_vertices is None else max_vertices
    config.guard('hull membership vertices', len(vrep), limit, force)
    y = tuple(to_fraction(v) for v in point)
    if len(y) != vrep.dim:
        raise ValidationError('point has dimension {}, polytope {}'.format(len(y), vrep.dim))
    if not vrep.vertices:
        raise ValidationError('empty vertex list')
    d = vrep.dim
    rows = [[v[c] for v in vrep.vertices] for c in range(d)] + [[1] * len(vrep)]
    result = phase_one(rows, list(y) + [1])

    if result.feasible:
        weights = {vrep.name(k): Fraction(w) for k, w in result.solution.items()}
        combo = [sum(Fraction(w) * vrep.vertices[k][c] for k, w in result.solution.items()) for c in range(d)]
        if sum(result.solution.values()) != 1 or any(w < 0 for w in result.solution.values()) or \
                tuple(combo) != y:
            raise RuntimeError('convex combination certificate failed to verify')
        return MembershipCertificate(True, weights=weights)

    g, h = result.farkas[:d], result.farkas[d]
    # g.v + h <= 0 on every vertex and g.y + h > 0
    sep = _separator(vrep.space, vrep.shape, g, -h)
    if any(sep.value(v) > sep.rhs for v in vrep.vertices) or not sep.value(y) > sep.rhs:
        raise RuntimeError('separating inequality failed to verify')
    return MembershipCertificate(False, separator=sep)


def hull_membership_float(point: Sequence[float], vrep: VRep, force: bool = False,
                          max_vertices: Optional[int] = None, tol: Optional[float] = None) -> MembershipCertificate:
    """Floating point test of point in conv(vrep) by linear programming.

    Inside: weights above tol by vertex name. Outside: a separator with
    coefficients rounded to denominator SEPARATOR_DENOMINATOR and the rhs
    set exactly to its maximum over the vertices, or None when the rounded
    inequality does not cut the point off.
    """
    limit = config.MAX_HULL_VERTICES if max_vertices is None else max_vertices
    config.guard('hull membership vertices', len(vrep), limit, force)
    tol = config.FLOAT_TOL if tol is None else tol
    y = np.asarray([float(v) for v in point])
    if y.size != vrep.dim:
        raise ValidationError('point has dimension {}, polytope {}'.format(y.size, vrep.dim))
    if not vrep.vertices:
        raise ValidationError('empty vertex list')
    V = np.asarray(vrep.vertices, dtype=float)
    k, d = V.shape
    A_eq = np.vstack([V.T, np.ones(k)])
    lp = linprog(np.zeros(k), A_eq=A_eq, b_eq=np.append(y, 1.0), bounds=(0, None), method='highs')
    if lp.status == 0:
        weights = {vrep.name(i): float(w) for i, w in enumerate(lp.x) if w > tol}
        return MembershipCertificate(True, weights=weights)
    if lp.status != 2:
        raise ValidationError('hull membership LP failed: {}'.format(lp.message))

    # max g.y - h  s.t.  g.v - h <= 0 on every vertex, |g_c| <= 1
    c = np.append(-y, 1.0)
    A_ub = np.hstack([V, -np.ones((k, 1))])
    sep_lp = linprog(c, A_ub=A_ub, b_ub=np.zeros(k), bounds=[(-1, 1)] * d + [(None, None)], method='highs')
    separator = None
    if sep_lp.status == 0:
        g = [rationalize(float(v), config.SEPARATOR_DENOMINATOR) for v in sep_lp.x[:d]]
        if any(g):
            rhs = max(dot(g, v) for v in vrep.vertices)
            sep = _separator(vrep.space, vrep.shape, g, rhs)
            if sep.value(_exact_vector(y)) > sep.rhs:
                separator = sep
    log.debug('float hull membership: outside, separator %s', 'found' if separator else 'not certified')
    return MembershipCertificate(False, separator=separator)


def facet_check_float(ineq: LinearInequality, vrep: VRep, tol: Optional[float] = None) -> FacetReport:
    """facet_check in floating point: roots within tol, numerical rank."""
    if ineq.dim != vrep.dim:
        raise ValidationError('inequality has dimension {}, polytope {}'.format(ineq.dim, vrep.dim))
    tol = config.FLOAT_TOL if tol is None else tol
    V = np.asarray(vrep.vertices, dtype=float)
    values = V.dot(np.asarray(ineq.coefficients, dtype=float))
    rhs = float(ineq.rhs)
    tight = float(values.max())
    valid = tight <= rhs + tol
    roots = V[np.abs(values - rhs) <= tol]
    if len(roots) == 0:
        r = -1
    elif len(roots) == 1:
        r = 0
    else:
        r = int(np.linalg.matrix_rank(roots[1:] - roots[0]))
    is_facet = valid and r == vrep.dim - 1
    log.debug('float facet check: max %.12g vs rhs %.12g, %d roots of rank %d', tight, rhs, len(roots), r)
    return FacetReport(valid, tight, len(roots), r, is_facet)


def max_value(ineq: LinearInequality, vrep: VRep) -> Number:
    if ineq.dim != vrep.dim:
        raise ValidationError('inequality has dimension {}, polytope {}'.format(ineq.dim, vrep.dim))
    return max(ineq.value(v) for v in vrep.vertices)


def facet_check(ineq: LinearInequality, vrep: VRep) -> FacetReport:
    """Validity and facet test of a.x <= a0 against a full-dimensional V-rep."""
    if ineq.dim != vrep.dim:
        raise ValidationError('inequality has dimension {}, polytope {}'.format(ineq.dim, vrep.dim))
    values = [ineq.value(v) for v in vrep.vertices]
    tight = max(values)
    valid = tight <= ineq.rhs
    roots = [v for v, val in zip(vrep.vertices, values) if val == ineq.rhs]
    limit = vrep.dim if ineq.is_zero else vrep.dim - 1
    r = affine_rank(roots, limit=limit)
    is_facet = valid and r == vrep.dim - 1
    log.debug('facet check: max %s vs rhs %s, %d roots of affine rank %d', tight, ineq.rhs, len(roots), r)
    return FacetReport(valid, tight, len(roots), r, is_facet)


def _guard_dd(dim: int, count: int, force: bool, max_dim: Optional[int], max_input: Optional[int]) -> None:
    config.guard('double description dimension', dim, config.MAX_DD_DIM if max_dim is None else max_dim, force)
    config.guard('double description input size', count,
                 config.MAX_DD_INPUT if max_input is None else max_input, force)


def vertices_to_facets(vrep: VRep, force: bool = False, max_dim: Optional[int] = None,
                       max_input: Optional[int] = None, verify: bool = True) -> HRep:
    _guard_dd(vrep.dim, len(vrep), force, max_dim, max_input)
    d = vrep.dim
    if affine_rank(vrep.vertices) != d:
        eqs = affine_hull_equations(vrep.vertices, d)
        raise DegenerateInputError('input spans a proper affine subspace; hull equations: {}'.format(
            '; '.join('{} = {}'.format(list(a), a0) for a, a0 in eqs)), eqs)
    rows = [primitive((1,) + tuple(v)) for v in vrep.vertices]
    rays = extreme_rays(rows, d + 1)
    facets = [_separator(vrep.space, vrep.shape, tuple(-a for a in y[1:]), y[0]) for y in rays]
    facets.sort(key=lambda f: (f.coefficients, f.rhs))
    if verify:
        for f in facets:
            if not facet_check(f, vrep).is_facet:
                raise RuntimeError('double description produced a non-facet: {}'.format(f.expression()))
    log.debug('double description: %d vertices -> %d facets', len(vrep), len(facets))
    return HRep(d, tuple(facets), (), vrep.space, vrep.shape)


def facets_to_vertices(hrep: HRep, force: bool = False, max_dim: Optional[int] = None,
                       max_input: Optional[int] = None, verify: bool = True) -> VRep:
    _guard_dd(hrep.dim, len(hrep) + 2 * len(hrep.equations), force, max_dim, max_input)
    d = hrep.dim
    rows = [(f.rhs,) + tuple(-a for a in f.coefficients) for f in hrep.inequalities]
    for a, a0 in hrep.equations:
        rows.append((a0,) + tuple(-c for c in a))
        rows.append((-a0,) + tuple(a))
    rows.append((1,) + (0,) * d)
    try:
        rays = extreme_rays(rows, d + 1)
    except ValidationError:
        raise UnboundedError('H-representation does not describe a polytope (its recession cone has a line)')
    vertices = []
    for y in rays:
        t = y[0]
        if t == 0:
            raise UnboundedError('H-representation is unbounded: direction {}'.format(list(y[1:])))
        vertices.append(tuple(Fraction(c, t) for c in y[1:]))
    vertices.sort()
    out = VRep(d, tuple(vertices), None, hrep.space, hrep.shape)
    if verify:
        normals = [f.coefficients for f in hrep.inequalities]
        for v in out.vertices:
            if not hrep.contains(v):
                raise RuntimeError('double description produced an infeasible vertex {}'.format(v))
            tight = [normals[k] for k, f in enumerate(hrep.inequalities) if f.value(v) == f.rhs]
            tight += [a for a, _ in hrep.equations]
            if rank(tight) != d:
                raise RuntimeError('double description produced a non-vertex {}'.format(v))
    log.debug('double description: %d inequalities -> %d vertices', len(hrep), len(out))
    return out


def dd_convert(rep: Union[VRep, HRep], force: bool = False, max_dim: Optional[int] = None,
               max_input: Optional[int] = None, verify: bool = True) -> Union[HRep, VRep]:
    """V-rep to irredundant H-rep, or H-rep of a polytope to its vertices.

    Facets come out in lexicographic order of their normalized
    coefficients, vertices in lexicographic order.
    """
    if isinstance(rep, VRep):
        return vertices_to_facets(rep, force, max_dim, max_input, verify)
    if isinstance(rep, HRep):
        return facets_to_vertices(rep, force, max_dim, max_input, verify)
    raise ValidationError('dd_convert takes a VRep or an HRep, got {!r}'.format(type(rep).__name__))


def hrep_contains(hrep: HRep, point: Sequence[Number]) -> bool:
    """Exact membership of a point in the polyhedron of an H-rep."""
    bad = hrep.violations(_exact_vector(point))
    if bad:
        log.debug('point violates %d constraints, first %d', len(bad), bad[0])
    return not bad
