"""
FILE: sdp.py
LAST MODIFIED: 17-10-2026
DESCRIPTION: semidefinite optimisation over elliptopes

    elliptope_max         max sum_e w_e H_e over {H psd, diag(H) = 1}
    elliptope_rmet_max    the same on a suspension, with the rooted
                          semimetric inequalities on the entries of H
    elliptope_membership  largest t with H - t I psd over all unit-diagonal
                          completions H of the given edge values
    cut_condition         (2/pi) arcsin of a correlation vector tested for
                          exact membership in the cut polytope
    rmet_gap_search       random rooted semimetric points whose projection
                          is in the elliptope of K_m,n but which are not in
                          the elliptope of the suspension

All programs go through InteriorPointSolver, a dense primal-dual method on
block-diagonal matrices.

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
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy import linalg

from gias3.cutpoly import config
from gias3.cutpoly.errors import SolverError, ValidationError
from gias3.cutpoly.exact import rationalize
from gias3.cutpoly.graphs import BipartiteShape, Shape, SuspensionShape, node_position
from gias3.cutpoly.inequalities import COMPLETE, COR, CORRELATION, SUSPENSION, LinearInequality
from gias3.cutpoly.mappings import CorrelationVector, GramRealization, SuspensionVector
from gias3.cutpoly.polyhedra import MembershipCertificate, cut_vectors, hull_membership, rmet_hrep

log = logging.getLogger(__name__)

Entry = Tuple[int, int, float]

# optimal unit vectors of f3322 over the relaxation, rows X, A1..A3, B1..B3
_R3 = np.sqrt(3.0)
I3322_RELAXATION_VECTORS = np.array([
    [1.0, 0.0, 0.0, 0.0],
    [(1 - _R3) / (2 * _R3), 0.0, 1 / _R3, (_R3 + 1) / (2 * _R3)],
    [(1 - _R3) / (2 * _R3), 0.0, -1 / _R3, (_R3 + 1) / (2 * _R3)],
    [0.0, 1.0, 0.0, 0.0],
    [(_R3 - 1) / (2 * _R3), 1 / _R3, 0.0, (_R3 + 1) / (2 * _R3)],
    [(_R3 - 1) / (2 * _R3), -1 / _R3, 0.0, (_R3 + 1) / (2 * _R3)],
    [0.0, 0.0, 1.0, 0.0],
])


# ---------------------------------------------------------------------------
# interior point engine
# ---------------------------------------------------------------------------
def normal_equation_solver(M: np.ndarray):
    """Solver for M dy = r, M the symmetric Schur complement.

    M is equilibrated by its diagonal and Cholesky factored. Near a
    degenerate optimum rounding can leave M slightly indefinite; then a
    growing diagonal shift is tried, and least squares last.
    """
    M = 0.5 * (M + M.T)
    d = np.sqrt(np.abs(np.diag(M)))
    d[d == 0] = 1.0
    S = M / np.outer(d, d)
    eye = np.eye(S.shape[0])
    for shift in config.SDP_NORMAL_SHIFTS:
        try:
            factor = linalg.cho_factor(S + shift * eye if shift else S)
        except linalg.LinAlgError:
            continue
        if shift:
            log.debug('normal equations factored with diagonal shift %g', shift)
        return lambda r: linalg.cho_solve(factor, r / d) / d
    log.debug('normal equations solved by least squares')
    return lambda r: linalg.lstsq(S, r / d)[0] / d


@dataclass(frozen=True, eq=False)
class IPMResult:
    X: np.ndarray
    y: np.ndarray
    Z: np.ndarray
    primal: float
    dual: float
    iterations: int
    residuals: Tuple[float, float, float]


class InteriorPointSolver(object):
    """Dense primal-dual path-following method for

        max <C, X>  s.t.  <A_k, X> = b_k,  X psd and block diagonal

    with dual  min b.y  s.t.  sum_k y_k A_k - C = Z psd.

    C and each A_k are given as entries (i, j, v) on the upper triangle,
    meaning the linear form sum v X_ij. Search directions are HKM with a
    Mehrotra predictor-corrector. Iterates start at X = I, y = 0,
    Z = eta I with eta = max(1, |C|_F).
    """

    def __init__(self, blocks: Sequence[int], objective: Sequence[Entry],
                 constraints: Sequence[Sequence[Entry]], rhs: Sequence[float],
                 gap_tol: Optional[float] = None, feas_tol: Optional[float] = None,
                 max_iter: Optional[int] = None, step_fraction: Optional[float] = None):
        self.blocks = tuple(int(s) for s in blocks)
        if not self.blocks or min(self.blocks) < 1:
            raise ValidationError('blocks must be positive sizes, got {}'.format(blocks))
        self.size = sum(self.blocks)
        self._block_of = np.repeat(np.arange(len(self.blocks)), self.blocks)
        self.mask = linalg.block_diag(*[np.ones((s, s)) for s in self.blocks])
        self.gap_tol = config.SDP_GAP_TOL if gap_tol is None else gap_tol
        self.feas_tol = config.SDP_FEAS_TOL if feas_tol is None else feas_tol
        self.max_iter = config.SDP_MAX_ITER if max_iter is None else max_iter
        self.step_fraction = config.SDP_STEP_FRACTION if step_fraction is None else step_fraction

        self.C = np.zeros((self.size, self.size))
        for i, j, v in self._expand(objective):
            self.C[i, j] += v

        rows, cols, vals, owner = [], [], [], []
        for k, entries in enumerate(constraints):
            for i, j, v in self._expand(entries):
                rows.append(i)
                cols.append(j)
                vals.append(v)
                owner.append(k)
        self.K = len(constraints)
        self.b = np.asarray(rhs, dtype=float)
        if self.b.shape != (self.K,):
            raise ValidationError('{} right-hand sides for {} constraints'.format(self.b.size, self.K))
        self._r = np.array(rows, dtype=int)
        self._c = np.array(cols, dtype=int)
        self._v = np.array(vals, dtype=float)
        self._owner = np.array(owner, dtype=int)
        self._L = np.zeros((self.K, len(vals)))
        self._L[self._owner, np.arange(len(vals))] = self._v

    def _expand(self, entries: Sequence[Entry]) -> List[Entry]:
        out = []
        for i, j, v in entries:
            i, j = int(i), int(j)
            if not (0 <= i < self.size and 0 <= j < self.size):
                raise ValidationError('entry ({}, {}) outside a {}x{} matrix'.format(i, j, self.size, self.size))
            if self._block_of[i] != self._block_of[j]:
                raise ValidationError('entry ({}, {}) crosses diagonal blocks'.format(i, j))
            if i == j:
                out.append((i, i, float(v)))
            else:
                out.append((i, j, 0.5 * float(v)))
                out.append((j, i, 0.5 * float(v)))
        return out

    def op(self, X: np.ndarray) -> np.ndarray:
        """(<A_k, X>)_k"""
        return self._L.dot(X[self._r, self._c])

    def adjoint(self, y: np.ndarray) -> np.ndarray:
        """sum_k y_k A_k"""
        Y = np.zeros((self.size, self.size))
        np.add.at(Y, (self._r, self._c), y[self._owner] * self._v)
        return Y

    def _schur(self, X: np.ndarray, Zi: np.ndarray) -> np.ndarray:
        # M_kl = tr(A_k X A_l Z^-1)
        T = X[np.ix_(self._c, self._r)] * Zi[np.ix_(self._c, self._r)].T
        return self._L.dot(T).dot(self._L.T)

    def _stalled_but_solved(self, residuals: Tuple[float, float, float]) -> bool:
        pinf, dinf, relgap = residuals
        f = config.SDP_STALL_FACTOR
        return relgap < f * self.gap_tol and pinf < f * self.feas_tol and dinf < f * self.feas_tol

    def _max_step(self, X: np.ndarray, dX: np.ndarray) -> float:
        """Largest alpha with X + alpha dX psd."""
        try:
            L = linalg.cholesky(X, lower=True)
        except linalg.LinAlgError:
            raise SolverError('iterate lost positive definiteness', (np.nan, np.nan), 0)
        W = linalg.solve_triangular(L, dX, lower=True)
        W = linalg.solve_triangular(L, W.T, lower=True)
        lam = linalg.eigvalsh(0.5 * (W + W.T))[0]
        if lam >= 0:
            return np.inf
        return -1.0 / lam

    def _direction(self, Rc, X, Zi, Rd, rp, normal):
        rhs = self.op(Rc.dot(Zi)) - self.op(X.dot(Rd).dot(Zi)) - rp
        dy = normal(rhs)
        dZ = self.adjoint(dy) + Rd
        dX = (Rc - X.dot(dZ)).dot(Zi)
        dX = 0.5 * (dX + dX.T) * self.mask
        return dX, dy, dZ

    def solve(self) -> IPMResult:
        n = self.size
        I = np.eye(n)
        X = I.copy()
        y = np.zeros(self.K)
        Z = max(1.0, np.linalg.norm(self.C)) * I
        norm_b = 1.0 + np.linalg.norm(self.b)
        norm_c = 1.0 + np.linalg.norm(self.C)
        pobj = dobj = np.nan
        residuals = (np.inf, np.inf, np.inf)

        for it in range(self.max_iter + 1):
            pobj = float(np.vdot(self.C, X))
            dobj = float(self.b.dot(y))
            rp = self.b - self.op(X)
            Rd = self.adjoint(y) - self.C - Z
            pinf = np.linalg.norm(rp) / norm_b
            dinf = np.linalg.norm(Rd) / norm_c
            gap = float(np.vdot(X, Z))
            relgap = gap / (1.0 + abs(pobj) + abs(dobj))
            residuals = (float(pinf), float(dinf), float(relgap))
            log.debug('ipm %3d: primal %.10g dual %.10g pinf %.2e dinf %.2e gap %.2e',
                      it, pobj, dobj, pinf, dinf, relgap)
            if relgap < self.gap_tol and pinf < self.feas_tol and dinf < self.feas_tol:
                return IPMResult(X, y, Z, pobj, dobj, it, residuals)
            if it == self.max_iter:
                break

            mu = gap / n
            try:
                Zi = linalg.cho_solve(linalg.cho_factor(Z), I)
                Zi = 0.5 * (Zi + Zi.T)
                normal = normal_equation_solver(self._schur(X, Zi))
                XZ = X.dot(Z)

                # predictor
                dXa, _, dZa = self._direction(-XZ, X, Zi, Rd, rp, normal)
                ap = min(1.0, self._max_step(X, dXa))
                ad = min(1.0, self._max_step(Z, dZa))
                mu_aff = float(np.vdot(X + ap * dXa, Z + ad * dZa)) / n
                sigma = min(1.0, max(0.0, mu_aff / mu)) ** 3

                # corrector
                Rc = sigma * mu * I - XZ - dXa.dot(dZa)
                dX, dy, dZ = self._direction(Rc, X, Zi, Rd, rp, normal)
                ap = min(1.0, self.step_fraction * self._max_step(X, dX))
                ad = min(1.0, self.step_fraction * self._max_step(Z, dZ))
            except (linalg.LinAlgError, SolverError) as e:
                if self._stalled_but_solved(residuals):
                    log.warning('ipm stopped at iteration %d (%s); accepting iterate with pinf %.2e dinf %.2e '
                                'gap %.2e', it, e, *residuals)
                    return IPMResult(X, y, Z, pobj, dobj, it, residuals)
                raise SolverError('search direction broke down at iteration {}: {}'.format(it, e),
                                  (pobj, dobj), it, residuals)
            if not (np.all(np.isfinite(dX)) and np.all(np.isfinite(dZ))):
                if self._stalled_but_solved(residuals):
                    log.warning('ipm stopped at iteration %d on a non-finite direction', it)
                    return IPMResult(X, y, Z, pobj, dobj, it, residuals)
                raise SolverError('non-finite search direction at iteration {}'.format(it),
                                  (pobj, dobj), it, residuals)
            X = X + ap * dX
            y = y + ad * dy
            Z = Z + ad * dZ
            X = 0.5 * (X + X.T) * self.mask
            Z = 0.5 * (Z + Z.T) * self.mask

        raise SolverError('no convergence in {} iterations: objective in [{:.10g}, {:.10g}]'.format(
            self.max_iter, pobj, dobj), (pobj, dobj), self.max_iter, residuals)


# ---------------------------------------------------------------------------
# objectives and solutions
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class EdgeWeightedObjective:
    """sum_e w_e x_e + offset over the edges of a graph."""
    shape: Shape
    weights: Tuple[float, ...]
    offset: float = 0.0

    def __post_init__(self):
        weights = tuple(float(w) for w in self.weights)
        if len(weights) != self.shape.num_edges:
            raise ValidationError('{} has {} edges, got {} weights'.format(
                self.shape.label, self.shape.num_edges, len(weights)))
        if not np.all(np.isfinite(weights)) or not np.isfinite(self.offset):
            raise ValidationError('objective weights must be finite')
        object.__setattr__(self, 'weights', weights)
        object.__setattr__(self, 'offset', float(self.offset))

    def value(self, x: Sequence[float]) -> float:
        if len(x) != len(self.weights):
            raise ValidationError('point has {} coordinates, objective {}'.format(len(x), len(self.weights)))
        return float(np.dot(self.weights, np.asarray(x, dtype=float))) + self.offset

    def suspended(self) -> 'EdgeWeightedObjective':
        """The same functional on the suspension, with zero root weights."""
        if isinstance(self.shape, SuspensionShape):
            return self
        if not isinstance(self.shape, BipartiteShape):
            raise ValidationError('only bipartite objectives have a suspension, got {}'.format(self.shape.label))
        zeros = (0.0,) * (self.shape.m + self.shape.n)
        return EdgeWeightedObjective(self.shape.suspension(), zeros + self.weights, self.offset)

    def entries(self) -> List[Entry]:
        pos = [(node_position(self.shape, u), node_position(self.shape, v)) for u, v in self.shape.edges]
        return [(a, b, w) for (a, b), w in zip(pos, self.weights) if w]


def objective_from_inequality(ineq: LinearInequality) -> EdgeWeightedObjective:
    """The left-hand side of an inequality as an edge-weighted functional.

    p-coordinate inequalities are rewritten in expectations without
    rescaling, so the objective's value is directly comparable with the
    inequality's right-hand side.
    """
    if ineq.space in (CORRELATION, SUSPENSION, COMPLETE):
        return EdgeWeightedObjective(ineq.shape, tuple(float(c) for c in ineq.coefficients))
    if ineq.space != COR:
        raise ValidationError('{} inequalities have no graph to optimise over'.format(ineq.space))
    m, n = ineq.shape.m, ineq.shape.n
    a_alice, a_bob = ineq.root_coefficients()
    M = ineq.matrix()
    half, quarter = Fraction(1, 2), Fraction(1, 4)
    x_alice = [-half * a for a in a_alice]
    x_bob = [-half * b for b in a_bob]
    const = half * (sum(a_alice) + sum(a_bob))
    x_edge = []
    for i in range(m):
        for j in range(n):
            c = M[i][j]
            const += quarter * c
            x_alice[i] -= quarter * c
            x_bob[j] -= quarter * c
            x_edge.append(quarter * c)
    return EdgeWeightedObjective(ineq.shape.suspension(), tuple(float(w) for w in x_alice + x_bob + x_edge),
                                 float(const))


def gram_from_vectors(shape: Shape, vectors: Sequence[Sequence[float]], normalize: bool = False) -> GramRealization:
    """GramRealization from explicit vectors, one row per node in node order."""
    vecs = np.atleast_2d(np.asarray(vectors, dtype=float))
    if normalize:
        norms = np.linalg.norm(vecs, axis=1)
        if np.any(norms == 0):
            raise ValidationError('cannot normalise a zero vector')
        vecs = vecs / norms[:, None]
    return GramRealization(shape, vecs)


def i3322_relaxation_vectors() -> GramRealization:
    return gram_from_vectors(BipartiteShape(3, 3).suspension(), I3322_RELAXATION_VECTORS)


@dataclass(frozen=True, eq=False)
class SdpSolution:
    """Optimum of an elliptope program.

    `bracket` is (primal, dual) including the objective offset. `dual`
    holds the multipliers y, `dual_matrix` the slack Z of the dual.
    """
    value: float
    gram: np.ndarray
    realization: GramRealization
    bracket: Tuple[float, float]
    iterations: int
    residuals: Tuple[float, float, float]
    dual: Optional[np.ndarray] = None
    dual_matrix: Optional[np.ndarray] = None
    active_constraints: Tuple[LinearInequality, ...] = ()
    slacks: Optional[Tuple[float, ...]] = None


def _solver_kwargs(gap_tol, feas_tol, max_iter):
    return {'gap_tol': gap_tol, 'feas_tol': feas_tol, 'max_iter': max_iter}


def _unit_diagonal(N: int) -> List[List[Entry]]:
    return [[(i, i, 1.0)] for i in range(N)]


def elliptope_max(objective: EdgeWeightedObjective, force: bool = False, gap_tol: Optional[float] = None,
                  feas_tol: Optional[float] = None, max_iter: Optional[int] = None) -> SdpSolution:
    shape = objective.shape
    N = shape.num_nodes
    config.guard('sdp nodes', N, config.MAX_SDP_NODES, force)
    solver = InteriorPointSolver([N], objective.entries(), _unit_diagonal(N), np.ones(N),
                                 **_solver_kwargs(gap_tol, feas_tol, max_iter))
    res = solver.solve()
    H = res.X
    log.info('elliptope max over %s: %.10g after %d iterations', shape.label, res.primal + objective.offset,
             res.iterations)
    return SdpSolution(res.primal + objective.offset, H, GramRealization.from_gram_matrix(shape, H),
                       (res.primal + objective.offset, res.dual + objective.offset), res.iterations,
                       res.residuals, res.y, res.Z)


def elliptope_rmet_max(objective: EdgeWeightedObjective, force: bool = False, gap_tol: Optional[float] = None,
                       feas_tol: Optional[float] = None, max_iter: Optional[int] = None) -> SdpSolution:
    """Maximum over the elliptope of the suspension cut by the rooted
    semimetric inequalities. Each inequality a.x <= 1 becomes
    a.x + s = 1 with its slack s on a 1x1 diagonal block."""
    objective = objective.suspended()
    shape = objective.shape
    N = shape.num_nodes
    config.guard('sdp nodes', N, config.MAX_SDP_NODES, force)
    hrep = rmet_hrep(shape)
    pos = [(node_position(shape, u), node_position(shape, v)) for u, v in shape.edges]
    constraints = _unit_diagonal(N)
    rhs = [1.0] * N
    for k, ineq in enumerate(hrep.inequalities):
        entries = [(pos[e][0], pos[e][1], float(c)) for e, c in enumerate(ineq.coefficients) if c]
        entries.append((N + k, N + k, 1.0))
        constraints.append(entries)
        rhs.append(float(ineq.rhs))
    solver = InteriorPointSolver([N] + [1] * len(hrep), objective.entries(), constraints, rhs,
                                 **_solver_kwargs(gap_tol, feas_tol, max_iter))
    res = solver.solve()
    H = res.X[:N, :N]
    slacks = tuple(float(s) for s in np.diag(res.X)[N:])
    active = tuple(ineq for ineq, s in zip(hrep.inequalities, slacks) if s < config.ACTIVE_SLACK_TOL)
    value = res.primal + objective.offset
    log.info('elliptope/rooted semimetric max over %s: %.10g, %d active inequalities', shape.label, value,
             len(active))
    return SdpSolution(value, H, GramRealization.from_gram_matrix(shape, H),
                       (value, res.dual + objective.offset), res.iterations, res.residuals,
                       res.y, res.Z, active, slacks)


# ---------------------------------------------------------------------------
# membership
# ---------------------------------------------------------------------------
@dataclass(frozen=True, eq=False)
class ElliptopeMembership:
    """Verdict of the elliptope membership program.

    `lower` is the primal value of t, `margin` the dual upper bound on it.
    Members carry the completion `witness` and its realization;
    non-members carry `separator`, weights s with s.x <= 1 on the whole
    elliptope and s.x > 1 at the query point.
    """
    member: bool
    margin: float
    lower: float
    boundary: bool
    witness: np.ndarray
    realization: Optional[GramRealization]
    separator: Optional[Tuple[float, ...]]
    iterations: int


EdgeVector = Union[SuspensionVector, CorrelationVector]


def _edge_values(x: EdgeVector) -> Tuple[Shape, np.ndarray]:
    if not isinstance(x, (SuspensionVector, CorrelationVector)):
        raise ValidationError('membership needs a suspension or correlation vector, got {!r}'.format(
            type(x).__name__))
    values = np.asarray([float(v) for v in x.coords])
    if np.any(np.abs(values) > 1.0 + 1e-12):
        k = int(np.argmax(np.abs(values)))
        raise ValidationError('edge value {} = {:.12g} lies outside [-1, 1]'.format(k, values[k]))
    return x.shape, np.clip(values, -1.0, 1.0)


def elliptope_membership(x: EdgeVector, force: bool = False, gap_tol: Optional[float] = None,
                         feas_tol: Optional[float] = None, max_iter: Optional[int] = None) -> ElliptopeMembership:
    """Decide whether the edge values extend to a unit-diagonal psd matrix.

    Solves max -W_11 s.t. W_ii = W_11, W_e = x_e, W psd; then H = W + t I
    with t = 1 - W_11 is the completion and t its smallest eigenvalue.
    """
    shape, values = _edge_values(x)
    N = shape.num_nodes
    config.guard('sdp nodes', N, config.MAX_SDP_NODES, force)
    constraints = [[(i, i, 1.0), (0, 0, -1.0)] for i in range(1, N)]
    rhs = [0.0] * (N - 1)
    for (u, v), val in zip(shape.edges, values):
        constraints.append([(node_position(shape, u), node_position(shape, v), 1.0)])
        rhs.append(val)
    solver = InteriorPointSolver([N], [(0, 0, -1.0)], constraints, rhs,
                                 **_solver_kwargs(gap_tol, feas_tol, max_iter))
    res = solver.solve()
    lower = 1.0 + res.primal
    margin = 1.0 + res.dual
    member = margin >= config.MEMBERSHIP_MARGIN
    boundary = config.MEMBERSHIP_MARGIN < margin < 0
    W = res.X
    H = W + (1.0 - W[0, 0]) * np.eye(N)
    realization = GramRealization.from_gram_matrix(shape, H) if member else None
    separator = None
    if not member:
        separator = tuple(float(-v) for v in res.y[N - 1:])
    log.debug('membership on %s: t in [%.3g, %.3g], member %s', shape.label, lower, margin, member)
    return ElliptopeMembership(member, margin, lower, boundary, H, realization, separator, res.iterations)


@dataclass(frozen=True)
class CutConditionResult:
    """`within_tolerance` marks points accepted only after shrinking y by a
    relative FLOAT_TOL toward the origin."""
    passes: bool
    y: CorrelationVector
    rational_y: Tuple[Fraction, ...]
    certificate: MembershipCertificate
    within_tolerance: bool = False


def cut_condition(x: CorrelationVector, force: bool = False,
                  denominator: Optional[int] = None) -> CutConditionResult:
    """Test y = (2/pi) arcsin(x) for membership in Cut(K_m,n)."""
    if not isinstance(x, CorrelationVector):
        raise ValidationError('the cut condition takes a correlation vector, got {!r}'.format(type(x).__name__))
    _, values = _edge_values(x)
    den = config.CUT_CONDITION_DENOMINATOR if denominator is None else denominator
    y = 2.0 / np.pi * np.arcsin(values)
    y_rat = tuple(rationalize(float(v), den) for v in y)
    vrep = cut_vectors(x.shape, force=force)
    cert = hull_membership(y_rat, vrep, force=force)
    within = False
    if not cert.inside:
        shrink = 1 / (1 + Fraction(config.FLOAT_TOL).limit_denominator(10 ** 12))
        retry = hull_membership(tuple(v * shrink for v in y_rat), vrep, force=force)
        if retry.inside:
            cert, within = retry, True
    return CutConditionResult(cert.inside, CorrelationVector(x.shape, tuple(float(v) for v in y)), y_rat, cert,
                              within)


# ---------------------------------------------------------------------------
# gap search
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class GapSearchResult:
    trials: int
    projected_members: int
    hits: Tuple[SuspensionVector, ...]


def sample_rmet(shape: BipartiteShape, rng: np.random.Generator) -> SuspensionVector:
    """Random point of RMet of the suspension: uniform roots in [-1, 1],
    each edge uniform in [|a+b| - 1, 1 - |a-b|]."""
    a = rng.uniform(-1.0, 1.0, size=shape.m)
    b = rng.uniform(-1.0, 1.0, size=shape.n)
    edges = []
    for i in range(shape.m):
        for j in range(shape.n):
            lo = abs(a[i] + b[j]) - 1.0
            hi = 1.0 - abs(a[i] - b[j])
            edges.append(rng.uniform(lo, hi))
    return SuspensionVector(shape.suspension(), tuple(float(v) for v in np.concatenate([a, b, edges])))


def rmet_gap_search(shape: BipartiteShape, trials: int, seed: int = 0, force: bool = False,
                    max_iter: Optional[int] = None) -> GapSearchResult:
    """Look for x in RMet with pi(x) in E(K_m,n) but x outside E(suspension)."""
    if not isinstance(shape, BipartiteShape):
        raise ValidationError('gap search runs on K_m,n, got {}'.format(shape.label))
    if trials < 0:
        raise ValidationError('trials must be nonnegative')
    rng = np.random.default_rng(seed)
    projected = 0
    hits = []
    for trial in range(trials):
        x = sample_rmet(shape, rng)
        proj = CorrelationVector(shape, x.coords[shape.m + shape.n:])
        if not elliptope_membership(proj, force=force, max_iter=max_iter).member:
            continue
        projected += 1
        full = elliptope_membership(x, force=force, max_iter=max_iter)
        if not full.member:
            log.info('trial %d: gap point found with margin %.3g', trial, full.margin)
            hits.append(x)
    return GapSearchResult(trials, projected, tuple(hits))
