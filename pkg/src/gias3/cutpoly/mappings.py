"""
FILE: mappings.py
LAST MODIFIED: 17-10-2026
DESCRIPTION: vector types of a two-party correlation experiment and the
affine maps between them

    iota            CorVector p   -> BehaviorVector q
    iota_inv        BehaviorVector -> CorVector (checks no-signaling)
    covariance      CorVector      -> SuspensionVector x  (expectations)
    covariance_inv  SuspensionVector -> CorVector
    project_correlations   drops the root coordinates of x
    center_marginals       sets every single-party marginal to 1/2
    lift_to_bipartite_gram Gram vectors of the suspension -> vectors whose
                           cross inner products are the behavior q

Outcomes are +1/-1. p_Ai is the probability that A_i gives -1, so the
deterministic assignment c maps to p_Ai = 1 exactly when c_Ai = -1.

Coordinates are exact (ints and Fractions) or floats. Maps keep exact
input exact.

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

from gias3.cutpoly import config
from gias3.cutpoly.errors import NumericalDegeneracyError, SignalingError, ValidationError
from gias3.cutpoly.exact import Number, is_exact
from gias3.cutpoly.graphs import BipartiteShape, Node, SuspensionShape, node_position

log = logging.getLogger(__name__)

OUTCOMES = (1, -1)


def _as_tuple(name: str, values: Sequence, expected: int) -> Tuple:
    values = tuple(values)
    if len(values) != expected:
        raise ValidationError('{} needs {} coordinates, got {}'.format(name, expected, len(values)))
    return values


def _consts(exact: bool) -> Tuple[Number, Number]:
    if exact:
        return Fraction(1, 2), Fraction(1, 4)
    return 0.5, 0.25


def _outcome_slot(a: int) -> int:
    if a not in OUTCOMES:
        raise ValidationError('outcomes are +1 or -1, got {}'.format(a))
    return 0 if a == 1 else 1


@dataclass(frozen=True)
class BehaviorVector:
    """Probability table q_{ab|ij}.

    Coordinates follow the edge order of K_2m,2n, where Alice node
    2(i-1)+s is (outcome a, setting i) with s = 0 for a = +1 and 1 for
    a = -1, and likewise for Bob. Edge A_(a,i)B_(b,j) is q_{ab|ij}.
    """
    shape: BipartiteShape
    q: Tuple[Number, ...]

    kind = 'behavior'

    def __post_init__(self):
        object.__setattr__(self, 'q', _as_tuple('behavior', self.q, 4 * self.shape.m * self.shape.n))

    @property
    def coords(self) -> Tuple[Number, ...]:
        return self.q

    @staticmethod
    def index(shape: BipartiteShape, a: int, b: int, i: int, j: int) -> int:
        alpha = 2 * (i - 1) + _outcome_slot(a)
        beta = 2 * (j - 1) + _outcome_slot(b)
        return alpha * 2 * shape.n + beta

    def prob(self, a: int, b: int, i: int, j: int) -> Number:
        return self.q[self.index(self.shape, a, b, i, j)]

    def alice_marginal(self, a: int, i: int, j: int) -> Number:
        return self.prob(a, 1, i, j) + self.prob(a, -1, i, j)

    def bob_marginal(self, b: int, i: int, j: int) -> Number:
        return self.prob(1, b, i, j) + self.prob(-1, b, i, j)

    def violations(self, tol: Optional[float] = None) -> List[str]:
        """Failed behavior conditions: nonnegativity, normalization, no-signaling."""
        exact = is_exact(self.q)
        if tol is None:
            tol = 0 if exact else config.FLOAT_TOL
        m, n = self.shape.m, self.shape.n
        problems = []
        for k, v in enumerate(self.q):
            if v < -tol:
                problems.append('q[{}] = {} is negative'.format(k, v))
        for i in range(1, m + 1):
            for j in range(1, n + 1):
                total = sum(self.prob(a, b, i, j) for a in OUTCOMES for b in OUTCOMES)
                if abs(total - 1) > tol:
                    problems.append('setting ({}, {}) sums to {}'.format(i, j, total))
        for i in range(1, m + 1):
            for j in range(2, n + 1):
                if abs(self.alice_marginal(-1, i, j) - self.alice_marginal(-1, i, 1)) > tol:
                    problems.append('Alice marginal of A{} depends on Bob setting ({}, {})'.format(i, 1, j))
        for j in range(1, n + 1):
            for i in range(2, m + 1):
                if abs(self.bob_marginal(-1, i, j) - self.bob_marginal(-1, 1, j)) > tol:
                    problems.append('Bob marginal of B{} depends on Alice setting ({}, {})'.format(j, 1, i))
        return problems

    def is_behavior(self, tol: Optional[float] = None) -> bool:
        return not self.violations(tol)


@dataclass(frozen=True)
class CorVector:
    """p over nodes then edges of K_m,n: p_A1..p_Am, p_B1..p_Bn, p_A1B1, ..."""
    shape: BipartiteShape
    p: Tuple[Number, ...]

    kind = 'cor'

    def __post_init__(self):
        s = self.shape
        object.__setattr__(self, 'p', _as_tuple('cor', self.p, s.m * s.n + s.m + s.n))

    @classmethod
    def from_parts(cls, shape: BipartiteShape, p_alice: Sequence[Number], p_bob: Sequence[Number],
                   p_edge: Sequence[Number]) -> 'CorVector':
        return cls(shape, tuple(p_alice) + tuple(p_bob) + tuple(p_edge))

    @property
    def coords(self) -> Tuple[Number, ...]:
        return self.p

    def p_alice(self, i: int) -> Number:
        return self.p[i - 1]

    def p_bob(self, j: int) -> Number:
        return self.p[self.shape.m + j - 1]

    def p_edge(self, i: int, j: int) -> Number:
        s = self.shape
        return self.p[s.m + s.n + (i - 1) * s.n + (j - 1)]

    @property
    def p_node(self) -> Tuple[Number, ...]:
        return self.p[:self.shape.m + self.shape.n]

    @property
    def p_edges(self) -> Tuple[Number, ...]:
        return self.p[self.shape.m + self.shape.n:]


@dataclass(frozen=True)
class SuspensionVector:
    """x over the edges of the suspension: <A_i>, <B_j>, then <A_iB_j>."""
    shape: SuspensionShape
    x: Tuple[Number, ...]

    kind = 'suspension'

    def __post_init__(self):
        object.__setattr__(self, 'x', _as_tuple('suspension', self.x, self.shape.num_edges))

    @property
    def coords(self) -> Tuple[Number, ...]:
        return self.x

    def root_alice(self, i: int) -> Number:
        return self.x[i - 1]

    def root_bob(self, j: int) -> Number:
        return self.x[self.shape.m + j - 1]

    def edge(self, i: int, j: int) -> Number:
        s = self.shape
        return self.x[s.m + s.n + (i - 1) * s.n + (j - 1)]


@dataclass(frozen=True)
class CorrelationVector:
    """x' = (<A_iB_j>) in row-major edge order of K_m,n."""
    shape: BipartiteShape
    x: Tuple[Number, ...]

    kind = 'correlation'

    def __post_init__(self):
        object.__setattr__(self, 'x', _as_tuple('correlation', self.x, self.shape.num_edges))

    @property
    def coords(self) -> Tuple[Number, ...]:
        return self.x

    def edge(self, i: int, j: int) -> Number:
        return self.x[(i - 1) * self.shape.n + (j - 1)]

    def matrix(self) -> List[List[Number]]:
        n = self.shape.n
        return [list(self.x[r * n:(r + 1) * n]) for r in range(self.shape.m)]


GramShape = Union[BipartiteShape, SuspensionShape]


@dataclass(frozen=True, eq=False)
class GramRealization:
    """One unit vector per node of the shape, rows in the shape's node order.

    Vectors given in fewer dimensions than there are nodes are padded with
    zero coordinates, so the ambient dimension is the node count.
    """
    shape: GramShape
    vectors: np.ndarray

    def __post_init__(self):
        vecs = np.atleast_2d(np.asarray(self.vectors, dtype=float))
        nnodes = self.shape.num_nodes
        if vecs.shape[0] != nnodes:
            raise ValidationError('{} needs {} vectors, got {}'.format(self.shape.label, nnodes, vecs.shape[0]))
        if vecs.shape[1] > nnodes:
            raise ValidationError('vectors live in dimension {} > node count {}'.format(vecs.shape[1], nnodes))
        if vecs.shape[1] < nnodes:
            vecs = np.hstack([vecs, np.zeros((nnodes, nnodes - vecs.shape[1]))])
        norms = np.linalg.norm(vecs, axis=1)
        bad = np.flatnonzero(np.abs(norms - 1.0) > config.GRAM_NORM_TOL)
        if bad.size:
            raise ValidationError('vector of node {} has norm {:.12g}, not 1'.format(
                self.shape.nodes[bad[0]], norms[bad[0]]))
        vecs.setflags(write=False)
        object.__setattr__(self, 'vectors', vecs)

    @classmethod
    def from_gram_matrix(cls, shape: GramShape, H: np.ndarray) -> 'GramRealization':
        """Factor a PSD unit-diagonal matrix; eigenvalues below GRAM_CLAMP_TOL count as 0."""
        H = 0.5 * (np.asarray(H, dtype=float) + np.asarray(H, dtype=float).T)
        evals, evecs = np.linalg.eigh(H)
        if evals.min() < -config.GRAM_CLAMP_TOL:
            log.debug('clamping eigenvalue %g to 0', evals.min())
        evals = np.where(evals < config.GRAM_CLAMP_TOL, 0.0, evals)
        vecs = evecs * np.sqrt(evals)
        norms = np.linalg.norm(vecs, axis=1)
        if np.any(norms == 0):
            raise NumericalDegeneracyError('Gram matrix has a zero row; cannot extract unit vectors')
        return cls(shape, vecs / norms[:, None])

    @property
    def dim(self) -> int:
        return self.vectors.shape[1]

    @property
    def root(self) -> Optional[np.ndarray]:
        if self.shape.suspended:
            return self.vectors[0]
        return None

    def vector(self, node: Union[str, Node]) -> np.ndarray:
        return self.vectors[node_position(self.shape, node)]

    def gram(self) -> np.ndarray:
        return self.vectors.dot(self.vectors.T)

    def edge_values(self) -> Tuple[float, ...]:
        pos = [(node_position(self.shape, u), node_position(self.shape, v)) for u, v in self.shape.edges]
        G = self.gram()
        return tuple(float(G[a, b]) for a, b in pos)

    def to_vector(self) -> Union[SuspensionVector, CorrelationVector]:
        if self.shape.suspended:
            return SuspensionVector(self.shape, self.edge_values())
        return CorrelationVector(self.shape, self.edge_values())


def iota(p: CorVector) -> BehaviorVector:
    s = p.shape
    q: List[Number] = [0] * (4 * s.m * s.n)
    for i in range(1, s.m + 1):
        pa = p.p_alice(i)
        for j in range(1, s.n + 1):
            pb = p.p_bob(j)
            pab = p.p_edge(i, j)
            q[BehaviorVector.index(s, -1, -1, i, j)] = pab
            q[BehaviorVector.index(s, -1, 1, i, j)] = pa - pab
            q[BehaviorVector.index(s, 1, -1, i, j)] = pb - pab
            q[BehaviorVector.index(s, 1, 1, i, j)] = 1 - pa - pb + pab
    return BehaviorVector(s, tuple(q))


def iota_inv(q: BehaviorVector, tol: Optional[float] = None) -> CorVector:
    """Recover p from a behavior.

    Exact inputs are checked by equality, float inputs within tol
    (FLOAT_TOL by default). Raises SignalingError naming the settings
    where a marginal depends on the partner's choice.
    """
    s = q.shape
    exact = is_exact(q.q)
    if tol is None:
        tol = 0 if exact else config.FLOAT_TOL

    def differ(a, b):
        return a != b if exact else abs(a - b) > tol

    for i in range(1, s.m + 1):
        for j in range(1, s.n + 1):
            total = sum(q.prob(a, b, i, j) for a in OUTCOMES for b in OUTCOMES)
            if differ(total, 1):
                raise ValidationError('not in the image of iota: setting ({}, {}) sums to {}'.format(i, j, total))

    p_alice = []
    for i in range(1, s.m + 1):
        ref = q.alice_marginal(-1, i, 1)
        for j in range(2, s.n + 1):
            if differ(q.alice_marginal(-1, i, j), ref):
                raise SignalingError(
                    'not in the image of iota: marginal of A{} differs between B settings {} and {}'.format(i, 1, j),
                    'alice', (i, 1, j))
        p_alice.append(ref)
    p_bob = []
    for j in range(1, s.n + 1):
        ref = q.bob_marginal(-1, 1, j)
        for i in range(2, s.m + 1):
            if differ(q.bob_marginal(-1, i, j), ref):
                raise SignalingError(
                    'not in the image of iota: marginal of B{} differs between A settings {} and {}'.format(j, 1, i),
                    'bob', (1, i, j))
        p_bob.append(ref)
    p_edge = [q.prob(-1, -1, i, j) for i in range(1, s.m + 1) for j in range(1, s.n + 1)]
    return CorVector.from_parts(s, p_alice, p_bob, p_edge)


def covariance(p: CorVector) -> SuspensionVector:
    s = p.shape
    x_alice = [1 - 2 * p.p_alice(i) for i in range(1, s.m + 1)]
    x_bob = [1 - 2 * p.p_bob(j) for j in range(1, s.n + 1)]
    x_edge = [1 - 2 * p.p_alice(i) - 2 * p.p_bob(j) + 4 * p.p_edge(i, j)
              for i in range(1, s.m + 1) for j in range(1, s.n + 1)]
    return SuspensionVector(s.suspension(), tuple(x_alice + x_bob + x_edge))


def covariance_inv(x: SuspensionVector) -> CorVector:
    s = x.shape
    half, quarter = _consts(is_exact(x.x))
    p_alice = [half * (1 - x.root_alice(i)) for i in range(1, s.m + 1)]
    p_bob = [half * (1 - x.root_bob(j)) for j in range(1, s.n + 1)]
    p_edge = [quarter * (1 - x.root_alice(i) - x.root_bob(j) + x.edge(i, j))
              for i in range(1, s.m + 1) for j in range(1, s.n + 1)]
    return CorVector.from_parts(s.base, p_alice, p_bob, p_edge)


def project_correlations(x: SuspensionVector) -> CorrelationVector:
    return CorrelationVector(x.shape.base, x.x[x.shape.num_root_edges:])


def suspend_correlations(x: CorrelationVector) -> SuspensionVector:
    """Inverse of the projection on the slice with zero root coordinates."""
    zeros = (0,) * (x.shape.m + x.shape.n)
    return SuspensionVector(x.shape.suspension(), zeros + tuple(x.x))


def center_marginals(p: CorVector) -> CorVector:
    s = p.shape
    half, _ = _consts(is_exact(p.p))
    p_edge = [p.p_edge(i, j) - half * p.p_alice(i) - half * p.p_bob(j) + half
              for i in range(1, s.m + 1) for j in range(1, s.n + 1)]
    return CorVector.from_parts(s, [half] * s.m, [half] * s.n, p_edge)


def deterministic_cor(shape: BipartiteShape, signs: Sequence[int]) -> CorVector:
    """COR vertex of a deterministic assignment c in {+1,-1}^(m+n)."""
    signs = _as_tuple('assignment', signs, shape.m + shape.n)
    bits = [1 if c == -1 else 0 for c in signs]
    p_edge = [bits[i] * bits[shape.m + j] for i in range(shape.m) for j in range(shape.n)]
    return CorVector(shape, tuple(bits) + tuple(p_edge))


def lift_to_bipartite_gram(g: GramRealization) -> GramRealization:
    """Unit vectors on K_2m,2n whose cross inner products are q_{ab|ij}.

    With w the root vector, u'_(a,i) = (w + a u_i)/2 and
    v'_(b,j) = (w + b v_j)/2. Each is padded to unit norm along a private
    coordinate and the result is re-expressed in 2m+2n dimensions.
    """
    if not g.shape.suspended:
        raise ValidationError('lifting needs a realization of a suspension, got {}'.format(g.shape.label))
    m, n = g.shape.m, g.shape.n
    w = g.vectors[0]
    us = g.vectors[1:1 + m]
    vs = g.vectors[1 + m:]
    primed = []
    for u in us:
        for a in OUTCOMES:
            primed.append(0.5 * (w + a * u))
    for v in vs:
        for b in OUTCOMES:
            primed.append(0.5 * (w + b * v))
    P = np.array(primed)
    k = P.shape[0]
    sq = np.einsum('ij,ij->i', P, P)
    norms = np.sqrt(sq)
    over = np.flatnonzero(norms > 1.0 + config.GRAM_NORM_TOL)
    if over.size:
        raise NumericalDegeneracyError(
            'lifted vector {} has norm {:.12g} > 1; the input realization is invalid'.format(
                over[0], norms[over[0]]))
    padded = np.hstack([P, np.diag(np.sqrt(np.clip(1.0 - sq, 0.0, None)))])
    # re-express in k dimensions: padded.T = Q R, rows of R.T keep all inner products
    R = np.linalg.qr(padded.T, mode='r')
    vecs = R[:k].T
    log.debug('lifted %d suspension vectors to %d behavior vectors', g.shape.num_nodes, k)
    return GramRealization(BipartiteShape(2 * m, 2 * n), vecs)


def behavior_from_gram(lifted: GramRealization) -> BehaviorVector:
    """Read q off a lifted realization of K_2m,2n."""
    s = lifted.shape
    if s.suspended or s.m % 2 or s.n % 2:
        raise ValidationError('expected a lifted realization of K_2m,2n, got {}'.format(s.label))
    return BehaviorVector(BipartiteShape(s.m // 2, s.n // 2), lifted.edge_values())
