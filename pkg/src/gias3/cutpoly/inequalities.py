"""
FILE: inequalities.py
LAST MODIFIED: 17-10-2026
DESCRIPTION: linear inequalities over the coordinate spaces of two-party
experiments: construction, families, switching/permutation canonical
forms, classification, zero-lifting and triangular elimination

Spaces:
    cor          p_A1..p_Am, p_B1..p_Bn, p_A1B1, ... of K_m,n
    suspension   x_XA1.., x_XB1.., x_A1B1, ... of the suspension of K_m,n
    correlation  x_A1B1, ... of K_m,n
    complete     all node pairs of a 2-coloured K_{s+t}
    raw          plain coordinates without a graph

Every inequality is stored as a.x <= a0 scaled by a positive factor to
coprime integers.

===============================================================================
This file is part of GIAS3.

This Source Code Form is subject to the terms of the Mozilla Public
License, v. 2.0. If a copy of the MPL was not distributed with this
file, You can obtain one at http://mozilla.org/MPL/2.0/.
===============================================================================
"""
import logging
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations, product
from math import factorial
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from gias3.cutpoly import config
from gias3.cutpoly.errors import ValidationError
from gias3.cutpoly.exact import Number, dot, normalize_inequality, rational_str, to_fraction
from gias3.cutpoly.graphs import (BipartiteShape, CompleteShape, Node, Shape, SuspensionShape,
                                  alice, bob, edge_index, parse_node)

log = logging.getLogger(__name__)

COR = 'cor'
SUSPENSION = 'suspension'
CORRELATION = 'correlation'
COMPLETE = 'complete'
RAW = 'raw'
SPACES = (COR, SUSPENSION, CORRELATION, COMPLETE, RAW)

_SPACE_SHAPES = {
    COR: BipartiteShape,
    SUSPENSION: SuspensionShape,
    CORRELATION: BipartiteShape,
    COMPLETE: CompleteShape,
}


def space_dim(space: str, shape: Optional[Shape]) -> Optional[int]:
    if space == COR:
        return shape.m * shape.n + shape.m + shape.n
    if space in (SUSPENSION, CORRELATION, COMPLETE):
        return shape.num_edges
    return None


def coordinate_names(space: str, shape: Optional[Shape], dim: int) -> List[str]:
    if space == RAW:
        return ['x{}'.format(k + 1) for k in range(dim)]
    if space == COR:
        return ['p_{}'.format(v) for v in shape.nodes] + ['p_{}{}'.format(u, v) for u, v in shape.edges]
    return ['x_{}{}'.format(u, v) for u, v in shape.edges]


@dataclass(frozen=True)
class LinearInequality:
    """a.x <= a0 over a declared coordinate space."""
    space: str
    shape: Optional[Shape]
    coefficients: Tuple[int, ...]
    rhs: int
    row_labels: Optional[Tuple[str, ...]] = field(default=None, compare=False)
    col_labels: Optional[Tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        if self.space not in SPACES:
            raise ValidationError('unknown space {!r}; expected one of {}'.format(self.space, ', '.join(SPACES)))
        if self.space == RAW:
            if self.shape is not None:
                raise ValidationError('raw inequalities carry no shape')
        elif not isinstance(self.shape, _SPACE_SHAPES[self.space]):
            raise ValidationError('space {} needs a {} shape, got {!r}'.format(
                self.space, _SPACE_SHAPES[self.space].__name__, self.shape))
        coeffs = tuple(self.coefficients)
        expected = space_dim(self.space, self.shape)
        if expected is not None and len(coeffs) != expected:
            raise ValidationError('{} inequality on {} needs {} coefficients, got {}'.format(
                self.space, self.shape.label, expected, len(coeffs)))
        if not coeffs:
            raise ValidationError('an inequality needs at least one coefficient')
        coeffs, rhs = normalize_inequality([to_fraction(c) for c in coeffs], to_fraction(self.rhs))
        object.__setattr__(self, 'coefficients', coeffs)
        object.__setattr__(self, 'rhs', rhs)

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence[Number]], rhs: Number,
                    row_labels: Optional[Sequence[str]] = None,
                    col_labels: Optional[Sequence[str]] = None) -> 'LinearInequality':
        """Correlation inequality sum_ij a_ij x_AiBj <= rhs from its matrix."""
        rows = [list(r) for r in rows]
        m = len(rows)
        n = len(rows[0]) if rows else 0
        if any(len(r) != n for r in rows):
            raise ValidationError('coefficient matrix rows have different lengths')
        return cls(CORRELATION, BipartiteShape(m, n), tuple(a for r in rows for a in r), rhs,
                   tuple(row_labels) if row_labels else None, tuple(col_labels) if col_labels else None)

    @classmethod
    def raw(cls, coefficients: Sequence[Number], rhs: Number) -> 'LinearInequality':
        return cls(RAW, None, tuple(coefficients), rhs)

    @property
    def dim(self) -> int:
        return len(self.coefficients)

    @property
    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def value(self, point: Sequence[Number]) -> Number:
        if len(point) != self.dim:
            raise ValidationError('point has dimension {}, inequality {}'.format(len(point), self.dim))
        return dot(self.coefficients, point)

    def is_satisfied_by(self, point: Sequence[Number]) -> bool:
        return self.value(point) <= self.rhs

    def matrix(self) -> List[List[int]]:
        """Bipartite coefficient matrix (edge part for suspension and cor)."""
        if self.space not in (CORRELATION, SUSPENSION, COR):
            raise ValidationError('{} inequalities have no bipartite matrix'.format(self.space))
        m, n = self.shape.m, self.shape.n
        edges = self.coefficients[len(self.coefficients) - m * n:]
        return [list(edges[i * n:(i + 1) * n]) for i in range(m)]

    def root_coefficients(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        """Alice and Bob node coefficients of suspension or cor inequalities."""
        if self.space not in (SUSPENSION, COR):
            raise ValidationError('{} inequalities have no node coefficients'.format(self.space))
        m, n = self.shape.m, self.shape.n
        return self.coefficients[:m], self.coefficients[m:m + n]

    def complete_matrix(self) -> List[List[int]]:
        """Symmetric node-by-node coefficient matrix of a complete-space inequality."""
        if self.space != COMPLETE:
            raise ValidationError('{} inequalities have no complete-graph matrix'.format(self.space))
        n = self.shape.num_nodes
        M = [[0] * n for _ in range(n)]
        k = 0
        for a in range(n):
            for b in range(a + 1, n):
                M[a][b] = M[b][a] = self.coefficients[k]
                k += 1
        return M

    def labels(self) -> Tuple[Tuple[str, ...], Tuple[str, ...]]:
        m, n = self.shape.m, self.shape.n
        rows = self.row_labels or tuple('A{}'.format(i) for i in range(1, m + 1))
        cols = self.col_labels or tuple('B{}'.format(j) for j in range(1, n + 1))
        return rows, cols

    def expression(self) -> str:
        names = coordinate_names(self.space, self.shape, self.dim)
        terms = []
        for c, name in zip(self.coefficients, names):
            if c == 0:
                continue
            mag = '' if abs(c) == 1 else '{}*'.format(abs(c))
            sign = '-' if c < 0 else '+'
            terms.append('{} {}{}'.format(sign, mag, name))
        if not terms:
            return '0 <= {}'.format(self.rhs)
        text = ' '.join(terms)
        text = text[2:] if text.startswith('+ ') else '-' + text[2:]
        return '{} <= {}'.format(text, self.rhs)

    def pretty(self) -> str:
        """Bracket layout with row and column labels, e.g.

                B1  B2
            A1 [ 1   1 ]
            A2 [ 1  -1 ] <= 2
        """
        if self.space not in (CORRELATION, SUSPENSION):
            return self.expression()
        rows, cols = self.labels()
        table = [[rational_str(a) for a in r] for r in self.matrix()]
        row_head = list(rows)
        if self.space == SUSPENSION:
            # root row carries the Bob terms, root column the Alice terms
            alice_roots, bob_roots = self.root_coefficients()
            table = [['.'] + [rational_str(b) for b in bob_roots]] + \
                [[rational_str(a)] + row for a, row in zip(alice_roots, table)]
            row_head = ['X'] + row_head
            cols = ('X',) + tuple(cols)
        width = max([len(c) for c in cols] + [len(v) for row in table for v in row])
        head_w = max(len(r) for r in row_head)
        out = [' ' * (head_w + 2) + ' '.join(c.rjust(width) for c in cols)]
        for k, (head, row) in enumerate(zip(row_head, table)):
            line = '{} [ {} ]'.format(head.rjust(head_w), ' '.join(v.rjust(width) for v in row))
            if k == len(table) - 1:
                line += ' <= {}'.format(self.rhs)
            out.append(line)
        return '\n'.join(out)


def _same_frame(a: LinearInequality, b: LinearInequality) -> bool:
    return a.space == b.space and a.shape == b.shape and a.dim == b.dim


# ---------------------------------------------------------------------------
# conversions between spaces
# ---------------------------------------------------------------------------
def to_suspension(ineq: LinearInequality) -> LinearInequality:
    """Rewrite a p-coordinate (cor) inequality in expectation coordinates.

    Uses p_Ai = (1 - x_XAi)/2, p_Bj = (1 - x_XBj)/2 and
    p_AiBj = (1 - x_XAi - x_XBj + x_AiBj)/4.
    """
    if ineq.space == SUSPENSION:
        return ineq
    if ineq.space == CORRELATION:
        m, n = ineq.shape.m, ineq.shape.n
        return LinearInequality(SUSPENSION, ineq.shape.suspension(),
                                (0,) * (m + n) + ineq.coefficients, ineq.rhs, ineq.row_labels, ineq.col_labels)
    if ineq.space != COR:
        raise ValidationError('cannot express a {} inequality in suspension coordinates'.format(ineq.space))
    m, n = ineq.shape.m, ineq.shape.n
    half, quarter = Fraction(1, 2), Fraction(1, 4)
    a_alice, a_bob = ineq.root_coefficients()
    a_edge = ineq.matrix()
    x_alice = [-half * a for a in a_alice]
    x_bob = [-half * b for b in a_bob]
    const = half * (sum(a_alice) + sum(a_bob))
    x_edge = []
    for i in range(m):
        for j in range(n):
            c = a_edge[i][j]
            const += quarter * c
            x_alice[i] -= quarter * c
            x_bob[j] -= quarter * c
            x_edge.append(quarter * c)
    return LinearInequality(SUSPENSION, ineq.shape.suspension(), tuple(x_alice + x_bob + x_edge), ineq.rhs - const)


def to_cor(ineq: LinearInequality) -> LinearInequality:
    """Rewrite a suspension or correlation inequality in p-coordinates."""
    if ineq.space == COR:
        return ineq
    ineq = to_suspension(ineq)
    m, n = ineq.shape.m, ineq.shape.n
    g_alice, g_bob = ineq.root_coefficients()
    g_edge = ineq.matrix()
    p_alice = [-2 * g for g in g_alice]
    p_bob = [-2 * g for g in g_bob]
    p_edge = []
    for i in range(m):
        for j in range(n):
            g = g_edge[i][j]
            p_alice[i] -= 2 * g
            p_bob[j] -= 2 * g
            p_edge.append(4 * g)
    const = sum(ineq.coefficients)
    return LinearInequality(COR, ineq.shape.base, tuple(p_alice + p_bob + p_edge), ineq.rhs - const)


def to_correlation(ineq: LinearInequality) -> LinearInequality:
    """Drop the root part of a suspension inequality whose root coefficients vanish."""
    if ineq.space == CORRELATION:
        return ineq
    if ineq.space == COR:
        ineq = to_suspension(ineq)
    if ineq.space != SUSPENSION:
        raise ValidationError('cannot project a {} inequality to correlation coordinates'.format(ineq.space))
    alice_roots, bob_roots = ineq.root_coefficients()
    if any(alice_roots) or any(bob_roots):
        raise ValidationError('inequality uses single-party terms; it is not a correlation inequality')
    return LinearInequality.from_matrix(ineq.matrix(), ineq.rhs, ineq.row_labels, ineq.col_labels)


# ---------------------------------------------------------------------------
# families
# ---------------------------------------------------------------------------
def family_trivial(shape: BipartiteShape, i: int, j: int, sign: int = 1) -> LinearInequality:
    """sign * x_AiBj <= 1."""
    if sign not in (1, -1):
        raise ValidationError('sign must be +1 or -1')
    coeffs = [0] * shape.num_edges
    coeffs[edge_index(shape, alice(i), bob(j))] = sign
    return LinearInequality(CORRELATION, shape, tuple(coeffs), 1)


def family_cycle(shape: BipartiteShape, cycle: Sequence[Union[str, Node]],
                 odd_edges: Iterable[Tuple[Union[str, Node], Union[str, Node]]]) -> LinearInequality:
    """-sum_{e in F} x_e + sum_{e in C minus F} x_e <= |C| - 2.

    `cycle` lists the nodes in order, alternating between the parties;
    `odd_edges` is F, a subset of the cycle's edges of odd size.
    """
    nodes = [parse_node(v) for v in cycle]
    length = len(nodes)
    if length < 4 or length % 2:
        raise ValidationError('a cycle of K_m,n has even length >= 4, got {}'.format(length))
    if len(set(nodes)) != length:
        raise ValidationError('cycle repeats a node: {}'.format(' '.join(str(v) for v in nodes)))
    cycle_edges = []
    for k in range(length):
        u, v = nodes[k], nodes[(k + 1) % length]
        if u.side == v.side:
            raise ValidationError('{}{} is not an edge of {}; cycle does not alternate'.format(u, v, shape.label))
        cycle_edges.append(frozenset((u, v)))
    flipped = set()
    for u, v in odd_edges:
        e = frozenset((parse_node(u), parse_node(v)))
        if e not in cycle_edges:
            raise ValidationError('{}{} is not an edge of the cycle'.format(u, v))
        flipped.add(e)
    if len(flipped) % 2 == 0:
        raise ValidationError('the flipped edge set must have odd size, got {}'.format(len(flipped)))
    coeffs = [0] * shape.num_edges
    for e in cycle_edges:
        u, v = tuple(e)
        coeffs[edge_index(shape, u, v)] = -1 if e in flipped else 1
    return LinearInequality(CORRELATION, shape, tuple(coeffs), length - 2)


@dataclass(frozen=True)
class HypermetricWeights:
    """Integer node weights b_A1..b_As, b_B1..b_Bt summing to 1."""
    alice: Tuple[int, ...]
    bob: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'alice', tuple(self.alice))
        object.__setattr__(self, 'bob', tuple(self.bob))
        for b in self.alice + self.bob:
            if not isinstance(b, int) or isinstance(b, bool):
                raise ValidationError('hypermetric weights are integers, got {!r}'.format(b))
        total = sum(self.alice) + sum(self.bob)
        if total != 1:
            raise ValidationError('hypermetric weights must sum to 1, got {}'.format(total))


def _pair_label(prefix: str, a: int, b: int) -> str:
    if a < 10 and b < 10:
        return '{}{}{}'.format(prefix, a, b)
    return '{}{}_{}'.format(prefix, a, b)


def family_hypermetric(b: HypermetricWeights) -> LinearInequality:
    """Bipartite form of the hypermetric inequality with weights b.

    Each Alice pair i < i' gets an auxiliary Bob node B_ii' and each Bob
    pair j < j' an auxiliary Alice node A_jj'. In >= form the
    coefficients are b_Ai b_Bj on A_iB_j, b_Ai b_Ai' on A_iB_ii',
    -|b_Ai b_Ai'| on A_i'B_ii', b_Bj b_Bj' on A_jj'B_j and
    -|b_Bj b_Bj'| on A_jj'B_j'. The bound is sum b_Ai b_Bj plus twice
    every negative same-side product. The result is stored negated, in
    <= form.
    """
    s, t = len(b.alice), len(b.bob)
    alice_pairs = list(combinations(range(s), 2))
    bob_pairs = list(combinations(range(t), 2))
    rows, cols = s + len(bob_pairs), t + len(alice_pairs)
    if rows == 0 or cols == 0:
        log.debug('hypermetric weights %s give no cross edges', b)
        return LinearInequality(CORRELATION, BipartiteShape(1, 1), (0,), 0)
    M = [[0] * cols for _ in range(rows)]
    bound = 0
    for i in range(s):
        for j in range(t):
            M[i][j] += b.alice[i] * b.bob[j]
            bound += b.alice[i] * b.bob[j]
    for k, (i, ip) in enumerate(alice_pairs):
        prod = b.alice[i] * b.alice[ip]
        M[i][t + k] += prod
        M[ip][t + k] -= abs(prod)
        if prod < 0:
            bound += 2 * prod
    for k, (j, jp) in enumerate(bob_pairs):
        prod = b.bob[j] * b.bob[jp]
        M[s + k][j] += prod
        M[s + k][jp] -= abs(prod)
        if prod < 0:
            bound += 2 * prod
    row_labels = ['A{}'.format(i + 1) for i in range(s)] + [_pair_label('A', j + 1, jp + 1) for j, jp in bob_pairs]
    col_labels = ['B{}'.format(j + 1) for j in range(t)] + [_pair_label('B', i + 1, ip + 1) for i, ip in alice_pairs]
    return LinearInequality.from_matrix([[-a for a in r] for r in M], -bound, row_labels, col_labels)


# ---------------------------------------------------------------------------
# symmetry
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class SymmetryElement:
    """Permutation, party swap and switching acting on correlation inequalities.

    The image has a'_ij = row_signs[i] * col_signs[j] * a_{row_perm[i], col_perm[j]},
    taken after transposing when `transpose` is set. Indices are 0-based.
    """
    row_perm: Tuple[int, ...]
    col_perm: Tuple[int, ...]
    row_signs: Tuple[int, ...]
    col_signs: Tuple[int, ...]
    transpose: bool = False

    def __post_init__(self):
        for perm in (self.row_perm, self.col_perm):
            if sorted(perm) != list(range(len(perm))):
                raise ValidationError('{} is not a permutation'.format(perm))
        if len(self.row_signs) != len(self.row_perm) or len(self.col_signs) != len(self.col_perm):
            raise ValidationError('sign vectors must match the permutation sizes')
        if any(e not in (1, -1) for e in self.row_signs + self.col_signs):
            raise ValidationError('signs are +1 or -1')
        if self.transpose and len(self.row_perm) != len(self.col_perm):
            raise ValidationError('party swap needs m = n')

    @classmethod
    def identity(cls, shape: BipartiteShape) -> 'SymmetryElement':
        return cls(tuple(range(shape.m)), tuple(range(shape.n)), (1,) * shape.m, (1,) * shape.n)

    @classmethod
    def random(cls, shape: BipartiteShape, rng) -> 'SymmetryElement':
        """Uniform group element; `rng` is a numpy Generator."""
        m, n = shape.m, shape.n
        return cls(tuple(int(k) for k in rng.permutation(m)),
                   tuple(int(k) for k in rng.permutation(n)),
                   tuple(int(e) for e in rng.choice((1, -1), size=m)),
                   tuple(int(e) for e in rng.choice((1, -1), size=n)),
                   bool(m == n and rng.integers(2)))

    def apply(self, ineq: LinearInequality) -> LinearInequality:
        if ineq.space != CORRELATION:
            raise ValidationError('symmetry elements act on correlation inequalities, got {}'.format(ineq.space))
        if (ineq.shape.m, ineq.shape.n) != (len(self.row_perm), len(self.col_perm)):
            raise ValidationError('symmetry element does not fit {}'.format(ineq.shape.label))
        M = ineq.matrix()
        if self.transpose:
            M = [list(r) for r in zip(*M)]
        image = [[self.row_signs[i] * self.col_signs[j] * M[self.row_perm[i]][self.col_perm[j]]
                  for j in range(len(self.col_perm))]
                 for i in range(len(self.row_perm))]
        return LinearInequality.from_matrix(image, ineq.rhs)


def group_order(ineq: LinearInequality) -> int:
    if ineq.space == CORRELATION:
        m, n = ineq.shape.m, ineq.shape.n
        return factorial(m) * factorial(n) * 2 ** (m + n) * (2 if m == n else 1)
    if ineq.space == COMPLETE:
        N = ineq.shape.num_nodes
        return factorial(N) * 2 ** (N - 1)
    raise ValidationError('no symmetry group for {} inequalities'.format(ineq.space))


def _canonical_correlation_key(M: List[List[int]]) -> Tuple[Tuple[int, ...], ...]:
    # For fixed column permutation and column signs, the least matrix over row
    # permutations and row signs is the sorted list of per-row minima.
    m, n = len(M), len(M[0])
    variants = [M]
    if m == n:
        variants.append([list(r) for r in zip(*M)])
    best = None
    for A in variants:
        for tau in permutations(range(n)):
            P = [tuple(row[t] for t in tau) for row in A]
            for tail in product((1, -1), repeat=n - 1):
                eta = (1,) + tail
                rows = []
                for r in P:
                    signed = tuple(e * v for e, v in zip(eta, r))
                    negated = tuple(-v for v in signed)
                    rows.append(min(signed, negated))
                key = tuple(sorted(rows))
                if best is None or key < best:
                    best = key
    return best


def _canonical_complete_key(M: List[List[int]]) -> Tuple[int, ...]:
    N = len(M)
    pairs = [(a, b) for a in range(N) for b in range(a + 1, N)]
    best = None
    for perm in permutations(range(N)):
        for tail in product((1, -1), repeat=N - 1):
            eps = (1,) + tail
            key = tuple(eps[a] * eps[b] * M[perm[a]][perm[b]] for a, b in pairs)
            if best is None or key < best:
                best = key
    return best


def canonical_form(ineq: LinearInequality, prune: bool = False,
                   max_group: Optional[int] = None) -> LinearInequality:
    """Least representative of the inequality's symmetry orbit.

    Correlation inequalities are compared as row-major flattened matrices
    under row/column permutations, party swap (m = n) and switching;
    complete-graph inequalities under node permutations and switching.
    The nominal group order is guarded; prune=True lifts the guard.
    """
    limit = config.MAX_CANONICAL_GROUP if max_group is None else max_group
    config.guard('canonical group order', group_order(ineq), limit, force=prune, hint='prune=True (--prune)')
    if ineq.space == CORRELATION:
        key = _canonical_correlation_key(ineq.matrix())
        return LinearInequality.from_matrix([list(r) for r in key], ineq.rhs)
    key = _canonical_complete_key(ineq.complete_matrix())
    return LinearInequality(COMPLETE, ineq.shape, key, ineq.rhs)


def _orbit_generators(ineq: LinearInequality):
    if ineq.space == CORRELATION:
        m, n = ineq.shape.m, ineq.shape.n

        def swap_rows(M):
            return (M[1], M[0]) + M[2:]

        def cycle_rows(M):
            return M[1:] + M[:1]

        def swap_cols(M):
            return tuple((r[1], r[0]) + r[2:] for r in M)

        def cycle_cols(M):
            return tuple(r[1:] + r[:1] for r in M)

        def negate_row(M):
            return (tuple(-v for v in M[0]),) + M[1:]

        def negate_col(M):
            return tuple((-r[0],) + r[1:] for r in M)

        def transpose(M):
            return tuple(zip(*M))

        gens = [negate_row, negate_col]
        if m > 1:
            gens += [swap_rows, cycle_rows]
        if n > 1:
            gens += [swap_cols, cycle_cols]
        if m == n:
            gens.append(transpose)
        start = tuple(tuple(r) for r in ineq.matrix())
        return start, gens

    N = ineq.shape.num_nodes

    def relabel(M, perm):
        return tuple(tuple(M[perm[a]][perm[b]] for b in range(N)) for a in range(N))

    def swap(M):
        return relabel(M, [1, 0] + list(range(2, N)))

    def cycle(M):
        return relabel(M, list(range(1, N)) + [0])

    def switch(M):
        return tuple(tuple(-v if (a == 0) != (b == 0) else v for b, v in enumerate(row))
                     for a, row in enumerate(M))

    start = tuple(tuple(r) for r in ineq.complete_matrix())
    return start, [swap, cycle, switch]


def orbit_size(ineq: LinearInequality, limit: Optional[int] = None) -> Optional[int]:
    """Number of distinct images under the symmetry group; None past `limit`."""
    limit = config.MAX_ORBIT if limit is None else limit
    start, gens = _orbit_generators(ineq)
    seen = {start}
    queue = deque([start])
    while queue:
        M = queue.popleft()
        for g in gens:
            image = g(M)
            if image not in seen:
                seen.add(image)
                if len(seen) > limit:
                    log.debug('orbit exceeds %d elements', limit)
                    return None
                queue.append(image)
    return len(seen)


@dataclass(frozen=True)
class EquivalenceClass:
    representative: LinearInequality
    members: Tuple[int, ...]
    orbit_size: Optional[int]


def classify(ineqs: Sequence[LinearInequality], prune: bool = False,
             with_orbits: bool = True) -> List[EquivalenceClass]:
    """Bucket inequalities by canonical form, classes in order of first appearance."""
    ineqs = list(ineqs)
    if not ineqs:
        return []
    first = ineqs[0]
    for k, ineq in enumerate(ineqs[1:], start=1):
        if not _same_frame(first, ineq):
            raise ValidationError('mixed shapes: inequality {} is {} on {}, expected {} on {}'.format(
                k, ineq.space, getattr(ineq.shape, 'label', '-'), first.space, getattr(first.shape, 'label', '-')))
    buckets: Dict[Tuple, List[int]] = {}
    reps: Dict[Tuple, LinearInequality] = {}
    for k, ineq in enumerate(ineqs):
        canon = canonical_form(ineq, prune=prune)
        key = (canon.coefficients, canon.rhs)
        buckets.setdefault(key, []).append(k)
        reps.setdefault(key, canon)
    log.debug('classified %d inequalities into %d classes', len(ineqs), len(buckets))
    return [EquivalenceClass(reps[key], tuple(members),
                             orbit_size(reps[key]) if with_orbits else None)
            for key, members in buckets.items()]


# ---------------------------------------------------------------------------
# lifting and elimination
# ---------------------------------------------------------------------------
def zero_lift(ineq: LinearInequality, m: int, n: int) -> LinearInequality:
    """Extend a correlation inequality on K_m0,n0 to K_m,n with zero coefficients."""
    if ineq.space != CORRELATION:
        raise ValidationError('zero-lifting acts on correlation inequalities, got {}'.format(ineq.space))
    m0, n0 = ineq.shape.m, ineq.shape.n
    if m < m0 or n < n0:
        raise ValidationError('cannot lift {} to the smaller K{},{}'.format(ineq.shape.label, m, n))
    M = ineq.matrix()
    lifted = [[M[i][j] if i < m0 and j < n0 else 0 for j in range(n)] for i in range(m)]
    rows, cols = ineq.labels()
    row_labels = list(rows) + ['A{}'.format(i) for i in range(m0 + 1, m + 1)]
    col_labels = list(cols) + ['B{}'.format(j) for j in range(n0 + 1, n + 1)]
    return LinearInequality.from_matrix(lifted, ineq.rhs, row_labels, col_labels)


@dataclass(frozen=True)
class TrielimResult:
    """Outcome of triangular elimination.

    `eliminated` lists (u, v, c): each same-side edge and its coefficient
    in the input, in the order new nodes were appended.
    """
    inequality: LinearInequality
    already_bipartite: bool
    eliminated: Tuple[Tuple[str, str, int], ...] = ()
    source_shape: Optional[CompleteShape] = None

    @property
    def added_rhs(self) -> int:
        return sum(abs(c) for _, _, c in self.eliminated)

    def restore(self) -> LinearInequality:
        """Rebuild the input from the cross block and the eliminated coefficients."""
        if self.already_bipartite or self.source_shape is None:
            return self.inequality
        shape = self.source_shape
        s, t = shape.s, shape.t
        M = self.inequality.matrix()
        coeffs = [0] * shape.num_edges
        for i in range(1, s + 1):
            for j in range(1, t + 1):
                coeffs[edge_index(shape, alice(i), bob(j))] = M[i - 1][j - 1]
        for u, v, c in self.eliminated:
            coeffs[edge_index(shape, u, v)] = c
        return LinearInequality(COMPLETE, shape, tuple(coeffs), self.inequality.rhs - self.added_rhs)


def triangular_eliminate(ineq: LinearInequality) -> TrielimResult:
    """Replace same-side edge terms of a 2-coloured K_N inequality by new nodes.

    A coefficient c on x_AiAi' (i < i') appends a Bob node B_ii' and adds
    |c| times a triangle inequality that cancels the term:
        c < 0:  x_AiAi' - x_AiBii' + x_Ai'Bii' <= 1
        c > 0: -x_AiAi' - x_AiBii' - x_Ai'Bii' <= 1
    Bob pairs are handled symmetrically with new Alice nodes A_jj'. The
    right-hand side grows by the sum of |c|.
    """
    if ineq.space == CORRELATION:
        return TrielimResult(ineq, True)
    if ineq.space != COMPLETE:
        raise ValidationError('triangular elimination needs a complete-graph inequality, got {}'.format(ineq.space))
    shape = ineq.shape
    s, t = shape.s, shape.t

    def coef(u: Node, v: Node) -> int:
        return ineq.coefficients[edge_index(shape, u, v)]

    alice_pairs = [(i, ip) for i, ip in combinations(range(1, s + 1), 2) if coef(alice(i), alice(ip))]
    bob_pairs = [(j, jp) for j, jp in combinations(range(1, t + 1), 2) if coef(bob(j), bob(jp))]
    rows, cols = s + len(bob_pairs), t + len(alice_pairs)
    if rows == 0 or cols == 0:
        raise ValidationError('no bipartite coordinates remain after elimination of {}'.format(shape.label))
    if not alice_pairs and not bob_pairs:
        M = [[coef(alice(i), bob(j)) for j in range(1, t + 1)] for i in range(1, s + 1)]
        return TrielimResult(LinearInequality.from_matrix(M, ineq.rhs), True, (), shape)

    M = [[0] * cols for _ in range(rows)]
    for i in range(1, s + 1):
        for j in range(1, t + 1):
            M[i - 1][j - 1] = coef(alice(i), bob(j))
    rhs = ineq.rhs
    eliminated = []
    for k, (i, ip) in enumerate(alice_pairs):
        c = coef(alice(i), alice(ip))
        col = t + k
        M[i - 1][col] -= abs(c)
        M[ip - 1][col] += abs(c) if c < 0 else -abs(c)
        rhs += abs(c)
        eliminated.append(('A{}'.format(i), 'A{}'.format(ip), c))
    for k, (j, jp) in enumerate(bob_pairs):
        c = coef(bob(j), bob(jp))
        row = s + k
        M[row][j - 1] -= abs(c)
        M[row][jp - 1] += abs(c) if c < 0 else -abs(c)
        rhs += abs(c)
        eliminated.append(('B{}'.format(j), 'B{}'.format(jp), c))
    row_labels = ['A{}'.format(i) for i in range(1, s + 1)] + [_pair_label('A', j, jp) for j, jp in bob_pairs]
    col_labels = ['B{}'.format(j) for j in range(1, t + 1)] + [_pair_label('B', i, ip) for i, ip in alice_pairs]
    log.debug('eliminated %d same-side edges of %s', len(eliminated), shape.label)
    out = LinearInequality.from_matrix(M, rhs, row_labels, col_labels)
    return TrielimResult(out, False, tuple(eliminated), shape)
