"""
FILE: exact.py
LAST MODIFIED: 17-10-2026
DESCRIPTION: exact rational helpers: parsing and formatting, inequality
normalisation, and sympy-backed rank, null space and inversion over the
rationals

===============================================================================
This file is part of GIAS3.

This Source Code Form is subject to the terms of the Mozilla Public
License, v. 2.0. If a copy of the MPL was not distributed with this
file, You can obtain one at http://mozilla.org/MPL/2.0/.
===============================================================================
"""
import logging
from fractions import Fraction
from functools import reduce
from itertools import islice
from math import gcd
from numbers import Rational
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import sympy as sp

from gias3.cutpoly.errors import ValidationError

log = logging.getLogger(__name__)

Number = Union[int, Fraction, float]

# vectors reduced per sympy rref call in rank()
RANK_CHUNK = 64


def to_fraction(value) -> Fraction:
    """Exact conversion of ints, Fractions, floats and 'p/q' strings."""
    if isinstance(value, bool):
        raise ValidationError('booleans are not numbers here')
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, float, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise ValidationError('cannot parse rational {!r}'.format(value))
    try:
        return Fraction(float(value))
    except (TypeError, ValueError):
        raise ValidationError('cannot convert {!r} to a rational'.format(value))


def to_number(value) -> Number:
    """Parse a serialized coordinate, keeping floats as floats."""
    if isinstance(value, float):
        return value
    f = to_fraction(value)
    return int(f) if f.denominator == 1 else f


def format_rational(value: Number) -> Union[int, float, str]:
    """JSON-friendly form: ints stay ints, floats stay floats, others 'p/q'."""
    if isinstance(value, float):
        return value
    f = Fraction(value)
    if f.denominator == 1:
        return int(f)
    return '{}/{}'.format(f.numerator, f.denominator)


def rational_str(value: Number) -> str:
    f = Fraction(value)
    return str(f.numerator) if f.denominator == 1 else '{}/{}'.format(f.numerator, f.denominator)


def is_exact(values: Iterable) -> bool:
    return all(isinstance(v, (int, Fraction)) and not isinstance(v, bool) for v in values)


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def primitive(values: Sequence[Number]) -> Tuple[int, ...]:
    """Positive rescaling of a rational vector to coprime integers.

    The zero vector is returned as zeros.
    """
    fracs = [to_fraction(v) for v in values]
    den = reduce(_lcm, (f.denominator for f in fracs), 1)
    ints = [int(f * den) for f in fracs]
    g = reduce(gcd, (abs(i) for i in ints), 0)
    if g == 0:
        return tuple(ints)
    return tuple(i // g for i in ints)


def normalize_inequality(coefficients: Sequence[Number], rhs: Number) -> Tuple[Tuple[int, ...], int]:
    """a.x <= a0 scaled by a positive factor to coprime integers."""
    scaled = primitive(list(coefficients) + [rhs])
    return scaled[:-1], scaled[-1]


def normalize_equation(coefficients: Sequence[Number], rhs: Number) -> Tuple[Tuple[int, ...], int]:
    """a.x = a0 scaled to coprime integers with the first nonzero coefficient positive."""
    coeffs, a0 = normalize_inequality(coefficients, rhs)
    lead = next((c for c in coeffs if c != 0), 0)
    if lead < 0:
        return tuple(-c for c in coeffs), -a0
    return coeffs, a0


def dot(a: Sequence[Number], b: Sequence[Number]):
    return sum(x * y for x, y in zip(a, b) if x and y)


def _sym(value) -> sp.Rational:
    f = to_fraction(value)
    return sp.Rational(f.numerator, f.denominator)


def _frac(value: sp.Expr) -> Fraction:
    r = sp.Rational(value)
    return Fraction(int(r.p), int(r.q))


def to_matrix(rows: Sequence[Sequence[Number]], ncols: Optional[int] = None) -> sp.Matrix:
    """sympy Matrix of exact rationals; floats are taken at their binary value."""
    rows = [list(r) for r in rows]
    if not rows:
        return sp.zeros(0, ncols or 0)
    width = len(rows[0]) if ncols is None else ncols
    if any(len(r) != width for r in rows):
        raise ValidationError('ragged matrix: rows of length {} expected'.format(width))
    return sp.Matrix(len(rows), width, [_sym(a) for r in rows for a in r])


def from_matrix(M: sp.Matrix) -> List[List[Fraction]]:
    return [[_frac(M[i, j]) for j in range(M.cols)] for i in range(M.rows)]


def rank(vectors: Iterable[Sequence[Number]], limit: Optional[int] = None) -> int:
    """Rank over the rationals; stops early once `limit` is reached.

    Vectors are reduced in chunks against the echelon basis so far.
    """
    basis = None
    it = iter(vectors)
    while True:
        chunk = list(islice(it, RANK_CHUNK))
        if not chunk:
            break
        M = to_matrix(chunk)
        if basis is not None:
            M = basis.col_join(M)
        reduced, pivots = M.rref()
        basis = reduced[:len(pivots), :]
        if limit is not None and len(pivots) >= limit:
            log.debug('rank limit %d reached', limit)
            return limit
    return 0 if basis is None else basis.rows


def affine_rank(points: Sequence[Sequence[Number]], limit: Optional[int] = None) -> int:
    """Dimension of the affine hull; -1 for no points."""
    if not points:
        return -1
    origin = points[0]
    diffs = ([a - b for a, b in zip(p, origin)] for p in points[1:])
    return rank(diffs, limit=limit)


def rref(rows: Sequence[Sequence[Number]], ncols: int) -> Tuple[List[List[Fraction]], List[int]]:
    """Reduced row echelon form and pivot columns."""
    if not rows:
        return [], []
    reduced, pivots = to_matrix(rows, ncols).rref()
    return from_matrix(reduced[:len(pivots), :]), list(pivots)


def independent_rows(rows: Sequence[Sequence[Number]], order: Sequence[int], limit: int) -> List[int]:
    """First rows, in the given order, that are independent of the earlier ones."""
    if not order:
        return []
    _, pivots = to_matrix([rows[k] for k in order]).T.rref()
    return [order[p] for p in pivots][:limit]


def nullspace(rows: Sequence[Sequence[Number]], ncols: int) -> List[Tuple[int, ...]]:
    """Integer basis of {y : row . y = 0 for every row}, one vector per free column."""
    if not rows:
        return [tuple(int(i == j) for j in range(ncols)) for i in range(ncols)]
    return [primitive([_frac(a) for a in y]) for y in to_matrix(rows, ncols).nullspace()]


def affine_hull_equations(points: Sequence[Sequence[Number]], dim: int) -> List[Tuple[Tuple[int, ...], int]]:
    """Equations a.x = a0 satisfied by every point, as a basis."""
    rows = [list(p) + [-1] for p in points]
    equations = []
    for y in nullspace(rows, dim + 1):
        coeffs, a0 = y[:-1], y[-1]
        if any(coeffs):
            equations.append(normalize_equation(coeffs, a0))
    return equations


def inverse(matrix: Sequence[Sequence[Number]]) -> List[List[Fraction]]:
    M = to_matrix(matrix)
    if not M.is_square or M.rows == 0:
        raise ValidationError('inverse needs a nonempty square matrix, got {}x{}'.format(M.rows, M.cols))
    try:
        return from_matrix(M.inv())
    except ValueError:
        raise ValidationError('matrix is singular')


def rationalize(value: float, denominator: int) -> Fraction:
    """Nearest fraction with the given denominator."""
    return Fraction(round(value * denominator), denominator)
