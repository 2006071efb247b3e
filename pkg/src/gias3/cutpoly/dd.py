"""
FILE: dd.py
LAST MODIFIED: 17-10-2026
DESCRIPTION: double description method for the extreme rays of a pointed
polyhedral cone {y : r.y >= 0 for every row r}

Rows are integer vectors. Rays are kept as primitive integer vectors with
the set of processed rows they are tight on, stored as a bit mask. Two
rays are adjacent when no third ray is tight on every row that both are
tight on (combinatorial test, valid because the cone stays pointed).

===============================================================================
This file is part of GIAS3.

This Source Code Form is subject to the terms of the Mozilla Public
License, v. 2.0. If a copy of the MPL was not distributed with this
file, You can obtain one at http://mozilla.org/MPL/2.0/.
===============================================================================
"""
import logging
from functools import reduce
from math import gcd
from typing import List, Sequence, Tuple

from gias3.cutpoly.errors import ValidationError
from gias3.cutpoly.exact import independent_rows, inverse, primitive

log = logging.getLogger(__name__)

Ray = Tuple[int, ...]


def _popcount(x: int) -> int:
    return bin(x).count('1')


def _dot(r: Sequence[int], y: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(r, y) if a)


def _reduce_ray(y: Sequence[int]) -> Ray:
    g = reduce(gcd, (abs(v) for v in y), 0)
    if g > 1:
        return tuple(v // g for v in y)
    return tuple(y)


def insertion_order(rows: Sequence[Sequence[int]]) -> List[int]:
    """Row indices by ascending nonzero count, ties broken lexicographically."""
    return sorted(range(len(rows)), key=lambda k: (sum(1 for a in rows[k] if a), tuple(rows[k])))


def extreme_rays(rows: Sequence[Sequence[int]], dim: int) -> List[Ray]:
    """Extreme rays of the pointed cone {y in R^dim : rows . y >= 0}.

    Raises ValidationError when the rows have rank below dim (the cone
    contains a line).
    """
    rows = [tuple(int(a) for a in r) for r in rows]
    if any(len(r) != dim for r in rows):
        raise ValidationError('cone rows must have length {}'.format(dim))
    order = insertion_order(rows)
    basis = independent_rows(rows, order, dim)
    if len(basis) < dim:
        raise ValidationError('cone is not pointed: constraint rank {} < {}'.format(len(basis), dim))

    # columns of the inverse of the basis rows are the initial rays
    inv = inverse([rows[k] for k in basis])
    rays: List[Ray] = []
    zeros: List[int] = []
    for c in range(dim):
        rays.append(primitive([inv[r][c] for r in range(dim)]))
        mask = 0
        for pos, k in enumerate(basis):
            if pos != c:
                mask |= 1 << k
        zeros.append(mask)

    in_basis = set(basis)
    remaining = [k for k in order if k not in in_basis]
    for step, k in enumerate(remaining):
        row = rows[k]
        bit = 1 << k
        values = [_dot(row, y) for y in rays]
        pos = [t for t, v in enumerate(values) if v > 0]
        neg = [t for t, v in enumerate(values) if v < 0]
        zer = [t for t, v in enumerate(values) if v == 0]
        new_rays: List[Ray] = []
        new_zeros: List[int] = []
        if pos and neg:
            need = dim - 2
            for p in pos:
                zp = zeros[p]
                for q in neg:
                    common = zp & zeros[q]
                    if _popcount(common) < need:
                        continue
                    adjacent = True
                    for t in range(len(rays)):
                        if t != p and t != q and zeros[t] & common == common:
                            adjacent = False
                            break
                    if not adjacent:
                        continue
                    vp, vq = values[p], values[q]
                    combined = [vp * a - vq * b for a, b in zip(rays[q], rays[p])]
                    new_rays.append(_reduce_ray(combined))
                    new_zeros.append(common | bit)
        kept = pos + zer
        rays = [rays[t] for t in kept] + new_rays
        zeros = [zeros[t] | (bit if values[t] == 0 else 0) for t in kept] + new_zeros
        log.debug('dd: inserted row %d (%d/%d), %d rays', k, step + 1, len(remaining), len(rays))
    return rays


def tight_rows(rows: Sequence[Sequence[int]], ray: Sequence[int]) -> List[int]:
    return [k for k, r in enumerate(rows) if _dot(r, ray) == 0]
