"""
FILE: lp.py
LAST MODIFIED: 17-10-2026
DESCRIPTION: exact phase-one simplex for feasibility of A lam = b, lam >= 0

Returns either a basic feasible solution or a Farkas certificate y with
A^T y <= 0 and b.y > 0. Tableau entries are Fractions and pivoting follows
Bland's rule, so degenerate problems terminate.

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
from typing import Dict, List, Optional, Sequence, Tuple

from gias3.cutpoly.errors import ValidationError

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class PhaseOneResult:
    feasible: bool
    solution: Optional[Dict[int, Fraction]]
    farkas: Optional[Tuple[Fraction, ...]]
    pivots: int


def phase_one(rows: Sequence[Sequence], rhs: Sequence) -> PhaseOneResult:
    """Decide feasibility of rows . lam = rhs, lam >= 0 exactly.

    `solution` maps column index to its positive value; columns not listed
    are zero. `farkas` is indexed like the rows.
    """
    R = len(rows)
    if R == 0:
        raise ValidationError('phase one needs at least one constraint')
    N = len(rows[0])
    if any(len(r) != N for r in rows) or len(rhs) != R:
        raise ValidationError('constraint matrix is ragged')

    # artificial columns N..N+R-1; rhs made nonnegative by flipping rows
    signs = []
    tableau: List[List[Fraction]] = []
    for r, b in zip(rows, rhs):
        sign = -1 if b < 0 else 1
        signs.append(sign)
        tableau.append([Fraction(sign * a) for a in r] + [Fraction(0)] * R + [Fraction(sign * b)])
    for k in range(R):
        tableau[k][N + k] = Fraction(1)
    basis = [N + k for k in range(R)]
    ncols = N + R
    # reduced costs for min sum(artificials)
    reduced = [-sum(tableau[k][c] for k in range(R)) for c in range(N)] + [Fraction(0)] * R

    pivots = 0
    while True:
        entering = next((c for c in range(ncols) if reduced[c] < 0), None)
        if entering is None:
            break
        leaving = None
        best = None
        for k in range(R):
            a = tableau[k][entering]
            if a > 0:
                ratio = tableau[k][-1] / a
                if best is None or ratio < best or (ratio == best and basis[k] < basis[leaving]):
                    best, leaving = ratio, k
        if leaving is None:
            raise RuntimeError('phase one is bounded below; unbounded ray found')
        prow = tableau[leaving]
        p = prow[entering]
        if p != 1:
            prow = [v / p for v in prow]
            tableau[leaving] = prow
        for k in range(R):
            if k != leaving:
                f = tableau[k][entering]
                if f:
                    row = tableau[k]
                    tableau[k] = [v - f * w for v, w in zip(row, prow)]
        f = reduced[entering]
        reduced = [v - f * w for v, w in zip(reduced, prow[:-1])]
        basis[leaving] = entering
        pivots += 1

    residual = sum(tableau[k][-1] for k in range(R) if basis[k] >= N)
    log.debug('phase one: %d rows, %d columns, %d pivots, residual %s', R, N, pivots, residual)
    if residual == 0:
        solution = {basis[k]: tableau[k][-1] for k in range(R) if basis[k] < N and tableau[k][-1] != 0}
        return PhaseOneResult(True, solution, None, pivots)
    # artificial k has cost 1 and reduced cost 1 - y_k
    farkas = tuple(signs[k] * (1 - reduced[N + k]) for k in range(R))
    return PhaseOneResult(False, None, farkas, pivots)
