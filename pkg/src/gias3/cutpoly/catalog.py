"""
FILE: catalog.py
LAST MODIFIED: 17-10-2026
DESCRIPTION: named Bell and correlation inequalities

===============================================================================
This file is part of GIAS3.

This Source Code Form is subject to the terms of the Mozilla Public
License, v. 2.0. If a copy of the MPL was not distributed with this
file, You can obtain one at http://mozilla.org/MPL/2.0/.
===============================================================================
"""
import logging
from typing import Callable, Dict, List

from gias3.cutpoly.errors import ValidationError
from gias3.cutpoly.graphs import BipartiteShape, CompleteShape, X, alice, bob, edge_index
from gias3.cutpoly.inequalities import COMPLETE, COR, SUSPENSION, LinearInequality

log = logging.getLogger(__name__)

CHSH = ([[1, 1],
         [1, -1]], 2)

GISIN_4A = ([[-2, 2, 1, 1],
             [1, 2, -2, -1],
             [1, 1, 2, -2],
             [2, 1, 1, 2]], 10)

GISIN_4B = ([[2, 1, 1, 0],
             [1, -1, -1, -1],
             [1, -1, -1, 1],
             [0, -1, 1, 0]], 2)

# pentagonal inequality after triangular elimination; rows A1 A2 A3 A12,
# columns B1 B2 B12 B13 B23
PENTAGONAL_TRIELIM = ([[1, 1, -1, -1, 0],
                       [1, 1, 1, 0, -1],
                       [1, 1, 0, 1, 1],
                       [-1, 1, 0, 0, 0]], 6)

# facets of Cut(K_4,5) that are not zero-lifted from K_4,4
APPENDIX_45 = (
    ([[1, 0, 0, 0, 1],
      [1, 1, 1, 0, -1],
      [1, 0, -1, 1, -1],
      [-1, 1, 0, 1, 1]], 6),
    ([[2, 1, 1, 1, 1],
      [0, 1, -1, 1, -1],
      [0, -1, 1, 1, -1],
      [-2, 1, 1, 1, 1]], 8),
    ([[2, 1, 1, 1, 1],
      [-1, 1, 2, 1, -1],
      [-1, 2, 1, -1, 1],
      [0, 2, -2, 1, -1]], 10),
    ([[1, 2, 1, 1, -1],
      [0, 2, -1, -1, 2],
      [1, -1, 1, -2, 1],
      [0, -1, 1, 2, 2]], 10),
)

# I3322 in expectation coordinates: node terms then the edge matrix
I3322_ALICE = [-1, -1, 0]
I3322_BOB = [1, 1, 0]
I3322_EDGES = [[1, 1, 1],
               [1, 1, -1],
               [1, -1, 0]]
I3322_RHS = 4


def chsh() -> LinearInequality:
    return LinearInequality.from_matrix(*CHSH)


def chsh_cor() -> LinearInequality:
    """CHSH in p-coordinates: -p_A1 - p_B1 + p_A1B1 + p_A1B2 + p_A2B1 - p_A2B2 <= 0."""
    return LinearInequality(COR, BipartiteShape(2, 2), (-1, 0, -1, 0, 1, 1, 1, -1), 0)


def i3322() -> LinearInequality:
    shape = BipartiteShape(3, 3).suspension()
    coeffs = [0] * shape.num_edges
    for i, c in enumerate(I3322_ALICE, start=1):
        coeffs[edge_index(shape, X, alice(i))] = c
    for j, c in enumerate(I3322_BOB, start=1):
        coeffs[edge_index(shape, X, bob(j))] = c
    for i, row in enumerate(I3322_EDGES, start=1):
        for j, c in enumerate(row, start=1):
            coeffs[edge_index(shape, alice(i), bob(j))] = c
    return LinearInequality(SUSPENSION, shape, tuple(coeffs), I3322_RHS)


def pentagonal() -> LinearInequality:
    """-x_A1A2 - x_A1A3 - x_A2A3 - x_B1B2 + sum_{i<=3, j<=2} x_AiBj <= 2 on K_3+2."""
    shape = CompleteShape(3, 2)
    coeffs = [0] * shape.num_edges
    for u, v in shape.edges:
        coeffs[edge_index(shape, u, v)] = -1 if u.side == v.side else 1
    return LinearInequality(COMPLETE, shape, tuple(coeffs), 2)


def triangle() -> LinearInequality:
    """-x_A1A2 - x_A1B1 - x_A2B1 <= 1 on K_2+1."""
    shape = CompleteShape(2, 1)
    return LinearInequality(COMPLETE, shape, (-1,) * shape.num_edges, 1)


def pentagonal_trielim() -> LinearInequality:
    rows, rhs = PENTAGONAL_TRIELIM
    return LinearInequality.from_matrix(rows, rhs, ('A1', 'A2', 'A3', 'A12'), ('B1', 'B2', 'B12', 'B13', 'B23'))


def _matrix_factory(data) -> Callable[[], LinearInequality]:
    return lambda: LinearInequality.from_matrix(*data)


_FACTORIES: Dict[str, Callable[[], LinearInequality]] = {
    'chsh': chsh,
    'chsh-cor': chsh_cor,
    'gisin-4a': _matrix_factory(GISIN_4A),
    'gisin-4b': _matrix_factory(GISIN_4B),
    'i3322': i3322,
    'pentagonal': pentagonal,
    'pentagonal-trielim': pentagonal_trielim,
    'triangle': triangle,
}
for _k, _data in enumerate(APPENDIX_45, start=1):
    _FACTORIES['appendix-45-{}'.format(_k)] = _matrix_factory(_data)


def names() -> List[str]:
    return sorted(_FACTORIES)


def named_constants() -> Dict[str, LinearInequality]:
    return {name: factory() for name, factory in _FACTORIES.items()}


def get(name: str) -> LinearInequality:
    try:
        return _FACTORIES[name]()
    except KeyError:
        raise ValidationError('unknown catalog entry {!r}; known: {}'.format(name, ', '.join(names())))
