"""
FILE: graphs.py
LAST MODIFIED: 17-10-2026
DESCRIPTION: node labels, shapes and edge indexing for K_m,n, its
suspension and 2-coloured complete graphs

Edge order is the coordinate order used by every other module:
bipartite edges A_iB_j row-major (i outer, j inner); suspensions put the
root edges XA_1..XA_m, XB_1..XB_n first so that dropping them is a slice.

===============================================================================
This file is part of GIAS3.

This Source Code Form is subject to the terms of the Mozilla Public
License, v. 2.0. If a copy of the MPL was not distributed with this
file, You can obtain one at http://mozilla.org/MPL/2.0/.
===============================================================================
"""
import logging
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Tuple, Union

from gias3.cutpoly.errors import NonEdgeError, ValidationError

log = logging.getLogger(__name__)

ALICE = 'A'
BOB = 'B'
ROOT = 'X'

NODE_PAT = re.compile(r'^\s*([ABX])\s*_?\s*(\d*)\s*$')
GRAPH_PAT = re.compile(r'^\s*(S?)K\s*(\d+)\s*(?:([,+])\s*(\d+))?\s*$', re.IGNORECASE)


@dataclass(frozen=True, order=True)
class Node:
    """A tagged node label: Alice i, Bob j (1-based) or the root X."""
    side: str
    index: int

    def __post_init__(self):
        if self.side not in (ALICE, BOB, ROOT):
            raise ValidationError('unknown node side {!r}'.format(self.side))
        if self.side == ROOT and self.index != 0:
            raise ValidationError('the root node has no index')
        if self.side != ROOT and self.index < 1:
            raise ValidationError('node indices start at 1, got {}{}'.format(self.side, self.index))

    def __str__(self):
        if self.side == ROOT:
            return ROOT
        return '{}{}'.format(self.side, self.index)


def alice(i: int) -> Node:
    return Node(ALICE, i)


def bob(j: int) -> Node:
    return Node(BOB, j)


X = Node(ROOT, 0)


def parse_node(label: Union[str, Node]) -> Node:
    if isinstance(label, Node):
        return label
    match = NODE_PAT.match(label)
    if match is None:
        raise ValidationError('cannot parse node label {!r}'.format(label))
    side, digits = match.groups()
    if side == ROOT:
        if digits:
            raise ValidationError('the root node has no index: {!r}'.format(label))
        return X
    if not digits:
        raise ValidationError('node label {!r} needs an index'.format(label))
    return Node(side, int(digits))


@dataclass(frozen=True)
class BipartiteShape:
    """K_m,n with Alice nodes A_1..A_m and Bob nodes B_1..B_n."""
    m: int
    n: int

    def __post_init__(self):
        if not (isinstance(self.m, int) and isinstance(self.n, int)) or self.m < 1 or self.n < 1:
            raise ValidationError('K_m,n needs m, n >= 1, got ({}, {})'.format(self.m, self.n))

    suspended = False

    @property
    def num_nodes(self) -> int:
        return self.m + self.n

    @property
    def num_edges(self) -> int:
        return self.m * self.n

    @property
    def nodes(self) -> Tuple[Node, ...]:
        return tuple(alice(i) for i in range(1, self.m + 1)) + \
               tuple(bob(j) for j in range(1, self.n + 1))

    @property
    def edges(self) -> Tuple[Tuple[Node, Node], ...]:
        return tuple((alice(i), bob(j))
                     for i in range(1, self.m + 1)
                     for j in range(1, self.n + 1))

    @property
    def label(self) -> str:
        return 'K{},{}'.format(self.m, self.n)

    def suspension(self) -> 'SuspensionShape':
        return SuspensionShape(self)


@dataclass(frozen=True)
class SuspensionShape:
    """K_m,n plus a root node X joined to every node."""
    base: BipartiteShape

    suspended = True
    root = X

    @property
    def m(self) -> int:
        return self.base.m

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def num_nodes(self) -> int:
        return 1 + self.m + self.n

    @property
    def num_edges(self) -> int:
        return self.m + self.n + self.m * self.n

    @property
    def num_root_edges(self) -> int:
        return self.m + self.n

    @property
    def nodes(self) -> Tuple[Node, ...]:
        return (X,) + self.base.nodes

    @property
    def edges(self) -> Tuple[Tuple[Node, Node], ...]:
        return tuple((X, v) for v in self.base.nodes) + self.base.edges

    @property
    def label(self) -> str:
        return 'SK{},{}'.format(self.m, self.n)


@dataclass(frozen=True)
class CompleteShape:
    """K_{s+t} with nodes coloured A_1..A_s and B_1..B_t.

    The colouring only matters to triangular elimination; edges run over
    all node pairs in node order.
    """
    s: int
    t: int = 0

    suspended = False

    def __post_init__(self):
        if self.s < 0 or self.t < 0 or self.s + self.t < 2:
            raise ValidationError('complete graph needs at least 2 nodes, got ({}, {})'.format(self.s, self.t))

    @property
    def num_nodes(self) -> int:
        return self.s + self.t

    @property
    def num_edges(self) -> int:
        n = self.num_nodes
        return n * (n - 1) // 2

    @property
    def nodes(self) -> Tuple[Node, ...]:
        return tuple(alice(i) for i in range(1, self.s + 1)) + \
               tuple(bob(j) for j in range(1, self.t + 1))

    @property
    def edges(self) -> Tuple[Tuple[Node, Node], ...]:
        nodes = self.nodes
        return tuple((nodes[a], nodes[b])
                     for a in range(len(nodes))
                     for b in range(a + 1, len(nodes)))

    @property
    def label(self) -> str:
        if self.t == 0:
            return 'K{}'.format(self.s)
        return 'K{}+{}'.format(self.s, self.t)


Shape = Union[BipartiteShape, SuspensionShape, CompleteShape]


@lru_cache(maxsize=None)
def _edge_table(shape: Shape) -> Dict[FrozenSet[Node], int]:
    table = {frozenset(e): k for k, e in enumerate(shape.edges)}
    log.debug('built edge table for %s: %d edges', shape.label, len(table))
    return table


@lru_cache(maxsize=None)
def _edge_list(shape: Shape) -> Tuple[Tuple[Node, Node], ...]:
    return tuple(shape.edges)


@lru_cache(maxsize=None)
def _node_table(shape: Shape) -> Dict[Node, int]:
    return {v: k for k, v in enumerate(shape.nodes)}


def edge_index(shape: Shape, u: Union[str, Node], v: Union[str, Node]) -> int:
    """Position of edge uv in the shape's coordinate order.

    Endpoints may be given in either order. Raises NonEdgeError for
    pairs that are not edges (same-side pairs in K_m,n, unknown nodes).
    """
    u = parse_node(u)
    v = parse_node(v)
    try:
        return _edge_table(shape)[frozenset((u, v))]
    except KeyError:
        raise NonEdgeError('{}{} is a non-edge of {}'.format(u, v, shape.label))


def edge_at(shape: Shape, k: int) -> Tuple[Node, Node]:
    edges = _edge_list(shape)
    if not 0 <= k < len(edges):
        raise ValidationError('edge index {} out of range [0, {}) for {}'.format(k, len(edges), shape.label))
    return edges[k]


def node_position(shape: Shape, node: Union[str, Node]) -> int:
    node = parse_node(node)
    try:
        return _node_table(shape)[node]
    except KeyError:
        raise ValidationError('{} is not a node of {}'.format(node, shape.label))


def parse_graph(text: str) -> Shape:
    """Parse 'K4,4' (bipartite), 'SK3,3' (suspension), 'K5' or 'K3+2' (complete)."""
    match = GRAPH_PAT.match(text)
    if match is None:
        raise ValidationError('cannot parse graph {!r}; expected e.g. K4,4, SK3,3, K5 or K3+2'.format(text))
    susp, first, sep, second = match.groups()
    first = int(first)
    if sep == ',':
        shape = BipartiteShape(first, int(second))
        return shape.suspension() if susp else shape
    if susp:
        raise ValidationError('only bipartite graphs have a suspension here: {!r}'.format(text))
    if sep == '+':
        return CompleteShape(first, int(second))
    return CompleteShape(first, 0)
