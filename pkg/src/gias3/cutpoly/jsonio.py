"""
FILE: jsonio.py
LAST MODIFIED: 17-10-2026
DESCRIPTION: JSON codecs for vectors and inequalities

Vectors:
    {"kind": "cor", "shape": {"m": 2, "n": 2, "suspended": false}, "coords": [...]}
kind is one of behavior, cor, suspension, correlation, or point for plain
coordinates without a graph. For behaviors the shape is the K_m,n of the
experiment.

Inequalities:
    {"space": "correlation", "rows": m, "cols": n, "a": [[...]], "rhs": 2}
suspension adds "root": {"A": [...], "B": [...]}, cor adds
"nodes": {"A": [...], "B": [...]}; complete uses "parts": [s, t] and a
symmetric node-by-node "a"; raw uses a flat "coefficients" list.

Rationals are written as "p/q" strings, integers as integers. Keys that a
codec does not know (provenance, name, pretty, ...) are ignored on read.

===============================================================================
This file is part of GIAS3.

This Source Code Form is subject to the terms of the Mozilla Public
License, v. 2.0. If a copy of the MPL was not distributed with this
file, You can obtain one at http://mozilla.org/MPL/2.0/.
===============================================================================
"""
import json
import logging
from typing import Any, Dict, Iterator, List, Optional, Sequence, Union

from gias3.cutpoly.errors import ValidationError
from gias3.cutpoly.exact import format_rational, to_number
from gias3.cutpoly.graphs import BipartiteShape, CompleteShape, Shape, SuspensionShape
from gias3.cutpoly.inequalities import COMPLETE, COR, CORRELATION, RAW, SUSPENSION, LinearInequality
from gias3.cutpoly.mappings import BehaviorVector, CorrelationVector, CorVector, SuspensionVector

log = logging.getLogger(__name__)

PROVENANCE_KEY = 'provenance'
POINT = 'point'

Vector = Union[BehaviorVector, CorVector, SuspensionVector, CorrelationVector]
VECTOR_KINDS = {
    'behavior': BehaviorVector,
    'cor': CorVector,
    'suspension': SuspensionVector,
    'correlation': CorrelationVector,
}
_SPACE_KINDS = {COR: 'cor', SUSPENSION: 'suspension', CORRELATION: 'correlation'}


def _numbers(values: Sequence) -> List:
    return [format_rational(v) for v in values]


def _parse_numbers(values: Any, what: str) -> List:
    if not isinstance(values, list):
        raise ValidationError('{} must be a list, got {!r}'.format(what, values))
    return [to_number(v) for v in values]


def _require(obj: Dict, key: str, what: str):
    try:
        return obj[key]
    except KeyError:
        raise ValidationError('{} JSON lacks the {!r} field'.format(what, key))
    except TypeError:
        raise ValidationError('{} JSON must be an object, got {!r}'.format(what, obj))


def shape_to_json(shape: Shape) -> Dict[str, Any]:
    if isinstance(shape, CompleteShape):
        return {'s': shape.s, 't': shape.t}
    return {'m': shape.m, 'n': shape.n, 'suspended': bool(shape.suspended)}


def shape_from_json(obj: Dict[str, Any]) -> Shape:
    if 's' in obj:
        return CompleteShape(int(obj['s']), int(obj.get('t', 0)))
    base = BipartiteShape(int(_require(obj, 'm', 'shape')), int(_require(obj, 'n', 'shape')))
    return base.suspension() if obj.get('suspended') else base


# ---------------------------------------------------------------------------
# vectors
# ---------------------------------------------------------------------------
def vector_to_json(vec: Vector) -> Dict[str, Any]:
    shape = vec.shape.base if isinstance(vec.shape, SuspensionShape) else vec.shape
    out = shape_to_json(shape)
    out['suspended'] = isinstance(vec, SuspensionVector)
    return {'kind': vec.kind, 'shape': out, 'coords': _numbers(vec.coords)}


def point_to_json(coords: Sequence, space: str = RAW, shape: Optional[Shape] = None,
                  name: Optional[str] = None) -> Dict[str, Any]:
    """A point of a coordinate space: a typed vector where the space has one."""
    if space in _SPACE_KINDS:
        obj = vector_to_json(VECTOR_KINDS[_SPACE_KINDS[space]](shape, tuple(coords)))
    else:
        obj = {'kind': POINT, 'coords': _numbers(coords)}
        if shape is not None:
            obj['shape'] = shape_to_json(shape)
    if name is not None:
        obj['name'] = name
    return obj


def vector_from_json(obj: Dict[str, Any]) -> Vector:
    kind = _require(obj, 'kind', 'vector')
    if kind not in VECTOR_KINDS:
        raise ValidationError('unknown vector kind {!r}; expected one of {}'.format(kind, ', '.join(VECTOR_KINDS)))
    shape = shape_from_json(_require(obj, 'shape', 'vector'))
    if isinstance(shape, CompleteShape):
        raise ValidationError('{} vectors live on bipartite graphs'.format(kind))
    base = shape.base if isinstance(shape, SuspensionShape) else shape
    coords = tuple(_parse_numbers(_require(obj, 'coords', 'vector'), 'coords'))
    if kind == 'suspension':
        return SuspensionVector(base.suspension(), coords)
    return VECTOR_KINDS[kind](base, coords)


def point_from_json(obj: Dict[str, Any]) -> List:
    return _parse_numbers(_require(obj, 'coords', 'point'), 'coords')


# ---------------------------------------------------------------------------
# inequalities
# ---------------------------------------------------------------------------
def inequality_to_json(ineq: LinearInequality) -> Dict[str, Any]:
    out: Dict[str, Any] = {'space': ineq.space}
    if ineq.space == RAW:
        out['coefficients'] = _numbers(ineq.coefficients)
    elif ineq.space == COMPLETE:
        out['parts'] = [ineq.shape.s, ineq.shape.t]
        out['a'] = ineq.complete_matrix()
    else:
        out['rows'], out['cols'] = ineq.shape.m, ineq.shape.n
        out['a'] = ineq.matrix()
        if ineq.space in (SUSPENSION, COR):
            alice_terms, bob_terms = ineq.root_coefficients()
            out['root' if ineq.space == SUSPENSION else 'nodes'] = {'A': list(alice_terms), 'B': list(bob_terms)}
        if ineq.row_labels:
            out['row_labels'] = list(ineq.row_labels)
        if ineq.col_labels:
            out['col_labels'] = list(ineq.col_labels)
    out['rhs'] = format_rational(ineq.rhs)
    return out


def _matrix(obj: Dict[str, Any], rows: int, cols: int) -> List[List]:
    a = _require(obj, 'a', 'inequality')
    if not isinstance(a, list) or len(a) != rows:
        raise ValidationError('"a" must have {} rows'.format(rows))
    M = [_parse_numbers(r, 'matrix row') for r in a]
    if any(len(r) != cols for r in M):
        raise ValidationError('"a" must have {} columns'.format(cols))
    return M


def inequality_from_json(obj: Dict[str, Any]) -> LinearInequality:
    space = obj.get('space', CORRELATION) if isinstance(obj, dict) else None
    if space is None:
        raise ValidationError('inequality JSON must be an object, got {!r}'.format(obj))
    rhs = to_number(_require(obj, 'rhs', 'inequality'))
    if space == RAW:
        return LinearInequality.raw(_parse_numbers(_require(obj, 'coefficients', 'inequality'), 'coefficients'), rhs)
    if space == COMPLETE:
        parts = _require(obj, 'parts', 'inequality')
        shape = CompleteShape(int(parts[0]), int(parts[1]) if len(parts) > 1 else 0)
        N = shape.num_nodes
        M = _matrix(obj, N, N)
        for a in range(N):
            for b in range(a + 1, N):
                if M[a][b] != M[b][a]:
                    raise ValidationError('complete-graph matrix is not symmetric at ({}, {})'.format(a, b))
        coeffs = tuple(M[u][v] for u in range(N) for v in range(u + 1, N))
        return LinearInequality(COMPLETE, shape, coeffs, rhs)

    m, n = int(_require(obj, 'rows', 'inequality')), int(_require(obj, 'cols', 'inequality'))
    M = _matrix(obj, m, n)
    edges = tuple(v for r in M for v in r)
    rows = tuple(obj['row_labels']) if obj.get('row_labels') else None
    cols = tuple(obj['col_labels']) if obj.get('col_labels') else None
    if space == CORRELATION:
        return LinearInequality.from_matrix(M, rhs, rows, cols)
    if space not in (SUSPENSION, COR):
        raise ValidationError('unknown inequality space {!r}'.format(space))
    key = 'root' if space == SUSPENSION else 'nodes'
    terms = obj.get(key, {'A': [0] * m, 'B': [0] * n})
    alice_terms = _parse_numbers(terms.get('A', [0] * m), key + '.A')
    bob_terms = _parse_numbers(terms.get('B', [0] * n), key + '.B')
    if len(alice_terms) != m or len(bob_terms) != n:
        raise ValidationError('{} terms need {} Alice and {} Bob entries'.format(key, m, n))
    base = BipartiteShape(m, n)
    shape = base.suspension() if space == SUSPENSION else base
    return LinearInequality(space, shape, tuple(alice_terms) + tuple(bob_terms) + edges, rhs, rows, cols)


# ---------------------------------------------------------------------------
# documents
# ---------------------------------------------------------------------------
def iter_documents(text: str) -> Iterator[Dict[str, Any]]:
    """JSON objects of a single document or a JSON-lines stream.

    Records holding only a provenance header are skipped.
    """
    text = text.strip()
    if not text:
        raise ValidationError('empty input')
    try:
        docs = [json.loads(text)]
    except json.JSONDecodeError:
        docs = []
        for lineno, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            try:
                docs.append(json.loads(line))
            except json.JSONDecodeError as e:
                raise ValidationError('malformed JSON on line {}: {}'.format(lineno, e.msg))
    for doc in docs:
        if isinstance(doc, list):
            for item in doc:
                yield item
            continue
        if isinstance(doc, dict) and set(doc) == {PROVENANCE_KEY}:
            continue
        yield doc


def dumps(obj: Any, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(obj, indent=2, sort_keys=False)
    return json.dumps(obj, separators=(',', ':'))
