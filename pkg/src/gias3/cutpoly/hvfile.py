"""
FILE: hvfile.py
LAST MODIFIED: 17-10-2026
DESCRIPTION:
classes and functions for reading and writing the line-oriented V/H
polytope text format

    # any comment
    # space correlation K2,2
    V 4 8
    1 1 1 1    # ++++
    ...

    H 4 16
    1 1 1 -1 <= 2
    ...
    1 0 0 0 = 0

Numbers are integers or p/q rationals. A comment on a vertex line is taken
as the vertex name. The optional `space` comment ties the rows to a
coordinate space and graph, so a file round-trips into the same
LinearInequality objects.

===============================================================================
This file is part of GIAS3.

This Source Code Form is subject to the terms of the Mozilla Public
License, v. 2.0. If a copy of the MPL was not distributed with this
file, You can obtain one at http://mozilla.org/MPL/2.0/.
===============================================================================
"""
import io
import logging
from typing import List, Optional, TextIO, Tuple, Union

from gias3.cutpoly.errors import ValidationError
from gias3.cutpoly.exact import rational_str, to_fraction
from gias3.cutpoly.graphs import Shape, parse_graph
from gias3.cutpoly.inequalities import RAW, SPACES, LinearInequality
from gias3.cutpoly.polyhedra import HRep, VRep

log = logging.getLogger(__name__)

COMMENTCHAR = '#'
SPACE_KEYWORD = 'space'
V_HEADER = 'V {dim} {count}\n'
H_HEADER = 'H {dim} {count}\n'
RELATIONS = ('<=', '>=', '=')

Source = Union[str, TextIO]


def _parse_number(token: str, lineno: int):
    try:
        f = to_fraction(token)
    except ValidationError:
        raise ValidationError('line {}: cannot parse number {!r}'.format(lineno, token))
    return int(f) if f.denominator == 1 else f


class HVReader(object):
    """V/H file reading class
    """

    def __init__(self, source: Source):
        self.source = source
        self.header: List[str] = []
        self.space: str = RAW
        self.shape: Optional[Shape] = None

    def _lines(self) -> List[str]:
        if isinstance(self.source, str):
            with open(self.source, 'r') as f:
                return f.readlines()
        return self.source.readlines()

    def _readSpace(self, text: str, lineno: int) -> None:
        terms = text.split()
        space = terms[1] if len(terms) > 1 else ''
        if space not in SPACES:
            raise ValidationError('line {}: unknown space {!r}'.format(lineno, space))
        self.space = space
        if space == RAW:
            self.shape = None
            return
        if len(terms) < 3:
            raise ValidationError('line {}: space {} needs a graph, e.g. K2,2'.format(lineno, space))
        self.shape = parse_graph(terms[2])

    def read(self) -> Union[VRep, HRep]:
        kind = None
        dim = count = 0
        rows: List[Tuple[str, str, int]] = []
        for lineno, raw in enumerate(self._lines(), start=1):
            data, _, comment = raw.partition(COMMENTCHAR)
            data, comment = data.strip(), comment.strip()
            if not data:
                if comment.split()[:1] == [SPACE_KEYWORD]:
                    self._readSpace(comment, lineno)
                elif comment:
                    self.header.append(comment)
                continue
            if kind is None:
                terms = data.split()
                if len(terms) != 3 or terms[0] not in ('V', 'H'):
                    raise ValidationError('line {}: expected a "V d n" or "H d n" header, got {!r}'.format(
                        lineno, data))
                try:
                    kind, dim, count = terms[0], int(terms[1]), int(terms[2])
                except ValueError:
                    raise ValidationError('line {}: malformed header {!r}'.format(lineno, data))
                continue
            rows.append((data, comment, lineno))

        if kind is None:
            raise ValidationError('no "V d n" or "H d n" header found')
        if len(rows) != count:
            raise ValidationError('header announces {} rows, found {}'.format(count, len(rows)))
        log.debug('read %s-representation: dimension %d, %d rows', kind, dim, count)
        if kind == 'V':
            return self._vrep(dim, rows)
        return self._hrep(dim, rows)

    def _vrep(self, dim: int, rows) -> VRep:
        vertices = []
        names = []
        for data, comment, lineno in rows:
            vec = tuple(_parse_number(t, lineno) for t in data.split())
            if len(vec) != dim:
                raise ValidationError('line {}: vertex has {} coordinates, expected {}'.format(lineno, len(vec), dim))
            vertices.append(vec)
            names.append(comment)
        use_names = all(names) and len(set(names)) == len(names)
        return VRep(dim, tuple(vertices), tuple(names) if use_names else None, self.space, self.shape)

    def _hrep(self, dim: int, rows) -> HRep:
        ineqs = []
        eqs = []
        for data, _, lineno in rows:
            terms = data.split()
            rel = [k for k, t in enumerate(terms) if t in RELATIONS]
            if len(rel) != 1 or rel[0] != len(terms) - 2:
                raise ValidationError('line {}: expected "a_1 ... a_d <= a0", got {!r}'.format(lineno, data))
            coeffs = [_parse_number(t, lineno) for t in terms[:-2]]
            rhs = _parse_number(terms[-1], lineno)
            if len(coeffs) != dim:
                raise ValidationError('line {}: {} coefficients, expected {}'.format(lineno, len(coeffs), dim))
            op = terms[-2]
            if op == '=':
                eqs.append((tuple(coeffs), rhs))
                continue
            if op == '>=':
                coeffs, rhs = [-c for c in coeffs], -rhs
            if self.space == RAW:
                ineqs.append(LinearInequality.raw(coeffs, rhs))
            else:
                ineqs.append(LinearInequality(self.space, self.shape, tuple(coeffs), rhs))
        return HRep(dim, tuple(ineqs), tuple(eqs), self.space, self.shape)


class HVWriter(object):
    _commentChars = COMMENTCHAR + ' '

    def __init__(self, target: Source):
        self.target = target
        self._header: Optional[str] = None

    def addHeader(self, header: str) -> None:
        """
        Add commented text to be written at the top of the
        file.
        """
        self._header = header

    def _blocks(self, rep: Union[VRep, HRep]) -> List[str]:
        lines = []
        if self._header:
            lines += [self._commentChars + h + '\n' for h in self._header.splitlines()]
        if rep.space == RAW:
            lines.append('{}{} {}\n'.format(self._commentChars, SPACE_KEYWORD, RAW))
        else:
            lines.append('{}{} {} {}\n'.format(self._commentChars, SPACE_KEYWORD, rep.space, rep.shape.label))
        if isinstance(rep, VRep):
            lines.append(V_HEADER.format(dim=rep.dim, count=len(rep)))
            for k, v in enumerate(rep.vertices):
                row = ' '.join(rational_str(a) for a in v)
                if rep.names is not None:
                    row += '  {}{}'.format(self._commentChars, rep.name(k))
                lines.append(row + '\n')
        else:
            lines.append(H_HEADER.format(dim=rep.dim, count=len(rep) + len(rep.equations)))
            for f in rep.inequalities:
                lines.append('{} <= {}\n'.format(' '.join(rational_str(a) for a in f.coefficients), rational_str(f.rhs)))
            for a, a0 in rep.equations:
                lines.append('{} = {}\n'.format(' '.join(rational_str(c) for c in a), rational_str(a0)))
        return lines

    def write(self, rep: Union[VRep, HRep]) -> None:
        """
        Write data to file.
        """
        lines = self._blocks(rep)
        if isinstance(self.target, str):
            with open(self.target, 'w') as f:
                f.writelines(lines)
        else:
            self.target.writelines(lines)
        log.debug('wrote %d lines', len(lines))


def loads(text: str) -> Union[VRep, HRep]:
    return HVReader(io.StringIO(text)).read()


def dumps(rep: Union[VRep, HRep], header: Optional[str] = None) -> str:
    buf = io.StringIO()
    writer = HVWriter(buf)
    if header:
        writer.addHeader(header)
    writer.write(rep)
    return buf.getvalue()
