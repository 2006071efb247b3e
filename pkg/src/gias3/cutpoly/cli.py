"""
FILE: cli.py
LAST MODIFIED: 17-10-2026
DESCRIPTION: the cutpoly command line

    cutpoly catalog gisin-4a | cutpoly check-facet --graph K4,4
    cutpoly catalog i3322 | cutpoly sdp-max --constraints rmet
    cutpoly catalog pentagonal | cutpoly trielim
    cutpoly enumerate-facets --graph K3,3 | cutpoly classify

Every command reads JSON (a single object or JSON lines) or a V/H text
file from a path or stdin, and writes JSON with a provenance header.
Single results carry the header under "provenance" next to the result
fields, so the output of one command is valid input to the next. Streams
start with a {"provenance": ...} line followed by one record per line.

Exit codes: 0 success, 1 invalid input, 2 guard refusal, 3 usage error,
4 solver non-convergence.

===============================================================================
This file is part of GIAS3.

This Source Code Form is subject to the terms of the Mozilla Public
License, v. 2.0. If a copy of the MPL was not distributed with this
file, You can obtain one at http://mozilla.org/MPL/2.0/.
===============================================================================
"""
import argparse
import datetime
import logging
import sys
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from gias3.cutpoly import __version__, catalog, config, hvfile, jsonio, sdp
from gias3.cutpoly.errors import CutpolyError, GuardError, SolverError, ValidationError
from gias3.cutpoly.exact import rational_str, to_fraction
from gias3.cutpoly.graphs import BipartiteShape, SuspensionShape, parse_graph
from gias3.cutpoly.inequalities import (COR, CORRELATION, RAW, LinearInequality,
                                        canonical_form, classify, to_cor, to_suspension, triangular_eliminate,
                                        zero_lift)
from gias3.cutpoly.mappings import (BehaviorVector, CorrelationVector, CorVector, SuspensionVector,
                                    center_marginals, covariance, covariance_inv, iota, iota_inv,
                                    project_correlations, suspend_correlations)
from gias3.cutpoly.polyhedra import (HRep, VRep, cor_vertices, cut_vectors, dd_convert, facet_check,
                                     facet_check_float, hrep_contains, hull_membership, hull_membership_float,
                                     rcmet_hrep, rmet_hrep)

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_GUARD = 2
EXIT_USAGE = 3
EXIT_SOLVER = 4

EXACT = 'exact'
FLOAT = 'float'


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):

    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


@dataclass
class CommandConfig:
    """Run configuration echoed into every provenance header."""
    subcommand: str
    input: Optional[str]
    output: Optional[str]
    backend: str
    force: bool
    tol: Optional[float]
    max_iter: Optional[int]
    overrides: List[str] = field(default_factory=list)
    version: str = __version__
    timestamp: Optional[str] = None

    def provenance(self) -> Dict[str, Any]:
        out = asdict(self)
        if out['timestamp'] is None:
            del out['timestamp']
        return out


class _OverrideCollector(logging.Handler):
    """Keeps forced guard overrides for the provenance header."""

    def __init__(self):
        super(_OverrideCollector, self).__init__(level=logging.WARNING)
        self.messages: List[str] = []

    def emit(self, record):
        self.messages.append(record.getMessage())


# ---------------------------------------------------------------------------
# input and output
# ---------------------------------------------------------------------------
def _read_text(path: Optional[str]) -> str:
    if path is None or path == '-':
        return sys.stdin.read()
    try:
        with open(path, 'r') as f:
            return f.read()
    except OSError as e:
        raise ValidationError('cannot read {}: {}'.format(path, e.strerror))


def _is_json(text: str) -> bool:
    return text.lstrip()[:1] in ('{', '[')


def _read_inequalities(path: Optional[str]) -> List[LinearInequality]:
    text = _read_text(path)
    if _is_json(text):
        return [jsonio.inequality_from_json(doc) for doc in jsonio.iter_documents(text)]
    rep = hvfile.loads(text)
    if not isinstance(rep, HRep):
        raise ValidationError('expected inequalities, got a V-representation')
    return list(rep.inequalities)


def _read_inequality(path: Optional[str]) -> LinearInequality:
    ineqs = _read_inequalities(path)
    if len(ineqs) != 1:
        raise ValidationError('expected one inequality, got {}'.format(len(ineqs)))
    return ineqs[0]


def _read_vector(path: Optional[str]):
    docs = list(jsonio.iter_documents(_read_text(path)))
    if len(docs) != 1:
        raise ValidationError('expected one vector, got {}'.format(len(docs)))
    return jsonio.vector_from_json(docs[0])


class _Output(object):

    def __init__(self, cfg: CommandConfig, path: Optional[str], pretty: bool):
        self.cfg = cfg
        self.path = path
        self.pretty = pretty

    def _write(self, text: str) -> None:
        if self.path is None or self.path == '-':
            sys.stdout.write(text)
            sys.stdout.flush()
        else:
            with open(self.path, 'w') as f:
                f.write(text)

    def single(self, result: Dict[str, Any]) -> None:
        doc = {jsonio.PROVENANCE_KEY: self.cfg.provenance()}
        doc.update(result)
        self._write(jsonio.dumps(doc, self.pretty) + '\n')

    def stream(self, records) -> None:
        lines = [jsonio.dumps({jsonio.PROVENANCE_KEY: self.cfg.provenance()})]
        lines += [jsonio.dumps(r) for r in records]
        self._write('\n'.join(lines) + '\n')

    def text(self, text: str) -> None:
        self._write(text)


def _matrix_json(M: np.ndarray) -> List[List[float]]:
    return [[float(v) for v in row] for row in np.asarray(M)]


# ---------------------------------------------------------------------------
# shared helpers
# ---------------------------------------------------------------------------
def _graph(text: Optional[str]):
    return parse_graph(text) if text else None


def _vertices_for(ineq: LinearInequality, args) -> Tuple[LinearInequality, VRep]:
    """The polytope an inequality is checked against, lifting it to --graph if larger."""
    graph = _graph(args.graph)
    if ineq.space == RAW:
        if not args.vertices:
            raise ValidationError('raw inequalities need --vertices FILE')
        rep = hvfile.loads(_read_text(args.vertices))
        if not isinstance(rep, VRep):
            raise ValidationError('--vertices must hold a V-representation')
        return ineq, rep
    if ineq.space == CORRELATION:
        if graph is not None:
            if not isinstance(graph, BipartiteShape):
                raise ValidationError('correlation inequalities need a K_m,n graph, got {}'.format(graph.label))
            if (graph.m, graph.n) != (ineq.shape.m, ineq.shape.n):
                ineq = zero_lift(ineq, graph.m, graph.n)
        return ineq, cut_vectors(ineq.shape, force=args.force)
    if graph is not None and graph != ineq.shape and not (ineq.space == COR and graph == ineq.shape.suspension()):
        raise ValidationError('--graph {} does not match the inequality on {}'.format(graph.label, ineq.shape.label))
    if ineq.space == COR:
        return ineq, cor_vertices(ineq.shape, force=args.force)
    return ineq, cut_vectors(ineq.shape, force=args.force)


def _certificate_json(cert) -> Dict[str, Any]:
    if cert.inside:
        return {'inside': True,
                'weights': {k: w if isinstance(w, float) else rational_str(w) for k, w in cert.weights.items()}}
    if cert.separator is None:
        return {'inside': False, 'separator': None}
    return {'inside': False, 'separator': jsonio.inequality_to_json(cert.separator),
            'separator_text': cert.separator.expression()}


def _solution_json(sol: sdp.SdpSolution) -> Dict[str, Any]:
    return {
        'value': sol.value,
        'bracket': list(sol.bracket),
        'iterations': sol.iterations,
        'residuals': {'primal': sol.residuals[0], 'dual': sol.residuals[1], 'gap': sol.residuals[2]},
        'matrix': _matrix_json(sol.gram),
        'realization': _matrix_json(sol.realization.vectors),
        'active_constraints': [f.expression() for f in sol.active_constraints],
    }


def _sdp_kwargs(args) -> Dict[str, Any]:
    return {'force': args.force, 'gap_tol': args.tol, 'max_iter': args.max_iter}


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------
_KIND_ORDER = ('behavior', 'cor', 'suspension', 'correlation')


def _to_cor(vec) -> CorVector:
    if isinstance(vec, CorVector):
        return vec
    if isinstance(vec, BehaviorVector):
        return iota_inv(vec)
    if isinstance(vec, SuspensionVector):
        return covariance_inv(vec)
    return covariance_inv(suspend_correlations(vec))


def _from_cor(p: CorVector, kind: str):
    if kind == 'cor':
        return p
    if kind == 'behavior':
        return iota(p)
    x = covariance(p)
    return x if kind == 'suspension' else project_correlations(x)


def cmd_map(args, out: _Output) -> None:
    vec = _read_vector(args.input)
    if args.to == vec.kind and not args.center:
        result = vec
    elif isinstance(vec, SuspensionVector) and args.to == 'correlation' and not args.center:
        result = project_correlations(vec)
    else:
        p = _to_cor(vec)
        if args.center:
            p = center_marginals(p)
        result = _from_cor(p, args.to)
    out.single(jsonio.vector_to_json(result))


def cmd_check_valid(args, out: _Output) -> None:
    ineq, vrep = _vertices_for(_read_inequality(args.input), args)
    if args.backend == FLOAT:
        values = np.asarray(vrep.vertices, dtype=float).dot(np.asarray(ineq.coefficients, dtype=float))
        rhs = float(ineq.rhs)
        worst = [vrep.name(k) for k, v in enumerate(values) if v > rhs + config.FLOAT_TOL]
        out.single({'valid': not worst, 'max_value': float(values.max()), 'rhs': rhs,
                    'violated_by': worst[:10], 'vertices': len(vrep)})
        return
    values = [ineq.value(v) for v in vrep.vertices]
    best = max(values)
    worst = [vrep.name(k) for k, v in enumerate(values) if v > ineq.rhs]
    out.single({'valid': not worst, 'max_value': rational_str(best), 'rhs': rational_str(ineq.rhs),
                'violated_by': worst[:10], 'vertices': len(vrep)})


def cmd_check_facet(args, out: _Output) -> None:
    ineq, vrep = _vertices_for(_read_inequality(args.input), args)
    if args.backend == FLOAT:
        report = facet_check_float(ineq, vrep)
        tight, rhs = report.tight_value, float(ineq.rhs)
    else:
        report = facet_check(ineq, vrep)
        tight, rhs = rational_str(report.tight_value), rational_str(ineq.rhs)
    out.single({'valid': report.valid, 'is_facet': report.is_facet, 'tight_value': tight, 'rhs': rhs,
                'root_count': report.root_count, 'affine_rank': report.affine_rank, 'dim': vrep.dim})


def cmd_canonicalize(args, out: _Output) -> None:
    canon = canonical_form(_read_inequality(args.input), prune=args.prune)
    doc = jsonio.inequality_to_json(canon)
    doc['pretty'] = canon.pretty()
    out.single(doc)


def cmd_classify(args, out: _Output) -> None:
    classes = classify(_read_inequalities(args.input), prune=args.prune, with_orbits=not args.no_orbits)
    records = []
    for k, cls in enumerate(classes):
        doc = jsonio.inequality_to_json(cls.representative)
        doc.update({'class': k, 'members': list(cls.members), 'orbit_size': cls.orbit_size})
        records.append(doc)
    out.stream(records)


def _emit_rep(rep: Union[VRep, HRep], args, out: _Output) -> None:
    if args.format == 'hv':
        out.text(hvfile.dumps(rep, header='cutpoly {} {}'.format(__version__, out.cfg.subcommand)))
        return
    if isinstance(rep, HRep):
        records = [jsonio.inequality_to_json(f) for f in rep.inequalities]
        records += [{'equation': [rational_str(c) for c in a], 'rhs': rational_str(a0)} for a, a0 in rep.equations]
    else:
        records = [jsonio.point_to_json(v, rep.space, rep.shape, rep.names[k] if rep.names else None)
                   for k, v in enumerate(rep.vertices)]
    out.stream(records)


def cmd_enumerate_facets(args, out: _Output) -> None:
    graph = _graph(args.graph)
    if graph is not None:
        if args.body == 'cor':
            if not isinstance(graph, BipartiteShape):
                raise ValidationError('the correlation polytope lives on K_m,n, got {}'.format(graph.label))
            vrep = cor_vertices(graph, force=args.force)
        else:
            vrep = cut_vectors(graph, force=args.force)
    else:
        rep = hvfile.loads(_read_text(args.input))
        if not isinstance(rep, VRep):
            raise ValidationError('enumerate-facets needs a V-representation')
        vrep = rep
    _emit_rep(dd_convert(vrep, force=args.force), args, out)


def cmd_enumerate_vertices(args, out: _Output) -> None:
    graph = _graph(args.graph)
    if args.polytope:
        if graph is None:
            raise ValidationError('--polytope needs --graph')
        base = graph.base if isinstance(graph, SuspensionShape) else graph
        if not isinstance(base, BipartiteShape):
            raise ValidationError('{} lives on K_m,n, got {}'.format(args.polytope, graph.label))
        hrep = rcmet_hrep(base) if args.polytope == 'rcmet' else rmet_hrep(base)
    else:
        rep = hvfile.loads(_read_text(args.input))
        if not isinstance(rep, HRep):
            raise ValidationError('enumerate-vertices needs an H-representation')
        hrep = rep
    _emit_rep(dd_convert(hrep, force=args.force), args, out)


def cmd_sdp_max(args, out: _Output) -> None:
    ineq = _read_inequality(args.input)
    objective = sdp.objective_from_inequality(ineq)
    if args.constraints == 'rmet':
        sol = sdp.elliptope_rmet_max(objective, **_sdp_kwargs(args))
    else:
        sol = sdp.elliptope_max(objective, **_sdp_kwargs(args))
    doc = _solution_json(sol)
    doc['rhs'] = rational_str(ineq.rhs)
    doc['constraints'] = args.constraints
    out.single(doc)


def _gap_search(args, out: _Output) -> None:
    graph = _graph(args.graph)
    if not isinstance(graph, BipartiteShape):
        raise ValidationError('--search-gap needs --graph K_m,n')
    res = sdp.rmet_gap_search(graph, args.search_gap, seed=args.seed, force=args.force, max_iter=args.max_iter)
    out.single({'trials': res.trials, 'projected_members': res.projected_members,
                'hits': [jsonio.vector_to_json(x) for x in res.hits]})


def cmd_membership(args, out: _Output) -> None:
    if args.search_gap is not None:
        return _gap_search(args, out)
    vec = _read_vector(args.input)
    if args.body == 'cut':
        if isinstance(vec, BehaviorVector):
            vec = iota_inv(vec)
        point = tuple(to_fraction(v) for v in vec.coords)
        if isinstance(vec, CorVector):
            vrep = cor_vertices(vec.shape, force=args.force)
        else:
            vrep = cut_vectors(vec.shape, force=args.force)
        if args.backend == FLOAT:
            cert = hull_membership_float([float(v) for v in vec.coords], vrep, force=args.force)
        else:
            cert = hull_membership(point, vrep, force=args.force)
        out.single({'body': 'cut', 'member': cert.inside, 'certificate': _certificate_json(cert)})
        return
    if isinstance(vec, (BehaviorVector, CorVector)):
        vec = covariance(_to_cor(vec))
    res = sdp.elliptope_membership(vec, **_sdp_kwargs(args))
    doc = {'body': 'elliptope', 'member': res.member, 'margin': res.margin, 'lower': res.lower,
           'boundary': res.boundary, 'iterations': res.iterations, 'witness': _matrix_json(res.witness)}
    if res.separator is not None:
        doc['separator'] = {'weights': list(res.separator), 'rhs': 1}
    if isinstance(vec, SuspensionVector):
        doc['rmet'] = hrep_contains(rmet_hrep(vec.shape), tuple(to_fraction(v) for v in vec.coords))
    out.single(doc)


def cmd_cut_condition(args, out: _Output) -> None:
    vec = _read_vector(args.input)
    if isinstance(vec, SuspensionVector):
        vec = project_correlations(vec)
    if not isinstance(vec, CorrelationVector):
        raise ValidationError('cut-condition takes a correlation or suspension vector, got {}'.format(vec.kind))
    res = sdp.cut_condition(vec, force=args.force)
    out.single({'passes': res.passes, 'within_tolerance': res.within_tolerance,
                'y': jsonio.vector_to_json(res.y), 'certificate': _certificate_json(res.certificate)})


def cmd_trielim(args, out: _Output) -> None:
    res = triangular_eliminate(_read_inequality(args.input))
    doc = jsonio.inequality_to_json(res.inequality)
    doc['pretty'] = res.inequality.pretty()
    doc['trielim'] = {'already_bipartite': res.already_bipartite, 'added_rhs': res.added_rhs,
                      'eliminated': [{'edge': u + v, 'coefficient': c} for u, v, c in res.eliminated]}
    out.single(doc)


def cmd_zero_lift(args, out: _Output) -> None:
    graph = _graph(args.graph)
    if not isinstance(graph, BipartiteShape):
        raise ValidationError('zero-lift needs --graph K_m,n')
    lifted = zero_lift(_read_inequality(args.input), graph.m, graph.n)
    doc = jsonio.inequality_to_json(lifted)
    doc['pretty'] = lifted.pretty()
    out.single(doc)


def cmd_catalog(args, out: _Output) -> None:
    if args.name is None:
        out.stream([dict(name=name, **jsonio.inequality_to_json(catalog.get(name))) for name in catalog.names()])
        return
    ineq = catalog.get(args.name)
    if args.space:
        ineq = {'cor': to_cor, 'suspension': to_suspension}[args.space](ineq)
    doc = jsonio.inequality_to_json(ineq)
    doc['name'] = args.name
    doc['pretty'] = ineq.pretty()
    out.single(doc)


_COMMANDS = {
    'map': (cmd_map, EXACT, 'convert a vector between behavior, cor, suspension and correlation coordinates'),
    'check-valid': (cmd_check_valid, EXACT, 'exact validity of an inequality over its polytope'),
    'check-facet': (cmd_check_facet, EXACT, 'exact facet test of an inequality'),
    'canonicalize': (cmd_canonicalize, EXACT, 'least representative under permutations and switching'),
    'classify': (cmd_classify, EXACT, 'group inequalities into symmetry classes'),
    'enumerate-facets': (cmd_enumerate_facets, EXACT, 'facets of a polytope given by vertices'),
    'enumerate-vertices': (cmd_enumerate_vertices, EXACT, 'vertices of a polytope given by inequalities'),
    'sdp-max': (cmd_sdp_max, FLOAT, 'maximise an inequality over an elliptope'),
    'membership': (cmd_membership, FLOAT, 'elliptope or cut polytope membership of a vector'),
    'cut-condition': (cmd_cut_condition, EXACT, 'the arcsin cut condition for a correlation vector'),
    'trielim': (cmd_trielim, EXACT, 'triangular elimination of a complete-graph inequality'),
    'zero-lift': (cmd_zero_lift, EXACT, 'extend a correlation inequality with zero coefficients'),
    'catalog': (cmd_catalog, EXACT, 'named inequalities'),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-o', '--output', default=None, help='output path (default stdout)')
    common.add_argument('--force', action='store_true', help='override size guards')
    common.add_argument('--no-timestamp', action='store_true', help='omit the provenance timestamp')
    common.add_argument('--pretty', action='store_true', help='indent single JSON results')
    common.add_argument('-v', '--verbose', action='count', default=0, help='-v info, -vv debug logging on stderr')

    solver = argparse.ArgumentParser(add_help=False)
    solver.add_argument('--tol', type=float, default=None, help='relative duality gap tolerance')
    solver.add_argument('--max-iter', type=int, default=None, help='interior point iteration cap')

    parser = _Parser(prog='cutpoly', description='Cut polytopes, correlation polytopes and elliptopes of '
                                                 'two-party correlation experiments.')
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    sub = parser.add_subparsers(dest='command', metavar='COMMAND', parser_class=_Parser)
    sub.required = True

    def add(name, *parents, input_arg=True):
        p = sub.add_parser(name, parents=[common] + list(parents), help=_COMMANDS[name][2])
        if input_arg:
            p.add_argument('input', nargs='?', default='-', help='input file (default stdin)')
        return p

    p = add('map')
    p.add_argument('--to', required=True, choices=_KIND_ORDER)
    p.add_argument('--center', action='store_true', help='set every single-party marginal to 1/2')

    for name in ('check-valid', 'check-facet'):
        p = add(name)
        p.add_argument('--graph', help='check over the cut polytope of this graph, e.g. K4,4')
        p.add_argument('--vertices', help='V-representation file for raw inequalities')
        p.add_argument('--backend', choices=(EXACT, FLOAT), default=None,
                       help='exact rationals (default) or floating point with tolerance FLOAT_TOL')

    for name in ('canonicalize', 'classify'):
        p = add(name)
        p.add_argument('--prune', action='store_true', help='lift the symmetry group size guard')
        if name == 'classify':
            p.add_argument('--no-orbits', action='store_true', help='skip orbit sizes')

    p = add('enumerate-facets')
    p.add_argument('--graph', help='enumerate facets of the polytope on this graph')
    p.add_argument('--body', choices=('cut', 'cor'), default='cut')
    p.add_argument('--format', choices=('json', 'hv'), default='json')

    p = add('enumerate-vertices')
    p.add_argument('--graph', help='K_m,n for --polytope')
    p.add_argument('--polytope', choices=('rcmet', 'rmet'))
    p.add_argument('--format', choices=('json', 'hv'), default='json')

    p = add('sdp-max', solver)
    p.add_argument('--constraints', choices=('rmet', 'none'), default='none')

    p = add('membership', solver)
    p.add_argument('--body', choices=('elliptope', 'cut'), default='elliptope')
    p.add_argument('--backend', choices=(EXACT, FLOAT), default=None,
                   help='for --body cut: exact LP (default) or floating point LP; the elliptope is float only')
    p.add_argument('--search-gap', type=int, default=None, metavar='N',
                   help='sample N rooted semimetric points on --graph instead of reading a vector')
    p.add_argument('--graph', help='K_m,n for --search-gap')
    p.add_argument('--seed', type=int, default=0)

    add('cut-condition')
    add('trielim')

    p = add('zero-lift')
    p.add_argument('--graph', required=True, help='target K_m,n')

    p = add('catalog', input_arg=False)
    p.add_argument('name', nargs='?', choices=catalog.names())
    p.add_argument('--space', choices=('cor', 'suspension'), help='rewrite the entry in these coordinates')
    return parser


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format='%(levelname)s %(name)s: %(message)s')


def _resolve_backend(args, default: str) -> str:
    chosen = getattr(args, 'backend', None)
    if args.command == 'membership':
        cut = args.body == 'cut' and args.search_gap is None
        if chosen == EXACT and not cut:
            raise UsageError('the elliptope is only solved in floating point; --backend exact needs --body cut')
        if chosen is None:
            chosen = EXACT if cut else FLOAT
    return chosen or default


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        func, default_backend, _ = _COMMANDS[args.command]
        args.backend = _resolve_backend(args, default_backend)
    except UsageError as e:
        sys.stderr.write('cutpoly: error: {}\n'.format(e))
        return EXIT_USAGE
    except SystemExit as e:
        return int(e.code or 0)

    _configure_logging(args.verbose)
    cfg = CommandConfig(args.command, getattr(args, 'input', None), args.output, args.backend, args.force,
                        getattr(args, 'tol', None), getattr(args, 'max_iter', None))
    if not args.no_timestamp:
        cfg.timestamp = datetime.datetime.now(datetime.timezone.utc).isoformat(timespec='seconds')

    collector = _OverrideCollector()
    config.guard_log.addHandler(collector)
    cfg.overrides = collector.messages
    try:
        func(args, _Output(cfg, args.output, args.pretty))
    except GuardError as e:
        sys.stderr.write('cutpoly: guard: {}\n'.format(e))
        return EXIT_GUARD
    except SolverError as e:
        sys.stderr.write('cutpoly: solver: {} (bracket {})\n'.format(e, e.bracket))
        return EXIT_SOLVER
    except (ValidationError, CutpolyError) as e:
        sys.stderr.write('cutpoly: error: {}\n'.format(e))
        return EXIT_INVALID
    finally:
        config.guard_log.removeHandler(collector)
    return EXIT_OK


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == '__main__':
    main()
