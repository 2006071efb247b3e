import json

import pytest

from gias3.cutpoly import __version__, catalog, config
from gias3.cutpoly.cli import EXIT_GUARD, EXIT_INVALID, EXIT_OK, EXIT_SOLVER, EXIT_USAGE, run


def _lines(capsys):
    return [json.loads(line) for line in capsys.readouterr().out.splitlines()]


def _single(capsys):
    docs = _lines(capsys)
    assert len(docs) == 1
    return docs[0]


def _write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


def test_catalog_entry(capsys):
    assert run(['catalog', 'chsh']) == EXIT_OK
    doc = _single(capsys)
    assert doc['a'] == [[1, 1], [1, -1]]
    assert doc['rhs'] == 2
    prov = doc['provenance']
    assert prov['subcommand'] == 'catalog'
    assert prov['backend'] == 'exact'
    assert prov['version'] == __version__
    assert prov['overrides'] == []
    assert 'timestamp' in prov


def test_catalog_listing(capsys):
    assert run(['catalog', '--no-timestamp']) == EXIT_OK
    docs = _lines(capsys)
    assert len(docs) == len(catalog.names()) + 1
    assert set(docs[0]) == {'provenance'}
    assert 'timestamp' not in docs[0]['provenance']
    assert [d['name'] for d in docs[1:]] == catalog.names()


def test_catalog_in_p_coordinates(capsys):
    assert run(['catalog', 'chsh', '--space', 'cor']) == EXIT_OK
    doc = _single(capsys)
    assert doc['space'] == 'cor'
    assert doc['nodes'] == {'A': [-1, 0], 'B': [-1, 0]}


def test_catalog_to_check_facet(tmp_path, capsys):
    path = str(tmp_path / 'chsh.json')
    assert run(['catalog', 'chsh', '-o', path]) == EXIT_OK
    assert capsys.readouterr().out == ''
    assert run(['check-facet', path]) == EXIT_OK
    doc = _single(capsys)
    assert doc['is_facet']
    assert doc['tight_value'] == '2'
    assert doc['root_count'] == 4
    assert doc['provenance']['input'] == path


def test_check_facet_lifts_to_the_requested_graph(tmp_path, capsys):
    path = str(tmp_path / 'chsh.json')
    run(['catalog', 'chsh', '-o', path])
    assert run(['check-facet', path, '--graph', 'K3,3']) == EXIT_OK
    doc = _single(capsys)
    assert doc['is_facet']
    assert doc['dim'] == 9


def test_gisin_inequality_on_k44(tmp_path, capsys):
    path = str(tmp_path / 'g.json')
    run(['catalog', 'gisin-4a', '-o', path])
    assert run(['check-facet', path, '--graph', 'K4,4']) == EXIT_OK
    doc = _single(capsys)
    assert doc['is_facet']
    assert doc['tight_value'] == '10'


def test_check_valid(tmp_path, capsys):
    path = _write(tmp_path, 'loose.json', {'a': [[1, 1], [1, -1]], 'rows': 2, 'cols': 2, 'rhs': 1})
    assert run(['check-valid', path]) == EXIT_OK
    doc = _single(capsys)
    assert not doc['valid']
    assert doc['max_value'] == '2'
    assert doc['vertices'] == 8
    assert len(doc['violated_by']) == 4


def test_enumerate_then_classify(tmp_path, capsys):
    path = str(tmp_path / 'facets.jsonl')
    assert run(['enumerate-facets', '--graph', 'K2,2', '-o', path]) == EXIT_OK
    with open(path) as f:
        assert len(f.read().splitlines()) == 17
    assert run(['classify', path]) == EXIT_OK
    docs = _lines(capsys)
    assert len(docs) == 3
    assert sorted(d['orbit_size'] for d in docs[1:]) == [8, 8]
    assert sorted(len(d['members']) for d in docs[1:]) == [8, 8]


def test_enumerate_facets_as_hv_text(capsys):
    assert run(['enumerate-facets', '--graph', 'K2,2', '--format', 'hv']) == EXIT_OK
    text = capsys.readouterr().out
    assert text.startswith('# cutpoly')
    assert 'H 4 16' in text


def test_enumerate_vertices_of_rcmet(capsys):
    assert run(['enumerate-vertices', '--graph', 'K2,2', '--polytope', 'rcmet']) == EXIT_OK
    docs = _lines(capsys)
    assert len(docs) == 25
    assert all(d['kind'] == 'cor' for d in docs[1:])


def test_guard_refusal(capsys):
    assert run(['enumerate-facets', '--graph', 'K4,4']) == EXIT_GUARD
    assert 'guard' in capsys.readouterr().err


def test_forced_guard_is_recorded(monkeypatch, capsys):
    monkeypatch.setattr(config, 'MAX_DD_INPUT', 4)
    assert run(['enumerate-facets', '--graph', 'K2,2', '--force']) == EXIT_OK
    prov = _lines(capsys)[0]['provenance']
    assert prov['force']
    assert len(prov['overrides']) == 1
    assert 'overridden' in prov['overrides'][0]


@pytest.mark.parametrize('argv', [
    ['map'],
    ['frobnicate'],
    [],
    ['catalog', 'i4422'],
    ['sdp-max', '--max-iter', 'many'],
])
def test_usage_errors(argv, capsys):
    assert run(argv) == EXIT_USAGE


def test_version(capsys):
    assert run(['--version']) == EXIT_OK
    assert __version__ in capsys.readouterr().out


def test_invalid_input(tmp_path, capsys):
    bad = tmp_path / 'bad.json'
    bad.write_text('{"a": [[1, 1]], "rows": 2')
    assert run(['check-facet', str(bad)]) == EXIT_INVALID
    assert run(['check-facet', str(tmp_path / 'missing.json')]) == EXIT_INVALID
    err = capsys.readouterr().err
    assert err.count('cutpoly: error') == 2


def test_sdp_max(tmp_path, capsys):
    path = str(tmp_path / 'chsh.json')
    run(['catalog', 'chsh', '-o', path])
    assert run(['sdp-max', path]) == EXIT_OK
    doc = _single(capsys)
    assert doc['value'] == pytest.approx(2.8284271, abs=1e-5)
    assert doc['constraints'] == 'none'
    assert doc['provenance']['backend'] == 'float'
    assert len(doc['matrix']) == 4

    assert run(['sdp-max', path, '--max-iter', '1']) == EXIT_SOLVER
    assert 'bracket' in capsys.readouterr().err


def test_trielim(tmp_path, capsys):
    path = str(tmp_path / 'pent.json')
    run(['catalog', 'pentagonal', '-o', path])
    assert run(['trielim', path]) == EXIT_OK
    doc = _single(capsys)
    assert doc['a'] == catalog.pentagonal_trielim().matrix()
    assert doc['rhs'] == 6
    assert doc['trielim']['added_rhs'] == 4
    assert not doc['trielim']['already_bipartite']
    assert len(doc['trielim']['eliminated']) == 4


def test_zero_lift(tmp_path, capsys):
    path = str(tmp_path / 'chsh.json')
    run(['catalog', 'chsh', '-o', path])
    assert run(['zero-lift', path, '--graph', 'K2,3']) == EXIT_OK
    assert _single(capsys)['a'] == [[1, 1, 0], [1, -1, 0]]
    assert run(['zero-lift', path, '--graph', 'K5']) == EXIT_INVALID


def test_map_and_membership(tmp_path, capsys):
    origin = _write(tmp_path, 'x.json', {'kind': 'correlation', 'shape': {'m': 2, 'n': 2}, 'coords': [0, 0, 0, 0]})
    assert run(['map', origin, '--to', 'behavior']) == EXIT_OK
    doc = _single(capsys)
    assert doc['kind'] == 'behavior'
    assert doc['coords'][:4] == ['1/4'] * 4

    assert run(['membership', origin]) == EXIT_OK
    doc = _single(capsys)
    assert doc['member']
    assert doc['body'] == 'elliptope'

    pr = _write(tmp_path, 'pr.json', {'kind': 'correlation', 'shape': {'m': 2, 'n': 2}, 'coords': [1, 1, 1, -1]})
    assert run(['membership', pr, '--body', 'cut']) == EXIT_OK
    doc = _single(capsys)
    assert not doc['member']
    assert not doc['certificate']['inside']
    assert run(['cut-condition', pr]) == EXIT_OK
    assert not _single(capsys)['passes']


def test_gap_search(capsys):
    assert run(['membership', '--search-gap', '3', '--graph', 'K2,2', '--seed', '1']) == EXIT_OK
    doc = _single(capsys)
    assert doc['trials'] == 3
    assert doc['projected_members'] <= 3


def test_i3322_relaxation_bound(tmp_path, capsys):
    path = str(tmp_path / 'i3322.json')
    run(['catalog', 'i3322', '-o', path])
    assert run(['sdp-max', path, '--constraints', 'rmet', '--no-timestamp']) == EXIT_OK
    doc = _single(capsys)
    assert doc['value'] == pytest.approx(5.4641016, abs=1e-4)
    assert doc['rhs'] == '4'
    assert doc['constraints'] == 'rmet'
    assert len(doc['realization']) == 7


def test_float_backend_for_facet_checks(tmp_path, capsys):
    path = str(tmp_path / 'chsh.json')
    run(['catalog', 'chsh', '-o', path])
    assert run(['check-facet', path, '--backend', 'float']) == EXIT_OK
    doc = _single(capsys)
    assert doc['is_facet']
    assert doc['tight_value'] == pytest.approx(2.0)
    assert doc['affine_rank'] == 3
    assert doc['provenance']['backend'] == 'float'

    loose = _write(tmp_path, 'loose.json', {'a': [[1, 1], [1, -1]], 'rows': 2, 'cols': 2, 'rhs': 1})
    assert run(['check-valid', loose, '--backend', 'float']) == EXIT_OK
    doc = _single(capsys)
    assert not doc['valid']
    assert doc['max_value'] == pytest.approx(2.0)
    assert len(doc['violated_by']) == 4

    assert run(['check-facet', path, '--backend', 'exact']) == EXIT_OK
    assert _single(capsys)['provenance']['backend'] == 'exact'


def test_backend_for_cut_membership(tmp_path, capsys):
    pr = _write(tmp_path, 'pr.json', {'kind': 'correlation', 'shape': {'m': 2, 'n': 2}, 'coords': [1, 1, 1, -1]})
    assert run(['membership', pr, '--body', 'cut']) == EXIT_OK
    assert _single(capsys)['provenance']['backend'] == 'exact'

    assert run(['membership', pr, '--body', 'cut', '--backend', 'float']) == EXIT_OK
    doc = _single(capsys)
    assert doc['provenance']['backend'] == 'float'
    assert not doc['member']
    assert doc['certificate']['separator'] is not None

    origin = _write(tmp_path, 'x.json', {'kind': 'correlation', 'shape': {'m': 2, 'n': 2}, 'coords': [0, 0, 0, 0]})
    assert run(['membership', origin, '--body', 'cut', '--backend', 'float']) == EXIT_OK
    doc = _single(capsys)
    assert doc['member']
    assert sum(doc['certificate']['weights'].values()) == pytest.approx(1.0)

    assert run(['membership', origin]) == EXIT_OK
    assert _single(capsys)['provenance']['backend'] == 'float'
    assert run(['membership', origin, '--backend', 'exact']) == EXIT_USAGE
