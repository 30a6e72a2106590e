#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains tests for degcore command line
"""

import io
import os
import json

import pytest

from degcore import cli
from degcore.core.certificate import ExtractionCertificate

from tests import graphs


def _run(*argv):
    stdout, stderr = io.StringIO(), io.StringIO()
    code = cli.main(list(argv), stdout=stdout, stderr=stderr)
    return code, stdout.getvalue(), stderr.getvalue()


def test_registered_commands():
    ids = [command_class.id for command_class in cli._get_registered_commands(cli.config_dict())]
    assert ids == ['extract', 'verify', 'oracle', 'gen', 'audit']


def test_no_command():
    code, stdout, stderr = _run()
    assert code == 2
    assert stderr.startswith('usage: degcore')


def test_extract_and_verify(graph_file, k5):
    input_path = graph_file(k5)
    code, stdout, stderr = _run('extract', '--k', '3', '--t', '1', '-i', input_path)
    cert_path = input_path[:-len('.edges')] + '.cert.json'
    assert code == 0
    assert stdout == 'branch=FewDegreeK size=4\ncertificate={}\n'.format(cert_path)
    assert ExtractionCertificate.load(cert_path).witness_vertices == frozenset([1, 2, 3, 4])

    code, stdout, stderr = _run('verify', '-i', input_path, '-c', cert_path)
    assert code == 0
    assert stdout == 'branch=FewDegreeK size=4 verified=true\n'


def test_verify_tampered(graph_file, k5, tmp_path):
    input_path = graph_file(k5)
    cert_path = str(tmp_path / 'out.cert.json')
    assert _run('extract', '-i', input_path, '-o', cert_path)[0] == 0

    with io.open(cert_path, 'r', encoding='utf-8') as fh:
        data = json.load(fh)
    data['witness'] = [0, 1, 2]
    with io.open(cert_path, 'w', encoding='utf-8') as fh:
        fh.write(json.dumps(data))

    code, stdout, stderr = _run('verify', '-i', input_path, '-c', cert_path)
    assert code == 1
    assert stderr == 'min-degree violation: vertex 0 has degree 2 < 3\n'
    assert stdout == 'failed=1 verified=false\n'


def test_extract_audit(graph_file, k5):
    code, stdout, stderr = _run('extract', '-i', graph_file(k5), '--audit')
    assert code == 0
    lines = stdout.splitlines()
    assert lines[2] == 'log: start n=5 m=10 k=3 t=1 floor=4'
    assert lines[-1] == 'log: branch=FewDegreeK size=4'


def test_usage_errors(graph_file, wheel37, k5):
    code, stdout, stderr = _run('extract', '-i', graph_file(wheel37))
    assert (code, stderr) == (2, 'insufficient edges: 12 < 13\n')

    code, stdout, stderr = _run('extract', '--k', '2', '--t', '1', '-i', graph_file(k5))
    assert (code, stderr) == (2, 't-range empty for k=2\n')

    code, stdout, stderr = _run('extract', '--preset', 'k4', '-i', graph_file(k5))
    assert (code, stderr) == (2, 'insufficient edges: 10 < 13\n')

    code, stdout, stderr = _run('extract', '--jobs', '0', '-i', graph_file(k5))
    assert code == 2


def test_parse_errors(tmp_path):
    file_path = tmp_path / 'loop.edges'
    file_path.write_text(u'p 3 1\n1 1\n')
    code, stdout, stderr = _run('extract', '-i', str(file_path))
    assert (code, stderr) == (3, 'line 2: self-loop on vertex 1\n')

    code, stdout, stderr = _run('oracle', '-i', str(tmp_path / 'missing.edges'))
    assert code == 3


def test_batch(tmp_path, graph_file, k5, k6):
    graph_file(k5, name='k5.edges')
    graph_file(k6, name='k6.edges')
    code, stdout, stderr = _run('extract', '-i', str(tmp_path))
    assert code == 0
    lines = stdout.splitlines()
    assert len(lines) == 2
    assert lines[0].startswith('input={} branch=FewDegreeK size=4 '.format(tmp_path / 'k5.edges'))
    assert lines[1].startswith('input={} branch=FewDegreeK size=5 '.format(tmp_path / 'k6.edges'))
    assert os.path.isfile(str(tmp_path / 'k6.cert.json'))

    assert _run('extract', '-i', str(tmp_path), '-o', 'x.cert.json')[0] == 2


def test_oracle(graph_file, k5):
    code, stdout, stderr = _run('oracle', '-i', graph_file(k5))
    assert (code, stdout) == (0, 'min_size=4\nexample={0,1,2,3}\n')
    code, stdout, stderr = _run('oracle', '--k', '2', '-i', graph_file(graphs.path(4), name='path.edges'))
    assert (code, stdout) == (0, 'none\n')
    assert _run('oracle', '--k', '0', '-i', graph_file(k5))[0] == 2
    assert _run('oracle', '-i', graph_file(graphs.cycle(21), name='big.edges'))[0] == 2


def test_gen(tmp_path):
    code, stdout, stderr = _run('gen', 'wheel', '--n', '7', '--k', '3')
    assert code == 0
    assert stdout.splitlines()[0] == 'p 7 12'
    assert len(stdout.splitlines()) == 13

    output = str(tmp_path / 'random.edges')
    code, stdout, stderr = _run('gen', 'random', '--n', '12', '--seed', '7', '-o', output)
    assert code == 0
    assert stdout == 'm=23 n=12 output={}\n'.format(output)

    code, stdout, stderr = _run('gen', 'random', '--n', '4', '--excess', '10')
    assert code == 2


def test_audit(graph_file, cross_k4):
    code, stdout, stderr = _run('audit', '-i', graph_file(cross_k4))
    assert code == 0
    lines = stdout.splitlines()
    assert lines[0] == 'branch=SingleBigGoodSet levels=0 size=7'
    assert 'log: branch=SingleBigGoodSet size=7' in lines
    assert any(line.startswith('trace: # D1 ') for line in lines)


def test_version():
    with pytest.raises(SystemExit) as exc:
        _run('--version')
    assert exc.value.code == 0


def test_verify_mismatched_graph(graph_file, k5, k6):
    input_path = graph_file(k5, name='k5.edges')
    assert _run('extract', '-i', input_path)[0] == 0
    code, stdout, stderr = _run('verify', '-i', graph_file(k6, name='k6.edges'), '-c', input_path[:-6] + '.cert.json')
    assert code == 1
    assert stderr.startswith('witness not induced in input')


def test_oracle_wheel(graph_file, wheel37):
    code, stdout, stderr = _run('oracle', '--k', '3', '-i', graph_file(wheel37))
    assert code == 0
    assert stdout.splitlines()[0] == 'min_size=7'


def test_gen_is_canonical(tmp_path):
    code, stdout, stderr = _run('gen', 'wheel', '--k', '4', '--n', '8')
    assert stdout.splitlines()[0] == 'p 8 19'
    assert stdout.splitlines()[1:4] == ['0 1', '0 2', '0 3']

    first = _run('gen', 'random', '--n', '12', '--k', '3', '--t', '1', '--seed', '7')[1]
    assert first == _run('gen', 'random', '--n', '12', '--k', '3', '--t', '1', '--seed', '7')[1]


def test_extract_forwards_jobs(monkeypatch, graph_file, k5):
    from degcore.commands import extract as extract_command

    calls = list()
    original = extract_command.extract

    def _extract(graph, config, jobs=1, audit=None):
        calls.append(jobs)
        return original(graph, config, jobs=jobs, audit=audit)

    monkeypatch.setattr(extract_command, 'extract', _extract)
    assert _run('extract', '--jobs', '3', '-i', graph_file(k5))[0] == 0
    assert calls == [3]


def test_verify_unreadable_certificate(graph_file, k5, tmp_path):
    cert_path = tmp_path / 'broken.cert.json'
    cert_path.write_text(u'{"format": "degcore-certificate/1"')

    code, stdout, stderr = _run('verify', '-i', graph_file(k5), '-c', str(cert_path))
    assert code == 1
    assert stderr.startswith('certificate unreadable: certificate is not valid JSON')
    assert stdout == 'failed=1 verified=false\n'
