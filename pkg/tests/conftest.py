#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Shared fixtures for degcore tests
"""

import pytest

from degcore.core.edgelist import write_edge_list
from degcore.core.generators import gen_wheel

from tests import graphs


@pytest.fixture(autouse=True)
def log_dir(tmp_path, monkeypatch):
    monkeypatch.setenv('DEGCORE_LOG_DIR', str(tmp_path / 'logs'))
    return tmp_path / 'logs'


@pytest.fixture
def k5():
    return graphs.complete(5)


@pytest.fixture
def k6():
    return graphs.complete(6)


@pytest.fixture
def wheel37():
    return gen_wheel(3, 7)


@pytest.fixture
def cross_k4():
    return graphs.cross_k4()


@pytest.fixture
def k23():
    return graphs.k23()


@pytest.fixture
def graph_file(tmp_path):
    """
    Returns a function writing a graph as an edge-list file inside the test folder
    """

    def _write(graph, name='graph.edges'):
        file_path = tmp_path / name
        write_edge_list(graph, str(file_path))
        return str(file_path)

    return _write
