#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains tests for degcore few-degree-k shrink
"""

import random

import pytest

from degcore.core import exceptions
from degcore.core.peeler import peel_to_core
from degcore.core.shrink import appendix_trace, shrink_few_degree_k

from tests import graphs


def test_k5(k5):
    state = appendix_trace(k5, 3)
    assert state.trimmed_edges == tuple()
    assert state.T1 == frozenset()
    assert state.T2 == frozenset()
    assert state.T == frozenset(range(5))
    assert state.red == frozenset([0])
    assert state.blue == frozenset([1, 2, 3, 4])
    assert state.validate() == list()
    assert shrink_few_degree_k(k5, 3) == graphs.complete(4, offset=1)


def test_k6(k6):
    state = appendix_trace(k6, 3)
    assert state.trimmed_edges == ((0, 1), (2, 3), (4, 5))
    assert state.trimmed.m == 12
    assert state.red == frozenset([0])
    assert state.validate() == list()
    assert shrink_few_degree_k(k6, 3).n == 5


def test_preconditions(k5):
    with pytest.raises(exceptions.PreconditionViolated):
        shrink_few_degree_k(graphs.cycle(5), 3)
    with pytest.raises(exceptions.PreconditionViolated):
        shrink_few_degree_k(graphs.complete(4), 3)
    with pytest.raises(exceptions.PreconditionViolated):
        shrink_few_degree_k(k5, 5)


def _dense_core(rng, k):
    while True:
        n = rng.randint(14, 30)
        base = graphs.random_graph(rng, n, rng.randint((k + 2) * n, n * (n - 1) // 2))
        graph = peel_to_core(base, k).core
        if not graph.is_empty and 3 * k * len(graph.vertices_with_degree(k)) <= graph.n:
            return graph


@pytest.mark.parametrize('seed', range(100))
def test_random_dense_cores(seed):
    rng = random.Random(seed)
    k = rng.choice([3, 4])
    graph = _dense_core(rng, k)

    state = appendix_trace(graph, k)
    assert state.validate() == list()
    output = shrink_few_degree_k(graph, k)
    assert output.has_min_degree(k)
    assert output.is_induced_subgraph_of(graph)
    assert 27 * k * k * output.n <= (27 * k * k - 1) * graph.n
