#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains tests for degcore graph
"""

import random

import pytest

from degcore.core import exceptions
from degcore.core.graph import Graph, delete, boundary_edge_count, degree_classes, format_vertex_set
from degcore.core.generators import gen_wheel

from tests import graphs


def test_build_from_edges():
    graph = Graph.from_edges([(0, 1), (1, 2), (0, 2)])
    assert graph.n == 3
    assert graph.m == 3
    assert graph.neighbours(1) == (0, 2)
    assert graph.degree(0) == 2
    assert graph.edges() == [(0, 1), (0, 2), (1, 2)]


def test_build_from_adjacency():
    graph = Graph({0: [1], 1: [0], 2: []})
    assert graph.n == 3
    assert graph.m == 1
    with pytest.raises(exceptions.DomainError):
        Graph({0: [1], 1: []})


@pytest.mark.parametrize('edges', [[(0, 0)], [(0, 1), (1, 0)]])
def test_reject_non_simple(edges):
    with pytest.raises(exceptions.DomainError):
        Graph.from_edges(edges)


def test_unknown_vertex_is_key_error():
    graph = graphs.complete(3)
    with pytest.raises(KeyError):
        graph.degree(7)
    with pytest.raises(exceptions.UnknownVertex) as exc:
        graph.delete([1, 9])
    assert exc.value.vertex == 9
    assert str(exc.value) == 'unknown vertex: 9'


def test_delete_keeps_ids():
    k4 = graphs.complete(4)
    assert delete(k4, []) == k4
    rest = delete(k4, [0, 1])
    assert rest.vertex_ids == (2, 3)
    assert rest.edges() == [(2, 3)]
    assert graphs.complete(3).delete([0]).edges() == [(1, 2)]


def test_boundary_edge_count():
    assert boundary_edge_count(graphs.complete(3), [0]) == 2
    assert boundary_edge_count(graphs.complete(4), [0, 1]) == 5
    assert boundary_edge_count(graphs.complete(4), []) == 0


@pytest.mark.parametrize('seed', range(20))
def test_boundary_matches_recount(seed):
    rng = random.Random(seed)
    graph = graphs.random_graph(rng, 12, 25)
    removed = rng.sample(range(12), rng.randint(0, 12))
    assert graph.boundary_edge_count(removed) == graph.m - graph.delete(removed).m


@pytest.mark.parametrize('seed', range(10))
def test_delete_order_insensitive(seed):
    rng = random.Random(seed)
    graph = graphs.random_graph(rng, 10, 20)
    chosen = rng.sample(range(10), 6)
    first, second = chosen[:3], chosen[3:]
    assert graph.delete(first).delete(second) == graph.delete(first + second)


def test_degree_classes():
    view = degree_classes(graphs.star(3), 1)
    assert view.at_most[1] == frozenset([1, 2, 3])
    assert degree_classes(graphs.complete(4), 3).exactly[3] == frozenset(range(4))
    wheel = degree_classes(gen_wheel(3, 7), 3)
    assert wheel.exactly[3] == frozenset(range(1, 7))
    assert 0 not in wheel.at_most[3]


def test_degree_classes_negative_threshold():
    with pytest.raises(exceptions.DomainError):
        degree_classes(graphs.complete(3), -1)


def test_min_degree():
    assert Graph().min_degree() is None
    assert not Graph().has_min_degree(0)
    assert graphs.path(4).min_degree() == 1
    assert graphs.cycle(5).has_min_degree(2)


def test_components_sorted_by_smallest_id():
    graph = Graph.from_edges([(3, 4), (4, 5), (3, 5), (0, 1), (1, 2), (0, 2)])
    assert graph.components() == [frozenset([0, 1, 2]), frozenset([3, 4, 5])]
    assert not graph.is_connected()
    assert graphs.complete(4).is_connected()


def test_induced_subgraph_relation():
    k4 = graphs.complete(4)
    assert k4.induced([0, 1, 2]).is_induced_subgraph_of(k4)
    assert not graphs.path(3).is_induced_subgraph_of(k4)


def test_networkx_round_trip():
    wheel = gen_wheel(4, 8)
    assert Graph.from_networkx(wheel.to_networkx()) == wheel


def test_content_hash_stable():
    assert graphs.complete(4).content_hash() == graphs.complete(4).content_hash()
    assert graphs.complete(4).content_hash() != graphs.cycle(4).content_hash()


def test_format_vertex_set():
    assert format_vertex_set([2, 0, 1]) == '{0,1,2}'
    assert format_vertex_set([]) == '{}'
