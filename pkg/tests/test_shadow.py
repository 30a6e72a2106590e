#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains tests for degcore shadows
"""

import random

import pytest

from degcore.core import exceptions
from degcore.core.defines import Orders, ShadowSteps
from degcore.core.graph import Graph
from degcore.core.shadow import ShadowContext, shadow, shadow_deficiency, low_degree_weight, verify_shadow_closure

from tests import graphs


def _triangle_with_pendant():
    # triangle 0, 1, 2 and pendant w = 3 hanging from 0
    return Graph.from_edges([(0, 1), (1, 2), (0, 2), (0, 3)])


def _absorbing_context():
    # w=0, u=1, x=2, y=3 and the member D = {4, 5}
    graph = Graph.from_edges([(0, 1), (1, 2), (1, 3), (4, 5), (4, 2), (4, 3), (5, 2), (5, 3)])
    return ShadowContext(graph, [[4, 5]], 3)


def test_path_shadow():
    ctx = ShadowContext(graphs.path(3), [], 2)
    record = shadow(ctx, 0)
    assert record.Y == frozenset([0, 1, 2])
    assert record.deficiency_history == (0, 0, 1)
    assert record.trace == ((ShadowSteps.ADD_VERTEX, 1), (ShadowSteps.ADD_VERTEX, 2))
    assert not record.is_equality


def test_pendant_shadow_is_equality():
    ctx = ShadowContext(_triangle_with_pendant(), [], 2)
    record = shadow(ctx, 3)
    assert record.Y == frozenset([3])
    assert record.deficiency == 0
    assert record.is_equality


def test_shadow_absorbs_member():
    ctx = _absorbing_context()
    assert ctx.validate() == list()
    record = shadow(ctx, 0)
    assert record.Y == frozenset(range(6))
    assert record.trace[-1] == (ShadowSteps.ADD_SET, 0)
    assert [step for step, _ in record.trace[:3]] == [ShadowSteps.ADD_VERTEX] * 3


def test_shadow_root_must_be_low():
    with pytest.raises(exceptions.PreconditionViolated):
        shadow(ShadowContext(graphs.complete(4), [], 3), 0)


def test_context_validation():
    ctx = ShadowContext(graphs.path(3), [[0], [0, 1]], 2)
    errors = ctx.validate()
    assert 'holds vertex 0 of degree < 2' in errors[0]
    assert any('overlaps' in error for error in errors)


def test_deficiency_and_weight():
    path = graphs.path(3)
    assert shadow_deficiency(path, [0], 2) == 0
    assert low_degree_weight(path, [0, 1, 2], 2) == 2
    assert low_degree_weight(graphs.complete(4), [0, 1], 3) == 0
    pendant = _triangle_with_pendant()
    assert shadow_deficiency(pendant, [3], 2) == 0
    assert low_degree_weight(pendant, [3], 2) == 1


def test_closure_report():
    ctx = ShadowContext(graphs.path(3), [], 2)
    report = verify_shadow_closure(ctx, [0, 1], 0)
    assert not report
    assert (report.violation, report.witness) == ('III', 2)
    assert verify_shadow_closure(ctx, [0, 1, 2], 0)
    assert verify_shadow_closure(ctx, [1, 2], 0).violation == 'I'
    absorbing = _absorbing_context()
    assert verify_shadow_closure(absorbing, [0, 1, 2, 3, 4], 0).violation == 'II'


def _random_context(rng):
    k = rng.choice([2, 3, 4])
    n = rng.randint(3, 25)
    edge_count = rng.randint(0, min(n * (n - 1) // 2, k * n))
    graph = graphs.random_graph(rng, n, edge_count)

    collection, used = list(), set()
    degree_k = sorted(graph.vertices_with_degree(k))
    rng.shuffle(degree_k)
    for v in degree_k:
        if v in used:
            continue
        partners = [u for u in graph.neighbours(v) if u not in used and graph.degree(u) == k]
        if partners and rng.random() < 0.5:
            member = frozenset([v, partners[0]])
        else:
            member = frozenset([v])
        used.update(member)
        collection.append(member)

    return ShadowContext(graph, collection, k)


@pytest.mark.parametrize('seed', range(1000))
def test_random_shadow_properties(seed):
    rng = random.Random(seed)
    ctx = _random_context(rng)
    graph, k = ctx.graph, ctx.k
    assert ctx.validate() == list()

    for w in sorted(graph.vertices_with_degree_at_most(k - 1)):
        record = shadow(ctx, w)
        history = record.deficiency_history
        assert history[0] >= 0
        assert all(a <= b for a, b in zip(history, history[1:]))
        assert record.deficiency == shadow_deficiency(graph, record.Y, k)
        assert graph.boundary_edge_count(record.Y) <= (k - 1) * len(record.Y)
        assert verify_shadow_closure(ctx, record.Y, w)
        assert verify_shadow_closure(ctx, graph.vertex_ids, w)
        assert shadow(ctx, w, order=Orders.REVERSE).Y == record.Y

        low_in_y = frozenset(v for v in record.Y if graph.degree(v) <= k - 1)
        if record.is_equality:
            assert set(history) == {0}
            assert low_in_y == frozenset([w])
            assert graph.degree(w) == k - 1
        else:
            assert low_degree_weight(graph, record.Y, k) <= 2 * record.deficiency
        assert low_degree_weight(graph, record.Y, k) <= record.deficiency + 1

        if record.Y != frozenset(graph.vertex_ids):
            rest = graph.delete(record.Y)
            assert rest.vertices_with_degree_at_most(k - 1) <= graph.vertices_with_degree_at_most(k - 1) - {w}
