#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains tests for degcore extraction pipeline
"""

import random

import pytest

from degcore.core import buckets, exceptions, extractor
from degcore.core.defines import Branches
from degcore.core.graph import Graph
from degcore.core.config import ExtractionConfig
from degcore.core.certificate import verify_certificate
from degcore.core.extractor import AuditTrail, extract
from degcore.core.generators import gen_near_threshold
from degcore.core.oracle import brute_min_subgraph

from tests import graphs


@pytest.fixture
def config():
    return ExtractionConfig(3, 1)


def test_insufficient_edges(wheel37, config):
    with pytest.raises(exceptions.InsufficientEdges) as exc:
        extract(wheel37, config)
    assert str(exc.value) == 'insufficient edges: 12 < 13'


def test_too_few_vertices():
    with pytest.raises(exceptions.DomainError):
        extract(graphs.path(2), ExtractionConfig(4, 1))


def test_few_degree_k(k5, k6, config):
    certificate = extract(k5, config)
    assert (certificate.branch, certificate.size) == (Branches.FEW_DEGREE_K, 4)
    certificate = extract(k6, config)
    assert (certificate.branch, certificate.size) == (Branches.FEW_DEGREE_K, 5)
    assert verify_certificate(k6, certificate) == list()


def test_single_big_good_set(cross_k4, config):
    certificate = extract(cross_k4, config)
    assert certificate.branch == Branches.SINGLE_BIG_GOOD_SET
    assert certificate.witness_vertices == frozenset([0, 1, 2, 4, 5, 6, 7])
    assert certificate.replay_log[0] == 'start n=8 m=15 k=3 t=1 floor=7'
    assert certificate.replay_log[-1] == 'branch=SingleBigGoodSet size=7'
    assert verify_certificate(cross_k4, certificate) == list()


def test_disconnected(config):
    graph = Graph.from_edges(list(graphs.complete(5).edges()) + list(graphs.complete(5, offset=5).edges()))
    certificate = extract(graph, config)
    assert certificate.branch == Branches.DISCONNECTED
    assert certificate.witness_vertices == frozenset(range(5))


def test_recursive_descent(config):
    graph = Graph.from_edges(list(graphs.complete(5).edges()) + [(5, 0), (5, 1), (6, 0)])
    certificate = extract(graph, config)
    assert certificate.branch == Branches.RECURSIVE_DESCENT
    assert certificate.witness_vertices == frozenset(range(5))
    assert certificate.levels == 0


def test_oversize_good_set(config):
    graph = graphs.cycle_on_clique(5, 6)
    certificate = extract(graph, config)
    assert certificate.branch == Branches.OVERSIZE_GOOD_SET
    assert certificate.witness_vertices == frozenset(range(5))
    assert certificate.replay_log == ('start n=11 m=22 k=3 t=1 floor=10', 'oversize-good-set size=3',
                                      'branch=OversizeGoodSet size=5')
    assert verify_certificate(graph, certificate) == list()


def test_small_j_prime_escape():
    config = ExtractionConfig(4, 4)
    graph = graphs.circulant_with_pendants(450, (1, 2, 3), 50, 4)
    certificate = extract(graph, config)
    assert certificate.branch == Branches.SMALL_J_PRIME_ESCAPE
    assert certificate.witness_vertices == frozenset(graph.vertex_ids) - frozenset([450])
    assert 'buckets m=50 J=5 J_prime=2' in certificate.replay_log
    assert 'small-j-prime J_prime=2 size=1' in certificate.replay_log
    assert verify_certificate(graph, certificate) == list()


def test_strategy_witness(config):
    graph = graphs.circulant_with_pendants(300, (1, 2), 60, 3)
    trail = AuditTrail()
    certificate = extract(graph, config, audit=trail)
    assert certificate.branch == Branches.STRATEGY_WITNESS
    assert certificate.witness_vertices == frozenset(graph.vertex_ids) - frozenset(range(300, 307))
    assert 'buckets m=60 J=5 J_prime=2' in certificate.replay_log
    assert 'strategy-witness ell=2 size=353 colouring step ell=2; layer 0: no vertex of degree <= 2' in (
        certificate.replay_log)
    assert [state.ell for state in trail.states] == [2]
    assert verify_certificate(graph, certificate) == list()


def test_colouring_complete(monkeypatch, config):
    # K_{3,7} would take the single big good set branch, so J' is pinned to 2
    def _partition(family, n, k):
        return buckets.partition_dyadic(family, n, k, j_prime=2)

    monkeypatch.setattr(extractor, 'partition_dyadic', _partition)
    graph = graphs.complete_bipartite(3, 7)
    trail = AuditTrail()
    certificate = extract(graph, config, audit=trail)
    assert certificate.branch == Branches.COLOURING_COMPLETE
    assert certificate.witness_vertices == frozenset(range(10)) - frozenset([6])
    assert certificate.replay_log[1:] == (
        'buckets m=7 J=3 J_prime=2',
        'step ell=2 c_prime=4 branch=full popular=0 x_prime_sizes={0:4}',
        'colouring-complete colours=4 size=9',
        'branch=ColouringComplete size=9')
    assert [state.ell for state in trail.states] == [2, 3]
    assert trail.states[-1].classes == {1: frozenset([6]), 2: frozenset([7]), 3: frozenset([8]), 4: frozenset([9])}
    assert len(trail.strategies) == 1
    assert verify_certificate(graph, certificate) == list()


def test_audit_trail(cross_k4, config):
    trail = AuditTrail()
    extract(cross_k4, config, audit=trail)
    assert trail.trace_lines[0].startswith('# D1 ')
    assert trail.strategies == list()


@pytest.mark.parametrize('seed', range(500))
def test_random_extractions(seed, config):
    rng = random.Random(seed)
    n = rng.randint(10, 40)
    excess = rng.randint(0, n)
    graph = gen_near_threshold(n, 3, 1, excess, seed)

    certificate = extract(graph, config)
    assert verify_certificate(graph, certificate) == list()
    assert certificate.size <= config.size_floor(n)
    assert certificate.to_json() == extract(graph, config).to_json()

    if n <= 16:
        oracle = brute_min_subgraph(graph, 3)
        assert oracle
        assert oracle.min_size <= certificate.size
