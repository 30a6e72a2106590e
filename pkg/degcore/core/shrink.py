#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains the red/blue shrink used when a graph of minimum degree >= k has few degree-k vertices
"""

from __future__ import print_function, division, absolute_import

__author__ = "Tomas Poveda"
__license__ = "MIT"
__maintainer__ = "Tomas Poveda"
__email__ = "tpovedatd@gmail.com"

import logging
from fractions import Fraction

from degcore.core import exceptions
from degcore.core.defines import Limits
from degcore.core.graph import Graph, vertex_set

LOGGER = logging.getLogger('degcore')


class AppendixState(object):
    def __init__(self, graph, k, trimmed, trimmed_edges, t1, t2, red, blue):
        self._graph = graph
        self._k = k
        self._trimmed = trimmed
        self._trimmed_edges = tuple(trimmed_edges)
        self._t1 = vertex_set(t1)
        self._t2 = vertex_set(t2)
        self._red = vertex_set(red)
        self._blue = vertex_set(blue)

    def __repr__(self):
        return 'AppendixState(trimmed={}, |T|={}, red={}, blue={})'.format(
            len(self._trimmed_edges), len(self.T), len(self._red), len(self._blue))

    @property
    def graph(self):
        return self._graph

    @property
    def k(self):
        return self._k

    @property
    def trimmed(self):
        return self._trimmed

    @property
    def trimmed_edges(self):
        return self._trimmed_edges

    @property
    def T1(self):
        return self._t1

    @property
    def T2(self):
        return self._t2

    @property
    def T(self):
        return frozenset(self._graph.vertex_ids) - self._t1 - self._t2

    @property
    def red(self):
        return self._red

    @property
    def blue(self):
        return self._blue

    @property
    def output(self):
        return self._graph.delete(self._red)

    def validate(self):
        """
        Checks the trimming and colouring invariants
        :return: list(str), found errors
        """

        errors = list()
        k_bound = self._k + 2
        for u, v in self._trimmed.edges():
            if self._trimmed.degree(u) >= k_bound and self._trimmed.degree(v) >= k_bound:
                errors.append('edge {}-{} still joins two vertices of degree >= {}'.format(u, v, k_bound))
                break
        if not self._red.isdisjoint(self._blue):
            errors.append('vertex {} is both red and blue'.format(min(self._red & self._blue)))
        if not self._red <= self.T:
            errors.append('red vertex {} lies outside T'.format(min(self._red - self.T)))

        return errors


def _check_preconditions(graph, k):
    if graph.is_empty or not graph.has_min_degree(k):
        raise exceptions.PreconditionViolated('shrink needs minimum degree >= {}, got {}'.format(k, graph.min_degree()))
    degree_k = len(graph.vertices_with_degree(k))
    if Fraction(degree_k) > Fraction(graph.n, Limits.FEW_DEGREE_K_DIVISOR * k):
        raise exceptions.PreconditionViolated('{} vertices of degree {} exceed n/(3k) = {}'.format(
            degree_k, k, Fraction(graph.n, Limits.FEW_DEGREE_K_DIVISOR * k)))


def appendix_trace(graph, k):
    """
    Runs the full procedure and returns every intermediate set: trims edges between vertices of degree >= k + 2
    (lexicographic order), splits the vertices into T1 (neighbours of degree-k vertices), T2 (degree >= 9k) and T,
    then alternates red picks in T with blue protection of the red vertex neighbours
    :param graph: Graph, minimum degree >= k with at most n/(3k) degree-k vertices
    :param k: int
    :return: AppendixState
    """

    _check_preconditions(graph, k)

    # degrees only drop while trimming, so an edge skipped once never becomes eligible again
    degrees = dict((v, graph.degree(v)) for v in graph.vertex_ids)
    kept_edges, trimmed_edges = list(), list()
    for u, v in graph.edges():
        if degrees[u] >= k + 2 and degrees[v] >= k + 2:
            degrees[u] -= 1
            degrees[v] -= 1
            trimmed_edges.append((u, v))
        else:
            kept_edges.append((u, v))
    trimmed = Graph.from_edges(kept_edges, vertices=graph.vertex_ids)
    _check_preconditions(trimmed, k)

    t1 = set()
    for v in trimmed.vertices_with_degree(k):
        t1.update(trimmed.neighbours(v))
    t2 = frozenset(v for v in trimmed.vertex_ids if trimmed.degree(v) >= Limits.APPENDIX_HIGH_DEGREE_FACTOR * k)
    candidates = [v for v in trimmed.vertex_ids if v not in t1 and v not in t2]
    if 3 * len(candidates) < trimmed.n:
        raise exceptions.InternalInvariantBreach('|T| = {} < n/3 after trimming'.format(len(candidates)))

    red, blue = set(), set()
    for w in candidates:
        if w in red or w in blue:
            continue
        red.add(w)
        for v in trimmed.neighbours(w):
            if v in red:
                continue
            missing = k - sum(1 for u in trimmed.neighbours(v) if u in blue)
            for u in trimmed.neighbours(v):
                if missing <= 0:
                    break
                if u not in red and u not in blue:
                    blue.add(u)
                    missing -= 1

    state = AppendixState(graph, k, trimmed, trimmed_edges, t1, t2, red, blue)
    LOGGER.debug('Few-degree-{} shrink: {}'.format(k, state))

    return state


def shrink_few_degree_k(graph, k):
    """
    Returns a subgraph of minimum degree >= k on at most (1 - 1/(27k^2))n vertices
    :param graph: Graph
    :param k: int
    :return: Graph
    """

    state = appendix_trace(graph, k)
    output = state.output
    bound = (1 - Fraction(1, Limits.APPENDIX_DIVISOR * k * k)) * graph.n
    if output.is_empty or not output.has_min_degree(k):
        raise exceptions.InternalInvariantBreach('shrink output lost minimum degree {}'.format(k))
    if output.n > bound:
        raise exceptions.InternalInvariantBreach('shrink output has {} vertices > {}'.format(output.n, bound))

    return output
