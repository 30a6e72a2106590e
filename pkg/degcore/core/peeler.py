#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains k-core peeling and the edge threshold that guarantees a non-empty core
"""

from __future__ import print_function, division, absolute_import

__author__ = "Tomas Poveda"
__license__ = "MIT"
__maintainer__ = "Tomas Poveda"
__email__ = "tpovedatd@gmail.com"

import heapq
import logging
from math import comb

from degcore.core import exceptions
from degcore.core.defines import Orders

LOGGER = logging.getLogger('degcore')


class PeelResult(object):
    def __init__(self, core, removed_order):
        self._core = core
        self._removed_order = tuple(removed_order)

    def __repr__(self):
        return 'PeelResult(core={}, removed={})'.format(self._core, len(self._removed_order))

    @property
    def core(self):
        return self._core

    @property
    def removed_order(self):
        """
        Sequence of (vertex id, degree at removal) pairs
        :return: tuple(tuple(int, int))
        """

        return self._removed_order

    @property
    def removed(self):
        return frozenset(v for v, _ in self._removed_order)

    @property
    def is_empty(self):
        return self._core.is_empty


def peel_to_core(graph, k, order=Orders.LOWEST):
    """
    Repeatedly removes a vertex of current degree <= k - 1 until none is left, returning the k-core
    :param graph: Graph
    :param k: int, degree bound
    :param order: str, Orders.LOWEST removes the lowest low-degree id first, Orders.HIGHEST the highest one
    :return: PeelResult
    """

    if k < 1:
        raise exceptions.DomainError('peeling needs k >= 1, got {}'.format(k))
    if order not in (Orders.LOWEST, Orders.HIGHEST):
        raise exceptions.DomainError('unknown peel order: "{}"'.format(order))

    sign = 1 if order == Orders.LOWEST else -1
    degrees = dict((v, graph.degree(v)) for v in graph.vertex_ids)
    heap = [sign * v for v, degree in degrees.items() if degree <= k - 1]
    heapq.heapify(heap)
    removed = set()
    removed_order = list()

    # once a vertex drops to degree <= k - 1 it stays there, so the heap never holds stale candidates
    while heap:
        v = sign * heapq.heappop(heap)
        if v in removed:
            continue
        removed.add(v)
        removed_order.append((v, degrees[v]))
        for u in graph.neighbours(v):
            if u in removed:
                continue
            degrees[u] -= 1
            if degrees[u] == k - 1:
                heapq.heappush(heap, sign * u)

    core = graph.delete(removed)
    if removed_order:
        LOGGER.debug('Peeled {} vertices for k={}, core has {} vertices'.format(len(removed_order), k, core.n))

    return PeelResult(core, removed_order)


def fact1_threshold(k, n):
    """
    Returns the edge count (k - 1)(n - k + 2) + C(k - 2, 2) above which a graph on n vertices always has a
    non-empty k-core
    :param k: int
    :param n: int
    :return: int
    """

    if k < 2:
        raise exceptions.DomainError('threshold needs k >= 2, got {}'.format(k))
    if n < k - 1:
        raise exceptions.DomainError('threshold needs n >= k - 1, got n={} k={}'.format(n, k))

    return (k - 1) * (n - k + 2) + comb(k - 2, 2)
