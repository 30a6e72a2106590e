#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains generators for extremal and near-threshold test instances
"""

from __future__ import print_function, division, absolute_import

__author__ = "Tomas Poveda"
__license__ = "MIT"
__maintainer__ = "Tomas Poveda"
__email__ = "tpovedatd@gmail.com"

import logging
from math import comb

import networkx as nx

from degcore.core import exceptions
from degcore.core.graph import Graph

LOGGER = logging.getLogger('degcore')


def gen_wheel(k, n):
    """
    Returns the generalized wheel: a clique on ids 0..k-3 fully joined to a cycle on ids k-2..n-1
    :param k: int, >= 2
    :param n: int, >= k + 1
    :return: Graph
    """

    if k < 2:
        raise exceptions.DomainError('wheel needs k >= 2, got {}'.format(k))
    if n < k + 1 or n - k + 2 < 3:
        raise exceptions.DomainError('wheel needs n >= k + 1 and a cycle of length >= 3, got n={} k={}'.format(n, k))

    hub = nx.complete_graph(k - 2)
    rim = nx.cycle_graph(range(k - 2, n))
    wheel = nx.compose(hub, rim)
    wheel.add_edges_from((u, v) for u in hub.nodes() for v in rim.nodes())

    return Graph.from_networkx(wheel)


def gen_near_threshold(n, k, t, excess, seed):
    """
    Returns a seeded uniform random graph with exactly (k - 1)n - t + excess edges
    :param n: int
    :param k: int
    :param t: int
    :param excess: int
    :param seed: int
    :return: Graph
    """

    if n < 1:
        raise exceptions.DomainError('random graph needs n >= 1, got {}'.format(n))
    target = (k - 1) * n - t + excess
    if target < 0 or target > comb(n, 2):
        raise exceptions.DomainError('edge target {} outside [0, {}] for n={}'.format(target, comb(n, 2), n))

    LOGGER.debug('Generating G(n={}, m={}) with seed {}'.format(n, target, seed))

    return Graph.from_networkx(nx.gnm_random_graph(n, target, seed=seed))
