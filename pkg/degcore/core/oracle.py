#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains the exhaustive oracle for the smallest induced subgraph of minimum degree >= k
"""

from __future__ import print_function, division, absolute_import

__author__ = "Tomas Poveda"
__license__ = "MIT"
__maintainer__ = "Tomas Poveda"
__email__ = "tpovedatd@gmail.com"

import logging
from itertools import combinations

import networkx as nx

from degcore.core import exceptions
from degcore.core.defines import Limits
from degcore.core.graph import vertex_set, format_vertex_set

LOGGER = logging.getLogger('degcore')


class OracleResult(object):
    def __init__(self, found, min_size=None, example_set=None):
        self._found = bool(found)
        self._min_size = min_size if found else None
        self._example_set = vertex_set(example_set) if found else frozenset()

    def __bool__(self):
        return self._found

    __nonzero__ = __bool__

    def __repr__(self):
        if not self._found:
            return 'OracleResult(none)'
        return 'OracleResult(min_size={}, example={})'.format(self._min_size, format_vertex_set(self._example_set))

    @property
    def found(self):
        return self._found

    @property
    def min_size(self):
        return self._min_size

    @property
    def example_set(self):
        return self._example_set

    def to_dict(self):
        return {'found': self._found, 'min_size': self._min_size, 'example_set': sorted(self._example_set)}


def brute_min_subgraph(graph, k):
    """
    Scans vertex subsets by size, lexicographically within a size, and returns the first one inducing minimum
    degree >= k. Only vertices of the k-core are scanned since every such subgraph lives inside it
    :param graph: Graph, at most 20 vertices
    :param k: int
    :return: OracleResult
    """

    if graph.n > Limits.ORACLE_MAX_VERTICES:
        raise exceptions.TooLarge('oracle handles n <= {}, got n={}'.format(Limits.ORACLE_MAX_VERTICES, graph.n))
    if k < 1:
        raise exceptions.DomainError('oracle needs k >= 1, got {}'.format(k))

    candidates = sorted(nx.k_core(graph.to_networkx(), k).nodes())
    if not candidates:
        return OracleResult(False)

    position = dict((v, index) for index, v in enumerate(candidates))
    masks = list()
    for v in candidates:
        mask = 0
        for u in graph.neighbours(v):
            if u in position:
                mask |= 1 << position[u]
        masks.append(mask)

    for size in range(k + 1, len(candidates) + 1):
        for chosen in combinations(range(len(candidates)), size):
            subset = 0
            for index in chosen:
                subset |= 1 << index
            if all(bin(masks[index] & subset).count('1') >= k for index in chosen):
                example = [candidates[index] for index in chosen]
                LOGGER.debug('Oracle found {} for k={}'.format(format_vertex_set(example), k))
                return OracleResult(True, size, example)

    raise exceptions.InternalInvariantBreach('the {}-core itself failed the oracle check'.format(k))
