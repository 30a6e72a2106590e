#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains extraction certificates and their independent verifier
"""

from __future__ import print_function, division, absolute_import

__author__ = "Tomas Poveda"
__license__ = "MIT"
__maintainer__ = "Tomas Poveda"
__email__ = "tpovedatd@gmail.com"

import io
import json
import logging
import math

from degcore.core import exceptions
from degcore.core.defines import Branches, CERTIFICATE_FORMAT
from degcore.core.config import ExtractionConfig, parse_fraction
from degcore.core.graph import vertex_set

LOGGER = logging.getLogger('degcore')


class ExtractionCertificate(object):
    """
    Witness vertex set of an extraction together with the branch that produced it and the data needed to
    re-check it against the input graph
    """

    def __init__(self, branch, witness_vertices, size_bound_used, replay_log=None, config=None, n=None, m=None,
                 graph_hash=None, levels=0):
        if branch not in Branches.ALL:
            raise exceptions.DomainError('unknown branch: "{}"'.format(branch))

        self._branch = branch
        self._witness = vertex_set(witness_vertices)
        self._size_bound = size_bound_used
        self._replay_log = tuple(replay_log or tuple())
        self._config = config
        self._n = n
        self._m = m
        self._graph_hash = graph_hash
        self._levels = levels

    def __repr__(self):
        return 'ExtractionCertificate(branch={}, size={}, bound={})'.format(
            self._branch, len(self._witness), self._size_bound)

    def __eq__(self, other):
        if not isinstance(other, ExtractionCertificate):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    # ============================================================================================================
    # CLASS METHODS
    # ============================================================================================================

    @classmethod
    def from_dict(cls, data):
        """
        Builds a certificate from its dictionary form
        :param data: dict
        :return: ExtractionCertificate
        """

        if data.get('format') != CERTIFICATE_FORMAT:
            raise exceptions.DomainError('unsupported certificate format: "{}"'.format(data.get('format')))
        try:
            config = ExtractionConfig.from_dict(data['config'])
            return cls(
                branch=data['branch'], witness_vertices=data['witness'],
                size_bound_used=parse_fraction(data['size_bound']), replay_log=data.get('replay_log', list()),
                config=config, n=data['n'], m=data['m'], graph_hash=data['graph_hash'],
                levels=data.get('levels', 0))
        except KeyError as exc:
            raise exceptions.DomainError('certificate misses key: {}'.format(exc))

    @classmethod
    def from_json(cls, text):
        try:
            data = json.loads(text)
        except ValueError as exc:
            raise exceptions.DomainError('certificate is not valid JSON: {}'.format(exc))

        return cls.from_dict(data)

    @classmethod
    def load(cls, file_path):
        with io.open(file_path, 'r', encoding='utf-8') as fh:
            return cls.from_json(fh.read())

    # ============================================================================================================
    # PROPERTIES
    # ============================================================================================================

    @property
    def branch(self):
        return self._branch

    @property
    def witness_vertices(self):
        return self._witness

    @property
    def size(self):
        return len(self._witness)

    @property
    def size_bound_used(self):
        return self._size_bound

    @property
    def size_floor(self):
        return int(math.floor(self._size_bound))

    @property
    def replay_log(self):
        return self._replay_log

    @property
    def config(self):
        return self._config

    @property
    def n(self):
        return self._n

    @property
    def m(self):
        return self._m

    @property
    def graph_hash(self):
        return self._graph_hash

    @property
    def levels(self):
        return self._levels

    @property
    def is_bound(self):
        return self._config is not None and self._graph_hash is not None

    # ============================================================================================================
    # BASE
    # ============================================================================================================

    def bind(self, graph, config, levels=0, replay_log=None):
        """
        Returns a copy tied to the input graph and configuration, with the size bound recomputed as (1 - epsilon)n
        :param graph: Graph, input of the extraction
        :param config: ExtractionConfig
        :param levels: int, number of descent levels that ran
        :param replay_log: iterable(str) or None, replaces the current log when given
        :return: ExtractionCertificate
        """

        return ExtractionCertificate(
            self._branch, self._witness, config.size_bound(graph.n),
            replay_log=self._replay_log if replay_log is None else replay_log, config=config, n=graph.n,
            m=graph.m, graph_hash=graph.content_hash(), levels=levels)

    def to_dict(self):
        bound = self._size_bound
        data = {
            'format': CERTIFICATE_FORMAT,
            'branch': self._branch,
            'witness': sorted(self._witness),
            'size': len(self._witness),
            'size_bound': '{}/{}'.format(bound.numerator, bound.denominator),
            'size_floor': self.size_floor,
            'levels': self._levels,
            'replay_log': list(self._replay_log)
        }
        if self.is_bound:
            data.update({
                'config': self._config.to_dict(), 'n': self._n, 'm': self._m, 'graph_hash': self._graph_hash})

        return data

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=4, separators=(',', ': ')) + '\n'

    def save(self, file_path):
        with io.open(file_path, 'w', encoding='utf-8', newline='\n') as fh:
            fh.write(self.to_json())

        return file_path


def verify_certificate(graph, certificate):
    """
    Re-checks a certificate against a graph without trusting anything the extraction computed
    :param graph: Graph
    :param certificate: ExtractionCertificate
    :return: list(str), failed checks in order; empty when the certificate is valid
    """

    if not certificate.is_bound:
        return ['certificate is not bound to an input graph']

    witness = certificate.witness_vertices
    missing = sorted(v for v in witness if v not in graph)
    if missing or certificate.graph_hash != graph.content_hash():
        detail = 'vertex {} missing'.format(missing[0]) if missing else 'graph hash mismatch'
        return ['witness not induced in input: {}'.format(detail)]

    errors = list()
    if not witness:
        errors.append('empty witness')
        return errors

    k = certificate.config.k
    subgraph = graph.induced(witness)
    low = sorted(v for v in subgraph.vertex_ids if subgraph.degree(v) < k)
    if low:
        errors.append('min-degree violation: vertex {} has degree {} < {}'.format(low[0], subgraph.degree(low[0]), k))

    size_floor = certificate.config.size_floor(graph.n)
    if len(witness) > size_floor:
        errors.append('size bound violation: {} > {}'.format(len(witness), size_floor))

    return errors
