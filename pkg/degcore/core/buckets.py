#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains the dyadic grouping of the maximal good sets:
C_j = {D_i : 2^(j-1) <= i < 2^j} for j = 1..J, with J the largest integer such that 2^J - 1 <= m
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

LOGGER = logging.getLogger('degcore')


class DyadicBuckets(object):
    def __init__(self, family, n, k, buckets, j_prime, j_prime_forced=False):
        self._family = family
        self._n = n
        self._k = k
        self._buckets = tuple(tuple(bucket) for bucket in buckets)
        self._j_prime = j_prime
        self._j_prime_forced = j_prime_forced
        self._bucket_of = dict()
        for j, bucket in enumerate(self._buckets, start=1):
            for index in bucket:
                self._bucket_of[index] = j

    def __repr__(self):
        return 'DyadicBuckets(J={}, J_prime={}, norms={})'.format(self.J, self._j_prime, self.norms)

    @property
    def family(self):
        return self._family

    @property
    def n(self):
        return self._n

    @property
    def k(self):
        return self._k

    @property
    def J(self):
        return len(self._buckets)

    @property
    def j_prime(self):
        return self._j_prime

    @property
    def j_prime_forced(self):
        """
        Returns whether J' was given explicitly instead of derived from the n/(100k) threshold. The colouring
        step bounds only hold for derived J'
        :return: bool
        """

        return self._j_prime_forced

    @property
    def norms(self):
        return tuple(self.norm(j) for j in range(1, self.J + 1))

    def bucket(self, j):
        """
        Returns the family indices (0-based) of the members in C_j, j being 1-based
        :param j: int
        :return: tuple(int)
        """

        if not 1 <= j <= self.J:
            raise exceptions.DomainError('bucket index {} outside [1, {}]'.format(j, self.J))

        return self._buckets[j - 1]

    def members(self, j):
        return tuple(self._family[index] for index in self.bucket(j))

    def norm(self, j):
        return sum(len(member) for member in self.members(j))

    def bucket_of(self, index):
        return self._bucket_of.get(index)

    def indices_upto(self, j):
        indices = list()
        for bucket in self._buckets[:max(j, 0)]:
            indices.extend(bucket)

        return tuple(indices)

    @property
    def bucketed_indices(self):
        return self.indices_upto(self.J)

    def vertices_upto(self, j):
        vertices = set()
        for index in self.indices_upto(j):
            vertices.update(self._family[index])

        return frozenset(vertices)

    def to_dict(self):
        return {'J': self.J, 'J_prime': self._j_prime, 'norms': list(self.norms), 'm': self._family.m}


def partition_dyadic(family, n, k, j_prime=None):
    """
    Groups a size-sorted good set family into dyadic buckets and finds J', the least index whose prefix of
    bucket sizes reaches n/(100k)
    :param family: GoodFamily
    :param n: int
    :param k: int
    :param j_prime: int or None, explicit J' for driving the colouring induction on hand-built instances
    :return: DyadicBuckets
    """

    m = family.m
    if m == 0:
        raise exceptions.NoJPrime('cannot bucket an empty good set family')

    sizes = [len(member) for member in family]
    if any(sizes[i] < sizes[i + 1] for i in range(m - 1)):
        raise exceptions.DomainError('good set family is not sorted by size')

    big_j = (m + 1).bit_length() - 1
    buckets = [range(2 ** (j - 1) - 1, 2 ** j - 1) for j in range(1, big_j + 1)]
    norms = [sum(sizes[i] for i in bucket) for bucket in buckets]
    for j in range(big_j - 1):
        if norms[j + 1] > 2 * norms[j]:
            raise exceptions.InternalInvariantBreach('bucket norms grow too fast at j={}'.format(j + 1))

    j_prime_forced = j_prime is not None
    if j_prime is None:
        threshold = Fraction(n, Limits.J_PRIME_DIVISOR * k)
        running = 0
        for j, norm in enumerate(norms, start=1):
            running += norm
            if running >= threshold:
                j_prime = j
                break
        else:
            raise exceptions.NoJPrime('bucket sizes sum to {} < n/(100k) = {}'.format(running, threshold))
    elif not 1 <= j_prime <= big_j:
        raise exceptions.DomainError('J_prime={} outside [1, {}]'.format(j_prime, big_j))

    result = DyadicBuckets(family, n, k, buckets, j_prime, j_prime_forced=j_prime_forced)
    LOGGER.debug('Partitioned {} good sets: {}'.format(m, result))

    return result
