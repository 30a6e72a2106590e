#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains the validated extraction parameters
"""

from __future__ import print_function, division, absolute_import

__author__ = "Tomas Poveda"
__license__ = "MIT"
__maintainer__ = "Tomas Poveda"
__email__ = "tpovedatd@gmail.com"

import math
from fractions import Fraction

from degcore.core import exceptions
from degcore.core.defines import Limits


def max_excess(k):
    """
    Returns the largest excess t accepted for degree bound k: (k - 2)(k + 1)/2 - 1
    :param k: int
    :return: int
    """

    return (k - 2) * (k + 1) // 2 - 1


def epsilon_for(k, t):
    return Fraction(1, max(Limits.EPSILON_DEGREE_FACTOR * k * k, Limits.EPSILON_EXCESS_FACTOR * k * t))


def parse_fraction(text):
    """
    Parses a "p/q" string as written into certificates
    :param text: str
    :return: Fraction
    """

    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise exceptions.DomainError('not a fraction: "{}"'.format(text))


class ExtractionConfig(object):
    """
    Degree bound k, excess t and the shrink factor epsilon = 1 / max(10^4 k^2, 100 k t)
    """

    def __init__(self, k, t):
        self._k = int(k)
        self._t = int(t)
        errors = self.validate()
        if errors:
            raise exceptions.InvalidConfig(errors[0])

    def __eq__(self, other):
        if not isinstance(other, ExtractionConfig):
            return NotImplemented
        return (self._k, self._t) == (other._k, other._t)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self._k, self._t))

    def __repr__(self):
        return 'ExtractionConfig(k={}, t={}, epsilon={})'.format(self._k, self._t, self.epsilon)

    @classmethod
    def from_dict(cls, data):
        try:
            return cls(data['k'], data['t'])
        except KeyError as exc:
            raise exceptions.InvalidConfig('missing config key: {}'.format(exc))

    @property
    def k(self):
        return self._k

    @property
    def t(self):
        return self._t

    @property
    def epsilon(self):
        return epsilon_for(self._k, self._t)

    def validate(self):
        """
        Returns the list of reasons why this configuration cannot drive an extraction
        :return: list(str)
        """

        if self._k < 2:
            return ['k must be >= 2, got {}'.format(self._k)]
        upper = max_excess(self._k)
        if upper < 1:
            return ['t-range empty for k={}'.format(self._k)]
        if not 1 <= self._t <= upper:
            return ['t={} outside [1, {}] for k={}'.format(self._t, upper, self._k)]

        return list()

    def size_bound(self, n):
        """
        Returns the exact bound (1 - epsilon)n
        :param n: int
        :return: Fraction
        """

        return (1 - self.epsilon) * n

    def size_floor(self, n):
        return int(math.floor(self.size_bound(n)))

    def required_edges(self, n):
        return (self._k - 1) * n - self._t

    def to_dict(self):
        epsilon = self.epsilon
        return {'k': self._k, 't': self._t, 'epsilon': '{}/{}'.format(epsilon.numerator, epsilon.denominator)}
