#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains exceptions raised by degcore
"""

from __future__ import print_function, division, absolute_import

__author__ = "Tomas Poveda"
__license__ = "MIT"
__maintainer__ = "Tomas Poveda"
__email__ = "tpovedatd@gmail.com"


class DegcoreError(Exception):
    pass


class UnknownVertex(DegcoreError, KeyError):
    def __init__(self, vertex):
        self.vertex = vertex
        super(UnknownVertex, self).__init__('unknown vertex: {}'.format(vertex))

    def __str__(self):
        return self.args[0]


class DomainError(DegcoreError, ValueError):
    pass


class PreconditionViolated(DegcoreError):
    pass


class AdmissibilityViolated(DegcoreError):
    pass


class InternalInvariantBreach(DegcoreError):
    pass


class PaletteExhausted(InternalInvariantBreach):
    pass


class NoJPrime(InternalInvariantBreach):
    pass


class InsufficientEdges(DegcoreError):
    pass


class InvalidConfig(DegcoreError, ValueError):
    pass


class TooLarge(DegcoreError, ValueError):
    pass


class GraphParseError(DegcoreError, ValueError):
    def __init__(self, message, line_number=None):
        self.line_number = line_number
        if line_number is not None:
            message = 'line {}: {}'.format(line_number, message)
        super(GraphParseError, self).__init__(message)
