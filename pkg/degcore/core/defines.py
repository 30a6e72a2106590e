#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains definitions used by degcore
"""

from __future__ import print_function, division, absolute_import

__author__ = "Tomas Poveda"
__license__ = "MIT"
__maintainer__ = "Tomas Poveda"
__email__ = "tpovedatd@gmail.com"


class Branches(object):
    DISCONNECTED = 'Disconnected'
    FEW_DEGREE_K = 'FewDegreeK'
    SPARSE_CUT = 'SparseCut'
    OVERSIZE_GOOD_SET = 'OversizeGoodSet'
    SINGLE_BIG_GOOD_SET = 'SingleBigGoodSet'
    SMALL_J_PRIME_ESCAPE = 'SmallJPrimeEscape'
    COLOURING_COMPLETE = 'ColouringComplete'
    RECURSIVE_DESCENT = 'RecursiveDescent'
    STRATEGY_WITNESS = 'StrategyWitness'

    ALL = (
        DISCONNECTED, FEW_DEGREE_K, SPARSE_CUT, OVERSIZE_GOOD_SET, SINGLE_BIG_GOOD_SET, SMALL_J_PRIME_ESCAPE,
        COLOURING_COMPLETE, RECURSIVE_DESCENT, STRATEGY_WITNESS)


class EscapeKinds(object):
    SPARSE_CUT = Branches.SPARSE_CUT
    OVERSIZE_GOOD_SET = Branches.OVERSIZE_GOOD_SET


class Rules(object):
    SEED = 1
    ABSORB = 2
    MERGE_OVERLAPPING = 3
    MERGE_ADJACENT = 4


class CaseTags(object):
    A1 = 'A1'
    A2 = 'A2'
    B1 = 'B1'
    B2 = 'B2'


class BaseKinds(object):
    SINGLETON = 'SingletonBase'
    A1 = 'A1Base'
    A2 = 'A2Base'


class ShadowSteps(object):
    ADD_VERTEX = 'AddVertex'
    ADD_SET = 'AddSet'


class Orders(object):
    CANONICAL = 'canonical'
    REVERSE = 'reverse'
    LOWEST = 'lowest'
    HIGHEST = 'highest'


class Limits(object):
    PALETTE_FACTOR = 401
    POPULARITY_LIMIT = 200
    ORACLE_MAX_VERTICES = 20
    EPSILON_DEGREE_FACTOR = 10 ** 4
    EPSILON_EXCESS_FACTOR = 100
    FEW_DEGREE_K_DIVISOR = 3
    APPENDIX_DIVISOR = 27
    APPENDIX_HIGH_DEGREE_FACTOR = 9
    J_PRIME_DIVISOR = 100
    COLOURED_COUNT_DIVISOR = 20
    EDGE_DEFECT_FACTOR = 12
    BUDGET_FACTOR = 48


CERTIFICATE_FORMAT = 'degcore-certificate/1'
EDGE_LIST_EXTENSION = '.edges'
CERTIFICATE_EXTENSION = '.cert.json'
