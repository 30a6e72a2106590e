#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains tests for degcore dyadic buckets
"""

import pytest

from degcore.core import exceptions
from degcore.core.goodsets import GoodFamily
from degcore.core.buckets import partition_dyadic


@pytest.fixture
def family():
    return GoodFamily([[7], [3, 4], [0, 1, 2], [5, 6]])


def test_buckets_layout(family):
    buckets = partition_dyadic(family, 100, 1)
    assert buckets.J == 2
    assert buckets.j_prime == 1
    assert buckets.bucket(1) == (0,)
    assert buckets.bucket(2) == (1, 2)
    assert buckets.norms == (3, 4)
    assert buckets.members(1) == (frozenset([0, 1, 2]),)
    assert buckets.bucket_of(2) == 2
    assert buckets.bucket_of(3) is None
    assert buckets.bucketed_indices == (0, 1, 2)
    assert buckets.vertices_upto(1) == frozenset([0, 1, 2])
    assert buckets.vertices_upto(2) == frozenset(range(7))
    assert buckets.indices_upto(0) == tuple()
    assert buckets.to_dict() == {'J': 2, 'J_prime': 1, 'norms': [3, 4], 'm': 4}


def test_j_prime_threshold(family):
    assert partition_dyadic(family, 600, 1).j_prime == 2
    assert partition_dyadic(family, 300, 1).j_prime == 1
    with pytest.raises(exceptions.NoJPrime):
        partition_dyadic(family, 800, 1)


def test_singletons():
    buckets = partition_dyadic(GoodFamily([[v] for v in range(7)]), 500, 1)
    assert buckets.J == 3
    assert buckets.norms == (1, 2, 4)
    assert buckets.bucket(3) == (3, 4, 5, 6)
    assert buckets.j_prime == 3


def test_explicit_j_prime(family):
    assert not partition_dyadic(family, 100, 1).j_prime_forced
    assert partition_dyadic(family, 800, 1, j_prime=2).j_prime_forced
    assert partition_dyadic(family, 800, 1, j_prime=2).j_prime == 2
    with pytest.raises(exceptions.DomainError):
        partition_dyadic(family, 100, 1, j_prime=3)


def test_invalid_requests(family):
    with pytest.raises(exceptions.NoJPrime):
        partition_dyadic(GoodFamily([]), 10, 2)
    buckets = partition_dyadic(family, 100, 1)
    with pytest.raises(exceptions.DomainError):
        buckets.bucket(0)
    with pytest.raises(exceptions.DomainError):
        buckets.bucket(3)
