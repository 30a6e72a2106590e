#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains tests for degcore graph generators
"""

import pytest

from degcore.core import exceptions
from degcore.core.generators import gen_wheel, gen_near_threshold


def test_wheel():
    wheel = gen_wheel(4, 8)
    assert (wheel.n, wheel.m) == (8, 19)
    assert wheel.adjacent(0, 1)
    assert wheel.neighbours(2) == (0, 1, 3, 7)
    assert wheel.min_degree() == 4


def test_wheel_edges(wheel37):
    assert (wheel37.n, wheel37.m) == (7, 12)
    assert wheel37.degree(0) == 6
    assert wheel37.vertices_with_degree(3) == frozenset(range(1, 7))
    assert gen_wheel(2, 4).m == 4


@pytest.mark.parametrize('k, n', [(1, 5), (3, 3), (5, 5)])
def test_wheel_domain(k, n):
    with pytest.raises(exceptions.DomainError):
        gen_wheel(k, n)


def test_near_threshold():
    graph = gen_near_threshold(12, 3, 1, 0, 7)
    assert (graph.n, graph.m) == (12, 23)
    assert graph == gen_near_threshold(12, 3, 1, 0, 7)
    assert gen_near_threshold(12, 3, 1, 4, 7).m == 27


def test_near_threshold_domain():
    with pytest.raises(exceptions.DomainError):
        gen_near_threshold(4, 3, 1, 10, 0)
    with pytest.raises(exceptions.DomainError):
        gen_near_threshold(0, 3, 1, 0, 0)
