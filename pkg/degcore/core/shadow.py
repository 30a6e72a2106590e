#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains the shadow of a low-degree vertex relative to a collection of vertex sets.

The shadow sh_H(w) is the smallest Y containing w such that:
    (I) w is in Y
    (II) every collection member lies completely inside Y or completely outside it
    (III) every vertex outside Y adjacent to Y keeps degree >= k in H - Y
    (IV) every collection member adjacent to Y is contained in Y
"""

from __future__ import print_function, division, absolute_import

__author__ = "Tomas Poveda"
__license__ = "MIT"
__maintainer__ = "Tomas Poveda"
__email__ = "tpovedatd@gmail.com"

import heapq
import logging

from degcore.core import exceptions
from degcore.core.defines import ShadowSteps, Orders
from degcore.core.graph import vertex_set, format_vertex_set

LOGGER = logging.getLogger('degcore')


class ShadowContext(object):
    """
    A graph H, a sequence of disjoint vertex sets C_H inside it and the degree bound k
    """

    def __init__(self, graph, collection, k):
        self._graph = graph
        self._collection = tuple(vertex_set(member) for member in collection)
        self._k = k
        self._owner = dict()
        for index, member in enumerate(self._collection):
            for v in member:
                self._owner.setdefault(v, index)

    def __repr__(self):
        return 'ShadowContext(H={}, members={}, k={})'.format(self._graph, len(self._collection), self._k)

    @property
    def graph(self):
        return self._graph

    @property
    def collection(self):
        return self._collection

    @property
    def k(self):
        return self._k

    @property
    def covered(self):
        return frozenset(self._owner)

    def owner_of(self, vertex):
        return self._owner.get(vertex)

    def with_graph(self, graph):
        """
        Returns a context over another graph that keeps this collection
        :param graph: Graph
        :return: ShadowContext
        """

        return ShadowContext(graph, self._collection, self._k)

    def validate(self):
        """
        Checks that the collection is usable for shadow computations in H
        :return: list(str), found errors
        """

        errors = list()
        seen = set()
        for index, member in enumerate(self._collection):
            if not member:
                errors.append('member {} is empty'.format(index))
                continue
            missing = [v for v in sorted(member) if v not in self._graph]
            if missing:
                errors.append('member {} holds unknown vertex {}'.format(index, missing[0]))
                continue
            if not seen.isdisjoint(member):
                errors.append('member {} overlaps an earlier member'.format(index))
            seen.update(member)
            boundary = self._graph.boundary_edge_count(member)
            if boundary > (self._k - 1) * len(member) + 1:
                errors.append('member {} has {} boundary edges > {}'.format(
                    index, boundary, (self._k - 1) * len(member) + 1))
            low = [v for v in sorted(member) if self._graph.degree(v) < self._k]
            if low:
                errors.append('member {} holds vertex {} of degree < {}'.format(index, low[0], self._k))

        return errors


class ShadowRecord(object):
    def __init__(self, w, members, trace, deficiency_history):
        self._w = w
        self._members = vertex_set(members)
        self._trace = tuple(trace)
        self._deficiency_history = tuple(deficiency_history)

    def __repr__(self):
        return 'ShadowRecord(w={}, Y={}, deficiency={})'.format(
            self._w, format_vertex_set(self._members), self.deficiency)

    @property
    def w(self):
        return self._w

    @property
    def Y(self):
        return self._members

    @property
    def trace(self):
        """
        Ordered steps, each (ShadowSteps.ADD_VERTEX, vertex) or (ShadowSteps.ADD_SET, member index)
        :return: tuple
        """

        return self._trace

    @property
    def deficiency_history(self):
        return self._deficiency_history

    @property
    def deficiency(self):
        return self._deficiency_history[-1]

    @property
    def is_equality(self):
        return self.deficiency == 0


class ShadowClosureReport(object):
    def __init__(self, violation=None, witness=None, message=''):
        self.violation = violation
        self.witness = witness
        self.message = message

    def __bool__(self):
        return self.violation is None

    __nonzero__ = __bool__

    def __repr__(self):
        if self.violation is None:
            return 'ShadowClosureReport(pass)'
        return 'ShadowClosureReport({}: {})'.format(self.violation, self.message)


def shadow(ctx, w, order=Orders.CANONICAL):
    """
    Computes sh_H(w) by growing Y from {w}: first absorb outside vertices (not in any member) that are adjacent
    to Y and have degree <= k - 1 in H - Y, lowest id first; when none is left absorb a whole member adjacent
    to Y, in collection order
    :param ctx: ShadowContext
    :param w: int
    :param order: str, Orders.CANONICAL or Orders.REVERSE (highest ids and last members first)
    :return: ShadowRecord
    """

    graph, k = ctx.graph, ctx.k
    if graph.degree(w) > k - 1:
        raise exceptions.PreconditionViolated(
            'shadow root {} has degree {} > k - 1 = {}'.format(w, graph.degree(w), k - 1))
    if order not in (Orders.CANONICAL, Orders.REVERSE):
        raise exceptions.DomainError('unknown shadow order: "{}"'.format(order))

    sign = 1 if order == Orders.CANONICAL else -1
    members = {w}
    boundary = graph.degree(w)
    history = [(k - 1) - boundary]
    trace = list()
    outside_degree = dict()
    vertex_heap, member_heap = list(), list()
    queued_vertices, queued_members = set(), set()

    def _grow(added):
        affected = set()
        for x in added:
            for u in graph.neighbours(x):
                if u not in members:
                    affected.add(u)
        for u in affected:
            if u in outside_degree:
                outside_degree[u] -= len(graph.neighbour_set(u) & added)
            else:
                outside_degree[u] = graph.degree_outside(u, members)
            owner = ctx.owner_of(u)
            if owner is None:
                if outside_degree[u] <= k - 1 and u not in queued_vertices:
                    queued_vertices.add(u)
                    heapq.heappush(vertex_heap, sign * u)
            elif owner not in queued_members:
                queued_members.add(owner)
                heapq.heappush(member_heap, sign * owner)

    _grow(frozenset([w]))
    while vertex_heap or member_heap:
        if vertex_heap:
            v = sign * heapq.heappop(vertex_heap)
            boundary += outside_degree[v]
            members.add(v)
            trace.append((ShadowSteps.ADD_VERTEX, v))
            added = frozenset([v])
        else:
            index = sign * heapq.heappop(member_heap)
            added = ctx.collection[index]
            boundary += sum(graph.degree_outside(x, members) for x in added) - graph.edge_count_within(added)
            members.update(added)
            trace.append((ShadowSteps.ADD_SET, index))
        history.append((k - 1) * len(members) - boundary)
        _grow(added)

    return ShadowRecord(w, members, trace, history)


def shadow_deficiency(graph, members, k):
    """
    Returns (k - 1)|Y| - e_bar_H(Y)
    :param graph: Graph
    :param members: iterable(int), Y
    :param k: int
    :return: int
    """

    members = graph.check_vertices(members)
    return (k - 1) * len(members) - graph.boundary_edge_count(members)


def low_degree_weight(graph, members, k):
    """
    Returns the sum of k - deg_H(s) over the vertices s of Y with deg_H(s) <= k - 1
    :param graph: Graph
    :param members: iterable(int), Y
    :param k: int
    :return: int
    """

    members = graph.check_vertices(members)
    return sum(k - graph.degree(s) for s in members if graph.degree(s) <= k - 1)


def verify_shadow_closure(ctx, members, w):
    """
    Checks the four closure properties of a shadow candidate and reports the first one violated
    :param ctx: ShadowContext
    :param members: iterable(int), Y
    :param w: int
    :return: ShadowClosureReport
    """

    graph, k = ctx.graph, ctx.k
    members = graph.check_vertices(members)

    if w not in members:
        return ShadowClosureReport('I', w, 'root {} is not in Y'.format(w))

    for index, member in enumerate(ctx.collection):
        inside = member & members
        if inside and inside != member:
            return ShadowClosureReport('II', index, 'member {} is split by Y'.format(index))

    for v in graph.vertex_ids:
        if v in members or not graph.touches([v], members):
            continue
        degree = graph.degree_outside(v, members)
        if degree < k:
            return ShadowClosureReport(
                'III', v, 'vertex {} is adjacent to Y with degree {} < {} in H - Y'.format(v, degree, k))

    for index, member in enumerate(ctx.collection):
        if member.isdisjoint(members) and graph.touches(member, members):
            return ShadowClosureReport('IV', index, 'member {} is adjacent to Y but outside it'.format(index))

    return ShadowClosureReport()
