#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains deletion strategies: built once for a graph H without a minimum-degree-k subgraph and
replayed on any admissible supergraph Htilde to cut it down to minimum degree >= k.

A strategy is a stack of layers, outermost first. Each layer removes the shadow Y of the lowest-id low-degree
vertex w and continues on H - Y. The stack ends in a base where the shadow covers what is left (or a single
vertex remains).
"""

from __future__ import print_function, division, absolute_import

__author__ = "Tomas Poveda"
__license__ = "MIT"
__maintainer__ = "Tomas Poveda"
__email__ = "tpovedatd@gmail.com"

import json
import logging

from degcore.core import exceptions
from degcore.core.defines import CaseTags, BaseKinds
from degcore.core.graph import vertex_set
from degcore.core.shadow import ShadowContext, shadow

LOGGER = logging.getLogger('degcore')


class StrategyLayer(object):
    def __init__(self, case_tag, w, members, absorbed_low_degree, graph, collection, deficiency, shadow_steps=0):
        self._case_tag = case_tag
        self._w = w
        self._members = vertex_set(members)
        self._absorbed_low_degree = vertex_set(absorbed_low_degree)
        self._graph = graph
        self._collection = tuple(collection)
        self._deficiency = deficiency
        self._shadow_steps = shadow_steps

    def __repr__(self):
        return 'StrategyLayer({}, w={}, |Y|={})'.format(self._case_tag, self._w, len(self._members))

    @property
    def case_tag(self):
        return self._case_tag

    @property
    def w(self):
        return self._w

    @property
    def Y(self):
        return self._members

    @property
    def absorbed_low_degree(self):
        """
        Vertices this layer contributes to S
        :return: frozenset(int)
        """

        return self._absorbed_low_degree

    @property
    def graph(self):
        return self._graph

    @property
    def collection(self):
        return self._collection

    @property
    def deficiency(self):
        return self._deficiency

    @property
    def shadow_steps(self):
        return self._shadow_steps

    def to_dict(self):
        return {
            'case': self._case_tag,
            'w': self._w,
            'Y': sorted(self._members),
            'Y_size': len(self._members),
            'absorbed_low_degree': sorted(self._absorbed_low_degree),
            'deficiency': self._deficiency,
            'graph_n': self._graph.n,
            'graph_m': self._graph.m,
            'members': len(self._collection),
            'shadow_steps': self._shadow_steps
        }


class DeletionStrategy(object):
    def __init__(self, context, layers, base):
        self._context = context
        self._layers = tuple(layers)
        self._base = base

        s_set = set(base.absorbed_low_degree)
        reservoirs = dict()
        if base.case_tag == BaseKinds.A2:
            reservoirs[base.w] = base.Y
        for layer in self._layers:
            s_set.update(layer.absorbed_low_degree)
            if layer.case_tag == CaseTags.B2:
                reservoirs[layer.w] = layer.Y
        self._s = frozenset(s_set)
        self._b = reservoirs

    def __repr__(self):
        return 'DeletionStrategy(layers={}, base={}, |S|={})'.format(len(self._layers), self.base_kind, len(self._s))

    @property
    def context(self):
        return self._context

    @property
    def layers(self):
        return self._layers

    @property
    def base(self):
        return self._base

    @property
    def base_kind(self):
        return self._base.case_tag

    @property
    def S(self):
        return self._s

    @property
    def B(self):
        return dict(self._b)

    @property
    def depth(self):
        return len(self._layers) + 1

    def reservoir(self, vertex):
        return self._b.get(vertex, frozenset())

    def partial_s(self, index):
        """
        Returns the S set of the inner strategy that starts at the given layer index; len(layers) gives the
        base contribution alone
        :param index: int
        :return: frozenset(int)
        """

        s_set = set(self._base.absorbed_low_degree)
        for layer in self._layers[index:]:
            s_set.update(layer.absorbed_low_degree)

        return frozenset(s_set)

    def to_dict(self):
        graph = self._context.graph
        return {
            'context': {'n': graph.n, 'm': graph.m, 'k': self._context.k, 'members': len(self._context.collection)},
            'layers': [layer.to_dict() for layer in self._layers],
            'base': self._base.to_dict(),
            'base_kind': self.base_kind,
            'S': sorted(self._s),
            'B': dict((str(v), len(members)) for v, members in sorted(self._b.items())),
            'depth': self.depth
        }

    def serialize(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=4, separators=(',', ': '))


class WitnessFound(object):
    """
    Raised-as-value when the graph a strategy is built for turns out to contain a minimum-degree-k subgraph
    """

    def __init__(self, witness, provenance=''):
        self._witness = witness
        self._provenance = provenance

    def __repr__(self):
        return 'WitnessFound({}, "{}")'.format(self._witness, self._provenance)

    @property
    def witness(self):
        return self._witness

    @property
    def provenance(self):
        return self._provenance

    def with_provenance(self, provenance):
        return WitnessFound(self._witness, '{}; {}'.format(provenance, self._provenance))


def build_strategy(ctx):
    """
    Builds the deletion strategy for (H, C_H), or a WitnessFound when some residual graph has no vertex of
    degree <= k - 1
    :param ctx: ShadowContext
    :return: DeletionStrategy or WitnessFound
    """

    errors = ctx.validate()
    if errors:
        raise exceptions.PreconditionViolated('invalid shadow context: {}'.format(errors[0]))
    if ctx.graph.is_empty:
        raise exceptions.PreconditionViolated('cannot build a strategy for the empty graph')

    k = ctx.k
    graph, collection = ctx.graph, ctx.collection
    layers = list()
    while True:
        if graph.n == 1:
            w = graph.vertex_ids[0]
            base = StrategyLayer(BaseKinds.SINGLETON, w, [w], [w], graph, collection, k - 1)
            break

        low = graph.vertices_with_degree_at_most(k - 1)
        if not low:
            LOGGER.info('Strategy layer {} has minimum degree >= {}: {}'.format(len(layers), k, graph))
            return WitnessFound(graph, 'layer {}: no vertex of degree <= {}'.format(len(layers), k - 1))

        w = min(low)
        record = shadow(ShadowContext(graph, collection, k), w)
        if record.Y == frozenset(graph.vertex_ids):
            if record.deficiency > 0:
                base = StrategyLayer(BaseKinds.A1, w, record.Y, low, graph, collection, record.deficiency,
                                     shadow_steps=len(record.trace))
            else:
                base = StrategyLayer(BaseKinds.A2, w, record.Y, [], graph, collection, 0,
                                     shadow_steps=len(record.trace))
            break

        if record.deficiency > 0:
            absorbed = [v for v in record.Y if graph.degree(v) <= k - 1]
            layer = StrategyLayer(CaseTags.B1, w, record.Y, absorbed, graph, collection, record.deficiency,
                                  shadow_steps=len(record.trace))
        else:
            layer = StrategyLayer(CaseTags.B2, w, record.Y, [], graph, collection, 0,
                                  shadow_steps=len(record.trace))
        layers.append(layer)
        graph = graph.delete(record.Y)
        collection = tuple(member for member in collection if member.isdisjoint(record.Y))

    strategy = DeletionStrategy(ctx, layers, base)
    LOGGER.debug('Built {}'.format(strategy))

    return strategy


def strategy_budget(strategy):
    """
    Returns the low-degree budget of S and the bound it must respect: sum of k - deg_H(s) over S, and
    2((k - 1)v(H) - e(H))
    :param strategy: DeletionStrategy
    :return: tuple(int, int)
    """

    graph, k = strategy.context.graph, strategy.context.k
    budget = sum(k - graph.degree(s) for s in strategy.S)

    return budget, 2 * ((k - 1) * graph.n - graph.m)


def admissibility_errors(strategy, htilde):
    """
    Checks the three conditions a supergraph must meet before a strategy can be replayed on it
    :param strategy: DeletionStrategy
    :param htilde: Graph
    :return: list(str), found errors
    """

    graph, k = strategy.context.graph, strategy.context.k
    errors = list()
    if htilde.n <= graph.n or not graph.is_induced_subgraph_of(htilde):
        errors.append('H is not a proper induced subgraph of Htilde')
        return errors

    allowed = graph.vertices_with_degree_at_most(k - 1) - strategy.S
    extra_low = sorted(htilde.vertices_with_degree_at_most(k - 1) - allowed)
    if extra_low:
        errors.append('vertex {} has degree <= {} in Htilde but is not a low-degree vertex of H outside S'.format(
            extra_low[0], k - 1))

    new_vertices = frozenset(htilde.vertex_ids) - frozenset(graph.vertex_ids)
    for index, member in enumerate(strategy.context.collection):
        if htilde.touches(member, new_vertices):
            errors.append('member {} is adjacent to a vertex outside H'.format(index))
            break

    return errors


def apply_strategy(strategy, htilde):
    """
    Replays a strategy on an admissible supergraph and returns the resulting minimum-degree-k subgraph
    :param strategy: DeletionStrategy
    :param htilde: Graph
    :return: Graph
    """

    errors = admissibility_errors(strategy, htilde)
    if errors:
        raise exceptions.AdmissibilityViolated(errors[0])

    k = strategy.context.k
    current = htilde
    for index, layer in enumerate(strategy.layers):
        if layer.case_tag != CaseTags.B2 or current.degree(layer.w) > k - 1:
            continue
        current = _delete_replayed_shadow(current, layer, k, 'layer {}'.format(index))

    base = strategy.base
    low = current.vertices_with_degree_at_most(k - 1)
    if low:
        if base.case_tag != BaseKinds.A2 or low != frozenset([base.w]):
            raise exceptions.InternalInvariantBreach(
                'replay reached base {} with low-degree vertices {}'.format(base.case_tag, sorted(low)))
        current = _delete_replayed_shadow(current, base, k, 'base')

    if not current.has_min_degree(k):
        raise exceptions.InternalInvariantBreach('replay produced a graph with minimum degree < {}'.format(k))

    return current


def _delete_replayed_shadow(current, layer, k, label):
    record = shadow(ShadowContext(current, layer.collection, k), layer.w)
    if not record.Y <= layer.Y:
        raise exceptions.InternalInvariantBreach(
            '{}: replayed shadow of {} escapes its reservoir'.format(label, layer.w))

    return current.delete(record.Y)


def replay_properties(strategy, htilde, hprime):
    """
    Independently checks what a replay must guarantee, returning the failed properties:
        (a) Hprime is a non-empty induced subgraph of Htilde with minimum degree >= k
        (b) (k - 1)v - e does not grow from Htilde to Hprime
        (c) every deleted vertex lies in some B_v with v of degree <= k - 1 in Htilde
        (d) no deleted vertex is adjacent to a vertex of Htilde outside H
        (e) every collection member is deleted completely or not at all
        (f) no kept collection member is adjacent to a deleted vertex
    :param strategy: DeletionStrategy
    :param htilde: Graph
    :param hprime: Graph
    :return: list(tuple(str, str)), (property letter, message) pairs
    """

    graph, k = strategy.context.graph, strategy.context.k
    failed = list()

    if hprime.is_empty or not hprime.is_induced_subgraph_of(htilde) or not hprime.has_min_degree(k):
        failed.append(('a', 'Hprime is not a non-empty induced subgraph of minimum degree >= {}'.format(k)))

    if (k - 1) * hprime.n - hprime.m > (k - 1) * htilde.n - htilde.m:
        failed.append(('b', '(k - 1)v - e grew from {} to {}'.format(
            (k - 1) * htilde.n - htilde.m, (k - 1) * hprime.n - hprime.m)))

    deleted = frozenset(htilde.vertex_ids) - frozenset(hprime.vertex_ids)
    covered = set()
    for v in htilde.vertices_with_degree_at_most(k - 1):
        covered.update(strategy.reservoir(v))
    if not deleted <= covered:
        failed.append(('c', 'vertex {} deleted outside every reservoir'.format(min(deleted - covered))))

    new_vertices = frozenset(htilde.vertex_ids) - frozenset(graph.vertex_ids)
    if htilde.touches(deleted, new_vertices):
        failed.append(('d', 'a deleted vertex is adjacent to a vertex outside H'))

    for index, member in enumerate(strategy.context.collection):
        inside = member & deleted
        if inside and inside != member:
            failed.append(('e', 'member {} is partially deleted'.format(index)))
        elif not inside and htilde.touches(member, deleted):
            failed.append(('f', 'kept member {} is adjacent to a deleted vertex'.format(index)))

    return failed
