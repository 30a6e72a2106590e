#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains appropriate partial colourings of the good set buckets and the induction step that
extends an l-appropriate colouring to an (l + 1)-appropriate one.

A colouring with 401k colours is l-appropriate when:
    (i) every vertex has at most one colour
    (ii) every bucketed member is monochromatic or fully uncoloured
    (iii) e_bar(X_i) <= (k - 1)|X_i| + y_i, y_i counting members of C_1..C_l coloured i
    (iv) G - X_i has minimum degree >= k for every colour i
    (v) members of C_1..C_J' are uncoloured
    (vi) for J' < j <= l, at most a quarter of C_j is uncoloured
    (vii) an uncoloured member of C_(l+1)..C_J has no coloured neighbour
"""

from __future__ import print_function, division, absolute_import

__author__ = "Tomas Poveda"
__license__ = "MIT"
__maintainer__ = "Tomas Poveda"
__email__ = "tpovedatd@gmail.com"

import logging
from collections import Counter
from concurrent.futures import ThreadPoolExecutor

from degcore.core import exceptions
from degcore.core.defines import Limits
from degcore.core.graph import vertex_set, format_vertex_set
from degcore.core.shadow import ShadowContext
from degcore.core.strategy import WitnessFound, build_strategy, apply_strategy

LOGGER = logging.getLogger('degcore')


def palette_size(k):
    return Limits.PALETTE_FACTOR * k


class ColouringState(object):
    def __init__(self, graph, buckets, k, ell, classes=None, step=None):
        self._graph = graph
        self._buckets = buckets
        self._k = k
        self._ell = ell
        self._classes = dict(
            (int(colour), vertex_set(members)) for colour, members in (classes or dict()).items() if members)
        self._step = step

    def __repr__(self):
        return 'ColouringState(ell={}, coloured={}, colours={})'.format(
            self._ell, len(self.coloured_vertices), len(self._classes))

    @property
    def graph(self):
        return self._graph

    @property
    def buckets(self):
        return self._buckets

    @property
    def k(self):
        return self._k

    @property
    def ell(self):
        return self._ell

    @property
    def palette_size(self):
        return palette_size(self._k)

    @property
    def classes(self):
        return dict(self._classes)

    @property
    def step(self):
        """
        Scratch data of the full colouring step that produced this state, None for initial or relabelled states
        :return: StepScratch or None
        """

        return self._step

    @property
    def assignment(self):
        assignment = dict()
        for colour in sorted(self._classes):
            for v in self._classes[colour]:
                assignment.setdefault(v, colour)

        return assignment

    @property
    def coloured_vertices(self):
        coloured = set()
        for members in self._classes.values():
            coloured.update(members)

        return frozenset(coloured)

    def colour_class(self, colour):
        return self._classes.get(colour, frozenset())

    def y(self, colour, ell=None):
        """
        Returns the number of members of C_1..C_ell entirely coloured with the given colour
        :param colour: int
        :param ell: int or None, defaults to the state index
        :return: int
        """

        ell = self._ell if ell is None else ell
        members = self.colour_class(colour)
        family = self._buckets.family

        return sum(1 for index in self._buckets.indices_upto(ell) if family[index] <= members)

    def relabelled(self, ell):
        return ColouringState(self._graph, self._buckets, self._k, ell, self._classes)

    def to_dict(self):
        return {
            'ell': self._ell,
            'classes': dict((str(colour), sorted(members)) for colour, members in sorted(self._classes.items()))
        }


class StepScratch(object):
    """
    Everything one full colouring step builds on its way from l to l + 1
    """

    def __init__(self, **kwargs):
        self.ell = kwargs.get('ell')
        self.c_prime = tuple(kwargs.get('c_prime', tuple()))
        self.H = kwargs.get('H')
        self.c_h = tuple(kwargs.get('c_h', tuple()))
        self.strategy = kwargs.get('strategy')
        self.s_prime = tuple(kwargs.get('s_prime', tuple()))
        self.neighbour_sets = dict(kwargs.get('neighbour_sets', dict()))
        self.lists = dict(kwargs.get('lists', dict()))
        self.popular = frozenset(kwargs.get('popular', frozenset()))
        self.psi = dict(kwargs.get('psi', dict()))
        self.Z = dict(kwargs.get('Z', dict()))
        self.X_prime = dict(kwargs.get('X_prime', dict()))
        self.edge_defect = kwargs.get('edge_defect', 0)
        self.budget = kwargs.get('budget', 0)

    def __repr__(self):
        return 'StepScratch(ell={}, |C\'|={})'.format(self.ell, len(self.c_prime))

    @property
    def edge_defect_bound(self):
        return Limits.EDGE_DEFECT_FACTOR * len(self.c_prime)

    @property
    def budget_bound(self):
        return Limits.BUDGET_FACTOR * len(self.c_prime)

    def x_prime_histogram(self):
        return dict(Counter(len(members) for members in self.X_prime.values()))

    def audit_line(self):
        histogram = ','.join('{}:{}'.format(size, count) for size, count in sorted(self.x_prime_histogram().items()))
        return 'step ell={} c_prime={} branch=full popular={} x_prime_sizes={{{}}}'.format(
            self.ell, len(self.c_prime), len(self.popular), histogram)


class AppropriatenessReport(object):
    def __init__(self, condition=None, witness=None, message=''):
        self.condition = condition
        self.witness = witness
        self.message = message

    def __bool__(self):
        return self.condition is None

    __nonzero__ = __bool__

    def __repr__(self):
        if self.condition is None:
            return 'AppropriatenessReport(pass)'
        return 'AppropriatenessReport(({}) {})'.format(self.condition, self.message)


def init_state(graph, buckets, k):
    """
    Returns the all-uncoloured colouring, which is J'-appropriate
    :param graph: Graph
    :param buckets: DyadicBuckets
    :param k: int
    :return: ColouringState
    """

    return ColouringState(graph, buckets, k, buckets.j_prime)


def verify_appropriate(state, ell=None):
    """
    Checks the seven appropriateness conditions literally against the graph, the buckets and the colour classes
    :param state: ColouringState
    :param ell: int or None, defaults to the state index
    :return: AppropriatenessReport
    """

    graph, buckets, k = state.graph, state.buckets, state.k
    ell = state.ell if ell is None else ell
    family = buckets.family
    classes = state.classes
    palette = state.palette_size

    seen = set()
    for colour in sorted(classes):
        if not 1 <= colour <= palette:
            return AppropriatenessReport('i', colour, 'colour {} outside the palette 1..{}'.format(colour, palette))
        overlap = seen & classes[colour]
        if overlap:
            v = min(overlap)
            return AppropriatenessReport('i', v, 'vertex {} carries more than one colour'.format(v))
        seen.update(classes[colour])
    coloured = frozenset(seen)

    for index in buckets.bucketed_indices:
        member = family[index]
        if member.isdisjoint(coloured):
            continue
        if not any(member <= members for members in classes.values()):
            return AppropriatenessReport(
                'ii', member, 'member {} is not monochromatic'.format(format_vertex_set(member)))

    prefix = buckets.indices_upto(ell)
    for colour in sorted(classes):
        members = classes[colour]
        y_count = sum(1 for index in prefix if family[index] <= members)
        boundary = graph.boundary_edge_count(members)
        if boundary > (k - 1) * len(members) + y_count:
            return AppropriatenessReport('iii', colour, 'colour {}: {} boundary edges > {}'.format(
                colour, boundary, (k - 1) * len(members) + y_count))

    if len(classes) < palette and not graph.has_min_degree(k):
        return AppropriatenessReport('iv', None, 'G itself has minimum degree < {}'.format(k))
    for colour in sorted(classes):
        if not graph.delete(classes[colour]).has_min_degree(k):
            return AppropriatenessReport('iv', colour, 'G - X_{} has minimum degree < {}'.format(colour, k))

    for index in buckets.indices_upto(buckets.j_prime):
        if not family[index].isdisjoint(coloured):
            return AppropriatenessReport('v', family[index], 'member {} of C_1..C_J\' is coloured'.format(
                format_vertex_set(family[index])))

    for j in range(buckets.j_prime + 1, ell + 1):
        bucket = buckets.bucket(j)
        uncoloured = sum(1 for index in bucket if family[index].isdisjoint(coloured))
        if 4 * uncoloured > len(bucket):
            return AppropriatenessReport('vi', j, 'C_{} has {} of {} members uncoloured'.format(
                j, uncoloured, len(bucket)))

    for j in range(ell + 1, buckets.J + 1):
        for index in buckets.bucket(j):
            member = family[index]
            if member.isdisjoint(coloured) and graph.touches(member, coloured):
                return AppropriatenessReport(
                    'vii', member, 'uncoloured member {} of C_{} has a coloured neighbour'.format(
                        format_vertex_set(member), j))

    return AppropriatenessReport()


def greedy_list_colour(members, constraint_sets, lists, palette, popular=frozenset()):
    """
    Colours members in the given order with the smallest colour that avoids the lists L(s) and the colours
    already given to siblings, for every constraint set C(s) holding the member. Popular members stay uncoloured
    :param members: list(int), member indices in colouring order
    :param constraint_sets: dict(int, tuple(int)), s -> C(s)
    :param lists: dict(int, tuple(int)), s -> L(s)
    :param palette: int, number of colours
    :param popular: iterable(int), members left uncoloured
    :return: dict(int, int), member index -> colour
    """

    popular = frozenset(popular)
    memberships = dict()
    for s in sorted(constraint_sets):
        for member in constraint_sets[s]:
            memberships.setdefault(member, list()).append(s)

    psi = dict()
    for member in members:
        if member in popular:
            continue
        holders = memberships.get(member, list())
        if len(holders) > Limits.POPULARITY_LIMIT:
            raise exceptions.PreconditionViolated(
                'member {} lies in {} constraint sets but is not popular'.format(member, len(holders)))
        forbidden = set()
        for s in holders:
            forbidden.update(lists.get(s, tuple()))
            forbidden.update(psi[sibling] for sibling in constraint_sets[s] if sibling != member and sibling in psi)
        colour = next((c for c in range(1, palette + 1) if c not in forbidden), None)
        if colour is None:
            raise exceptions.PaletteExhausted('no colour left for member {} out of {}'.format(member, palette))
        psi[member] = colour

    return psi


def _check_step_bound(buckets, ell, name, value, bound):
    """
    Raises when a colouring step quantity exceeds its bound. With a forced J' the bounds are not guaranteed, so
    the excess is only logged
    """

    if value <= bound:
        return
    message = 'step ell={}: {} is {} > {}'.format(ell, name, value, bound)
    if buckets.j_prime_forced:
        LOGGER.warning('{} (forced J\')'.format(message))
        return

    raise exceptions.InternalInvariantBreach(message)


def assemble_step(state, strategy_provider=build_strategy, jobs=1):
    """
    Extends an l-appropriate colouring to an (l + 1)-appropriate one, or returns the WitnessFound met while
    building the deletion strategy
    :param state: ColouringState, l-appropriate with l < J
    :param strategy_provider: callable, ShadowContext -> DeletionStrategy or WitnessFound
    :param jobs: int, threads used for the per-colour replays
    :return: ColouringState or WitnessFound
    """

    graph, buckets, k, ell = state.graph, state.buckets, state.k, state.ell
    family = buckets.family
    if ell >= buckets.J:
        raise exceptions.DomainError('colouring already reached J={}'.format(buckets.J))

    coloured = state.coloured_vertices
    next_bucket = buckets.bucket(ell + 1)
    c_prime = [index for index in next_bucket if family[index].isdisjoint(coloured)]
    if 4 * len(c_prime) <= len(next_bucket):
        LOGGER.debug('Step ell={}: {} of {} members uncoloured, relabelling'.format(
            ell, len(c_prime), len(next_bucket)))
        return state.relabelled(ell + 1)

    h_graph = graph.delete(buckets.vertices_upto(ell + 1) | coloured)
    if h_graph.is_empty:
        raise exceptions.InternalInvariantBreach('step ell={}: H is empty'.format(ell))
    h_vertices = frozenset(h_graph.vertex_ids)
    c_h = [index for index in buckets.bucketed_indices if family[index] <= h_vertices]

    result = strategy_provider(ShadowContext(h_graph, [family[index] for index in c_h], k))
    if isinstance(result, WitnessFound):
        return result.with_provenance('colouring step ell={}'.format(ell))
    strategy = result

    edge_defect = (k - 1) * h_graph.n - h_graph.m
    _check_step_bound(buckets, ell, 'edge defect of H', edge_defect, Limits.EDGE_DEFECT_FACTOR * len(c_prime))

    c_prime_set = frozenset(c_prime)
    assignment = state.assignment
    s_prime, neighbour_sets, lists = list(), dict(), dict()
    for s in sorted(strategy.S):
        adjacent = sorted(set(
            family.owner_of(u) for u in graph.neighbours(s) if family.owner_of(u) in c_prime_set))
        if not adjacent:
            continue
        s_prime.append(s)
        neighbour_sets[s] = tuple(adjacent[:k + 1 - h_graph.degree(s)])
        lists[s] = tuple(sorted(set(assignment[u] for u in graph.neighbours(s) if u in assignment))[:k])

    budget = sum(k + 1 - h_graph.degree(s) for s in strategy.S)
    _check_step_bound(buckets, ell, 'strategy budget', budget, Limits.BUDGET_FACTOR * len(c_prime))
    counts = Counter(member for members in neighbour_sets.values() for member in members)
    popular = frozenset(member for member, count in counts.items() if count > Limits.POPULARITY_LIMIT)
    _check_step_bound(buckets, ell, 'four times the popular count', 4 * len(popular), len(next_bucket))
    psi = greedy_list_colour(c_prime, neighbour_sets, lists, state.palette_size, popular)

    z_sets = dict()
    for member, colour in psi.items():
        z_sets.setdefault(colour, set()).update(family[member])
    z_sets = dict((colour, frozenset(members)) for colour, members in z_sets.items())

    classes = state.classes

    def _replay(colour):
        htilde = graph.delete(classes.get(colour, frozenset()) | z_sets[colour])
        hprime = apply_strategy(strategy, htilde)
        return colour, frozenset(htilde.vertex_ids) - frozenset(hprime.vertex_ids)

    # without Z_i the graph G - X_i already has minimum degree >= k by (iv), so its replay deletes nothing
    replay_colours = sorted(z_sets)
    if jobs > 1 and len(replay_colours) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as executor:
            x_prime = dict(executor.map(_replay, replay_colours))
    else:
        x_prime = dict(_replay(colour) for colour in replay_colours)

    seen = set()
    for colour in sorted(x_prime):
        if not seen.isdisjoint(x_prime[colour]):
            raise exceptions.InternalInvariantBreach('step ell={}: replay deletions overlap across colours'.format(ell))
        seen.update(x_prime[colour])

    new_classes = dict(classes)
    for colour in set(z_sets) | set(x_prime):
        new_classes[colour] = new_classes.get(colour, frozenset()) | z_sets.get(colour, frozenset()) | x_prime.get(
            colour, frozenset())

    scratch = StepScratch(
        ell=ell, c_prime=c_prime, H=h_graph, c_h=c_h, strategy=strategy, s_prime=s_prime,
        neighbour_sets=neighbour_sets, lists=lists, popular=popular, psi=psi, Z=z_sets, X_prime=x_prime,
        edge_defect=edge_defect, budget=budget)
    new_state = ColouringState(graph, buckets, k, ell + 1, new_classes, step=scratch)

    report = verify_appropriate(new_state)
    if not report:
        raise exceptions.InternalInvariantBreach('step ell={} broke condition ({}): {}'.format(
            ell, report.condition, report.message))
    LOGGER.debug(scratch.audit_line())

    return new_state
