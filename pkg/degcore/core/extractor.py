#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains the extraction pipeline: from a graph with at least (k - 1)n - t edges it returns a
subgraph of minimum degree >= k on at most (1 - epsilon)n vertices, plus the certificate of how it was found
"""

from __future__ import print_function, division, absolute_import

__author__ = "Tomas Poveda"
__license__ = "MIT"
__maintainer__ = "Tomas Poveda"
__email__ = "tpovedatd@gmail.com"

import logging
from fractions import Fraction

from degcore.core import exceptions
from degcore.core.defines import Branches, EscapeKinds, Limits
from degcore.core.graph import format_vertex_set
from degcore.core.peeler import peel_to_core
from degcore.core.goodsets import GoodSetEscape, grow_good_sets, remove_and_peel, replay_trace, EMPTY_CORE
from degcore.core.buckets import partition_dyadic
from degcore.core.colouring import init_state, verify_appropriate, assemble_step
from degcore.core.strategy import WitnessFound
from degcore.core.shrink import shrink_few_degree_k
from degcore.core.certificate import ExtractionCertificate

LOGGER = logging.getLogger('degcore')


class ReplayLog(object):
    """
    Ordered audit lines written while an extraction runs
    """

    def __init__(self):
        self._lines = list()

    def __len__(self):
        return len(self._lines)

    def __iter__(self):
        return iter(self._lines)

    def add(self, line):
        LOGGER.debug(line)
        self._lines.append(line)

    @property
    def lines(self):
        return tuple(self._lines)


class AuditTrail(object):
    """
    Optional collector for the heavier extraction data: good set traces, deletion strategies and every colouring
    state reached
    """

    def __init__(self):
        self.trace_lines = list()
        self.strategies = list()
        self.states = list()

    def record_family(self, family):
        self.trace_lines.extend(family.trace_lines())

    def record_state(self, state):
        self.states.append(state)
        if state.step is not None:
            self.strategies.append(state.step.strategy)


def extract(graph, config, jobs=1, audit=None):
    """
    Runs the extraction pipeline
    :param graph: Graph
    :param config: ExtractionConfig
    :param jobs: int, threads used for per-colour replays
    :param audit: AuditTrail or None
    :return: ExtractionCertificate
    """

    k, t = config.k, config.t
    n0 = graph.n
    if n0 < k - 1:
        raise exceptions.DomainError('extraction needs n >= k - 1, got n={} k={}'.format(n0, k))
    required = config.required_edges(n0)
    if graph.m < required:
        raise exceptions.InsufficientEdges('insufficient edges: {} < {}'.format(graph.m, required))

    size_floor = config.size_floor(n0)
    log = ReplayLog()
    log.add('start n={} m={} k={} t={} floor={}'.format(n0, graph.m, k, t, size_floor))

    current = graph
    reason = Branches.RECURSIVE_DESCENT
    levels = 0
    while True:
        peeled = peel_to_core(current, k)
        core = peeled.core
        if peeled.removed:
            log.add('peel level={} removed={} n={}'.format(levels, len(peeled.removed), core.n))
        if core.is_empty:
            raise exceptions.InternalInvariantBreach('level {}: k-core vanished'.format(levels))
        if (k - 1) * core.n - core.m > t:
            raise exceptions.InternalInvariantBreach('level {}: edge budget lost, e={} n={}'.format(
                levels, core.m, core.n))
        if core.n <= size_floor:
            branch, witness = reason, core
            break

        branch, witness = _descend(core, config, log, jobs, audit)
        if branch == Branches.SPARSE_CUT:
            current = witness
            reason = Branches.SPARSE_CUT
            levels += 1
            LOGGER.info('Sparse cut at level {}, descending to {} vertices'.format(levels - 1, current.n))
            continue
        break

    if witness.is_empty or not witness.is_induced_subgraph_of(graph) or not witness.has_min_degree(k):
        raise exceptions.InternalInvariantBreach('branch {} produced an invalid witness'.format(branch))
    if witness.n > size_floor:
        raise exceptions.InternalInvariantBreach('branch {} produced {} vertices > {}'.format(
            branch, witness.n, size_floor))

    log.add('branch={} size={}'.format(branch, witness.n))
    LOGGER.info('Extraction finished: branch={} size={} levels={}'.format(branch, witness.n, levels))
    certificate = ExtractionCertificate(branch, witness.vertex_ids, config.size_bound(n0), replay_log=log.lines)

    return certificate.bind(graph, config, levels=levels)


def _descend(core, config, log, jobs, audit):
    """
    Runs one level of the pipeline on a graph of minimum degree >= k. A sparse cut returns the graph to recurse
    on, every other branch returns its witness
    """

    k, t = config.k, config.t
    n = core.n

    components = core.components()
    if len(components) > 1:
        smallest = min(components, key=lambda component: (len(component), min(component)))
        log.add('disconnected components={} smallest={}'.format(len(components), len(smallest)))
        return Branches.DISCONNECTED, core.induced(smallest)

    degree_k = core.vertices_with_degree(k)
    if Limits.FEW_DEGREE_K_DIVISOR * k * len(degree_k) <= n:
        log.add('few-degree-k count={} n={}'.format(len(degree_k), n))
        return Branches.FEW_DEGREE_K, shrink_few_degree_k(core, k)

    result = grow_good_sets(core, k)
    if isinstance(result, GoodSetEscape):
        if result.kind == EscapeKinds.SPARSE_CUT:
            log.add('sparse-cut X={}'.format(format_vertex_set(result.witness_set)))
            return Branches.SPARSE_CUT, core.delete(result.witness_set)
        errors = replay_trace(core, k, result.trace, target=result.witness_set)
        if errors:
            raise exceptions.InternalInvariantBreach('oversize good set trace: {}'.format(errors[0]))
        log.add('oversize-good-set size={}'.format(len(result.witness_set)))
        return Branches.OVERSIZE_GOOD_SET, _remove_good_set(core, result.witness_set, k)

    family = result
    if audit is not None:
        audit.record_family(family)
    buckets = partition_dyadic(family, n, k)
    log.add('buckets m={} J={} J_prime={}'.format(family.m, buckets.J, buckets.j_prime))

    if buckets.j_prime == 1:
        log.add('single-big-good-set size={}'.format(len(family[0])))
        return Branches.SINGLE_BIG_GOOD_SET, _remove_good_set(core, family[0], k)
    if 2 ** buckets.j_prime <= t:
        log.add('small-j-prime J_prime={} size={}'.format(buckets.j_prime, len(family[0])))
        return Branches.SMALL_J_PRIME_ESCAPE, _remove_good_set(core, family[0], k)

    state = init_state(core, buckets, k)
    report = verify_appropriate(state)
    if not report:
        raise exceptions.InternalInvariantBreach('initial colouring broke condition ({})'.format(report.condition))
    if audit is not None:
        audit.record_state(state)

    while state.ell < buckets.J:
        result = assemble_step(state, jobs=jobs)
        if isinstance(result, WitnessFound):
            log.add('strategy-witness ell={} size={} {}'.format(state.ell, result.witness.n, result.provenance))
            return Branches.STRATEGY_WITNESS, result.witness
        state = result
        if state.step is not None:
            log.add(state.step.audit_line())
        else:
            log.add('step ell={} branch=relabel'.format(state.ell - 1))
        if audit is not None:
            audit.record_state(state)

    certificate = finalize(state, core, k)
    log.add('colouring-complete colours={} size={}'.format(len(state.classes), certificate.size))
    return Branches.COLOURING_COMPLETE, core.induced(certificate.witness_vertices)


def _remove_good_set(core, members, k):
    result = remove_and_peel(core, members, k)
    if result is EMPTY_CORE:
        raise exceptions.InternalInvariantBreach('removing a good set of size {} emptied the core'.format(len(members)))

    return result


def finalize(state, graph, k):
    """
    Deletes the largest colour class (smallest colour on ties) of a J-appropriate colouring
    :param state: ColouringState, J-appropriate
    :param graph: Graph, the graph the colouring lives on
    :param k: int
    :return: ExtractionCertificate, not yet bound to an input graph
    """

    classes = state.classes
    coloured = sum(len(members) for members in classes.values())
    if Fraction(coloured) < Fraction(graph.n, Limits.COLOURED_COUNT_DIVISOR * k):
        raise exceptions.InternalInvariantBreach('only {} coloured vertices < n/(20k) = {}'.format(
            coloured, Fraction(graph.n, Limits.COLOURED_COUNT_DIVISOR * k)))

    best = min(classes, key=lambda colour: (-len(classes[colour]), colour))
    witness = graph.delete(classes[best])
    if witness.is_empty or not witness.has_min_degree(k):
        raise exceptions.InternalInvariantBreach('deleting colour {} left minimum degree < {}'.format(best, k))

    LOGGER.info('Finalized colouring with colour {} of size {}'.format(best, len(classes[best])))
    bound = (1 - Fraction(1, Limits.EPSILON_DEGREE_FACTOR * k * k)) * graph.n

    return ExtractionCertificate(
        Branches.COLOURING_COMPLETE, witness.vertex_ids, bound,
        replay_log=['finalize colour={} removed={}'.format(best, len(classes[best]))])
