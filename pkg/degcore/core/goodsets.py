#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains the construction of the family of maximal good sets.

A good set is grown from four rules:
    1. {v} is good when deg_G(v) = k
    2. A + v is good when A is good, v is not in A and deg_{G-A}(v) <= k - 1
    3. A | B is good when A and B are good and overlap
    4. A | B is good when A and B are good and some edge joins them
"""

from __future__ import print_function, division, absolute_import

__author__ = "Tomas Poveda"
__license__ = "MIT"
__maintainer__ = "Tomas Poveda"
__email__ = "tpovedatd@gmail.com"

import logging
from fractions import Fraction

from degcore.core import exceptions
from degcore.core.defines import Rules, EscapeKinds
from degcore.core.graph import vertex_set, format_vertex_set
from degcore.core.peeler import peel_to_core

LOGGER = logging.getLogger('degcore')


class EmptyCore(object):
    """
    Signal returned when removing a set and peeling leaves nothing behind
    """

    def __bool__(self):
        return False

    __nonzero__ = __bool__

    def __repr__(self):
        return 'EmptyCore'


EMPTY_CORE = EmptyCore()


class TraceStep(object):
    __slots__ = ('_rule', '_operands', '_result')

    def __init__(self, rule, operands, result):
        self._rule = rule
        self._operands = tuple(operands)
        self._result = vertex_set(result)

    def __eq__(self, other):
        if not isinstance(other, TraceStep):
            return NotImplemented
        return (self._rule, self._operands, self._result) == (other._rule, other._operands, other._result)

    def __hash__(self):
        return hash((self._rule, self._operands, self._result))

    def __repr__(self):
        return 'TraceStep({})'.format(self.to_line())

    @property
    def rule(self):
        return self._rule

    @property
    def operands(self):
        return self._operands

    @property
    def result(self):
        return self._result

    def to_line(self):
        """
        Returns the audit line for this rule application: rule<1-4> operands -> set
        :return: str
        """

        operands = list()
        for operand in self._operands:
            operands.append(format_vertex_set(operand) if isinstance(operand, frozenset) else str(operand))

        return 'rule{} {} -> {}'.format(self._rule, ' '.join(operands), format_vertex_set(self._result))


class GoodFamily(object):
    """
    Maximal good sets D_1, ..., D_m sorted by size descending, ties broken by the smallest contained vertex id
    """

    def __init__(self, members, traces=None):
        members = [vertex_set(member) for member in members]
        traces = list(traces) if traces is not None else [tuple() for _ in members]
        if len(traces) != len(members):
            raise exceptions.DomainError('expected one trace per good set member')

        order = sorted(range(len(members)), key=lambda i: (-len(members[i]), min(members[i]) if members[i] else -1))
        self._members = tuple(members[i] for i in order)
        self._traces = tuple(tuple(traces[i]) for i in order)
        self._owner = dict()
        for index, member in enumerate(self._members):
            for v in member:
                self._owner[v] = index

    def __len__(self):
        return len(self._members)

    def __iter__(self):
        return iter(self._members)

    def __getitem__(self, index):
        return self._members[index]

    def __repr__(self):
        return 'GoodFamily(m={}, total_size={})'.format(self.m, self.total_size)

    @property
    def members(self):
        return self._members

    @property
    def m(self):
        return len(self._members)

    @property
    def traces(self):
        return self._traces

    @property
    def total_size(self):
        return sum(len(member) for member in self._members)

    @property
    def covered(self):
        return frozenset(self._owner)

    def owner_of(self, vertex):
        """
        Returns the index of the member containing the given vertex, None if no member contains it
        :param vertex: int
        :return: int or None
        """

        return self._owner.get(vertex)

    def trace_lines(self):
        lines = list()
        for index, trace in enumerate(self._traces):
            lines.append('# D{} {}'.format(index + 1, format_vertex_set(self._members[index])))
            lines.extend(step.to_line() for step in trace)

        return lines

    def validate(self, graph, k):
        """
        Checks family hygiene against the given graph: disjointness, no edges between members, coverage of the
        degree-k vertices and the boundary bound of every member
        :param graph: Graph
        :param k: int
        :return: list(str), found errors
        """

        errors = list()
        seen = set()
        for index, member in enumerate(self._members):
            if not member:
                errors.append('D{} is empty'.format(index + 1))
                continue
            if not seen.isdisjoint(member):
                errors.append('D{} overlaps an earlier member'.format(index + 1))
            seen.update(member)
            for v in member:
                if v not in graph:
                    errors.append('D{} holds unknown vertex {}'.format(index + 1, v))
            if errors:
                continue
            boundary = graph.boundary_edge_count(member)
            if boundary > (k - 1) * len(member) + 1:
                errors.append('D{} has {} boundary edges > {}'.format(index + 1, boundary, (k - 1) * len(member) + 1))
            for v in member:
                for u in graph.neighbours(v):
                    owner = self._owner.get(u)
                    if owner is not None and owner != index:
                        errors.append('edge {}-{} joins D{} and D{}'.format(v, u, index + 1, owner + 1))
        for v in graph.vertices_with_degree(k):
            if v not in self._owner:
                errors.append('degree-{} vertex {} is not covered'.format(k, v))

        return errors


class GoodSetEscape(object):
    def __init__(self, kind, witness_set, detail=None, trace=None):
        self._kind = kind
        self._witness_set = vertex_set(witness_set)
        self._detail = dict(detail or dict())
        self._trace = tuple(trace or tuple())

    def __repr__(self):
        return 'GoodSetEscape({}, {})'.format(self._kind, format_vertex_set(self._witness_set))

    @property
    def kind(self):
        return self._kind

    @property
    def witness_set(self):
        return self._witness_set

    @property
    def detail(self):
        return dict(self._detail)

    @property
    def trace(self):
        return self._trace


class GoodSetAudit(object):
    def __init__(self, boundary, bound, cap_ok=None):
        self.boundary = boundary
        self.bound = bound
        self.cap_ok = cap_ok

    def __repr__(self):
        return 'GoodSetAudit(boundary={}, bound={}, passed={}, cap_ok={})'.format(
            self.boundary, self.bound, self.passed, self.cap_ok)

    @property
    def passed(self):
        return self.boundary <= self.bound


class _GrowingSet(object):
    __slots__ = ('members', 'trace')

    def __init__(self, members, trace):
        self.members = members
        self.trace = trace


class _GoodSetGrower(object):
    """
    Fixpoint closure of the four good-set rules with the sparse-cut and oversize escapes
    """

    def __init__(self, graph, k, rng=None):
        self._graph = graph
        self._k = k
        self._rng = rng
        self._cap = Fraction(graph.n, k)
        self._sets = list()

    def run(self):
        for v in sorted(self._graph.vertices_with_degree(self._k)):
            seed = frozenset([v])
            escape = self._check_growth(seed, [])
            if escape:
                return escape
            self._sets.append(_GrowingSet(seed, [TraceStep(Rules.SEED, (v,), seed)]))

        while True:
            action = self._next_action()
            if action is None:
                break
            kind, i, other = action
            if kind == Rules.ABSORB:
                escape = self._absorb(i, other)
            else:
                escape = self._merge_adjacent(i, other)
            if escape:
                return escape

        family = GoodFamily([item.members for item in self._sets], [item.trace for item in self._sets])
        LOGGER.debug('Good set closure reached fixpoint: {}'.format(family))

        return family

    def _owners(self):
        owners = dict()
        for index, item in enumerate(self._sets):
            for v in item.members:
                owners[v] = index

        return owners

    def _absorb_candidates(self, members):
        candidates = set()
        for x in members:
            for u in self._graph.neighbours(x):
                if u not in members:
                    candidates.add(u)

        return sorted(u for u in candidates if self._graph.degree_outside(u, members) <= self._k - 1)

    def _adjacent_indices(self, index, owners):
        adjacent = set()
        for x in self._sets[index].members:
            for u in self._graph.neighbours(x):
                owner = owners.get(u)
                if owner is not None and owner != index:
                    adjacent.add(owner)

        return sorted(adjacent)

    def _next_action(self):
        owners = self._owners()
        if self._rng is None:
            for index, item in enumerate(self._sets):
                candidates = self._absorb_candidates(item.members)
                if candidates:
                    return Rules.ABSORB, index, candidates[0]
            for index in range(len(self._sets)):
                later = [j for j in self._adjacent_indices(index, owners) if j > index]
                if later:
                    return Rules.MERGE_ADJACENT, index, later[0]
            return None

        actions = list()
        for index, item in enumerate(self._sets):
            actions.extend((Rules.ABSORB, index, v) for v in self._absorb_candidates(item.members))
            actions.extend(
                (Rules.MERGE_ADJACENT, index, j) for j in self._adjacent_indices(index, owners) if j > index)

        return self._rng.choice(actions) if actions else None

    def _check_growth(self, grown, operands):
        if Fraction(len(grown)) <= self._cap:
            self._check_bound(grown)
            return None

        # the larger operand of the offending step is good, fits under n/k and is at least half the grown set
        witness, trace = max(operands, key=lambda item: len(item[0]))
        if not (Fraction(len(witness)) * 2 * self._k >= self._graph.n and Fraction(len(witness)) <= self._cap):
            raise exceptions.InternalInvariantBreach(
                'oversize witness {} outside [n/(2k), n/k]'.format(format_vertex_set(witness)))
        LOGGER.info('Good set grew to {} > n/k={}, reporting {}'.format(
            len(grown), self._cap, format_vertex_set(witness)))

        return GoodSetEscape(
            EscapeKinds.OVERSIZE_GOOD_SET, witness, detail={'grown_size': len(grown)}, trace=trace)

    def _check_bound(self, members):
        boundary = self._graph.boundary_edge_count(members)
        if boundary > (self._k - 1) * len(members) + 1:
            raise exceptions.InternalInvariantBreach('good set {} has {} boundary edges > {}'.format(
                format_vertex_set(members), boundary, (self._k - 1) * len(members) + 1))

    def _absorb(self, index, vertex):
        item = self._sets[index]
        grown = item.members | frozenset([vertex])
        escape = self._check_growth(grown, [(item.members, tuple(item.trace))])
        if escape:
            return escape
        trace = item.trace + [TraceStep(Rules.ABSORB, (item.members, vertex), grown)]

        other_index = self._owners().get(vertex)
        if other_index is None:
            self._sets[index] = _GrowingSet(grown, trace)
            return None

        other = self._sets[other_index]
        # growing sets stay disjoint, so the overlap is {vertex}: its boundary is deg(vertex) >= k and this escape
        # never fires from the grower
        overlap = grown & other.members
        boundary = self._graph.boundary_edge_count(overlap)
        if boundary <= (self._k - 1) * len(overlap):
            LOGGER.info('Sparse intersection {} found while merging good sets'.format(format_vertex_set(overlap)))
            return GoodSetEscape(
                EscapeKinds.SPARSE_CUT, overlap, detail={'boundary': boundary, 'bound': (self._k - 1) * len(overlap)})

        merged = grown | other.members
        escape = self._check_growth(merged, [(grown, tuple(trace)), (other.members, tuple(other.trace))])
        if escape:
            return escape
        step = TraceStep(Rules.MERGE_OVERLAPPING, (grown, other.members), merged)
        self._sets[index] = _GrowingSet(merged, trace + other.trace + [step])
        del self._sets[other_index]

        return None

    def _merge_adjacent(self, index, other_index):
        item, other = self._sets[index], self._sets[other_index]
        merged = item.members | other.members
        escape = self._check_growth(merged, [(item.members, tuple(item.trace)), (other.members, tuple(other.trace))])
        if escape:
            return escape
        step = TraceStep(Rules.MERGE_ADJACENT, (item.members, other.members), merged)
        self._sets[index] = _GrowingSet(merged, item.trace + other.trace + [step])
        del self._sets[other_index]

        return None


def grow_good_sets(graph, k, rng=None):
    """
    Builds the family of maximal good sets, or returns the first escape found on the way
    :param graph: Graph, with minimum degree >= k
    :param k: int
    :param rng: random.Random or None, picks rule applications at random instead of the canonical order
    :return: GoodFamily or GoodSetEscape
    """

    if not graph.has_min_degree(k):
        raise exceptions.PreconditionViolated(
            'good sets need minimum degree >= {}, got {}'.format(k, graph.min_degree()))

    return _GoodSetGrower(graph, k, rng=rng).run()


def replay_trace(graph, k, trace, target=None):
    """
    Re-validates every rule application of a good set trace
    :param graph: Graph
    :param k: int
    :param trace: iterable(TraceStep)
    :param target: frozenset(int) or None, set the trace must prove good
    :return: list(str), found errors
    """

    errors = list()
    proven = set()
    for position, step in enumerate(trace):
        operands = step.operands
        if step.rule == Rules.SEED:
            v = operands[0]
            if v not in graph or graph.degree(v) != k or step.result != frozenset([v]):
                errors.append('step {}: {{{}}} is not a degree-{} seed'.format(position, v, k))
        elif step.rule == Rules.ABSORB:
            members, v = operands
            if members not in proven:
                errors.append('step {}: operand {} not proven good'.format(position, format_vertex_set(members)))
            elif v in members or graph.degree_outside(v, members) > k - 1 or step.result != members | {v}:
                errors.append('step {}: cannot absorb {} into {}'.format(position, v, format_vertex_set(members)))
        elif step.rule in (Rules.MERGE_OVERLAPPING, Rules.MERGE_ADJACENT):
            first, second = operands
            if first not in proven or second not in proven:
                errors.append('step {}: merge operand not proven good'.format(position))
            elif step.result != first | second:
                errors.append('step {}: merge result mismatch'.format(position))
            elif step.rule == Rules.MERGE_OVERLAPPING and first.isdisjoint(second):
                errors.append('step {}: rule 3 operands do not overlap'.format(position))
            elif step.rule == Rules.MERGE_ADJACENT and not graph.touches(first, second):
                errors.append('step {}: rule 4 operands are not adjacent'.format(position))
        else:
            errors.append('step {}: unknown rule {}'.format(position, step.rule))
        proven.add(step.result)

    if target is not None and vertex_set(target) not in proven:
        errors.append('trace does not prove {} good'.format(format_vertex_set(target)))

    return errors


def audit_good_set(graph, members, k, n_cap_check=False):
    """
    Reports the boundary edge count of a set against the good set bound (k - 1)|D| + 1
    :param graph: Graph
    :param members: iterable(int), D
    :param k: int
    :param n_cap_check: bool, whether to also check |D| <= n/k
    :return: GoodSetAudit
    """

    members = graph.check_vertices(members)
    if not members:
        raise exceptions.DomainError('cannot audit an empty set')

    cap_ok = None
    if n_cap_check:
        cap_ok = Fraction(len(members)) <= Fraction(graph.n, k)

    return GoodSetAudit(graph.boundary_edge_count(members), (k - 1) * len(members) + 1, cap_ok=cap_ok)


def remove_and_peel(graph, members, k):
    """
    Returns the k-core of G - D, or EMPTY_CORE when nothing survives
    :param graph: Graph
    :param members: iterable(int), D
    :param k: int
    :return: Graph or EmptyCore
    """

    members = graph.check_vertices(members)
    if not members:
        raise exceptions.DomainError('cannot remove an empty set')
    if len(members) > graph.n - k + 1:
        raise exceptions.DomainError('set of size {} exceeds n - k + 1 = {}'.format(len(members), graph.n - k + 1))

    core = peel_to_core(graph.delete(members), k).core
    if core.is_empty:
        return EMPTY_CORE

    return core
