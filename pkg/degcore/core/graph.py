#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains the immutable simple graph every other degcore module consumes
"""

from __future__ import print_function, division, absolute_import

__author__ = "Tomas Poveda"
__license__ = "MIT"
__maintainer__ = "Tomas Poveda"
__email__ = "tpovedatd@gmail.com"

import networkx as nx

from degcore.core import exceptions


def vertex_set(vertices=None):
    """
    Returns the canonical vertex set representation used across degcore
    :param vertices: iterable(int) or None
    :return: frozenset(int)
    """

    if not vertices:
        return frozenset()

    return frozenset(int(v) for v in vertices)


def format_vertex_set(vertices):
    """
    Returns a compact, sorted text representation of a vertex set: {0,1,2}
    :param vertices: iterable(int)
    :return: str
    """

    return '{' + ','.join(str(v) for v in sorted(vertices)) + '}'


class DegreeView(object):
    """
    Degree classes V_{<=j}(G) and V_j(G) for every threshold j in 0..i
    """

    def __init__(self, graph, threshold):
        if threshold < 0:
            raise exceptions.DomainError('degree threshold must be >= 0, got {}'.format(threshold))

        exactly = dict((j, set()) for j in range(threshold + 1))
        for v in graph.vertex_ids:
            degree = graph.degree(v)
            if degree <= threshold:
                exactly[degree].add(v)

        self._threshold = threshold
        self._exactly = dict((j, frozenset(vertices)) for j, vertices in exactly.items())
        self._at_most = dict()
        running = frozenset()
        for j in range(threshold + 1):
            running = running | self._exactly[j]
            self._at_most[j] = running

    @property
    def threshold(self):
        return self._threshold

    @property
    def at_most(self):
        return dict(self._at_most)

    @property
    def exactly(self):
        return dict(self._exactly)


class Graph(object):
    """
    Immutable simple undirected graph. Vertex ids are preserved by every induced subgraph operation so vertex
    sets can travel between all the graphs derived from one input
    """

    __slots__ = ('_adjacency', '_vertices', '_m', '_sorted_cache')

    def __init__(self, adjacency=None):
        adjacency = adjacency or dict()
        checked = dict()
        for v, neighbours in adjacency.items():
            checked[int(v)] = frozenset(int(u) for u in neighbours)

        for v, neighbours in checked.items():
            if v in neighbours:
                raise exceptions.DomainError('self-loop on vertex {}'.format(v))
            for u in neighbours:
                if u not in checked:
                    raise exceptions.UnknownVertex(u)
                if v not in checked[u]:
                    raise exceptions.DomainError('adjacency is not symmetric for edge {}-{}'.format(v, u))

        self._setup(checked)

    def __contains__(self, vertex):
        return vertex in self._adjacency

    def __iter__(self):
        return iter(self._vertices)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adjacency == other._adjacency

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self._vertices, tuple(self.edges())))

    def __repr__(self):
        return '{}(n={}, m={})'.format(type(self).__name__, self.n, self.m)

    # ============================================================================================================
    # CLASS METHODS
    # ============================================================================================================

    @classmethod
    def from_edges(cls, edges, vertices=None):
        """
        Builds a graph from an edge iterable
        :param edges: iterable(tuple(int, int))
        :param vertices: iterable(int) or None, vertex ids; isolated vertices must be listed here
        :return: Graph
        """

        adjacency = dict((int(v), set()) for v in (vertices or list()))
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise exceptions.DomainError('self-loop on vertex {}'.format(u))
            if vertices is not None and (u not in adjacency or v not in adjacency):
                raise exceptions.UnknownVertex(u if u not in adjacency else v)
            if v in adjacency.setdefault(u, set()):
                raise exceptions.DomainError('duplicate edge {}-{}'.format(min(u, v), max(u, v)))
            adjacency[u].add(v)
            adjacency.setdefault(v, set()).add(u)

        return cls._from_trusted(dict((v, frozenset(nbrs)) for v, nbrs in adjacency.items()))

    @classmethod
    def from_networkx(cls, nx_graph):
        """
        Builds a graph from a networkx graph with integer node labels
        :param nx_graph: networkx.Graph
        :return: Graph
        """

        if nx_graph.is_directed() or nx_graph.is_multigraph():
            raise exceptions.DomainError('only simple undirected graphs are supported')

        return cls.from_edges(nx_graph.edges(), vertices=nx_graph.nodes())

    @classmethod
    def _from_trusted(cls, adjacency):
        graph = cls.__new__(cls)
        graph._setup(adjacency)
        return graph

    # ============================================================================================================
    # PROPERTIES
    # ============================================================================================================

    @property
    def vertex_ids(self):
        return self._vertices

    @property
    def n(self):
        return len(self._vertices)

    @property
    def m(self):
        return self._m

    @property
    def is_empty(self):
        return not self._vertices

    # ============================================================================================================
    # BASE
    # ============================================================================================================

    def degree(self, vertex):
        return len(self._neighbour_set(vertex))

    def neighbours(self, vertex):
        """
        Returns the sorted neighbours of the given vertex
        :param vertex: int
        :return: tuple(int)
        """

        cached = self._sorted_cache.get(vertex)
        if cached is None:
            cached = tuple(sorted(self._neighbour_set(vertex)))
            self._sorted_cache[vertex] = cached

        return cached

    def neighbour_set(self, vertex):
        return self._neighbour_set(vertex)

    def adjacent(self, u, v):
        return v in self._neighbour_set(u)

    def edges(self):
        """
        Returns all edges as (u, v) pairs with u < v in lexicographic order
        :return: list(tuple(int, int))
        """

        return [(u, v) for u in self._vertices for v in self.neighbours(u) if u < v]

    def degree_outside(self, vertex, excluded):
        """
        Returns deg_{G-X}(vertex) for a vertex outside X
        :param vertex: int
        :param excluded: frozenset(int), X
        :return: int
        """

        neighbours = self._neighbour_set(vertex)
        if len(excluded) < len(neighbours):
            return len(neighbours) - sum(1 for x in excluded if x in neighbours)

        return len(neighbours - excluded)

    def min_degree(self):
        """
        Returns the minimum degree of the graph, None for the empty graph
        :return: int or None
        """

        if not self._vertices:
            return None

        return min(len(neighbours) for neighbours in self._adjacency.values())

    def has_min_degree(self, k):
        """
        Returns whether the graph is non-empty and every vertex has degree >= k
        :param k: int
        :return: bool
        """

        return not self.is_empty and self.min_degree() >= k

    def vertices_with_degree_at_most(self, threshold):
        return frozenset(v for v, neighbours in self._adjacency.items() if len(neighbours) <= threshold)

    def vertices_with_degree(self, degree):
        return frozenset(v for v, neighbours in self._adjacency.items() if len(neighbours) == degree)

    def check_vertices(self, vertices):
        """
        Returns given vertices as a vertex set, raising if any of them is not part of the graph
        :param vertices: iterable(int)
        :return: frozenset(int)
        """

        vertices = vertex_set(vertices)
        for v in sorted(vertices):
            if v not in self._adjacency:
                raise exceptions.UnknownVertex(v)

        return vertices

    def delete(self, vertices):
        """
        Returns the induced subgraph G - X. Surviving vertices keep their ids
        :param vertices: iterable(int), X
        :return: Graph
        """

        removed = self.check_vertices(vertices)
        if not removed:
            return self

        adjacency = dict()
        for v, neighbours in self._adjacency.items():
            if v in removed:
                continue
            adjacency[v] = neighbours - removed if not neighbours.isdisjoint(removed) else neighbours

        return self._from_trusted(adjacency)

    def induced(self, vertices):
        """
        Returns the subgraph induced by the given vertices
        :param vertices: iterable(int)
        :return: Graph
        """

        kept = self.check_vertices(vertices)
        return self.delete(frozenset(self._adjacency) - kept)

    def boundary_edge_count(self, vertices):
        """
        Returns the number of edges incident with at least one vertex of X, that is e(G) - e(G-X)
        :param vertices: iterable(int), X
        :return: int
        """

        vertices = self.check_vertices(vertices)
        degree_sum = 0
        inner_twice = 0
        for v in vertices:
            neighbours = self._adjacency[v]
            degree_sum += len(neighbours)
            inner_twice += len(neighbours & vertices)

        return degree_sum - inner_twice // 2

    def edge_count_within(self, vertices):
        vertices = self.check_vertices(vertices)
        return sum(len(self._adjacency[v] & vertices) for v in vertices) // 2

    def touches(self, vertices, others):
        """
        Returns whether some vertex of the first set is adjacent to some vertex of the second one
        :param vertices: iterable(int)
        :param others: frozenset(int)
        :return: bool
        """

        others = vertex_set(others)
        return any(not self._adjacency[v].isdisjoint(others) for v in vertices if v in self._adjacency)

    def degree_classes(self, threshold):
        return DegreeView(self, threshold)

    def is_induced_subgraph_of(self, other):
        """
        Returns whether this graph equals the subgraph of other induced by its vertex set
        :param other: Graph
        :return: bool
        """

        kept = frozenset(self._vertices)
        for v, neighbours in self._adjacency.items():
            if v not in other:
                return False
            if other.neighbour_set(v) & kept != neighbours:
                return False

        return True

    def components(self):
        """
        Returns the connected components, sorted by their smallest vertex id
        :return: list(frozenset(int))
        """

        components = [frozenset(component) for component in nx.connected_components(self.to_networkx())]
        return sorted(components, key=min)

    def is_connected(self):
        return len(self.components()) <= 1

    def to_networkx(self):
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(self._vertices)
        nx_graph.add_edges_from(self.edges())
        return nx_graph

    def content_hash(self):
        """
        Returns the SHA-256 hex digest of the canonical edge-list serialization
        :return: str
        """

        from degcore.core import edgelist

        return edgelist.content_hash(self)

    # ============================================================================================================
    # INTERNAL
    # ============================================================================================================

    def _setup(self, adjacency):
        self._adjacency = adjacency
        self._vertices = tuple(sorted(adjacency))
        self._m = sum(len(neighbours) for neighbours in adjacency.values()) // 2
        self._sorted_cache = dict()

    def _neighbour_set(self, vertex):
        try:
            return self._adjacency[vertex]
        except KeyError:
            raise exceptions.UnknownVertex(vertex)


def delete(graph, vertices):
    return graph.delete(vertices)


def boundary_edge_count(graph, vertices):
    return graph.boundary_edge_count(vertices)


def degree_classes(graph, threshold):
    return graph.degree_classes(threshold)
