#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains reading and writing of the edge-list text format

    # comment
    p <n> <m>
    <u> <v>
    ...
"""

from __future__ import print_function, division, absolute_import

__author__ = "Tomas Poveda"
__license__ = "MIT"
__maintainer__ = "Tomas Poveda"
__email__ = "tpovedatd@gmail.com"

import io
import hashlib
import logging

from degcore.core import exceptions
from degcore.core.graph import Graph

LOGGER = logging.getLogger('degcore')

HEADER_TAG = 'p'


def _parse_int(token, line_number):
    try:
        value = int(token)
    except ValueError:
        raise exceptions.GraphParseError('not an integer: "{}"'.format(token), line_number)
    if value < 0:
        raise exceptions.GraphParseError('negative vertex id: {}'.format(value), line_number)

    return value


def parse_edge_list(text):
    """
    Parses edge-list text into a graph. Vertex ids are 0..n-1, where n comes from the header line when present
    and from the largest id otherwise
    :param text: str
    :return: Graph
    """

    header = None
    edges = list()
    seen = set()
    for line_number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split('#', 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == HEADER_TAG:
            if header is not None or edges:
                raise exceptions.GraphParseError('header must be the first data line', line_number)
            if len(tokens) != 3:
                raise exceptions.GraphParseError('header must be "p <n> <m>"', line_number)
            header = (_parse_int(tokens[1], line_number), _parse_int(tokens[2], line_number))
            continue
        if len(tokens) != 2:
            raise exceptions.GraphParseError('expected "u v", got "{}"'.format(line), line_number)
        u, v = _parse_int(tokens[0], line_number), _parse_int(tokens[1], line_number)
        if u == v:
            raise exceptions.GraphParseError('self-loop on vertex {}'.format(u), line_number)
        if header is not None and max(u, v) >= header[0]:
            raise exceptions.GraphParseError(
                'vertex id {} out of range for n={}'.format(max(u, v), header[0]), line_number)
        edge = (min(u, v), max(u, v))
        if edge in seen:
            raise exceptions.GraphParseError('duplicate edge {} {}'.format(*edge), line_number)
        seen.add(edge)
        edges.append(edge)

    if header is not None:
        n, m = header
        if m != len(edges):
            raise exceptions.GraphParseError('header announces {} edges, found {}'.format(m, len(edges)))
    else:
        n = max(max(edge) for edge in edges) + 1 if edges else 0

    return Graph.from_edges(edges, vertices=range(n))


def read_edge_list(file_path):
    """
    Reads a graph from an edge-list file
    :param file_path: str
    :return: Graph
    """

    with io.open(file_path, 'r', encoding='utf-8') as fh:
        text = fh.read()

    graph = parse_edge_list(text)
    LOGGER.debug('Read graph from "{}": n={} m={}'.format(file_path, graph.n, graph.m))

    return graph


def format_edge_list(graph):
    """
    Returns the canonical serialization of a graph: header plus lexicographically sorted edges with u < v
    :param graph: Graph
    :return: str
    """

    if graph.vertex_ids != tuple(range(graph.n)):
        raise exceptions.DomainError('only graphs with dense vertex ids 0..n-1 can be serialized')

    lines = ['{} {} {}'.format(HEADER_TAG, graph.n, graph.m)]
    lines.extend('{} {}'.format(u, v) for u, v in graph.edges())

    return '\n'.join(lines) + '\n'


def write_edge_list(graph, file_path):
    """
    Writes the canonical serialization of a graph into the given file
    :param graph: Graph
    :param file_path: str
    :return: str
    """

    with io.open(file_path, 'w', encoding='utf-8', newline='\n') as fh:
        fh.write(format_edge_list(graph))

    return file_path


def content_hash(graph):
    return hashlib.sha256(format_edge_list(graph).encode('utf-8')).hexdigest()
