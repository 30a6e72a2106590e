#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains the oracle command
"""

from __future__ import print_function, division, absolute_import

__author__ = "Tomas Poveda"
__license__ = "MIT"
__maintainer__ = "Tomas Poveda"
__email__ = "tpovedatd@gmail.com"

from degcore.core import command
from degcore.core.graph import format_vertex_set
from degcore.core.oracle import brute_min_subgraph


class OracleCommand(command.DegcoreCommand):

    id = 'oracle'
    label = 'Oracle'
    help = 'Finds the smallest induced subgraph of minimum degree k by exhaustive search (n <= 20)'

    def add_arguments(self, parser):
        parser.add_argument('--k', type=int, default=None, help='minimum degree')
        parser.add_argument('-i', '--input', required=True, help='edge-list file')

    def validate(self, args):
        if args.k < 1:
            return ['--k must be >= 1, got {}'.format(args.k)]

        return list()

    def run(self, args):
        result = brute_min_subgraph(self.read_graph(args.input), args.k)
        if not result:
            self.emit_line('none')
            return command.ExitCodes.OK

        self.emit(min_size=result.min_size)
        self.emit(example=format_vertex_set(result.example_set))

        return command.ExitCodes.OK
