#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains the gen command
"""

from __future__ import print_function, division, absolute_import

__author__ = "Tomas Poveda"
__license__ = "MIT"
__maintainer__ = "Tomas Poveda"
__email__ = "tpovedatd@gmail.com"

from degcore.core import command
from degcore.core.edgelist import format_edge_list, write_edge_list
from degcore.core.generators import gen_wheel, gen_near_threshold


class GeneratorKinds(object):
    WHEEL = 'wheel'
    RANDOM = 'random'


class GenCommand(command.DegcoreCommand):

    id = 'gen'
    label = 'Generate'
    help = 'Writes a generalized wheel or a seeded near-threshold random graph as an edge list'

    def add_arguments(self, parser):
        parser.add_argument('kind', choices=[GeneratorKinds.WHEEL, GeneratorKinds.RANDOM])
        parser.add_argument('--n', type=int, required=True, help='number of vertices')
        parser.add_argument('--k', type=int, default=None, help='degree bound')
        parser.add_argument('--t', type=int, default=None, help='edge excess parameter (random only)')
        parser.add_argument('--excess', type=int, default=None, help='extra edges above (k - 1)n - t (random only)')
        parser.add_argument('--seed', type=int, default=None, help='random seed (random only)')
        parser.add_argument('-o', '--output', default=None, help='edge-list file, standard output when omitted')

    def run(self, args):
        if args.kind == GeneratorKinds.WHEEL:
            graph = gen_wheel(args.k, args.n)
        else:
            graph = gen_near_threshold(args.n, args.k, args.t, args.excess, args.seed)

        if args.output:
            write_edge_list(graph, args.output)
            self.emit(output=args.output, n=graph.n, m=graph.m)
        else:
            self._stdout.write(format_edge_list(graph))

        return command.ExitCodes.OK
