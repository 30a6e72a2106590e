#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains the audit command
"""

from __future__ import print_function, division, absolute_import

__author__ = "Tomas Poveda"
__license__ = "MIT"
__maintainer__ = "Tomas Poveda"
__email__ = "tpovedatd@gmail.com"

from degcore.core import command, exceptions
from degcore.core.config import ExtractionConfig
from degcore.core.extractor import AuditTrail, extract


class AuditCommand(command.DegcoreCommand):

    id = 'audit'
    label = 'Audit'
    help = 'Runs an extraction and prints its replay log, good set traces and deletion strategies'

    def add_arguments(self, parser):
        parser.add_argument('--k', type=int, default=None, help='minimum degree of the witness')
        parser.add_argument('--t', type=int, default=None, help='edge excess parameter')
        parser.add_argument('-i', '--input', required=True, help='edge-list file')
        parser.add_argument('--jobs', type=int, default=None, help='per-colour replay threads')
        parser.add_argument('--preset', default=None, help='preset name or file holding default flags')

    def validate(self, args):
        try:
            ExtractionConfig(args.k, args.t)
        except exceptions.InvalidConfig as exc:
            return [str(exc)]

        return list()

    def run(self, args):
        graph = self.read_graph(args.input)
        trail = AuditTrail()
        certificate = extract(graph, self.extraction_config(args), jobs=args.jobs or 1, audit=trail)

        self.emit(branch=certificate.branch, size=certificate.size, levels=certificate.levels)
        for line in certificate.replay_log:
            self.emit_line('log: {}'.format(line))
        for line in trail.trace_lines:
            self.emit_line('trace: {}'.format(line))
        for strategy in trail.strategies:
            self.emit_line(strategy.serialize())

        return command.ExitCodes.OK
