#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains the verify command
"""

from __future__ import print_function, division, absolute_import

__author__ = "Tomas Poveda"
__license__ = "MIT"
__maintainer__ = "Tomas Poveda"
__email__ = "tpovedatd@gmail.com"

import os
import logging

from degcore.core import command, exceptions
from degcore.core.certificate import ExtractionCertificate, verify_certificate

LOGGER = logging.getLogger('degcore')


class VerifyCommand(command.DegcoreCommand):

    id = 'verify'
    label = 'Verify'
    help = 'Re-checks a certificate against the graph it was extracted from'

    def add_arguments(self, parser):
        parser.add_argument('-i', '--input', required=True, help='edge-list file of the original graph')
        parser.add_argument('-c', '--certificate', required=True, help='certificate file')

    def validate(self, args):
        if not os.path.isfile(args.certificate):
            return ['certificate file not found: "{}"'.format(args.certificate)]

        return list()

    def run(self, args):
        graph = self.read_graph(args.input)
        try:
            certificate = ExtractionCertificate.load(args.certificate)
        except (exceptions.DegcoreError, ValueError, TypeError, IOError, OSError) as exc:
            errors = ['certificate unreadable: {}'.format(exc)]
        else:
            errors = verify_certificate(graph, certificate)
        if errors:
            LOGGER.info('Certificate "{}" failed: {}'.format(args.certificate, errors))
            self.report(errors[0])
            self.emit(verified='false', failed=len(errors))
            return command.ExitCodes.VERIFY_FAILED

        self.emit(verified='true', branch=certificate.branch, size=certificate.size)

        return command.ExitCodes.OK
