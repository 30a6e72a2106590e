#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains the extract command
"""

from __future__ import print_function, division, absolute_import

__author__ = "Tomas Poveda"
__license__ = "MIT"
__maintainer__ = "Tomas Poveda"
__email__ = "tpovedatd@gmail.com"

import os
import glob
import logging
from concurrent.futures import ProcessPoolExecutor

from degcore.core import command, exceptions
from degcore.core.defines import EDGE_LIST_EXTENSION, CERTIFICATE_EXTENSION
from degcore.core.config import ExtractionConfig
from degcore.core.edgelist import read_edge_list
from degcore.core.extractor import extract

LOGGER = logging.getLogger('degcore')


def certificate_path_for(input_path, output_path=None):
    """
    Returns where the certificate of an input graph is written: the given output path, or the input path with
    the certificate extension
    :param input_path: str
    :param output_path: str or None
    :return: str
    """

    if output_path:
        return output_path
    root, ext = os.path.splitext(input_path)
    if ext != EDGE_LIST_EXTENSION:
        root = input_path

    return root + CERTIFICATE_EXTENSION


def extract_file(input_path, k, t, output_path=None):
    """
    Extracts one edge-list file and writes its certificate. Runs inside batch worker processes, so it only
    returns plain values
    :param input_path: str
    :param k: int
    :param t: int
    :param output_path: str or None
    :return: tuple(str, int, str), input path, exit code and output line
    """

    try:
        graph = read_edge_list(input_path)
        certificate = extract(graph, ExtractionConfig(k, t))
    except (exceptions.GraphParseError, IOError, OSError) as exc:
        return input_path, command.ExitCodes.PARSE, str(exc)
    except (exceptions.InsufficientEdges, exceptions.InvalidConfig, exceptions.DomainError) as exc:
        return input_path, command.ExitCodes.USAGE, str(exc)
    except exceptions.DegcoreError as exc:
        return input_path, command.ExitCodes.INTERNAL, str(exc)

    cert_path = certificate.save(certificate_path_for(input_path, output_path))

    return input_path, command.ExitCodes.OK, 'branch={} size={} certificate={}'.format(
        certificate.branch, certificate.size, cert_path)


class ExtractCommand(command.DegcoreCommand):

    id = 'extract'
    label = 'Extract'
    help = 'Extracts a small minimum-degree-k subgraph and writes its certificate'

    def add_arguments(self, parser):
        parser.add_argument('--k', type=int, default=None, help='minimum degree of the witness')
        parser.add_argument('--t', type=int, default=None, help='edge excess parameter')
        parser.add_argument('-i', '--input', required=True, help='edge-list file or folder of edge-list files')
        parser.add_argument('-o', '--output', default=None, help='certificate file (single input only)')
        parser.add_argument(
            '--jobs', type=int, default=None,
            help='worker processes for folders, per-colour replay threads for a single file')
        parser.add_argument('--audit', action='store_true', default=None, help='also print the replay log')
        parser.add_argument('--preset', default=None, help='preset name or file holding default flags')

    def validate(self, args):
        errors = list()
        if args.jobs is not None and args.jobs < 1:
            errors.append('--jobs must be >= 1, got {}'.format(args.jobs))
        if os.path.isdir(args.input) and args.output:
            errors.append('--output cannot be used with an input folder')
        try:
            ExtractionConfig(args.k, args.t)
        except exceptions.InvalidConfig as exc:
            errors.append(str(exc))

        return errors

    def run(self, args):
        config = self.extraction_config(args)
        if os.path.isdir(args.input):
            return self._run_batch(args, config)

        graph = self.read_graph(args.input)
        certificate = extract(graph, config, jobs=args.jobs or 1)
        cert_path = certificate.save(certificate_path_for(args.input, args.output))
        self.emit(branch=certificate.branch, size=certificate.size)
        self.emit(certificate=cert_path)
        if args.audit:
            for line in certificate.replay_log:
                self.emit_line('log: {}'.format(line))

        return command.ExitCodes.OK

    def _run_batch(self, args, config):
        input_paths = sorted(glob.glob(os.path.join(args.input, '*' + EDGE_LIST_EXTENSION)))
        if not input_paths:
            LOGGER.warning('No {} files found in "{}"'.format(EDGE_LIST_EXTENSION, args.input))

        jobs = args.jobs or 1
        if jobs > 1 and len(input_paths) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as executor:
                results = list(executor.map(
                    extract_file, input_paths, [config.k] * len(input_paths), [config.t] * len(input_paths)))
        else:
            results = [extract_file(input_path, config.k, config.t) for input_path in input_paths]

        exit_code = command.ExitCodes.OK
        for input_path, code, line in results:
            if code == command.ExitCodes.OK:
                self.emit_line('input={} {}'.format(input_path, line))
            else:
                self.report('{}: {}'.format(input_path, line))
                exit_code = max(exit_code, code)

        return exit_code
