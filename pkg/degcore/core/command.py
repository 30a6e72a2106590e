#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains base implementation for degcore commands
"""

from __future__ import print_function, division, absolute_import

__author__ = "Tomas Poveda"
__license__ = "MIT"
__maintainer__ = "Tomas Poveda"
__email__ = "tpovedatd@gmail.com"

import os
import sys
import logging

from degcore.core import exceptions
from degcore.core.config import ExtractionConfig
from degcore.core.edgelist import read_edge_list

LOGGER = logging.getLogger('degcore')


class ExitCodes(object):
    OK = 0
    VERIFY_FAILED = 1
    USAGE = 2
    PARSE = 3
    INTERNAL = 4


class DegcoreCommand(object):

    id = 'DefaultDegcoreCommand'

    label = ''
    help = ''

    def __init__(self, config, stdout=None, stderr=None):
        self._config = config
        self._stdout = stdout or sys.stdout
        self._stderr = stderr or sys.stderr

    def __str__(self):
        return self.label or type(self).__name__

    def __repr__(self):
        return u"%s.%s(%r)" % (__name__, type(self).__name__, self.__str__())

    @staticmethod
    def can_be_registered():
        return True

    @property
    def config(self):
        return self._config

    def add_arguments(self, parser):
        """
        Adds the command flags into its argparse sub parser
        :param parser: argparse.ArgumentParser
        """

        pass

    def validate(self, args):
        """
        Will ensure that the parsed arguments are valid before any computation happens
        :param args: argparse.Namespace
        :return: list<str>
        """

        return list()

    def run(self, args):
        """
        Executes the command
        :param args: argparse.Namespace
        :return: int, exit code
        """

        raise NotImplementedError('Command "{}" does not implement run'.format(self.id))

    def emit(self, **values):
        """
        Writes machine readable key=value pairs into standard output, one line per call
        """

        line = ' '.join('{}={}'.format(key, values[key]) for key in sorted(values))
        self._stdout.write(line + '\n')

    def emit_line(self, line):
        self._stdout.write(line + '\n')

    def report(self, message):
        self._stderr.write(message + '\n')

    def read_graph(self, file_path):
        """
        Reads an edge-list file, turning file system problems into parse errors
        :param file_path: str
        :return: Graph
        """

        if not file_path or not os.path.isfile(file_path):
            raise exceptions.GraphParseError('input file not found: "{}"'.format(file_path))
        try:
            return read_edge_list(file_path)
        except (IOError, OSError, UnicodeDecodeError) as exc:
            raise exceptions.GraphParseError('cannot read "{}": {}'.format(file_path, exc))

    def extraction_config(self, args):
        return ExtractionConfig(args.k, args.t)
