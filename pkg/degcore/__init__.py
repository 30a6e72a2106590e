#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Initialization module for degcore
"""

from __future__ import print_function, division, absolute_import

__author__ = "Tomas Poveda"
__license__ = "MIT"
__maintainer__ = "Tomas Poveda"
__email__ = "tpovedatd@gmail.com"

import os
import logging.config

LOG_DIR_ENV = 'DEGCORE_LOG_DIR'

_logging_initialized = False


def get_logging_config_path():
    """
    Returns path where degcore logging configuration file is located
    :return: str
    """

    return os.path.join(os.path.dirname(os.path.abspath(__file__)), '__logging__.ini')


def get_log_path():
    """
    Returns the file degcore rotating handler writes into
    :return: str
    """

    log_dir = os.environ.get(LOG_DIR_ENV) or os.path.join(os.path.expanduser('~'), 'degcore', 'logs')
    return os.path.normpath(os.path.join(log_dir, 'degcore.log'))


def init_logging(force=False):
    """
    Loads degcore logging configuration. Only the command line entry point calls this; importing the
    library never touches the file system
    :param force: bool, whether to reload the configuration even if it was already loaded
    """

    global _logging_initialized
    if _logging_initialized and not force:
        return

    log_path = get_log_path()
    log_dir = os.path.dirname(log_path)
    if not os.path.isdir(log_dir):
        os.makedirs(log_dir)

    logging.config.fileConfig(
        get_logging_config_path(), defaults={'logfile': log_path.replace('\\', '/')},
        disable_existing_loggers=False)
    _logging_initialized = True
