#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Version module for degcore
"""

from __future__ import print_function, division, absolute_import

__author__ = "Tomas Poveda"
__license__ = "MIT"
__maintainer__ = "Tomas Poveda"
__email__ = "tpovedatd@gmail.com"

__version__ = None

DISTRIBUTION_NAME = 'degcore'
FALLBACK_VERSION = '0.0.0+unknown'


def get_version():
    global __version__
    if __version__:
        return __version__

    try:
        from importlib import metadata
        __version__ = metadata.version(DISTRIBUTION_NAME)
    except Exception:
        __version__ = FALLBACK_VERSION

    return __version__
