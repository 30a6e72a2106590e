#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Tool to extract small subgraphs of minimum degree k from dense graphs
"""

from __future__ import print_function, division, absolute_import

__author__ = "Tomas Poveda"
__license__ = "MIT"
__maintainer__ = "Tomas Poveda"
__email__ = "tpovedatd@gmail.com"

import os

# Defines ID of the tool
TOOL_ID = 'degcore'


def get_presets_path():
    """
    Returns the folder holding the presets shipped with degcore
    :return: str
    """

    return os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'presets')


def config_dict():
    return {
        'name': 'Degcore',
        'id': TOOL_ID,
        'logger': 'degcore',
        'tooltip': 'Extracts a subgraph of minimum degree k on at most (1 - epsilon)n vertices',
        'commands': ['extract', 'verify', 'oracle', 'gen', 'audit'],
        'presets_paths': [get_presets_path()],
        'defaults': {'k': 3, 't': 1, 'jobs': 1, 'seed': 0, 'excess': 0, 'audit': False}
    }
