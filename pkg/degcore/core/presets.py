#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains JSON presets holding command line defaults
"""

from __future__ import print_function, division, absolute_import

__author__ = "Tomas Poveda"
__license__ = "MIT"
__maintainer__ = "Tomas Poveda"
__email__ = "tpovedatd@gmail.com"

import io
import os
import glob
import json
import logging

from degcore.core import exceptions
from degcore.core.degcore import config_dict

LOGGER = logging.getLogger('degcore')


class PresetsManager(object):

    registered_paths = list()

    @classmethod
    def get_preset_paths(cls, get_all=False):
        """
        Returns existing registered preset paths, shipped presets folder first
        :param get_all: bool, whether to also return paths that do not exist
        :return: list<str>
        """

        paths = list()
        for path in config_dict()['presets_paths'] + cls.registered_paths:
            if path in paths:
                continue
            if not os.path.isdir(path) and not get_all:
                continue
            paths.append(path)

        return paths

    @classmethod
    def register_preset_path(cls, path):
        """
        Adds a folder to the registered preset folders
        :param path: str
        :return: str or None
        """

        path = os.path.normpath(os.path.abspath(path))
        if path in cls.registered_paths:
            LOGGER.warning('Preset path already registered: "{}"'.format(path))
            return None
        cls.registered_paths.append(path)

        return path

    @classmethod
    def unregister_preset_path(cls, path):
        path = os.path.normpath(os.path.abspath(path))
        if path in cls.registered_paths:
            cls.registered_paths.remove(path)

    @classmethod
    def discover_presets(cls, paths=None):
        """
        Get the full list of files found in the registered preset folders
        :param paths: list<str>, directories which stores preset files
        :return: list<str>, valid JSON preset file paths
        """

        presets = list()
        for path in paths or cls.get_preset_paths():
            path = os.path.normpath(path)
            if not os.path.isdir(path):
                continue

            file_names = sorted(glob.glob(os.path.abspath(os.path.join(path, '*.json'))))
            for file_name in file_names:
                if os.path.basename(file_name).startswith('_'):
                    continue
                if os.path.getsize(file_name) < 1:
                    LOGGER.warning('File size is smaller than 1 byte for preset file: "{}"'.format(file_name))
                    continue
                if file_name not in presets:
                    presets.append(file_name)

        return presets

    @classmethod
    def find_preset(cls, name_or_path):
        """
        Returns the preset file matching a file path or a preset name (file name without extension)
        :param name_or_path: str
        :return: str
        """

        if os.path.isfile(name_or_path):
            return name_or_path
        for file_name in cls.discover_presets():
            if os.path.splitext(os.path.basename(file_name))[0] == name_or_path:
                return file_name

        raise exceptions.InvalidConfig('preset not found: "{}"'.format(name_or_path))


def load_preset(name_or_path):
    """
    Reads a preset into a dictionary of command line defaults
    :param name_or_path: str
    :return: dict
    """

    file_name = PresetsManager.find_preset(name_or_path)
    try:
        with io.open(file_name, 'r', encoding='utf-8') as fh:
            preset = json.load(fh)
    except ValueError as exc:
        raise exceptions.InvalidConfig('preset "{}" is not valid JSON: {}'.format(file_name, exc))
    if not isinstance(preset, dict):
        raise exceptions.InvalidConfig('preset "{}" must hold a JSON object'.format(file_name))

    unknown = sorted(set(preset) - set(config_dict()['defaults']))
    if unknown:
        raise exceptions.InvalidConfig('preset "{}" has unknown key: "{}"'.format(file_name, unknown[0]))
    LOGGER.info('Loaded preset: "{}"'.format(file_name))

    return preset


def save_preset(inputs, file_path):
    """
    Writes the given command line defaults into a preset file
    :param inputs: dict
    :param file_path: str
    :return: str
    """

    with io.open(file_path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(json.dumps(inputs, sort_keys=True, indent=4, separators=(',', ': ')))
    LOGGER.info('Preset saved: "{}"'.format(file_path))

    return file_path
