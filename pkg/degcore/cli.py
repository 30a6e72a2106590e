#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Command line entry point for degcore
"""

from __future__ import print_function, division, absolute_import

__author__ = "Tomas Poveda"
__license__ = "MIT"
__maintainer__ = "Tomas Poveda"
__email__ = "tpovedatd@gmail.com"

import sys
import inspect
import logging
import argparse
import importlib
import pkgutil
from collections import OrderedDict

import degcore
from degcore import commands
from degcore.__version__ import get_version
from degcore.core import command, exceptions
from degcore.core.degcore import config_dict
from degcore.core.presets import load_preset

LOGGER = logging.getLogger('degcore')


def _get_commands():
    """
    Returns all command classes found in the commands package
    :return: dict(str, type)
    """

    commands_found = dict()
    for _, sub_module_name, _ in pkgutil.walk_packages(commands.__path__, commands.__name__ + '.'):
        mod = importlib.import_module(sub_module_name)
        for cname, obj in inspect.getmembers(mod, inspect.isclass):
            if obj is command.DegcoreCommand or not issubclass(obj, command.DegcoreCommand):
                continue
            if cname in commands_found and commands_found[cname] is not obj:
                LOGGER.warning('Command with name "{}" is already registered! Overriding ...'.format(cname))
            commands_found[cname] = obj

    return commands_found


def _get_registered_commands(config):
    """
    Returns commands that are registered in degcore configuration, in configuration order
    :param config: dict
    :return: list(type)
    """

    all_commands = _get_commands()
    if not all_commands:
        LOGGER.warning('No commands available!')
        return list()

    registered_commands = OrderedDict()
    for command_to_register in config.get('commands', list()):
        for command_name, command_class in all_commands.items():
            if command_name in registered_commands:
                continue
            if command_class.id == command_to_register and command_class.can_be_registered():
                registered_commands[command_name] = command_class
                break
        else:
            LOGGER.warning('Command "{}" is not available'.format(command_to_register))

    return list(registered_commands.values())


def _build_parser(command_instances):
    parser = argparse.ArgumentParser(prog='degcore', description=config_dict()['tooltip'])
    parser.add_argument('--version', action='version', version='%(prog)s {}'.format(get_version()))
    sub_parsers = parser.add_subparsers(dest='command')
    for command_instance in command_instances.values():
        sub_parser = sub_parsers.add_parser(command_instance.id, help=command_instance.help)
        command_instance.add_arguments(sub_parser)

    return parser


def _apply_defaults(args, defaults):
    """
    Fills every flag left unset with the value of the selected preset, then with degcore defaults
    :param args: argparse.Namespace
    :param defaults: dict
    """

    preset = dict()
    if getattr(args, 'preset', None):
        preset = load_preset(args.preset)
    for key, value in defaults.items():
        if hasattr(args, key) and getattr(args, key) is None:
            setattr(args, key, preset.get(key, value))


def main(argv=None, stdout=None, stderr=None):
    """
    Runs the degcore command line
    :param argv: list(str) or None, defaults to sys.argv[1:]
    :param stdout: file-like or None
    :param stderr: file-like or None
    :return: int, exit code
    """

    degcore.init_logging()
    stderr = stderr or sys.stderr
    config = config_dict()

    command_instances = OrderedDict(
        (command_class.id, command_class(config, stdout=stdout, stderr=stderr))
        for command_class in _get_registered_commands(config))
    parser = _build_parser(command_instances)
    args = parser.parse_args(argv)
    if not args.command:
        parser.print_usage(stderr)
        return command.ExitCodes.USAGE

    command_instance = command_instances[args.command]
    try:
        _apply_defaults(args, config['defaults'])
        errors = command_instance.validate(args)
        if errors:
            stderr.write(errors[0] + '\n')
            return command.ExitCodes.USAGE
        return command_instance.run(args)
    except exceptions.GraphParseError as exc:
        stderr.write('{}\n'.format(exc))
        return command.ExitCodes.PARSE
    except (exceptions.InsufficientEdges, exceptions.InvalidConfig, exceptions.DomainError,
            exceptions.TooLarge) as exc:
        stderr.write('{}\n'.format(exc))
        return command.ExitCodes.USAGE
    except exceptions.DegcoreError as exc:
        LOGGER.error('Command "{}" failed: {}'.format(args.command, exc))
        stderr.write('{}\n'.format(exc))
        return command.ExitCodes.INTERNAL


if __name__ == '__main__':
    sys.exit(main())
