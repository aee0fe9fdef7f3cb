#!/usr/bin/env python
# -*- coding: utf-8 -*-
# ---------------------------------------------------------------------
# Copyright (c) Merchise Autrement [~º/~] and Contributors
# All rights reserved.
#
# This is free software; you can do what the LICENCE file allows you to.
#

"""The ``kolmo`` command-line interface.

Commands are registered by sub-classing `Command`:class:.  Each command owns an
`argparse` parser; its ``run`` method returns the exit code:

- 0: success (admissible vector, passed check);
- 1: negative answer (not admissible, comparison violated);
- 2: malformed input;
- 3: internal numeric failure.

"""

import logging
from abc import ABC, ABCMeta, abstractmethod

from .tools import command_name, program_name

logger = logging.getLogger(__name__)


class CommandMeta(ABCMeta):
    """Meta-class for all commands."""

    def __new__(meta, name, bases, namespace):
        cls = super().__new__(meta, name, bases, namespace)
        cache = getattr(cls, "__registry_cache__", None)
        if cache is not None:
            cache.clear()
        return cls

    @property
    def registry(cls):
        """All registered commands by name."""
        res = Command.__registry_cache__
        if not res:
            _settle_cache(Command, set())
            res.pop(command_name(Command), None)
            if res.get(HELP_NAME) is not Help:
                res[HELP_NAME] = Help
        return res


def _settle_cache(source, recursed):
    if source in recursed:
        raise ValueError('Reused class "%s"!' % source.__qualname__)
    recursed.add(source)
    sub_commands = type.__subclasses__(source)
    if sub_commands:
        for cmd in sub_commands:
            _settle_cache(cmd, recursed)
    else:  # only leaf commands are executable
        Command.__registry_cache__[command_name(source)] = source


class Command(ABC, metaclass=CommandMeta):
    """Base for all commands.

    The first line of the docstring is the summary shown by ``help``.

    """

    __registry_cache__ = {}

    def __str__(self):
        return command_name(type(self))

    def __repr__(self):
        return "<command: %s>" % command_name(type(self))

    @classmethod
    def get_arg_parser(cls):
        from argparse import ArgumentParser

        doc = (cls.__doc__ or "").strip()
        res = ArgumentParser(
            prog="%s %s" % (program_name(), command_name(cls)),
            description=doc.split("\n")[0] if doc else None,
        )
        res.add_argument(
            "--verbose", action="store_true", help="log debugging information"
        )
        res.add_argument("--out", help="write the output to this file")
        cls.add_arguments(res)
        return res

    @classmethod
    def add_arguments(cls, parser):
        pass

    @abstractmethod
    def run(self, args=None):
        '''Must return a valid value for "sys.exit"'''
        raise NotImplementedError


class Help(Command):
    """Show all commands."""

    __order__ = -9999

    def run(self, args=None):
        import sys

        out = sys.stdout
        out.write('The available "%s" commands are:\n' % program_name())
        cmds = Command.registry
        ordered = sorted((getattr(cmds[cmd], "__order__", 0), cmd) for cmd in cmds)
        width = max(len(cmd) for _, cmd in ordered)
        for _, cmd in ordered:
            doc = _strip_doc(cmds[cmd].__doc__) or _strip_doc(cmds[cmd].run.__doc__)
            out.write("   %s  %s\n" % (cmd.ljust(width), doc))
        return 0


def _strip_doc(doc):
    if doc:
        return doc.strip().split("\n")[0].strip(""""' \t\n\r""")
    else:
        return ""


HELP_NAME = command_name(Help)

del abstractmethod, ABCMeta
