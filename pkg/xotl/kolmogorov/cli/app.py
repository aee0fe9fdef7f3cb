#!/usr/bin/env python
# -*- coding: utf-8 -*-
# ---------------------------------------------------------------------
# Copyright (c) Merchise Autrement [~º/~] and Contributors
# All rights reserved.
#
# This is free software; you can do what the LICENCE file allows you to.
#

"""The `main`:func: entry point of ``kolmo``."""

import logging

logger = logging.getLogger(__name__)


def execute(argv=None, default=None):
    """Run a command and return its exit code.

    The command is the first argument; otherwise `default`, or ``help``.
    Invalid input (`ValueError`) gives 2 and numeric failures
    (`ArithmeticError`) give 3; the message goes to stderr.

    """
    import sys

    from . import HELP_NAME, Command
    from . import commands  # noqa: F401

    args = list(sys.argv[1:] if argv is None else argv)
    if args and not args[0].startswith("-"):
        cmd_name = args[0]
        args = args[1:]
    else:
        cmd_name = default or HELP_NAME
    logging.basicConfig(
        level=logging.DEBUG if "--verbose" in args else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    cmds = Command.registry
    cmd = cmds.get(cmd_name)
    if not cmd:
        sys.stderr.write('Command "%s" not found!\n\n' % cmd_name)
        cmds[HELP_NAME]().run([])
        return 2
    try:
        return cmd().run(args)
    except ValueError as error:
        sys.stderr.write("error: %s\n" % error)
        return 2
    except ArithmeticError as error:
        logger.debug("Numeric failure", exc_info=True)
        sys.stderr.write("numeric failure: %s\n" % error)
        return 3


def main(argv=None, default=None):
    """Execute a command and exit with its code."""
    import sys

    sys.exit(execute(argv, default=default))


if __name__ == "__main__":
    main()
