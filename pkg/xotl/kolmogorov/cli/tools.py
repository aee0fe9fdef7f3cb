#!/usr/bin/env python
# -*- coding: utf-8 -*-
# ---------------------------------------------------------------------
# Copyright (c) Merchise Autrement [~º/~] and Contributors
# All rights reserved.
#
# This is free software; you can do what the LICENCE file allows you to.
#

r"""Utilities for the command-line interface.

- `program_name`:func:\ : calculate the program name from "sys.argv[0]".

- `command_name`:func:\ : calculate command names using class names in lower
   case inserting a hyphen before each new capital letter.

- `write_json`:func: and `write_table`:func:\ : the output formats of the
  commands.

"""


def hyphen_name(name, join_numbers=True):
    """Convert a name to a hyphened slug.

    Expects a `name` in Camel-Case.  All invalid characters (those invalid in
    Python identifiers) are ignored.  Numbers are joined with preceding part
    when `join_numbers` is True.

    For example::

      >>> hyphen_name('BaseNode') == 'base-node'
      True

      >>> hyphen_name('ICQNameP12') == 'icq-name-p12'
      True

    """
    import re
    import unicodedata

    name = unicodedata.normalize("NFKD", name).encode("ascii", "ignore").decode()
    name = re.sub("[^A-Za-z0-9]+", "-", name)
    chunks = re.findall("([A-Z]+|[a-z]+|[0-9]+|-)", name)
    i, count, parts = 0, len(chunks), []
    while i < count:
        part = chunks[i]
        if part != "-":
            upper = "A" <= part <= "Z"
            if upper:
                part = part.lower()
            j = i + 1
            if j < count and upper and "a" <= chunks[j] <= "z":
                head = part[:-1]
                if head:
                    parts.append(head)
                part = part[-1] + chunks[j]
                i = j
                j += 1
            if j < count and "0" <= chunks[j] <= "9" and join_numbers:
                part = part + chunks[j]
                i = j
            parts.append(part)
        i += 1
    return "-".join(parts)


def program_name():
    """Calculate the program name from "sys.argv[0]"."""
    import sys
    from os.path import basename

    return basename(sys.argv[0]) or "kolmo"


def command_name(cls):
    """Calculate a command name from given class.

    Names are calculated putting class names in lower case and inserting
    hyphens before each new capital letter.  For example "MyCommand" will
    generate "my-command"::

        >>> class AdmissibleTriple:
        ...     pass

        >>> command_name(AdmissibleTriple)
        'admissible-triple'

    """
    return hyphen_name(cls.__name__)


def dumps(data):
    """Serialize `data` as JSON with a stable key order."""
    import json

    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def write_json(data, out):
    out.write(dumps(data))


def write_table(header, columns, rows, out):
    """Write CSV `rows` preceded by a ``# {json}`` line with `header`.

    Floats are written with 17 significant digits.

    """
    import csv
    import json

    out.write("# %s\n" % json.dumps(header, sort_keys=True))
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow(["%.17g" % x for x in row])
