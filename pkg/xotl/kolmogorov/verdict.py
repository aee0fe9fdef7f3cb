#!/usr/bin/env python
# -*- coding: utf-8 -*-
# ---------------------------------------------------------------------
# Copyright (c) Merchise Autrement [~º/~] and Contributors
# All rights reserved.
#
# This is free software; you can do what the LICENCE file allows you to.
#

"""Verdicts of decision procedures.

A decision procedure answers yes or no, and a *yes* usually comes with a
witness (the spline that realizes a norm vector) while a *no* comes with a
reason.  `Verdict`:class: is an option type for that pair: `Accepted`:class:
wraps the witness and is logically true; `Rejected`:class: wraps the reason
and is logically false::

    >>> verdict = Accepted({"beta": 0.5})
    >>> bool(verdict), take(verdict)
    (True, {'beta': 0.5})

    >>> verdict = Rejected("M0 below the family minimum")
    >>> bool(verdict), verdict.reason
    (False, 'M0 below the family minimum')

Calling the base class chooses the variant from the truth of the value::

    >>> Verdict(0)
    Rejected(0)

"""


class Verdict:
    """Wrapper for the outcome of a decision.

    See descendant classes `Accepted`:class: and `Rejected`:class:.

    """

    __slots__ = "inner"

    def __new__(cls, *args):
        if len(args) != 1:
            msg = '{}: expected a single argument, got "{}"'
            raise TypeError(msg.format(cls.__name__, len(args)))
        (arg,) = args
        if cls is Verdict:
            return (Accepted if arg else Rejected)(arg)
        elif isinstance(arg, cls):
            return arg
        elif not isinstance(arg, Verdict):
            self = super().__new__(cls)
            self.inner = arg
            return self
        else:
            msg = "re-wrapping inverted value: {}({})"
            raise ValueError(msg.format(cls.__name__, arg))

    def __init__(self, *args):
        pass

    def __bool__(self):
        return isinstance(self, Accepted)

    def __str__(self):
        return "{}({!r})".format(type(self).__name__, self.inner)

    __repr__ = __str__

    def __eq__(self, other):
        return isinstance(other, type(self)) and self.inner == other.inner

    def __ne__(self, other):
        return not (self == other)

    def __hash__(self):
        return hash((type(self), id(self.inner)))

    @property
    def witness(self):
        """The witness of an accepted verdict, None otherwise."""
        return self.inner if self else None

    @property
    def reason(self):
        """The reason of a rejected verdict, None otherwise."""
        return None if self else self.inner

    def as_dict(self):
        """A JSON-friendly summary of the verdict."""
        inner = self.inner
        if hasattr(inner, "as_dict"):
            inner = inner.as_dict()
        key = "witness" if self else "reason"
        return {"admissible": bool(self), key: inner}


class Accepted(Verdict):
    """A positive verdict; wraps the witness."""

    __slots__ = ()


class Rejected(Verdict):
    """A negative verdict; wraps the reason."""

    __slots__ = ()


def take(value):
    """Extract the wrapped value."""
    return value.inner if isinstance(value, Verdict) else value
