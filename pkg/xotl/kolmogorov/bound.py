#!/usr/bin/env python
# -*- coding: utf-8 -*-
# ---------------------------------------------------------------------
# Copyright (c) Merchise Autrement [~º/~] and Contributors
# All rights reserved.
#
# This is free software; you can do what the LICENCE file allows you to.
#

"""Bounded execution of iterative numeric generators.

Iterative methods (golden-section search, bracket expansion, series
summation) are written here as generators that refine their state forever::

    >>> def heron(x):
    ...     guess = x
    ...     while True:
    ...         guess = (guess + x / guess) / 2
    ...         yield guess

The stopping policy is woven from outside.  The `times`:func: boundary stops
after a given number of results::

    >>> root2 = times(3)(heron)
    >>> root2(2.0)
    1.4142156862745097

Boundaries are combined with `whenany`:func:, so that an iteration stops
either when it converges or after a number of passes::

    >>> near = pred(lambda g: abs(g * g - 2) < 1e-12)
    >>> root2 = whenany(times(50), near)(heron)
    >>> round(root2(2.0), 12)
    1.414213562373

The last value yielded by the bounded generator is returned.  Use
``generate`` to see all of them::

    >>> len(list(times(4)(heron).generate(2.0)))
    4

"""

import logging
from functools import update_wrapper
from types import FunctionType

logger = logging.getLogger(__name__)


class BoundedType(type):
    """A bounded generator/function."""


class Bounded(metaclass=BoundedType):
    """The bounded function.

    This is the result of applying a `boundary definition` to an `unbounded
    function`.

    Calling the instance returns the last value of the `bounded generator`;
    ``generate(*args, **kwargs)`` returns the generator itself.

    """

    def __init__(self, target):
        self.target = target


class BoundaryCondition:
    """Embodies the boundary protocol.

    The `definition` argument must be a generator function that implements a
    `boundary definition`.  This function may take arguments to initialize
    the state of the condition.

    Instances are callables that return a `Bounded`:class: subclass
    specialized with the application of the condition to a given unbounded
    function (`target`).  For instance, ``times(6)`` returns a class that,
    when instantiated with a `target`, represents the bounded function that
    takes the 6th value yielded by target.

    Exceptions raised by the unbounded generator bubble up after both
    generators are closed.

    """

    def __new__(cls, definition, name=None):
        if not isinstance(definition, FunctionType):
            raise TypeError('"definition" must be a function')
        result = super().__new__(cls)
        result.name = name or "%s.%s" % (definition.__module__, definition.__qualname__)
        return result

    def __init__(self, definition, name=None):
        from inspect import getfullargspec

        spec = getfullargspec(definition)
        self.args = spec.args
        self.defaults = spec.defaults
        self.varargs = spec.varargs
        self.varkwargs = spec.varkw
        self.definition = definition

    def __str__(self):
        return "boundary %s(...)" % self.name

    __repr__ = __str__

    @property
    def receive_args(self):
        return bool(self.args or self.defaults or self.varargs or self.varkwargs)

    def apply(self, args, kwargs):
        def execute(boundary, unbounded, initial):
            """Execute the unbounded generator guarded by `boundary`.

            `initial` is the tuple ``(args, kwargs)`` passed when calling the
            unbounded function.

            """
            steps = 0
            try:
                next(boundary)
                stop = boundary.send(initial)
            except StopIteration:
                raise RuntimeError('Invalid boundary definition "%r"' % self.definition)
            try:
                while stop is not True:
                    try:
                        data = next(unbounded)
                        steps += 1
                        yield data
                    except (GeneratorExit, StopIteration):
                        stop = True
                    else:
                        try:
                            stop = boundary.send(data)
                        except StopIteration:
                            raise RuntimeError(
                                'Invalid boundary definition "%r"' % self.definition
                            )
            finally:
                boundary.close()
                unbounded.close()
                logger.debug("%s stopped after %d steps", self.name, steps)

        class bounded(Bounded):
            @classmethod
            def build_pred(boundedcls):
                return self.build_generator(args, kwargs)

            def generate(me, *args, **kwargs):
                generator = me.target(*args, **kwargs)
                return execute(me.build_pred(), generator, (args, kwargs))

            def __call__(me, *args, **kwargs):
                data = None
                for data in me.generate(*args, **kwargs):
                    pass
                return data

        return bounded

    def build_generator(self, args, kwargs):
        if self.receive_args:
            return self.definition(*args, **kwargs)
        else:
            return self.definition()

    def __call__(self, *args, **kwargs):
        if self.receive_args:
            return self.apply(args, kwargs)
        elif args or kwargs:
            result = self.apply((), {})(*args, **kwargs)
            if len(args) == 1:
                update_wrapper(result, args[0])
            return result
        else:
            return self.apply((), {})


def boundary(definition=None, name=None, base=BoundaryCondition):
    """Helper to define a boundary condition.

    Usable as ``@boundary`` or ``@boundary(base=...)``.  The
    `definition` must be a generator function complying with the `boundary
    protocol`:

    - It yields True when and only when the condition is met.

    - It yields at least twice.  First its ``next()`` is called to initialize
      internal state; immediately after, ``send()`` passes the tuple ``(args,
      kwargs)`` of the unbounded function.

    - It yields True before terminating with StopIteration.

    - It must not swallow GeneratorExit, since ``close()`` is called upon
      termination.

    A RuntimeError happens at call time when a definition breaks any of these
    rules.

    """
    if definition is None:
        return lambda func: boundary(func, name=name, base=base)
    result = base(definition, name=name)
    return update_wrapper(result, definition)


@boundary
def times(n):
    """Becomes True after the `nth` item has been produced."""
    passed = 0
    yield False
    while passed < n:
        yield False
        passed += 1
    yield True


@boundary
def pred(func, skipargs=True):
    """Allow "normal" functions to engage within the boundary protocol.

    `func` takes a single argument, a value yielded by the unbounded
    generator, and returns True if the condition has been met.

    If `skipargs` is False the first call receives the ``(args, kwargs)``
    tuple of the unbounded function.

    Example::

      >>> @pred(lambda bracket: bracket[1] - bracket[0] < 1e-3)
      ... def bisect_sqrt2():
      ...     lo, hi = 1.0, 2.0
      ...     while True:
      ...         mid = (lo + hi) / 2
      ...         lo, hi = (mid, hi) if mid * mid < 2 else (lo, mid)
      ...         yield lo, hi

      >>> bisect_sqrt2()
      (1.4140625, 1.4150390625)

    """
    sentinel = object()
    data = yield False
    if skipargs:
        data = sentinel
    while data is sentinel or not func(data):
        data = yield False
    yield True


class HighLevelBoundary(BoundaryCondition):
    """Boundary class for high-level boundary conditions.

    Its `apply` method only accepts positional arguments, which must be
    initialized boundary conditions; the condition is then built from the
    subordinate definitions.

    """

    def apply(self, boundaries, kwargs):
        assert boundaries and not kwargs
        base = super().apply(boundaries, kwargs)

        class rebounded(base):
            @classmethod
            def build_pred(cls):
                subordinates = []
                for bound in boundaries:
                    if isinstance(bound, FunctionType):
                        bound = boundary(bound)
                    if isinstance(bound, BoundaryCondition):
                        if bound.receive_args:
                            raise TypeError('"%s" must be initialized' % bound.name)
                        bound = bound.apply((), {})
                    if isinstance(bound, BoundedType):
                        subordinates.append(bound.build_pred())
                    else:
                        raise TypeError('Invalid argument "%r"' % bound)
                return self.definition(*subordinates)

        return rebounded


@boundary(base=HighLevelBoundary)
def whenany(*preds):
    """An OR-like boundary condition.

    It takes several boundaries and returns a single one that yields True
    when **any** of its subordinates yields True.  Calls ``close()`` of all
    subordinates upon termination.

    """
    for pred in preds:
        next(pred)
    stop = False
    try:
        while stop is not True:
            data = yield stop
            i, top = 0, len(preds)
            while not stop and i < top:
                try:
                    stop = stop or preds[i].send(data)
                except StopIteration:
                    raise RuntimeError("Invalid predicate in %r" % (preds,))
                else:
                    i += 1
        yield stop
    except GeneratorExit:
        pass
    for pred in preds:
        pred.close()
