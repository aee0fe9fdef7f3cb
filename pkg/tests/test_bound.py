#!/usr/bin/env python
# -*- coding: utf-8 -*-
# ---------------------------------------------------------------------
# Copyright (c) Merchise Autrement [~º/~] and Contributors
# All rights reserved.
#
# This is free software; you can do what the LICENCE file allows you to.
#

import unittest

from xotl.kolmogorov.bound import boundary, pred, times, whenany


def fibonacci():
    a, b = 1, 1
    while True:
        yield a
        a, b = b, a + b


def halving(width):
    """Bracket widths of a bisection."""
    while True:
        width /= 2
        yield width


class TestBoundedWithStandardPredicates(unittest.TestCase):
    def test_times(self):
        fib8 = times(8)(fibonacci)
        # 1 1 2 3 5 8 13 21
        self.assertEqual(fib8(), 21)
        self.assertEqual(tuple(fib8.generate()), (1, 1, 2, 3, 5, 8, 13, 21))

    def test_pred(self):
        narrow = pred(lambda width: width < 1e-3)(halving)
        self.assertEqual(narrow(1.0), 2.0 ** -10)
        self.assertEqual(len(list(narrow.generate(1.0))), 10)

    def test_whenany_stops_at_the_first_condition(self):
        converged = pred(lambda width: width < 1e-3)
        self.assertEqual(whenany(times(100), converged)(halving)(1.0), 2.0 ** -10)
        self.assertEqual(whenany(times(4), converged)(halving)(1.0), 1 / 16)
        over = pred(lambda n: n > 100)
        self.assertEqual(whenany(over, times(20))(fibonacci)(), 144)


class TestBoundaryDefinitions(unittest.TestCase):
    def test_argless_boundary(self):
        @boundary
        def argless():
            yield False  # receive args
            yield False  # allow first yield
            yield True

        fib2 = argless(fibonacci)
        self.assertEqual(fib2(), 1)

    def test_close_is_always_called(self):
        @boundary
        def bailout():
            yield
            try:
                yield False
                yield True
            except GeneratorExit:
                pass
            else:
                raise AssertionError("close() must have been called")

        fibnone = whenany(bailout, times(1))(fibonacci)
        self.assertEqual(fibnone(), 1)

    def test_whenany_with_invalid(self):
        @boundary
        def invalid():
            yield

        fibinv = whenany(invalid, times(10))(fibonacci)
        with self.assertRaises(RuntimeError):
            fibinv()

    def test_invalid_definitions(self):
        @boundary
        def invalid():
            return 1

        @invalid
        def foobar():
            while True:
                yield

        with self.assertRaises(TypeError):
            foobar()

        @boundary
        def invalid_init():
            yield

        @invalid_init
        def foobar2():
            while True:
                yield

        with self.assertRaises(RuntimeError):
            foobar2()

    def test_invalid_predicate_early_at_cycle(self):
        @boundary
        def invalid():
            yield
            yield False  # i.e never signal True

        @invalid
        def foobar():
            passes, atmost = 0, 10
            while passes < atmost:
                yield passes
                passes += 1
            raise AssertionError("Invalid reach point a GeneratorExit was expected.")

        with self.assertRaises(RuntimeError):
            foobar()


class TestMisc(unittest.TestCase):
    def test_args_are_passed(self):
        @boundary
        def check():
            args, kwargs = yield
            self.assertEqual(args, (1, 2))
            self.assertEqual(kwargs, {"egg": "ham"})
            yield True

        @whenany(check(), check)
        def foobar(*args, **kwargs):
            while True:
                yield 1

        foobar(1, 2, egg="ham")
        self.assertTrue(whenany.receive_args)

    def test_needs_args(self):
        @whenany(times)
        def foobar():
            yield

        with self.assertRaises(TypeError):
            foobar()  # times is not initialized

    def test_plain_function(self):
        def check():
            args, kwargs = yield
            self.assertEqual(args, (1.0,))
            yield False  # allow the first width
            yield True

        self.assertEqual(whenany(check)(halving)(1.0), 0.5)

    def test_errors_bubble_up(self):
        def failing(x):
            yield 1 / x

        bounded = times(3)(failing)
        self.assertEqual(bounded(2), 0.5)
        with self.assertRaises(ZeroDivisionError):
            bounded(0)
