#!/usr/bin/env python
# -*- coding: utf-8 -*-
# ---------------------------------------------------------------------
# Copyright (c) Merchise Autrement [~º/~] and Contributors
# All rights reserved.
#
# This is free software; you can do what the LICENCE file allows you to.
#

import unittest

import pytest
from hypothesis import given, strategies as s

from xotl.kolmogorov.config import (
    ENVIRON_KEY,
    ConfigError,
    current,
    float_reader,
    load,
    parse_overrides,
    record,
    tolerances,
)


class _table(record):
    ID = "id"
    _id_reader = lambda val: int(val)  # noqa: E731


class sample(_table):
    WIDTH = "width"
    LABEL = "label"

    _width_reader = float_reader(default=1.0)


class TestRecords(unittest.TestCase):
    def test_records(self):
        raw = {"id": "3", "width": "0.5", "label": "psi"}
        item = sample(raw)
        self.assertEqual(3, sample.get_field(raw, sample.ID))
        self.assertEqual(3, item.id)
        self.assertEqual(0.5, item.width)
        self.assertEqual("psi", item.label)
        self.assertEqual(sample.keys(), ("id", "width", "label"))

    def test_missing_fields(self):
        item = sample({"id": 1})
        self.assertEqual(1.0, item.width)
        self.assertIsNone(item.label)

    def test_duplicated_keys(self):
        with self.assertRaises(TypeError):

            class bad(record):
                ONE = "x"
                OTHER = "x"


class TestTolerances(unittest.TestCase):
    def test_defaults(self):
        tol = tolerances()
        self.assertEqual(tol.tol_mean, 1e-10)
        self.assertEqual(tol.tol_opt, 1e-12)
        self.assertEqual(tol.tol_check, 1e-6)
        self.assertEqual(tol.tol_cmp, 1e-9)
        self.assertEqual(tol.max_iter, 500)
        self.assertEqual(tol.grid_samples, 65)
        self.assertEqual(tol["series_floor"], 1e-14)

    def test_overrides(self):
        tol = tolerances({"tol_cmp": "1e-8", "max_iter": 800})
        self.assertEqual(tol.tol_cmp, 1e-8)
        self.assertEqual(tol.max_iter, 800)
        self.assertEqual(tol.as_dict()["tol_root"], 1e-12)

    def test_null_values_read_as_defaults(self):
        tol = tolerances({"tol_cmp": "", "max_iter": None})
        self.assertEqual(tol.tol_cmp, 1e-9)
        self.assertEqual(tol.max_iter, 500)

    def test_invalid_values(self):
        for raw in (
            {"tol_cmp": "x"},
            {"tol_cmp": "-1"},
            {"tol_cmp": 0},
            {"max_iter": "1.5"},
            {"max_iter": 0},
        ):
            with self.assertRaises(ConfigError):
                tolerances(raw).as_dict()

    def test_records_are_values(self):
        self.assertEqual(tolerances({"tol_cmp": "1e-9"}), tolerances())
        self.assertEqual(hash(tolerances({"tol_cmp": 1e-9})), hash(tolerances()))
        self.assertNotEqual(tolerances({"max_iter": 10}), tolerances())


@given(s.floats(min_value=1e-300, max_value=1e3))
def test_float_fields_round_trip(value):
    assert tolerances({"tol_opt": repr(value)}).tol_opt == value


def test_parse_overrides():
    assert parse_overrides("") == {}
    assert parse_overrides(None) == {}
    assert parse_overrides('{"max_iter": 10}') == {"max_iter": 10}
    assert parse_overrides("tol_cmp=1e-8, max_iter = 9") == {
        "tol_cmp": "1e-8",
        "max_iter": "9",
    }
    for text in ("[1]", "{bad", "tol_cmp", "=1", '"{}"'):
        with pytest.raises(ConfigError):
            parse_overrides(text)
    with pytest.raises(ConfigError):
        parse_overrides("[1, 2]")


def test_load():
    assert load("max_iter=42").max_iter == 42
    assert load() == tolerances()
    with pytest.raises(ConfigError):
        load("tol_nothing=1")
    with pytest.raises(ConfigError):
        load("tol_cmp=-1")


def test_current_honors_the_environment(monkeypatch):
    monkeypatch.setenv(ENVIRON_KEY, "max_iter=42")
    assert current().max_iter == 42
    monkeypatch.setenv(ENVIRON_KEY, '{"tol_cmp": 1e-7}')
    assert current().tol_cmp == 1e-7
    monkeypatch.delenv(ENVIRON_KEY)
    assert current() == tolerances()
