#!/usr/bin/env python
# -*- coding: utf-8 -*-
# ---------------------------------------------------------------------
# Copyright (c) Merchise Autrement [~º/~] and Contributors
# All rights reserved.
#
# This is free software; you can do what the LICENCE file allows you to.
#

"""Central tolerance record.

Every numeric decision in the package (zero-mean tests, optimizer brackets,
comparison slack, admissibility boundaries) reads its tolerance from a single
`tolerances`:class: record.  A record describes plain external data, a mapping
from field keys to raw values, and a model to *read* it::

    >>> tol = tolerances({"tol_cmp": "1e-8"})
    >>> tol.tol_cmp
    1e-08
    >>> tol.max_iter
    500

The effective record is obtained with `current`:func:, which honors the
``KOLMO_TOL`` environment variable.  The variable holds either a JSON object
or a comma separated list of ``name=value`` pairs::

    >>> load("tol_opt=1e-10,max_iter=800").max_iter
    800

"""

import logging
from functools import lru_cache

logger = logging.getLogger(__name__)


ENVIRON_KEY = "KOLMO_TOL"


class ConfigError(ValueError):
    """Invalid tolerance configuration."""


_MISSING = object()


@lru_cache()
def field_descriptor(field_name):
    """Returns a read-only descriptor for `field_name`."""

    class descriptor:
        def __get__(self, instance, owner):
            if instance:
                key = owner._rec_fields[field_name]
                return owner.get_field(instance._raw_data, key)
            else:
                return self

    return descriptor


class _record_type(type):
    @staticmethod
    def _is_rec_definition(attr, val=_MISSING):
        result = not attr.startswith("_") and attr.upper() == attr
        if val is not _MISSING:
            result = result and isinstance(val, str)
        return result

    @staticmethod
    def is_reader(attr, func):
        from types import FunctionType

        attr = attr.lower()
        good_name = attr.startswith("_") and attr.endswith("_reader")
        return good_name and isinstance(func, (FunctionType, staticmethod))

    def __new__(cls, name, bases, attrs):
        def static(f):
            return f if isinstance(f, staticmethod) else staticmethod(f)

        cls_fields = {
            attr: val
            for attr, val in attrs.items()
            if cls._is_rec_definition(attr, val)
        }
        descriptors = {attr.lower(): field_descriptor(attr)() for attr in cls_fields}
        readers = {
            attr.lower(): static(func)
            for attr, func in attrs.items()
            if cls.is_reader(attr, func)
        }
        new_attrs = dict(attrs, **descriptors)
        new_attrs.update(readers)
        result = super().__new__(cls, name, bases, new_attrs)
        fields = dict(getattr(result, "_rec_fields", {}))
        index = dict(getattr(result, "_rec_index", {}))
        fields.update(cls_fields)
        if len(fields) != len(set(fields.values())):
            msg = 'Duplicated field key in record "%s"' % name
            logger.error(msg)
            logger.debug(fields)
            raise TypeError(msg)
        result._rec_fields = fields
        index.update({val: attr for attr, val in cls_fields.items()})
        result._rec_index = index
        return result

    def get_field(self, raw_data, field):
        field_name = self._rec_index[field]
        value = raw_data.get(field, _MISSING)
        reader = getattr(self, "_%s_reader" % field_name.lower(), None)
        if reader:
            return reader(value)
        else:
            return None if value is _MISSING else value

    def keys(self):
        """The field keys of the record, in declaration order."""
        return tuple(self._rec_fields.values())


class record(metaclass=_record_type):
    """Base record class.

    Fields are CAPITALIZED class attributes whose values are the keys in the
    raw mapping.  Instances expose each field under its lowercase name.  A
    static ``_<field>_reader`` function, when defined, parses the raw value.

    """

    def __init__(self, raw_data=None):
        self._raw_data = dict(raw_data or {})

    def __repr__(self):
        return "%s(%r)" % (type(self).__name__, self._raw_data)

    def __getitem__(self, key):
        return type(self).get_field(self._raw_data, key)

    def __eq__(self, other):
        return type(self) is type(other) and self.as_dict() == other.as_dict()

    def __hash__(self):
        return hash(tuple(sorted(self.as_dict().items())))

    def as_dict(self):
        """Read every field and return a plain dict keyed by field key."""
        cls = type(self)
        return {key: cls.get_field(self._raw_data, key) for key in cls.keys()}


def isnull(val):
    """Return True if `val` is null.

    Null values are None, the empty string and a missing key.  Zero is *not*
    null.

    """
    return val is _MISSING or val in (None, "")


@lru_cache()
def float_reader(default=None, positive=True):
    """Returns a floating point reader.

    Null values read as `default`.  If `positive` is True, non-positive values
    are rejected.

    """

    def reader(val):
        if not isnull(val):
            try:
                result = float(val)
            except (TypeError, ValueError):
                raise ConfigError("Expected a real number, got %r" % (val,))
            if positive and not result > 0:
                raise ConfigError("Expected a positive number, got %r" % (val,))
            return result
        else:
            return default

    return reader


@lru_cache()
def integer_reader(default=None, positive=True):
    """Returns an integer reader; null values read as `default`."""

    def reader(val):
        if not isnull(val):
            try:
                result = int(val)
            except (TypeError, ValueError):
                raise ConfigError("Expected an integer, got %r" % (val,))
            if positive and result <= 0:
                raise ConfigError("Expected a positive integer, got %r" % (val,))
            return result
        else:
            return default

    return reader


class tolerances(record):
    """The tolerance record.

    - ``tol_mean``: factor of the zero-mean test, the tolerance being
      ``tol_mean * period * max|p|``.
    - ``tol_opt``: relative bracket width at which golden-section stops.
    - ``tol_check``: relative tolerance of cross-validations.
    - ``tol_root``: relative tolerance of the family parameter root.
    - ``tol_cmp``: comparison slack, relative to the derivative norm.
    - ``tol_boundary``: relative slack of admissibility boundaries.
    - ``tol_favard``: agreement of the two Favard computations.
    - ``series_floor``: the Favard series stops below this term.
    - ``max_iter``: bound for every iterative loop.
    - ``grid_samples``: profile samples taken before polishing.

    """

    TOL_MEAN = "tol_mean"
    TOL_OPT = "tol_opt"
    TOL_CHECK = "tol_check"
    TOL_ROOT = "tol_root"
    TOL_CMP = "tol_cmp"
    TOL_BOUNDARY = "tol_boundary"
    TOL_FAVARD = "tol_favard"
    SERIES_FLOOR = "series_floor"
    MAX_ITER = "max_iter"
    GRID_SAMPLES = "grid_samples"

    _tol_mean_reader = float_reader(default=1e-10)
    _tol_opt_reader = float_reader(default=1e-12)
    _tol_check_reader = float_reader(default=1e-6)
    _tol_root_reader = float_reader(default=1e-12)
    _tol_cmp_reader = float_reader(default=1e-9)
    _tol_boundary_reader = float_reader(default=1e-9)
    _tol_favard_reader = float_reader(default=1e-9)
    _series_floor_reader = float_reader(default=1e-14)
    _max_iter_reader = integer_reader(default=500)
    _grid_samples_reader = integer_reader(default=65)


def parse_overrides(text):
    """Parse the text of an override into a plain dict.

    Accepts a JSON object or ``name=value`` pairs separated by commas.  The
    empty string gives an empty dict.

    """
    import json

    text = (text or "").strip()
    if not text:
        return {}
    if text.startswith("{"):
        try:
            result = json.loads(text)
        except ValueError as error:
            raise ConfigError("Invalid JSON in %s: %s" % (ENVIRON_KEY, error))
        if not isinstance(result, dict):
            raise ConfigError("%s must be a JSON object" % ENVIRON_KEY)
        return result
    result = {}
    for item in text.split(","):
        name, sep, value = item.partition("=")
        if not sep or not name.strip():
            raise ConfigError("Invalid item %r in %s" % (item, ENVIRON_KEY))
        result[name.strip()] = value.strip()
    return result


def load(text=None):
    """Build a validated `tolerances`:class: record from override `text`."""
    raw = parse_overrides(text)
    unknown = set(raw) - set(tolerances.keys())
    if unknown:
        raise ConfigError("Unknown tolerance fields: %s" % ", ".join(sorted(unknown)))
    result = tolerances(raw)
    result.as_dict()  # validates
    if raw:
        logger.debug("Tolerance overrides: %r", raw)
    return result


@lru_cache(maxsize=8)
def _load_cached(text):
    return load(text)


def current():
    """Return the effective tolerance record.

    The record is rebuilt whenever ``KOLMO_TOL`` changes.

    """
    import os

    return _load_cached(os.environ.get(ENVIRON_KEY, ""))
