#!/usr/bin/env python
# -*- coding: utf-8 -*-
# ---------------------------------------------------------------------
# Copyright (c) Merchise Autrement [~º/~] and Contributors
# All rights reserved.
#
# This is free software; you can do what the LICENCE file allows you to.
#

"""Norm vectors and the classical sharp constants.

``M_k(f)`` denotes the uniform norm of the `k`-th derivative of `f`.  For a
Rodov spline the norms of low order derivatives have closed forms::

    >>> nv = norm_vector(RodovParams(1, 2, 0, s=3, alpha=3), [0, 1, 2, 3])
    >>> nv.orders, [round(x, 12) for x in nv.values]
    ((0, 1, 2, 3), [23.0, 12.0, 6.0, 3.0])

The Favard constants ``K_r = ‖φ_r‖`` and the Kolmogorov constants derived
from them::

    >>> round(favard_norm(1), 12) == round(math.pi / 2, 12)
    True
    >>> round(kolmogorov_constant(1, 2) ** 2, 12)
    2.0

"""

import logging
import math
from collections import namedtuple
from functools import lru_cache

import numpy as np

from . import config
from .bound import pred, times, whenany
from .piecewise import PeriodicPiecewisePoly
from .splines import EulerParams, RodovParams, build_euler, rodov_chain

logger = logging.getLogger(__name__)


class InvalidNorms(ValueError):
    """Malformed norm vector."""


class OrderTooHigh(ValueError):
    """A derivative order beyond the smoothness of the function."""


class BadOrders(ValueError):
    """Orders outside ``0 < k < r``."""


class FavardMismatch(ArithmeticError):
    """The two computations of a Favard constant disagree."""


#: Terms of the alternating Favard series allowed before giving up.
MAX_SERIES_TERMS = 10 ** 6


class NormVector:
    """Positive norms ``M_{k_i}`` indexed by strictly increasing orders.

    Indexing is by *order*, not by position::

        >>> nv = NormVector([0, 2, 4], [1.0, 4.0, 2.0])
        >>> nv[4]
        2.0

    """

    __slots__ = ("orders", "values")

    def __init__(self, orders, values):
        orders = tuple(int(x) for x in orders)
        try:
            values = tuple(float(x) for x in values)
        except (TypeError, ValueError):
            raise InvalidNorms("Norms must be real numbers: %r" % (values,))
        if len(orders) != len(values):
            raise InvalidNorms("%d orders but %d values" % (len(orders), len(values)))
        if any(x < 0 for x in orders) or any(
            x >= y for x, y in zip(orders, orders[1:])
        ):
            raise InvalidNorms("Orders must increase strictly from 0: %r" % (orders,))
        if not all(x > 0 and math.isfinite(x) for x in values):
            raise InvalidNorms("Norms must be positive and finite: %r" % (values,))
        self.orders = orders
        self.values = values

    @classmethod
    def from_mapping(cls, mapping):
        orders = sorted(int(x) for x in mapping)
        lookup = {int(key): value for key, value in mapping.items()}
        return cls(orders, [lookup[x] for x in orders])

    def __getitem__(self, order):
        try:
            return self.values[self.orders.index(order)]
        except ValueError:
            raise KeyError(order)

    def __contains__(self, order):
        return order in self.orders

    def __iter__(self):
        return iter(zip(self.orders, self.values))

    def __len__(self):
        return len(self.orders)

    def __eq__(self, other):
        if not isinstance(other, NormVector):
            return NotImplemented
        return self.orders == other.orders and self.values == other.values

    def __hash__(self):
        return hash((self.orders, self.values))

    def __repr__(self):
        return "NormVector(%r, %r)" % (self.orders, self.values)

    def get(self, order, default=None):
        return self[order] if order in self.orders else default

    def restrict(self, orders):
        """The sub-vector of the given `orders`."""
        return type(self)(orders, [self[x] for x in orders])

    def replace(self, order, value):
        """A copy with the norm of `order` set to `value`."""
        values = list(self.values)
        values[self.orders.index(order)] = value
        return type(self)(self.orders, values)

    def as_dict(self):
        return {str(order): value for order, value in self}


def rodov_norm(a, b, c, j):
    """Closed form of ``‖ψ_j(a, b, c)‖`` for ``j <= 3``, else None."""
    if j == 0:
        return 1.0
    elif j == 1:
        return b
    elif j == 2:
        return a * b + b * b / 2
    elif j == 3:
        # the extreme of ψ_3 is at 0; the c-term is the plateau of ψ_2
        return a * a * b / 2 + a * b * b + b ** 3 / 3 + c * (a * b + b * b / 2)
    else:
        return None


def rodov_norms(a, b, c, orders, exact=False):
    """``{j: ‖ψ_j(a, b, c)‖}`` for each primitive order `j` in `orders`.

    Closed forms are used when available unless `exact` is True; the rest
    come from the exact piecewise extremum.

    """
    result = {}
    pending = []
    for j in orders:
        value = None if exact else rodov_norm(a, b, c, j)
        if value is None:
            pending.append(j)
        else:
            result[j] = value
    if pending:
        chain = rodov_chain(a, b, c, max(pending))
        for j in pending:
            result[j] = chain[j].sup_norm()
    return result


def norm_vector(spline, orders, exact=False):
    """Norm vector of ``alpha * ψ_s(a, b, c)`` for the given `orders`.

    ``M_j = alpha * ‖ψ_{s-j}‖``.

    :raises OrderTooHigh: if an order exceeds `s`.

    """
    if isinstance(spline, EulerParams):
        spline = spline.as_rodov()
    orders = sorted(int(x) for x in orders)
    if orders and orders[-1] > spline.s:
        raise OrderTooHigh("Order %d exceeds s = %d" % (orders[-1], spline.s))
    if orders and orders[0] < 0:
        raise InvalidNorms("Orders must be non-negative")
    norms = rodov_norms(
        spline.a, spline.b, spline.c, [spline.s - j for j in orders], exact=exact
    )
    return NormVector(orders, [spline.alpha * norms[spline.s - j] for j in orders])


class Sinusoid(namedtuple("Sinusoid", "amplitude frequency phase")):
    """The test function ``amplitude * sin(frequency * t + phase)``.

    It quacks like `~xotl.kolmogorov.piecewise.PeriodicPiecewisePoly`:class:
    for the operations the comparison checks need.

    """

    __slots__ = ()

    def __new__(cls, amplitude, frequency=1.0, phase=0.0):
        if not float(frequency) > 0:
            raise ValueError("frequency must be positive")
        return super().__new__(cls, float(amplitude), float(frequency), float(phase))

    @property
    def period(self):
        return 2 * math.pi / self.frequency

    def __call__(self, t):
        result = self.amplitude * np.sin(self.frequency * np.asarray(t) + self.phase)
        return float(result) if np.ndim(result) == 0 else result

    def derivative(self):
        return type(self)(
            self.amplitude * self.frequency, self.frequency, self.phase + math.pi / 2
        )

    def sup_norm(self):
        return abs(self.amplitude)

    def as_dict(self):
        return dict(self._asdict())


def derivative_norms(f, orders):
    """``{j: M_j(f)}`` for a spline parameter record or a function.

    `f` may be `~xotl.kolmogorov.splines.RodovParams`:class:,
    `~xotl.kolmogorov.splines.EulerParams`:class:, `Sinusoid`:class: or
    `~xotl.kolmogorov.piecewise.PeriodicPiecewisePoly`:class:.  Zero norms
    are allowed here.

    """
    orders = sorted(set(int(x) for x in orders))
    if isinstance(f, (RodovParams, EulerParams)):
        return dict(norm_vector(f, orders))
    if not isinstance(f, (Sinusoid, PeriodicPiecewisePoly)):
        raise TypeError("Unsupported test function %r" % (f,))
    result, current, level = {}, f, 0
    for order in orders:
        while level < order:
            if isinstance(current, PeriodicPiecewisePoly) and current.degree == 0:
                raise OrderTooHigh("%r has no derivative of order %d" % (f, order))
            current, level = current.derivative(), level + 1
        result[order] = current.sup_norm()
    return result


def favard_series(r, tol=None):
    """``(4/π) Σ_j (-1)^{j(r+1)} / (2j+1)^{r+1}``.

    For even `r` the series alternates and is summed until the next term is
    below ``series_floor``.  For odd `r` all terms are positive and the sum
    is ``(1 - 2^{-(r+1)}) ζ(r+1)``.

    """
    tol = tol or config.current()
    r = int(r)
    if r < 0:
        raise BadOrders("r must be non-negative, got %d" % r)
    if r == 0:
        return 1.0
    n = r + 1
    if r % 2:
        from scipy.special import zeta

        return float(4 / math.pi * (1 - 2.0 ** -n) * zeta(n))

    def partial_sums():
        total, j = 0.0, 0
        while True:
            total += (-1) ** j / (2 * j + 1) ** n
            j += 1
            yield total, 1 / (2 * j + 1) ** n

    below = pred(lambda state: state[1] < tol.series_floor)
    total, _ = whenany(times(MAX_SERIES_TERMS), below)(partial_sums)()
    return 4 / math.pi * total


@lru_cache(maxsize=64)
def _favard(r, tol):
    if r == 0:
        return 1.0
    spline = build_euler(EulerParams(1.0, r, 1.0), tol=tol).sup_norm()
    series = favard_series(r, tol=tol)
    gap = abs(spline - series) / series
    if gap > tol.tol_favard:
        logger.error("Favard constant K_%d: spline %r, series %r", r, spline, series)
        raise FavardMismatch("K_%d differs by %.3g (relative)" % (r, gap))
    elif gap > tol.tol_favard / 10:
        logger.warning("Favard constant K_%d near tolerance: %.3g", r, gap)
    return spline


def favard_norm(r, tol=None):
    """The Favard constant ``‖φ_r‖``.

    Computed as the extremum of the Euler spline and cross-checked against
    `favard_series`:func:.

    :raises FavardMismatch: if both values disagree beyond ``tol_favard``.

    """
    r = int(r)
    if r < 0:
        raise BadOrders("r must be non-negative, got %d" % r)
    return _favard(r, tol or config.current())


def kolmogorov_constant(k, r, tol=None):
    """``‖φ_{r-k}‖ / ‖φ_r‖^{1-k/r}``, the sharp constant of ``M_k`` in terms
    of ``M_0`` and ``M_r``.

    :raises BadOrders: unless ``0 < k < r``.

    """
    if int(k) != k or int(r) != r or not 0 < k < r:
        raise BadOrders("Expected integers 0 < k < r, got k=%r, r=%r" % (k, r))
    k, r = int(k), int(r)
    return favard_norm(r - k, tol) / favard_norm(r, tol) ** (1 - k / r)
