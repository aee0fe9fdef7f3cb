#!/usr/bin/env python
# -*- coding: utf-8 -*-
# ---------------------------------------------------------------------
# Copyright (c) Merchise Autrement [~º/~] and Contributors
# All rights reserved.
#
# This is free software; you can do what the LICENCE file allows you to.
#

"""Exact arithmetic for periodic piecewise polynomials.

A `PeriodicPiecewisePoly`:class: is given by breakpoints ``0 = t0 < t1 < ...
< tm = T`` over one period and, per segment, the coefficients of a
polynomial in the *local* variable ``t - t[i-1]``, lowest degree first::

    >>> square = PeriodicPiecewisePoly.step([0, 1, 2, 3, 4], [1, 0, -1, 0])
    >>> square(0.5), square(4.5), square(2.5)
    (1.0, 1.0, -1.0)

Segments are left-open and right-closed, so a step function carries at a
breakpoint the value of the segment on its left::

    >>> square(1.0), square(0.0)
    (1.0, 0.0)

The zero-mean periodic primitive of a zero-mean function is again periodic::

    >>> saw = antiderivative_zero_mean(square)
    >>> saw.degree, round(mean(saw), 15) == 0
    (1, True)
    >>> sup_norm(saw)
    0.5

"""

import logging

import numpy as np
from numpy.polynomial import polynomial as P

from . import config

logger = logging.getLogger(__name__)


class InvalidPiecewise(ValueError):
    """Malformed breakpoints or coefficients."""


class NonZeroMean(ValueError):
    """The function has no periodic primitive."""


#: Relative jump allowed at breakpoints of continuous functions.
CONTINUITY_RTOL = 1e-9

#: Leading coefficients below this fraction of the largest term are dropped.
_NEGLIGIBLE = 1e-15


class PeriodicPiecewisePoly:
    """A periodic function given by polynomial pieces.

    Instances are immutable; the arrays exposed by `breakpoints`:attr: and
    `coeffs`:attr: are read-only.  The coefficient table has one row per
    segment and ``degree + 1`` columns.

    Unless `check` is False, functions of degree 1 or higher must be
    continuous across interior breakpoints and across the period seam.

    """

    __slots__ = ("_breakpoints", "_coeffs")

    def __init__(self, breakpoints, coeffs, check=True):
        bp = np.array(breakpoints, dtype=float)
        if bp.ndim != 1 or bp.size < 2:
            raise InvalidPiecewise("At least two breakpoints are required")
        if not np.all(np.isfinite(bp)):
            raise InvalidPiecewise("Breakpoints must be finite")
        if bp[0] != 0:
            raise InvalidPiecewise("The first breakpoint must be 0, got %r" % bp[0])
        if np.any(np.diff(bp) <= 0):
            raise InvalidPiecewise("Breakpoints must be strictly increasing")
        rows = [np.atleast_1d(np.asarray(row, dtype=float)) for row in coeffs]
        if len(rows) != bp.size - 1:
            raise InvalidPiecewise(
                "Expected %d coefficient rows, got %d" % (bp.size - 1, len(rows))
            )
        if any(row.ndim != 1 or row.size == 0 for row in rows):
            raise InvalidPiecewise("Each segment needs a flat, non-empty row")
        table = np.zeros((len(rows), max(row.size for row in rows)))
        for i, row in enumerate(rows):
            table[i, : row.size] = row
        if not np.all(np.isfinite(table)):
            raise InvalidPiecewise("Coefficients must be finite")
        nonzero = np.flatnonzero(np.any(table != 0, axis=0))
        width = nonzero[-1] + 1 if nonzero.size else 1
        table = np.ascontiguousarray(table[:, :width])
        bp.flags.writeable = False
        table.flags.writeable = False
        self._breakpoints = bp
        self._coeffs = table
        if check and self.degree >= 1:
            jump, scale = self._seam_jump()
            if jump > CONTINUITY_RTOL * max(scale, 1e-300):
                raise InvalidPiecewise("Discontinuous function (jump %.3g)" % jump)

    @classmethod
    def step(cls, breakpoints, values):
        """A step function; `values` holds one constant per segment."""
        return cls(breakpoints, [[value] for value in values])

    @classmethod
    def constant(cls, value, period):
        """The constant function `value` with the given `period`."""
        return cls([0.0, period], [[value]])

    @property
    def period(self):
        return float(self._breakpoints[-1])

    @property
    def breakpoints(self):
        return self._breakpoints

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def degree(self):
        return self._coeffs.shape[1] - 1

    @property
    def widths(self):
        return np.diff(self._breakpoints)

    def __len__(self):
        return self._coeffs.shape[0]

    def __repr__(self):
        return "%s(period=%r, segments=%d, degree=%d)" % (
            type(self).__name__,
            self.period,
            len(self),
            self.degree,
        )

    def _endpoint_values(self):
        """Values at the left and right end of each segment."""
        table = self._coeffs
        left = table[:, 0]
        right = _horner(table, self.widths)
        return left, right

    def _seam_jump(self):
        left, right = self._endpoint_values()
        jump = np.max(np.abs(right - np.roll(left, -1)))
        scale = max(np.max(np.abs(left)), np.max(np.abs(right)))
        return float(jump), float(scale)

    def _locate(self, t):
        bp = self._breakpoints
        period = bp[-1]
        u = np.mod(t, period)
        u = np.where(u == 0, period, u)
        index = np.clip(np.searchsorted(bp, u, side="left") - 1, 0, len(self) - 1)
        return index, u - bp[index]

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        index, x = self._locate(t)
        result = _horner(self._coeffs[index], x)
        return float(result) if result.ndim == 0 else result

    def derivative(self):
        """Segment-wise derivative, on the same breakpoints."""
        table = self._coeffs
        if table.shape[1] == 1:
            result = np.zeros_like(table)
        else:
            result = table[:, 1:] * np.arange(1, table.shape[1])
        return type(self)(self._breakpoints, result, check=False)

    def integrals(self):
        """The integral of each segment."""
        table = self._coeffs
        powers = np.arange(1, table.shape[1] + 1)
        h = self.widths[:, None]
        return np.sum(table * h ** powers / powers, axis=1)

    def mean(self):
        """Mean value over one period."""
        return float(np.sum(self.integrals()) / self.period)

    def primitive(self, tol=None):
        """The periodic primitive with zero mean.

        Raises `NonZeroMean`:class: if the mean of this function exceeds
        ``tol_mean * period * max|p|``.

        """
        tol = tol or config.current()
        period = self.period
        table = np.array(self._coeffs)
        total = float(np.sum(self.integrals()))
        left, right = self._endpoint_values()
        scale = max(float(np.max(np.abs(left))), float(np.max(np.abs(right))))
        if abs(total) > tol.tol_mean * period * scale:
            raise NonZeroMean(
                "Mean %.6g over a period of %.6g has no periodic primitive"
                % (total / period, period)
            )
        table[:, 0] -= total / period
        h = self.widths
        powers = np.arange(1, table.shape[1] + 1)
        body = table / powers
        pieces = np.sum(body * h[:, None] ** powers, axis=1)
        offsets = np.concatenate([[0.0], np.cumsum(pieces)[:-1]])
        # integral over one period, before centering
        area = np.sum(offsets * h) + np.sum(
            body * h[:, None] ** (powers + 1) / (powers + 1)
        )
        result = np.column_stack([offsets - area / period, body])
        return type(self)(self._breakpoints, result, check=False)

    def sup_norm(self):
        """Maximum of the absolute value over one period.

        Candidates are the endpoints of each segment and the real roots of
        the derivative of each piece.

        """
        best = 0.0
        for row, h in zip(self._coeffs, self.widths):
            best = max(best, _piece_max_abs(row, h))
        return best

    def level_roots(self, level):
        """All points of one period where the function equals `level`.

        Constant pieces at `level` contribute both of their endpoints.  The
        result is sorted and lies in ``(0, period]``.

        """
        bp = self._breakpoints
        found = []
        for i, (row, h) in enumerate(zip(self._coeffs, self.widths)):
            shifted = np.array(row)
            shifted[0] -= level
            scale = max(abs(level), float(np.max(np.abs(row))), 1e-300)
            trimmed = _trim(shifted, h)
            if trimmed.size == 1:
                if abs(trimmed[0]) <= 1e-12 * scale:
                    found.extend([bp[i], bp[i + 1]])
                continue
            for x in _real_roots(trimmed, h, polish=True):
                if abs(P.polyval(x, trimmed)) <= 1e-9 * scale:
                    found.append(bp[i] + x)
        if not found:
            return np.empty(0)
        roots = np.sort(np.where(np.asarray(found) <= 0, self.period, found))
        keep = np.concatenate([[True], np.diff(roots) > 1e-12 * self.period])
        return roots[keep]

    def translate(self, tau):
        """The shifted copy ``t ↦ p(t + tau)``.

        ::

            >>> square = PeriodicPiecewisePoly.step([0, 1, 2, 3, 4], [1, 0, -1, 0])
            >>> square.translate(2)(0.5)
            -1.0

        """
        from numpy.polynomial import Polynomial

        bp = self._breakpoints
        period = bp[-1]
        tau = float(np.mod(tau, period))
        moved = np.sort(np.concatenate([[0.0, period], np.mod(bp[:-1] - tau, period)]))
        keep = np.concatenate([[True], np.diff(moved) > 1e-12 * period])
        moved = moved[keep]
        moved[-1] = period
        rows = []
        for x0, x1 in zip(moved[:-1], moved[1:]):
            centre = np.mod((x0 + x1) / 2 + tau, period)
            j = int(np.searchsorted(bp, centre, side="right")) - 1
            j = min(max(j, 0), len(self) - 1)
            offset = centre - bp[j] - (x1 - x0) / 2
            shifted = Polynomial(self._coeffs[j])(Polynomial([offset, 1.0]))
            rows.append(shifted.coef)
        return type(self)(moved, rows, check=False)

    def sample(self, n):
        """`n` equispaced samples over one period, starting at 0."""
        t = np.linspace(0.0, self.period, int(n), endpoint=False)
        return t, self(t)

    def __mul__(self, alpha):
        if not np.isscalar(alpha):
            return NotImplemented
        return type(self)(self._breakpoints, self._coeffs * float(alpha), check=False)

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1.0

    def __add__(self, shift):
        if not np.isscalar(shift):
            return NotImplemented
        table = np.array(self._coeffs)
        table[:, 0] += float(shift)
        return type(self)(self._breakpoints, table, check=False)

    __radd__ = __add__

    def __sub__(self, shift):
        if not np.isscalar(shift):
            return NotImplemented
        return self + (-float(shift))


def _horner(rows, x):
    """Evaluate each row of coefficients at the matching `x`."""
    rows = np.asarray(rows)
    result = rows[..., -1] * np.ones_like(x)
    for j in range(rows.shape[-1] - 2, -1, -1):
        result = result * x + rows[..., j]
    return result


def _trim(c, h):
    """Drop leading coefficients that are negligible on ``[0, h]``."""
    c = np.asarray(c, dtype=float)
    terms = np.abs(c) * max(h, 1e-300) ** np.arange(c.size)
    top = terms.max() if c.size else 0.0
    n = c.size
    while n > 1 and terms[n - 1] <= _NEGLIGIBLE * top:
        n -= 1
    return c[:n]


def _real_roots(c, h, polish=False):
    """Real roots of the polynomial `c` within ``[0, h]``.

    Closed forms are used up to degree two; beyond that the companion matrix
    eigenvalues are taken.  Real parts of nearly real complex roots are kept,
    so callers must check residuals when they need genuine roots.

    """
    c = _trim(c, h)
    n = c.size - 1
    if n <= 0:
        return []
    if n == 1:
        candidates = [-c[0] / c[1]]
    elif n == 2:
        c0, c1, c2 = c
        candidates = [-c1 / (2 * c2)]
        disc = c1 * c1 - 4 * c2 * c0
        if disc >= 0:
            q = -0.5 * (c1 + np.copysign(np.sqrt(disc), c1))
            candidates.append(q / c2)
            if q != 0:
                candidates.append(c0 / q)
    else:
        roots = P.polyroots(c)
        candidates = list(roots.real)
        polish = True
    if polish:
        candidates = [_newton(c, x, h) for x in candidates]
    slack = 1e-12 * max(h, 1.0)
    return [min(max(x, 0.0), h) for x in candidates if -slack <= x <= h + slack]


def _newton(c, x, h, steps=3):
    """Polish a root `x` of `c` with guarded Newton steps."""
    dc = P.polyder(c)
    value = P.polyval(x, c)
    for _ in range(steps):
        slope = P.polyval(x, dc)
        if slope == 0:
            break
        candidate = x - value / slope
        new_value = P.polyval(candidate, c)
        if abs(new_value) >= abs(value) or not -h <= candidate <= 2 * h:
            break
        x, value = candidate, new_value
    return x


def _piece_max_abs(row, h):
    row = _trim(row, h)
    points = [0.0, h]
    if row.size > 1:
        points.extend(_real_roots(P.polyder(row), h))
    return float(np.max(np.abs(P.polyval(np.array(points), row))))


def evaluate(p, t):
    """Value of `p` at `t` (scalar or array), using the periodic extension."""
    return p(t)


def differentiate(p):
    """Segment-wise derivative of `p`."""
    return p.derivative()


def antiderivative_zero_mean(p, tol=None):
    """The periodic primitive of `p` with zero mean.

    :raises NonZeroMean: if `p` has a non-zero mean.

    """
    return p.primitive(tol=tol)


def sup_norm(p):
    """Exact uniform norm of `p` over one period."""
    return p.sup_norm()


def mean(p):
    """Exact mean of `p` over one period."""
    return p.mean()


def level_roots(p, level):
    """All ``t`` in one period with ``p(t) == level``."""
    return p.level_roots(level)
