#!/usr/bin/env python
# -*- coding: utf-8 -*-
# ---------------------------------------------------------------------
# Copyright (c) Merchise Autrement [~º/~] and Contributors
# All rights reserved.
#
# This is free software; you can do what the LICENCE file allows you to.
#

"""Euler perfect splines, Rodov splines and their fitted families.

The Rodov spline ``ψ_s(a, b, c)`` is the `s`-th zero-mean periodic primitive
of a three-plateau step function ``ψ_0``.  On ``[0, L]``, with ``L = a + b +
c``, the step is 0 on ``[0, a]``, 1 on ``(a, a + b]`` and 0 on ``(a + b, L]``;
it is continued evenly with respect to ``L`` and oddly with respect to
``2L``, so the period is ``4L``::

    >>> psi1 = build_rodov(RodovParams(0.7, 1.3, 1.0, s=1))
    >>> round(psi1(0.0), 12), psi1.period
    (-1.3, 12.0)

With ``a = c = 0`` the Rodov spline is the Euler perfect spline
``φ_{λ,r}`` with ``λ = π / (2b)``.

"""

import logging
import operator
from collections import namedtuple
from functools import lru_cache
from math import isfinite, pi, sqrt

from typing_extensions import Literal

from . import config
from .piecewise import PeriodicPiecewisePoly

logger = logging.getLogger(__name__)


class InvalidParams(ValueError):
    """Spline parameters out of their domain."""


class InvalidOrderVector(ValueError):
    """An order vector outside of the supported set."""


class InfeasibleNorms(ValueError):
    """Upper norms that no spline of the family realizes."""


def _real(value, name):
    try:
        result = float(value)
    except (TypeError, ValueError):
        raise InvalidParams("%s must be a real number, got %r" % (name, value))
    if not isfinite(result):
        raise InvalidParams("%s must be finite, got %r" % (name, value))
    return result


def _order(value, name):
    try:
        if isinstance(value, float) and value.is_integer():
            value = int(value)
        return operator.index(value)
    except TypeError:
        raise InvalidParams("%s must be an integer, got %r" % (name, value))


class RodovParams(namedtuple("RodovParams", "a b c s alpha")):
    """Parameters of ``alpha * ψ_s(a, b, c)``.

    `a` is the width of the flat part at the extremes, `b` the width of the
    ramp and `c` the width of the flat part at zero.

    """

    __slots__ = ()

    def __new__(cls, a, b, c=0.0, s=0, alpha=1.0):
        a, b, c = _real(a, "a"), _real(b, "b"), _real(c, "c")
        alpha = _real(alpha, "alpha")
        s = _order(s, "s")
        if not b > 0:
            raise InvalidParams("b must be positive, got %r" % b)
        if a < 0 or c < 0:
            raise InvalidParams("a and c must be non-negative, got %r, %r" % (a, c))
        if s < 0:
            raise InvalidParams("s must be non-negative, got %r" % s)
        if not alpha > 0:
            raise InvalidParams("alpha must be positive, got %r" % alpha)
        if not isfinite(4 * (a + b + c)):
            raise InvalidParams("Degenerate period for %r, %r, %r" % (a, b, c))
        return super().__new__(cls, a, b, c, s, alpha)

    @property
    def half_period(self):
        """The point ``a + b + c`` of even symmetry."""
        return self.a + self.b + self.c

    @property
    def period(self):
        return 4 * self.half_period

    def with_order(self, s):
        return self._replace_checked(s=s)

    def scaled(self, gamma):
        """Stretch the widths `a`, `b` and `c` by `gamma`."""
        return self._replace_checked(
            a=self.a * gamma, b=self.b * gamma, c=self.c * gamma
        )

    def _replace_checked(self, **changes):
        return type(self)(**dict(self._asdict(), **changes))

    def as_dict(self):
        return dict(self._asdict())


class EulerParams(namedtuple("EulerParams", "frequency r amplitude")):
    """Parameters of ``amplitude * φ_{λ,r}`` where ``λ`` is the `frequency`."""

    __slots__ = ()

    def __new__(cls, frequency, r, amplitude=1.0):
        frequency = _real(frequency, "frequency")
        amplitude = _real(amplitude, "amplitude")
        r = _order(r, "r")
        if not frequency > 0:
            raise InvalidParams("frequency must be positive, got %r" % frequency)
        if r < 1:
            raise InvalidParams("r must be at least 1, got %r" % r)
        if not amplitude > 0:
            raise InvalidParams("amplitude must be positive, got %r" % amplitude)
        return super().__new__(cls, frequency, r, amplitude)

    @property
    def period(self):
        return 2 * pi / self.frequency

    def as_rodov(self):
        """The same spline as Rodov parameters: ``ψ_r(0, π/(2λ), 0)``."""
        return RodovParams(0.0, pi / (2 * self.frequency), 0.0, self.r, self.amplitude)

    def as_dict(self):
        return dict(self._asdict())


def rodov_step(a, b, c):
    """The step function ``ψ_0(a, b, c)``.

    Zero-length plateaus are skipped.

    """
    half = a + b + c
    # fmt: off
    plateaus = (
        (a, 0.0), (b, 1.0), (c, 0.0),
        (c, 0.0), (b, 1.0), (a, 0.0),
        (a, 0.0), (b, -1.0), (c, 0.0),
        (c, 0.0), (b, -1.0), (a, 0.0),
    )
    # fmt: on
    breakpoints, values, position = [0.0], [], 0.0
    for quarter in range(4):
        end = (quarter + 1) * half
        for width, value in plateaus[3 * quarter : 3 * quarter + 3]:
            position = min(position + width, end)
            if position > breakpoints[-1]:
                breakpoints.append(position)
                values.append(value)
        # keep quarter seams exact
        breakpoints[-1] = position = end
    return PeriodicPiecewisePoly.step(breakpoints, values)


def rodov_chain(a, b, c, s, tol=None):
    """The tuple ``(ψ_0, ψ_1, ..., ψ_s)`` for widths `a`, `b`, `c`.

    Chains are cached per tolerance record; without `tol` the current one is
    used.

    """
    return _rodov_chain(a, b, c, s, tol or config.current())


@lru_cache(maxsize=512)
def _rodov_chain(a, b, c, s, tol):
    chain = [rodov_step(a, b, c)]
    for _ in range(s):
        chain.append(chain[-1].primitive(tol=tol))
    return tuple(chain)


def build_rodov(params, tol=None):
    """Build ``alpha * ψ_s(a, b, c)`` as a periodic piecewise polynomial."""
    if not isinstance(params, RodovParams):
        params = RodovParams(*params)
    psi = rodov_chain(params.a, params.b, params.c, params.s, tol=tol)[-1]
    return psi if params.alpha == 1 else params.alpha * psi


def build_euler(params, tol=None):
    """Build ``amplitude * φ_{λ,r}``.

    ``ψ_r(0, b, 0)`` with ``b = π / (2λ)`` is exactly ``φ_{λ,r}``, so the
    amplitude is the multiplier of the Rodov spline.

    """
    if not isinstance(params, EulerParams):
        params = EulerParams(*params)
    return build_rodov(params.as_rodov(), tol=tol)


#: Kinds of order vectors.
Kind = Literal["triple", "adjacent", "gapped", "full"]

TRIPLE: Kind = "triple"  # (0, k, r)
ADJACENT: Kind = "adjacent"  # (0, k, r-1, r)
GAPPED: Kind = "gapped"  # (0, k, r-2, r)
FULL: Kind = "full"  # (0, k, r-2, r-1, r)


class OrderVector:
    """An order vector ``(0, k, ..., r)``.

    Supported vectors are ``(0, k, r-1, r)``, ``(0, k, r-2, r)``, ``(0, k,
    r-2, r-1, r)`` and the classical triple ``(0, k, r)``::

        >>> kk = OrderVector.parse("0,1,2,4")
        >>> kk.kind, kk.k, kk.r, kk.upper
        ('gapped', 1, 4, (2, 4))

    """

    __slots__ = ("entries", "kind")

    def __init__(self, entries):
        if isinstance(entries, OrderVector):
            entries = entries.entries
        try:
            entries = tuple(_order(x, "order") for x in entries)
        except InvalidParams as error:
            raise InvalidOrderVector(str(error))
        self.entries = entries
        self.kind = self._classify(entries)

    @staticmethod
    def _classify(entries):
        if len(entries) < 3 or entries[0] != 0:
            raise InvalidOrderVector("Expected (0, k, ..., r), got %r" % (entries,))
        if any(x >= y for x, y in zip(entries, entries[1:])):
            raise InvalidOrderVector("Orders must increase strictly: %r" % (entries,))
        r, size = entries[-1], len(entries)
        if size == 3:
            return TRIPLE
        elif size == 4 and entries[2] == r - 1:
            return ADJACENT
        elif size == 4 and entries[2] == r - 2:
            return GAPPED
        elif size == 5 and entries[2:] == (r - 2, r - 1, r):
            return FULL
        else:
            raise InvalidOrderVector("Unsupported order vector %r" % (entries,))

    @classmethod
    def parse(cls, text):
        """Parse a comma separated vector such as ``"0,1,2,3"``."""
        try:
            return cls(int(x) for x in text.split(","))
        except ValueError as error:
            if isinstance(error, InvalidOrderVector):
                raise
            raise InvalidOrderVector("Invalid order vector %r" % (text,))

    @property
    def k(self):
        return self.entries[1]

    @property
    def r(self):
        return self.entries[-1]

    @property
    def upper(self):
        """The higher orders, e.g. ``(r-2, r-1, r)`` for the full vector."""
        return self.entries[2:] if self.kind != TRIPLE else (self.r,)

    @property
    def is_triple(self):
        return self.kind == TRIPLE

    @property
    def free(self):
        """Which Rodov width is the family parameter: 'a', 'c' or None."""
        return {ADJACENT: "a", GAPPED: "c", FULL: "c"}.get(self.kind)

    @property
    def proven(self):
        """Whether the comparison theorem is proven for this kind."""
        return self.kind in (TRIPLE, GAPPED)

    def admits(self, psi):
        """Whether the Rodov parameters `psi` give a member of this family.

        The order must be `r`.  GAPPED vectors need ``a = 0``, ADJACENT ones
        ``c = 0`` and the triple both::

            >>> OrderVector((0, 1, 2, 4)).admits(RodovParams(0, 1, 0.5, 4))
            True
            >>> OrderVector((0, 1, 2, 4)).admits(RodovParams(3, 1, 0, 4))
            False

        """
        if psi.s != self.r:
            return False
        pinned = {TRIPLE: "ac", ADJACENT: "c", GAPPED: "a"}.get(self.kind, "")
        return all(getattr(psi, name) == 0 for name in pinned)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __eq__(self, other):
        if isinstance(other, OrderVector):
            return self.entries == other.entries
        elif isinstance(other, (tuple, list)):
            return self.entries == tuple(other)
        else:
            return NotImplemented

    def __hash__(self):
        return hash(self.entries)

    def __str__(self):
        return ",".join(str(x) for x in self.entries)

    def __repr__(self):
        return "OrderVector(%r)" % (self.entries,)


class FamilyState(namedtuple("FamilyState", "params shift free")):
    """A member ``ψ + d`` of the extremal family.

    `params` are the Rodov parameters of ``ψ``, `shift` the vertical shift
    ``d >= 0`` and `free` the name of the family parameter ('a' or 'c').

    """

    __slots__ = ()

    def __new__(cls, params, shift=0.0, free=None):
        shift = _real(shift, "shift")
        if shift < 0:
            raise InvalidParams("shift must be non-negative, got %r" % shift)
        if free not in ("a", "c", None):
            raise InvalidParams("free must be 'a', 'c' or None, got %r" % (free,))
        return super().__new__(cls, params, shift, free)

    @property
    def beta(self):
        return getattr(self.params, self.free) if self.free else None

    def realize(self):
        """Build ``ψ + d``."""
        return build_rodov(self.params) + self.shift

    def as_dict(self):
        return {
            "params": self.params.as_dict(),
            "shift": self.shift,
            "free": self.free,
            "beta": self.beta,
        }


class SplineFamily:
    """The one-parametric family ``β ↦ alpha * ψ_r(...)`` of an order vector.

    Every member has the same upper norms; the lower norms increase with
    ``β``.  Calling the family with ``β`` returns the Rodov parameters of the
    member.

    """

    __slots__ = ("kk", "alpha", "a", "b", "free")

    def __init__(self, kk, alpha, b, a=0.0):
        self.kk = kk
        self.alpha = alpha
        self.b = b
        self.a = a
        self.free = kk.free

    def __call__(self, beta):
        if beta < 0:
            raise InvalidParams("The family parameter must be non-negative")
        if self.free == "a":
            return RodovParams(beta, self.b, 0.0, self.kk.r, self.alpha)
        else:
            return RodovParams(self.a, self.b, beta, self.kk.r, self.alpha)

    def state(self, beta, shift=0.0):
        return FamilyState(self(beta), shift, self.free)

    def spline(self, beta):
        return build_rodov(self(beta))

    def __repr__(self):
        return "SplineFamily(%s, alpha=%r, a=%r, b=%r)" % (
            self.kk,
            self.alpha,
            self.a,
            self.b,
        )


def fit_family(kk, upper_norms, tol=None):
    """Fit the family of `kk` to the norms of the upper orders.

    `upper_norms` maps each order of ``kk.upper`` to a positive value (a
    `~xotl.kolmogorov.norms.NormVector`:class: will do).  The parameters are:

    - ``(0, k, r-2, r)``: ``alpha = M_r``, ``b = sqrt(2 M_{r-2} / M_r)``,
      members ``alpha * ψ_r(0, b, β)``.
    - ``(0, k, r-1, r)``: ``alpha = M_r``, ``b = M_{r-1} / M_r``, members
      ``alpha * ψ_r(β, b, 0)``.
    - ``(0, k, r-2, r-1, r)``: as the previous one with ``a = M_{r-2} /
      M_{r-1} - M_{r-1} / (2 M_r)``, members ``alpha * ψ_r(a, b, β)``.

    :raises InfeasibleNorms: if a norm is not positive or the Landau
       condition ``M_{r-1}**2 <= 2 M_{r-2} M_r`` fails.

    """
    tol = tol or config.current()
    kk = kk if isinstance(kk, OrderVector) else OrderVector(kk)
    if kk.is_triple:
        raise InvalidOrderVector("The triple %s has no Rodov family" % kk)
    r = kk.r
    norms = {}
    for order in kk.upper:
        try:
            value = float(upper_norms[order])
        except (KeyError, IndexError):
            raise InfeasibleNorms("Missing the norm of order %d" % order)
        if not (value > 0 and isfinite(value)):
            raise InfeasibleNorms("Norm of order %d must be positive" % order)
        norms[order] = value
    alpha = norms[r]
    if kk.kind == GAPPED:
        return SplineFamily(kk, alpha, sqrt(2 * norms[r - 2] / alpha))
    b = norms[r - 1] / alpha
    if kk.kind == ADJACENT:
        return SplineFamily(kk, alpha, b)
    first = norms[r - 2] / norms[r - 1]
    a = first - norms[r - 1] / (2 * alpha)
    if a < 0:
        if a < -tol.tol_boundary * first:
            raise InfeasibleNorms(
                "Landau condition fails: M_%d**2 = %.6g > 2 M_%d M_%d = %.6g"
                % (r - 1, norms[r - 1] ** 2, r - 2, r, 2 * norms[r - 2] * alpha)
            )
        a = 0.0
    return SplineFamily(kk, alpha, b, a=a)
