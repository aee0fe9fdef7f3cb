#!/usr/bin/env python
# -*- coding: utf-8 -*-
# ---------------------------------------------------------------------
# Copyright (c) Merchise Autrement [~º/~] and Contributors
# All rights reserved.
#
# This is free software; you can do what the LICENCE file allows you to.
#

"""Modulus of continuity of the differentiation operator and sharp constants.

The modulus ``ω(D^k, X; δ)`` is the supremum of ``M_k(f)`` over the functions
of a class `X` with ``M_0(f) <= δ``.  The class is described by a
`ClassSpec`:class: that constrains the norms of the upper orders, either by a
box of bounds or by a level of a homogeneous functional
``p(f) = Π M_s^{θ_s}``.  The supremum is attained on the extremal family of
the order vector, so it is computed as an optimization over spline
parameters.

Members of the family are ``α ψ_r(u b, b, v b)``; the shape ``(u, v)`` is
optimized while ``b`` and ``α`` follow from ``M_0 = δ`` and the active
constraint.  Since ``‖ψ_j(u b, b, v b)‖ = b^j N_j(u, v)``, a member has::

    M_s = δ b^{-s} N_{r-s} / N_r

The Dragomir constants are the moduli at ``δ = 1`` for the order vector
``(0, 1, 2, 3)`` and ``p(f) = M_2^{1-η} M_3^η``::

    >>> round(dragomir_constant(0), 12) == round(2 ** 0.5, 12)
    True

"""

import logging
import math
from collections import namedtuple

import numpy as np
from typing_extensions import Literal

from . import config
from .bound import pred, times, whenany
from .norms import (
    InvalidNorms,
    derivative_norms,
    kolmogorov_constant,
    norm_vector,
    rodov_norms,
)
from .splines import ADJACENT, FULL, GAPPED, OrderVector, RodovParams

logger = logging.getLogger(__name__)


class EmptyClass(ValueError):
    """No function of the class has ``M_0 <= δ``."""


class UnsupportedSpec(ValueError):
    """The class fails the condition that makes the supremum attained."""


class InvalidSpec(ValueError):
    """Malformed class specification."""


class PowerLawMismatch(ArithmeticError):
    """The computed moduli do not follow the dilation power law."""


#: Kinds of class specifications.
SpecKind = Literal["box", "homogeneous"]

BOX: SpecKind = "box"
HOMOGENEOUS: SpecKind = "homogeneous"

#: Order vector of the Dragomir problem.
DRAGOMIR_ORDERS = OrderVector((0, 1, 2, 3))


def _number(value, what):
    try:
        result = float(value)
    except (TypeError, ValueError):
        raise InvalidSpec("Invalid %s %r" % (what, value))
    if math.isnan(result):
        raise InvalidSpec("Invalid %s %r" % (what, value))
    return result


def _orders_map(mapping, what):
    result = {}
    for order, value in dict(mapping).items():
        try:
            order = int(order)
        except (TypeError, ValueError):
            raise InvalidSpec("Invalid order %r" % (order,))
        if order < 1:
            raise InvalidSpec("Constrained orders must be positive, got %d" % order)
        result[order] = _number(value, what)
    if not result:
        raise InvalidSpec("At least one %s is required" % what)
    return result


class ClassSpec:
    """A class `X` of functions given by constraints on upper order norms.

    - ``ClassSpec.box({3: 1.0})``: ``M_s <= B_s`` for each order; infinite
      bounds are allowed.
    - ``ClassSpec.homogeneous({2: 0.5, 3: 0.5}, level=1)``: ``Π M_s^{θ_s} <=
      level``.
    - ``ClassSpec.dragomir(eta)``: the homogeneous class with ``θ = (1 - η,
      η)`` over the orders ``(2, 3)`` and level 1.

    Specs are also parsed from text::

        >>> ClassSpec.parse("hom:2^0.5,3^0.5@1").theta
        {2: 0.5, 3: 0.5}
        >>> ClassSpec.parse("box:3=1,2=inf").bounds
        {2: inf, 3: 1.0}

    """

    __slots__ = ("kind", "bounds", "theta", "level", "eta")

    def __init__(self, kind, bounds=None, theta=None, level=1.0, eta=None):
        if kind == BOX:
            bounds = _orders_map(bounds or {}, "bound")
            theta = None
        elif kind == HOMOGENEOUS:
            theta = _orders_map(theta or {}, "exponent")
            if any(x < 0 or math.isinf(x) for x in theta.values()):
                raise InvalidSpec("Exponents must be finite and non-negative")
            if not sum(theta.values()) > 0:
                raise InvalidSpec("The exponents must add up to a positive degree")
            bounds = None
        else:
            raise InvalidSpec("Unknown kind of class %r" % (kind,))
        self.kind = kind
        self.bounds = dict(sorted(bounds.items())) if bounds else None
        self.theta = dict(sorted(theta.items())) if theta else None
        self.level = _number(level, "level")
        self.eta = eta

    @classmethod
    def box(cls, bounds):
        return cls(BOX, bounds=bounds)

    @classmethod
    def homogeneous(cls, theta, level=1.0):
        return cls(HOMOGENEOUS, theta=theta, level=level)

    @classmethod
    def dragomir(cls, eta):
        eta = _number(eta, "eta")
        if not 0 <= eta <= 1:
            raise InvalidSpec("eta must lie in [0, 1], got %r" % eta)
        return cls(HOMOGENEOUS, theta={2: 1 - eta, 3: eta}, level=1.0, eta=eta)

    @classmethod
    def parse(cls, text):
        """Parse ``dragomir:<eta>``, ``box:<s>=<B>[,...]`` or
        ``hom:<s>^<θ>[,...]@<level>``."""
        head, sep, body = str(text).strip().partition(":")
        if not sep or not body:
            raise InvalidSpec("Invalid class spec %r" % (text,))
        head = head.lower()
        if head == "dragomir":
            return cls.dragomir(body)
        elif head == "box":
            return cls.box(_pairs(body, "=", text))
        elif head in ("hom", "homogeneous"):
            body, at, level = body.partition("@")
            return cls.homogeneous(_pairs(body, "^", text), level if at else 1.0)
        else:
            raise InvalidSpec("Unknown kind of class spec %r" % (text,))

    @classmethod
    def from_mapping(cls, mapping):
        """Build a spec from a JSON-like record.

        Examples: ``{"kind": "box", "bounds": {"3": 1}}``, ``{"kind":
        "homogeneous", "theta": {"2": 0.5, "3": 0.5}, "level": 1}`` and
        ``{"kind": "dragomir", "eta": 0.5}``.

        """
        if not isinstance(mapping, dict):
            raise InvalidSpec("A class spec record must be an object")
        kind = mapping.get("kind")
        if kind == "dragomir" or mapping.get("eta") is not None:
            return cls.dragomir(mapping.get("eta"))
        elif kind == BOX:
            return cls.box(mapping.get("bounds"))
        elif kind in (HOMOGENEOUS, "hom"):
            return cls.homogeneous(mapping.get("theta"), mapping.get("level", 1.0))
        else:
            raise InvalidSpec("Unknown kind of class %r" % (kind,))

    @property
    def orders(self):
        return tuple(self.bounds if self.kind == BOX else self.theta)

    @property
    def degree(self):
        """Homogeneity degree ``Σ θ_s`` of the functional, None for boxes."""
        return sum(self.theta.values()) if self.kind == HOMOGENEOUS else None

    def check_condition(self, kk):
        """Check that the modulus for `kk` is well posed and attained.

        :raises UnsupportedSpec: if an order is not an upper order of `kk`, a
           box leaves ``M_r`` unbounded, or ``θ_r = 0``.
        :raises EmptyClass: if a bound or the level is not positive.

        """
        kk = kk if isinstance(kk, OrderVector) else OrderVector(kk)
        strays = set(self.orders) - set(kk.upper)
        if strays:
            raise UnsupportedSpec(
                "Orders %s are not upper orders of %s" % (sorted(strays), kk)
            )
        r = kk.r
        if self.kind == BOX:
            if any(not x > 0 for x in self.bounds.values()):
                raise EmptyClass("Box bounds must be positive: %r" % (self.bounds,))
            if not math.isfinite(self.bounds.get(r, math.inf)):
                raise UnsupportedSpec("The box must bound M_%d" % r)
        else:
            if not self.level > 0:
                raise EmptyClass("The level must be positive, got %r" % self.level)
            if not self.theta.get(r, 0) > 0:
                raise UnsupportedSpec(
                    "The exponent of M_%d must be positive; the supremum is "
                    "not attained" % r
                )
        return kk

    def functional(self, norms):
        """``Π M_s^{θ_s}``; for a box the gauge ``max M_s / B_s``."""
        if self.kind == HOMOGENEOUS:
            return float(np.prod([norms[s] ** t for s, t in self.theta.items()]))
        else:
            return max(norms[s] / bound for s, bound in self.bounds.items())

    def contains(self, norms, tol=None):
        """Whether the `norms` (a mapping by order) satisfy the constraints."""
        tol = tol or config.current()
        limit = self.level if self.kind == HOMOGENEOUS else 1.0
        return self.functional(norms) <= limit * (1 + tol.tol_boundary)

    def dilation_exponent(self, k):
        """Exponent ``e`` of ``ω(δ) ∝ δ^e`` for homogeneous classes.

        ``e = 1 - k Σθ_s / Σ s θ_s``.  Boxes have no fixed exponent (see
        `measure_dilation_exponent`:func:) and return None.

        """
        if self.kind != HOMOGENEOUS:
            return None
        weighted = sum(s * theta for s, theta in self.theta.items())
        return 1 - k * self.degree / weighted

    def as_dict(self):
        result = {"kind": self.kind}
        if self.kind == BOX:
            result["bounds"] = {str(s): x for s, x in self.bounds.items()}
        else:
            result["theta"] = {str(s): x for s, x in self.theta.items()}
            result["level"] = self.level
        if self.eta is not None:
            result["eta"] = self.eta
        return result

    def __eq__(self, other):
        if not isinstance(other, ClassSpec):
            return NotImplemented
        return self.as_dict() == other.as_dict()

    def __hash__(self):
        return hash(str(self))

    def __str__(self):
        if self.eta is not None:
            return "dragomir:%r" % self.eta
        elif self.kind == BOX:
            return "box:" + ",".join("%d=%r" % item for item in self.bounds.items())
        else:
            body = ",".join("%d^%r" % item for item in self.theta.items())
            return "hom:%s@%r" % (body, self.level)

    def __repr__(self):
        return "ClassSpec.parse(%r)" % str(self)


def _pairs(body, sep, text):
    result = {}
    for item in body.split(","):
        order, found, value = item.partition(sep)
        if not found:
            raise InvalidSpec("Invalid item %r in class spec %r" % (item, text))
        result[order.strip()] = value.strip()
    return result


class ModulusResult(namedtuple("ModulusResult", "omega argmax delta attained")):
    """The value ``ω(δ)`` and the extremal spline `argmax`.

    `attained` is False when the supremum is only approached as the shape
    degenerates.

    """

    __slots__ = ()

    def as_dict(self):
        result = dict(self._asdict())
        result["argmax"] = self.argmax.as_dict()
        return result


class _Profile:
    """``ω`` as a function of the shape ``(u, v)`` for fixed `delta`."""

    __slots__ = ("kk", "spec", "delta", "orders")

    def __init__(self, kk, spec, delta):
        self.kk = kk
        self.spec = spec
        self.delta = delta
        r = kk.r
        needed = {r, r - kk.k} | {r - s for s in spec.orders}
        self.orders = sorted(needed)

    def scale(self, u, v):
        """Return ``(b, N)``: the width `b` with an active constraint and the
        shape norms ``N_j``."""
        r, delta, spec = self.kk.r, self.delta, self.spec
        N = rodov_norms(u, 1.0, v, self.orders)
        if spec.kind == BOX:
            b = max(
                (delta * N[r - s] / (N[r] * bound)) ** (1 / s)
                for s, bound in spec.bounds.items()
                if math.isfinite(bound)
            )
        else:
            logs = sum(
                theta * math.log(delta * N[r - s] / N[r])
                for s, theta in spec.theta.items()
                if theta > 0
            )
            weighted = sum(s * theta for s, theta in spec.theta.items())
            b = math.exp((logs - math.log(spec.level)) / weighted)
        return b, N

    def __call__(self, u, v=0.0):
        b, N = self.scale(u, v)
        r, k = self.kk.r, self.kk.k
        return self.delta * b ** (-k) * N[r - k] / N[r]

    def member(self, u, v=0.0):
        b, N = self.scale(u, v)
        r = self.kk.r
        alpha = self.delta / (b ** r * N[r])
        return RodovParams(u * b, b, v * b, r, alpha)


_INVPHI = (math.sqrt(5) - 1) / 2


def _golden(func, lo, hi, tol, precision=None):
    """Maximize `func` over ``[lo, hi]`` by golden-section search.

    The search stops when the bracket is narrower than `precision` (default
    ``tol_opt``) relative to its left end.

    """
    precision = precision or tol.tol_opt

    def narrowing():
        a, b = lo, hi
        x1, x2 = b - _INVPHI * (b - a), a + _INVPHI * (b - a)
        f1, f2 = func(x1), func(x2)
        while True:
            yield a, b, (x1, f1) if f1 >= f2 else (x2, f2)
            if f1 >= f2:
                b, x2, f2 = x2, x1, f1
                x1 = b - _INVPHI * (b - a)
                f1 = func(x1)
            else:
                a, x1, f1 = x1, x2, f2
                x2 = a + _INVPHI * (b - a)
                f2 = func(x2)

    narrow = pred(lambda s: s[1] - s[0] <= precision * max(1.0, abs(s[0])))
    a, b, best = whenany(times(tol.max_iter), narrow)(narrowing)()
    logger.debug("Golden-section bracket [%r, %r]", a, b)
    return best


def _shape_grid(tol):
    return np.concatenate([[0.0], np.geomspace(1e-4, 1e6, tol.grid_samples - 1)])


def _maximize(func, tol, coarse=None, precision=None):
    """Maximize `func` over ``[0, ∞)``.

    The profile is sampled on a geometric grid; the first best sample is
    polished between its neighbours.  When given, `coarse` is a cheaper
    stand-in for `func` on the grid.  Returns ``(x, value, attained)``.

    """
    grid = _shape_grid(tol)
    values = np.array([(coarse or func)(x) for x in grid])
    i = int(np.argmax(values))
    last = grid.size - 1
    if i == last:
        return float(grid[i]), float(func(grid[i])), False
    x, value = _golden(func, grid[max(i - 1, 0)], grid[i + 1], tol, precision)
    best = func(grid[i]) if coarse else values[i]
    if value <= best:
        x, value = grid[i], best
    return float(x), float(value), True


def modulus(kk, spec, delta, tol=None):
    """Compute ``ω(D^k, X; δ)`` for the class `spec` and order vector `kk`.

    The optimization runs over the extremal family of `kk`: the width `a`
    for ``(0, k, r-1, r)``, the width `c` for ``(0, k, r-2, r)``, both (the
    smallest `c`, then the smallest `a`, on ties) for ``(0, k, r-2, r-1,
    r)``, and the Euler spline alone for ``(0, k, r)``.  The constraint of a
    homogeneous class is active, ``p = level``.

    The two-parameter search of ``(0, k, r-2, r-1, r)`` nests one profile
    maximization per sample of `c` and takes about ``grid_samples**2 + 30 *
    (grid_samples + 60)`` spline norm evaluations, some seconds per call with
    the default tolerances.  The other kinds take a few hundred.

    :raises EmptyClass: unless `delta` is positive.
    :raises UnsupportedSpec: see `ClassSpec.check_condition`:meth:.

    """
    tol = tol or config.current()
    try:
        delta = float(delta)
    except (TypeError, ValueError):
        raise EmptyClass("Invalid delta %r" % (delta,))
    if not (delta > 0 and math.isfinite(delta)):
        raise EmptyClass("delta must be positive and finite, got %r" % delta)
    kk = spec.check_condition(kk)
    profile = _Profile(kk, spec, delta)
    witness = profile.member(0.0, 0.0)
    if not spec.contains(dict(norm_vector(witness, spec.orders)), tol=tol):
        raise EmptyClass("No member of the family lies in %s" % spec)
    if kk.kind == ADJACENT:
        u, omega, attained = _maximize(profile, tol)
        v = 0.0
    elif kk.kind == GAPPED:
        v, omega, attained = _maximize(lambda v: profile(0.0, v), tol)
        u = 0.0
    elif kk.kind == FULL:
        inner, shapes = {}, _shape_grid(tol)

        def outer(v):
            found = _maximize(lambda u: profile(u, v), tol)
            inner[v] = found
            return found[1]

        def coarse(v):
            return max(profile(u, v) for u in shapes)

        # v to sqrt(tol_opt) gives ω to about tol_opt
        precision = math.sqrt(tol.tol_opt)
        v, omega, attained = _maximize(outer, tol, coarse, precision)
        u, omega, inner_attained = inner.get(v) or _maximize(
            lambda u: profile(u, v), tol
        )
        attained = attained and inner_attained
    else:
        u = v = 0.0
        omega, attained = profile(0.0, 0.0), True
    if not attained:
        logger.warning(
            "The modulus for %s under %s is not attained; sup approached as the "
            "shape degenerates",
            kk,
            spec,
        )
    return ModulusResult(float(omega), profile.member(u, v), delta, attained)


def dragomir_constant(eta, tol=None):
    """The sharp constant ``C_η`` of ``M_1 <= C_η M_0^{(1+η)/(2+η)}
    (M_2^{1-η} M_3^η)^{1/(2+η)}``.

    For ``η`` in ``{0, 1}`` the classical constants ``K(1, 2) = √2`` and
    ``K(1, 3) = (9/8)^{1/3}`` are returned.  Otherwise ``ω(δ) δ^{-q}`` with
    ``q = (1+η)/(2+η)`` is computed at ``δ`` in ``{0.5, 1, 2}``.

    :raises PowerLawMismatch: if those values spread beyond ``tol_check``.
    :raises InvalidSpec: unless ``0 <= eta <= 1``.

    """
    tol = tol or config.current()
    spec = ClassSpec.dragomir(eta)
    eta = spec.eta
    if eta == 0:
        return kolmogorov_constant(1, 2, tol)
    elif eta == 1:
        return kolmogorov_constant(1, 3, tol)
    q = (1 + eta) / (2 + eta)
    scaled = {
        delta: modulus(DRAGOMIR_ORDERS, spec, delta, tol=tol).omega * delta ** (-q)
        for delta in (0.5, 1.0, 2.0)
    }
    top, bottom = max(scaled.values()), min(scaled.values())
    spread = (top - bottom) / top
    if spread > tol.tol_check:
        logger.error("Power law for eta=%r fails: %r", eta, scaled)
        raise PowerLawMismatch("Relative spread %.3g for eta=%r" % (spread, eta))
    return scaled[1.0]


def dragomir_grid_search(eta, delta=1.0, nodes=10 ** 6, rounds=3):
    """The Dragomir modulus by exhaustive search, independent of `modulus`.

    With ``α = b^{η-1}`` the constraint on ``M_0`` fixes ``a`` as a function
    of ``b`` (the non-negative root of a quadratic), so the objective
    ``b^η (a + b/2)`` is scanned over `nodes` geometric values of ``b`` and
    then over `rounds` - 1 zooms around the best node.

    """
    eta, delta = float(eta), float(delta)
    if not 0 < eta < 1:
        raise InvalidSpec("eta must lie in (0, 1), got %r" % eta)
    if not delta > 0:
        raise EmptyClass("delta must be positive, got %r" % delta)
    top = (3 * delta) ** (1 / (2 + eta))

    def objective(b):
        lift = 2 * delta * b ** (-eta)
        a = (lift - 2 * b * b / 3) / (b + np.sqrt(b * b / 3 + lift))
        return b ** eta * (np.maximum(a, 0.0) + b / 2)

    def zooming():
        grid = np.geomspace(top * 1e-9, top, int(nodes))
        while True:
            values = objective(grid)
            i = int(np.argmax(values))
            yield float(values[i]), float(grid[i])
            lo, hi = grid[max(i - 1, 0)], grid[min(i + 1, grid.size - 1)]
            grid = np.linspace(lo, hi, int(nodes))

    value, b = times(int(rounds))(zooming)()
    logger.debug("Grid search for eta=%r: b=%r", eta, b)
    return value


def measure_dilation_exponent(kk, spec, deltas=(0.25, 0.5, 1.0, 2.0, 4.0), tol=None):
    """The least-squares slope of ``log ω`` against ``log δ``."""
    deltas = np.asarray(deltas, dtype=float)
    omegas = np.array([modulus(kk, spec, delta, tol=tol).omega for delta in deltas])
    slope, _ = np.polyfit(np.log(deltas), np.log(omegas), 1)
    return float(slope)


def sharp_inequality_check(f, kk, spec, tol=None):
    """Ratio of ``M_k(f)`` to the bound that the modulus gives for it.

    For homogeneous classes `f` is rescaled to ``p(f) = level``; for boxes
    it is shrunk by ``c = min B_s / M_s`` into the box.  The ratio is at
    most 1 and equals 1 for extremal splines.

    `f` is anything `~xotl.kolmogorov.norms.derivative_norms`:func: accepts.

    """
    tol = tol or config.current()
    kk = spec.check_condition(kk)
    orders = sorted({0, kk.k} | set(spec.orders))
    norms = derivative_norms(f, orders)
    if not all(norms[s] > 0 for s in orders):
        raise InvalidNorms("The test function has a vanishing norm: %r" % (norms,))
    if spec.kind == HOMOGENEOUS:
        scale = (spec.functional(norms) / spec.level) ** (1 / spec.degree)
        omega = modulus(kk, spec, norms[0] / scale, tol=tol).omega
        return norms[kk.k] / scale / omega
    else:
        c = min(bound / norms[s] for s, bound in spec.bounds.items())
        omega = modulus(kk, spec, c * norms[0], tol=tol).omega
        return c * norms[kk.k] / omega
