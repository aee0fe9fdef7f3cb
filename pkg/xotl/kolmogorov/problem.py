#!/usr/bin/env python
# -*- coding: utf-8 -*-
# ---------------------------------------------------------------------
# Copyright (c) Merchise Autrement [~º/~] and Contributors
# All rights reserved.
#
# This is free software; you can do what the LICENCE file allows you to.
#

"""The Kolmogorov problem: admissibility of norm vectors.

Given positive numbers ``M_{k_1}, ..., M_{k_d}``, is there a function whose
derivative norms are exactly those numbers?  For three norms the answer is
Kolmogorov's inequality; for the supported four and five norm vectors the
answer is a member ``ψ + d`` of the extremal family::

    >>> verdict = is_admissible_triple(1, 2, 1.0, 1.4, 1.0)
    >>> bool(verdict), round(verdict.witness.amplitude, 12)
    (True, 1.0)

    >>> bool(is_admissible_triple(1, 2, 1.0, 1.5, 1.0))
    False

This module also checks the comparison theorems numerically: whenever the
norms of `f` are dominated by the norms of an extremal spline ``ψ``, then
``|f'(ξ)| <= |ψ'(η)|`` for every ``ξ`` and ``η`` with ``f(ξ) = ψ(η)``.

"""

import logging
from collections import namedtuple

import numpy as np

from . import config
from .bound import pred, times, whenany
from .norms import (
    InvalidNorms,
    NormVector,
    derivative_norms,
    favard_norm,
    kolmogorov_constant,
    norm_vector,
)
from .splines import (
    EulerParams,
    InfeasibleNorms,
    OrderVector,
    build_euler,
    build_rodov,
    fit_family,
)
from .verdict import Accepted, Rejected

logger = logging.getLogger(__name__)


class HypothesisViolated(ValueError):
    """The norms of the test function are not dominated."""


class TripleWitness(
    namedtuple("TripleWitness", "amplitude frequency shift boundary r")
):
    """The function ``amplitude * φ_{λ,r} + shift`` realizing three norms.

    `boundary` tells whether the vector lies on the boundary of Kolmogorov's
    inequality.

    """

    __slots__ = ()

    def realize(self):
        params = EulerParams(self.frequency, self.r, self.amplitude)
        return build_euler(params) + self.shift

    def as_dict(self):
        return dict(self._asdict())


def _positive(*values):
    if not all(np.isfinite(x) and x > 0 for x in values):
        raise InvalidNorms("Norms must be positive and finite: %r" % (values,))


def is_admissible_triple(k, r, M0, Mk, Mr, tol=None):
    """Decide whether ``(M0, Mk, Mr)`` are the norms of some function.

    The answer is yes iff ``Mk <= K(k, r) M0^{1-k/r} Mr^{k/r}``.  An accepted
    verdict carries a `TripleWitness`:class:.

    :raises BadOrders: unless ``0 < k < r``.

    """
    tol = tol or config.current()
    constant = kolmogorov_constant(k, r, tol)
    _positive(M0, Mk, Mr)
    bound = constant * M0 ** (1 - k / r) * Mr ** (k / r)
    if Mk > bound * (1 + tol.tol_boundary):
        return Rejected("M_%d = %.17g exceeds %.17g" % (k, Mk, bound))
    frequency = (Mr * favard_norm(r - k, tol) / Mk) ** (1 / (r - k))
    least = Mr * frequency ** (-r) * favard_norm(r, tol)
    boundary = bool(Mk >= bound * (1 - tol.tol_boundary))
    return Accepted(TripleWitness(Mr, frequency, max(0.0, M0 - least), boundary, r))


def _lower_norm(family, order, beta):
    return norm_vector(family(beta), [order])[order]


def _expand_bracket(func, target, start, tol):
    """Double `start` until ``func(hi) >= target``; return ``(lo, hi)``."""

    def doubling():
        lo, hi = 0.0, start
        while True:
            yield lo, hi, func(hi)
            lo, hi = hi, 2 * hi

    reached = pred(lambda state: state[2] >= target)
    lo, hi, value = whenany(times(tol.max_iter), reached)(doubling)()
    logger.debug("Bracket for %.17g: [%r, %r]", target, lo, hi)
    return lo, hi, value


def is_admissible(kk, M, tol=None):
    """Decide whether the norm vector `M` of order vector `kk` is admissible.

    1. Fit the family to the upper norms; a Landau violation rejects.
    2. Find ``β*`` with ``M_k(ψ(β*)) = M_k``; rejects if ``M_k`` is below
       the family minimum.
    3. Accept iff ``M_0 >= M_0(ψ(β*))``, the witness being ``ψ(β*) + d``
       with ``d = M_0 - M_0(ψ(β*))``.

    The triple ``(0, k, r)`` is delegated to `is_admissible_triple`:func:.

    :returns: a `~xotl.kolmogorov.verdict.Verdict`:class:; accepted verdicts
       carry a `~xotl.kolmogorov.splines.FamilyState`:class:.

    """
    from scipy.optimize import brentq

    tol = tol or config.current()
    kk = kk if isinstance(kk, OrderVector) else OrderVector(kk)
    if not isinstance(M, NormVector):
        M = NormVector(kk.entries, M)
    if M.orders != kk.entries:
        raise InvalidNorms("Norms of orders %r given for %s" % (M.orders, kk))
    k = kk.k
    if kk.is_triple:
        return is_admissible_triple(k, kk.r, M[0], M[k], M[kk.r], tol=tol)
    try:
        family = fit_family(kk, M.restrict(kk.upper), tol=tol)
    except InfeasibleNorms as error:
        return Rejected(str(error))
    target = M[k]
    least = _lower_norm(family, k, 0.0)
    if target < least * (1 - tol.tol_boundary):
        return Rejected(
            "M_%d = %.17g is below the family minimum %.17g" % (k, target, least)
        )
    elif target <= least * (1 + tol.tol_boundary):
        beta = 0.0
    else:
        lower = lambda beta: _lower_norm(family, k, beta)  # noqa: E731
        lo, hi, value = _expand_bracket(lower, target, family.b, tol)
        if value < target:
            return Rejected("No finite family parameter reaches M_%d" % k)
        beta = brentq(
            lambda beta: lower(beta) - target,
            lo,
            hi,
            xtol=tol.tol_root * 1e-3 * hi,
            rtol=tol.tol_root,
            maxiter=tol.max_iter,
        )
    minimum = _lower_norm(family, 0, beta)
    if M[0] < minimum * (1 - tol.tol_boundary):
        return Rejected("M_0 = %.17g is below %.17g" % (M[0], minimum))
    return Accepted(family.state(beta, max(0.0, M[0] - minimum)))


class ComparisonReport(
    namedtuple(
        "ComparisonReport",
        "max_violation argmax hypothesis_margins tolerance grid levels_checked "
        "passed proven",
    )
):
    """Outcome of a numeric comparison check.

    - `max_violation`: largest ``|f'(ξ)| - min_η |ψ'(η)|``, floored at 0.
    - `argmax`: the ``ξ`` where it happens (None if nothing was checked).
    - `hypothesis_margins`: ``M_s(ψ) - M_s(f)`` per checked order.
    - `tolerance`: the absolute slack ``tol_cmp * ‖ψ'‖``.
    - `levels_checked`: number of ``(ξ, η)`` pairs compared.
    - `proven`: False when the comparison theorem is only conjectured.

    """

    __slots__ = ()

    def as_dict(self):
        result = dict(self._asdict())
        result["hypothesis_margins"] = {
            str(order): value for order, value in self.hypothesis_margins.items()
        }
        return result


def _dominated(f, psi_norms, orders, tol):
    norms = derivative_norms(f, orders)
    margins = {s: psi_norms[s] - norms[s] for s in orders}
    for s in orders:
        if norms[s] > psi_norms[s] * (1 + tol.tol_cmp):
            raise HypothesisViolated(
                "M_%d(f) = %.17g exceeds M_%d(psi) = %.17g"
                % (s, norms[s], s, psi_norms[s])
            )
    return margins


def _compare(f, psi, grid):
    """Worst ``|f'(ξ)| - min |ψ'(η)|`` over a grid of ``ξ``."""
    period = f.period
    xi = (np.arange(int(grid)) + 0.5) * period / int(grid)
    values = np.atleast_1d(f(xi))
    slopes = np.abs(np.atleast_1d(f.derivative()(xi)))
    dpsi = psi.derivative()
    worst, where, checked = -np.inf, None, 0
    for x, y, slope in zip(xi, values, slopes):
        etas = psi.level_roots(y)
        if etas.size == 0:
            logger.debug("No level %.17g of psi at xi=%r", y, x)
            continue
        checked += etas.size
        gap = slope - np.min(np.abs(dpsi(etas)))
        if gap > worst:
            worst, where = float(gap), float(x)
    return max(0.0, worst), where, checked


def _report(f, psi, psi_norms, orders, grid, proven, tol):
    margins = _dominated(f, psi_norms, orders, tol)
    violation, where, checked = _compare(f, psi, grid)
    tolerance = tol.tol_cmp * psi.derivative().sup_norm()
    passed = bool(violation <= tolerance)
    if not passed:
        if proven:
            logger.error("Comparison violated by %.3g at xi=%r", violation, where)
        else:
            logger.warning(
                "Finding: conjectured comparison violated by %.3g at xi=%r",
                violation,
                where,
            )
    return ComparisonReport(
        violation, where, margins, tolerance, int(grid), checked, passed, proven
    )


def verify_comparison_euler(f, euler, grid=2000, tol=None):
    """Check the comparison of `f` against ``amplitude * φ_{λ,r}``.

    `f` is a `~xotl.kolmogorov.piecewise.PeriodicPiecewisePoly`:class: or a
    `~xotl.kolmogorov.norms.Sinusoid`:class:.

    :raises HypothesisViolated: unless ``M_0(f) <= M_0(ψ)`` and ``M_r(f) <=
       M_r(ψ)``.

    """
    tol = tol or config.current()
    r = euler.r
    psi = build_euler(euler, tol=tol)
    psi_norms = dict(norm_vector(euler, [0, r]))
    return _report(f, psi, psi_norms, [0, r], grid, True, tol)


def verify_comparison_rodov(f, kk, psi, grid=2000, tol=None):
    """Check the comparison of `f` against the Rodov spline `psi`.

    The hypotheses are ``M_s(f) <= M_s(ψ)`` for ``s = 0`` and every upper
    order of `kk`.  The theorem is proven for ``(0, k, r-2, r)``; the report
    of other kinds has ``proven=False`` and any violation is logged as a
    finding.

    :raises ValueError: unless `psi` is a member of the family of `kk` (see
       `~xotl.kolmogorov.splines.OrderVector.admits`:meth:).
    :raises HypothesisViolated: if a hypothesis fails.

    """
    tol = tol or config.current()
    kk = kk if isinstance(kk, OrderVector) else OrderVector(kk)
    if psi.s != kk.r:
        raise ValueError("psi must have order r = %d, got %d" % (kk.r, psi.s))
    if not kk.admits(psi):
        raise ValueError("%r is not in the %s family of %s" % (psi, kk.kind, kk))
    orders = [0] + list(kk.upper)
    psi_norms = dict(norm_vector(psi, orders))
    spline = build_rodov(psi, tol=tol)
    return _report(f, spline, psi_norms, orders, grid, kk.proven, tol)
