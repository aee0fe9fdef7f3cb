#!/usr/bin/env python
# -*- coding: utf-8 -*-
# ---------------------------------------------------------------------
# Copyright (c) Merchise Autrement [~º/~] and Contributors
# All rights reserved.
#
# This is free software; you can do what the LICENCE file allows you to.
#

import math
import unittest

import numpy as np
import pytest
from hypothesis import given, settings, strategies as s
from hypothesis.strategies import composite

from xotl.kolmogorov.config import ENVIRON_KEY, tolerances
from xotl.kolmogorov.norms import norm_vector, rodov_norm, rodov_norms
from xotl.kolmogorov.splines import (
    ADJACENT,
    FULL,
    GAPPED,
    TRIPLE,
    EulerParams,
    FamilyState,
    InfeasibleNorms,
    InvalidOrderVector,
    InvalidParams,
    OrderVector,
    RodovParams,
    build_euler,
    build_rodov,
    fit_family,
    rodov_chain,
)


@composite
def widths(draw):
    a = draw(s.one_of(s.just(0.0), s.floats(min_value=0.01, max_value=5)))
    b = draw(s.floats(min_value=0.1, max_value=5))
    c = draw(s.one_of(s.just(0.0), s.floats(min_value=0.01, max_value=5)))
    return a, b, c


class TestParams(unittest.TestCase):
    def test_rodov_params(self):
        params = RodovParams(0.7, 1.3, 1.0, s=2)
        self.assertEqual(params.alpha, 1.0)
        self.assertAlmostEqual(params.period, 12.0)
        self.assertAlmostEqual(params.half_period, 3.0)
        self.assertEqual(params.with_order(3).s, 3)
        self.assertAlmostEqual(params.scaled(2).b, 2.6)

    def test_invalid_rodov_params(self):
        for bad in ((1, 0, 1), (-1, 1, 1), (1, 1, -1), (1, math.nan, 1)):
            with self.assertRaises(InvalidParams):
                RodovParams(*bad)
        with self.assertRaises(InvalidParams):
            RodovParams(1, 1, 1, s=-1)
        with self.assertRaises(InvalidParams):
            RodovParams(1, 1, 1, s=1.5)
        with self.assertRaises(InvalidParams):
            RodovParams(1, 1, 1, alpha=0)
        with self.assertRaises(InvalidParams):
            RodovParams("x", 1, 1)

    def test_euler_params(self):
        params = EulerParams(2.0, 3, amplitude=5)
        self.assertAlmostEqual(params.period, math.pi)
        rodov = params.as_rodov()
        self.assertEqual((rodov.a, rodov.c, rodov.s, rodov.alpha), (0, 0, 3, 5))
        self.assertAlmostEqual(rodov.b, math.pi / 4)
        with self.assertRaises(InvalidParams):
            EulerParams(0, 1)
        with self.assertRaises(InvalidParams):
            EulerParams(1, 0)


def test_build_rodov_figure_values():
    psi1 = build_rodov(RodovParams(0.7, 1.3, 1.0, s=1))
    assert psi1(0.0) == pytest.approx(-1.3, abs=1e-12)
    psi2 = build_rodov(RodovParams(0.7, 1.3, 1.0, s=2))
    assert psi2.sup_norm() == pytest.approx(0.7 * 1.3 + 1.3 ** 2 / 2, rel=1e-12)


def test_step_with_plain_ramp_is_sign_of_sine():
    psi0 = build_rodov(RodovParams(0.0, 1.0, 0.0, s=0))
    assert psi0.period == pytest.approx(4.0)
    t = (np.arange(1000) + 0.5) * 4 / 1000
    assert np.array_equal(psi0(t), np.sign(np.sin(np.pi * t / 2)))


def second_primitive(a, b, c, t):
    """Closed form of ψ_2(a, b, c) extended by its symmetries."""
    h = a + b + c
    t = np.mod(t, 4 * h)
    odd = t > 2 * h
    t = np.where(odd, 4 * h - t, t)
    t = np.where(t > h, 2 * h - t, t)
    value = np.where(
        t <= a,
        -b * t,
        np.where(t <= a + b, (t - a - b) ** 2 / 2 - a * b, -a * b) - b * b / 2,
    )
    return np.where(odd, -value, value)


@pytest.mark.parametrize("abc", [(1.0, 2.0, 3.0), (0.7, 1.3, 1.0), (0.0, 1.0, 0.5)])
def test_second_primitive_closed_form(abc):
    a, b, c = abc
    psi2 = build_rodov(RodovParams(a, b, c, s=2))
    t = np.random.RandomState(2).uniform(0, psi2.period, 1000)
    assert np.allclose(psi2(t), second_primitive(a, b, c, t), atol=1e-11)


@given(widths())
@settings(deadline=None, max_examples=50)
def test_primitive_symmetries(abc):
    a, b, c = abc
    h = a + b + c
    psi1 = build_rodov(RodovParams(a, b, c, s=1))
    psi2 = build_rodov(RodovParams(a, b, c, s=2))
    x = np.linspace(0, h, 101)
    atol = 1e-10 * max(1.0, psi2.sup_norm())
    assert np.allclose(psi1(h + x), -psi1(h - x), atol=atol)
    assert np.allclose(psi1(2 * h + x), psi1(2 * h - x), atol=atol)
    assert np.allclose(psi2(h + x), psi2(h - x), atol=atol)
    assert np.allclose(psi2(2 * h + x), -psi2(2 * h - x), atol=atol)


def test_chains_follow_the_current_tolerances(monkeypatch):
    monkeypatch.delenv(ENVIRON_KEY, raising=False)
    default = rodov_chain(0.5, 1.0, 0.25, 2)
    assert rodov_chain(0.5, 1.0, 0.25, 2, tol=tolerances()) is default
    monkeypatch.setenv(ENVIRON_KEY, "tol_mean=1e-8")
    other = rodov_chain(0.5, 1.0, 0.25, 2)
    assert other is not default
    assert other[2].sup_norm() == pytest.approx(default[2].sup_norm(), rel=1e-14)


def test_amplitude_scales_values():
    plain = build_rodov(RodovParams(0.5, 1.0, 0.25, s=3))
    scaled = build_rodov(RodovParams(0.5, 1.0, 0.25, s=3, alpha=2.5))
    t = np.linspace(0, plain.period, 97)
    assert np.allclose(scaled(t), 2.5 * plain(t), rtol=1e-14, atol=1e-14)


@pytest.mark.parametrize(
    "r, expected",
    [(1, math.pi / 2), (2, math.pi ** 2 / 8), (3, math.pi ** 3 / 24)],
)
def test_euler_spline_norms_are_favard_constants(r, expected):
    assert build_euler(EulerParams(1.0, r)).sup_norm() == pytest.approx(
        expected, rel=1e-12
    )


def test_euler_spline_is_sine_like():
    phi = build_euler(EulerParams(1.0, 1))
    assert phi.period == pytest.approx(2 * math.pi)
    # φ_1 is odd about the zeros of sin, with extremes at the zeros
    assert phi(math.pi / 2) == pytest.approx(0, abs=1e-12)
    assert abs(phi(0.0)) == pytest.approx(math.pi / 2)
    assert phi(0.0) == pytest.approx(-phi(math.pi))


def test_dilation_of_euler_splines():
    # φ_{λ,r}(t) = λ^{-r} φ_r(λ t)
    slow = build_euler(EulerParams(1.0, 3))
    fast = build_euler(EulerParams(2.0, 3))
    t = np.linspace(0, fast.period, 101)
    assert np.allclose(fast(t), slow(2 * t) / 8, atol=1e-12)


@given(widths())
@settings(deadline=None, max_examples=100)
def test_closed_form_norms(abc):
    a, b, c = abc
    exact = rodov_norms(a, b, c, [0, 1, 2, 3], exact=True)
    assert exact[0] == 1.0
    assert exact[1] == pytest.approx(b, rel=1e-10)
    assert exact[2] == pytest.approx(a * b + b * b / 2, rel=1e-10)
    assert exact[3] == pytest.approx(rodov_norm(a, b, c, 3), rel=1e-10)
    flat = rodov_norms(a, b, 0.0, [3], exact=True)[3]
    assert flat == pytest.approx(a * a * b / 2 + a * b * b + b ** 3 / 3, rel=1e-10)


def test_closed_forms_are_only_low_orders():
    assert rodov_norm(1, 1, 1, 4) is None
    assert rodov_norms(1, 1, 1, [4])[4] > 0


class TestOrderVector(unittest.TestCase):
    def test_kinds(self):
        self.assertEqual(OrderVector((0, 1, 2)).kind, TRIPLE)
        self.assertEqual(OrderVector((0, 1, 2, 3)).kind, ADJACENT)
        self.assertEqual(OrderVector((0, 1, 2, 4)).kind, GAPPED)
        self.assertEqual(OrderVector((0, 1, 2, 3, 4)).kind, FULL)

    def test_parts(self):
        kk = OrderVector.parse("0,1,3,4")
        self.assertEqual((kk.k, kk.r, kk.upper), (1, 4, (3, 4)))
        self.assertEqual(kk.free, "a")
        self.assertFalse(kk.proven)
        self.assertTrue(OrderVector.parse("0,2,3,5").proven)
        self.assertEqual(OrderVector((0, 1, 5)).upper, (5,))
        self.assertEqual(str(kk), "0,1,3,4")
        self.assertEqual(kk, (0, 1, 3, 4))
        self.assertEqual(kk, OrderVector([0, 1, 3, 4]))
        self.assertEqual(len({kk, OrderVector(kk)}), 1)

    def test_invalid(self):
        for bad in ((1, 2, 3), (0, 2, 1), (0, 1), (0, 1, 2, 5), (0, 1, 3, 5, 6)):
            with self.assertRaises(InvalidOrderVector):
                OrderVector(bad)
        with self.assertRaises(InvalidOrderVector):
            OrderVector.parse("0,one,2")


@composite
def members(draw, kinds=(ADJACENT, GAPPED, FULL)):
    """A supported order vector and a member of its extremal family."""
    kind = draw(s.sampled_from(kinds))
    if kind == ADJACENT:
        r = draw(s.integers(3, 5))
        k = draw(s.integers(1, r - 2))
        kk = OrderVector((0, k, r - 1, r))
    elif kind == GAPPED:
        r = draw(s.integers(4, 5))
        k = draw(s.integers(1, r - 3))
        kk = OrderVector((0, k, r - 2, r))
    else:
        r = draw(s.integers(4, 5))
        k = draw(s.integers(1, r - 3))
        kk = OrderVector((0, k, r - 2, r - 1, r))
    b = draw(s.floats(0.2, 3))
    alpha = draw(s.floats(0.2, 3))
    a = 0.0 if kind == GAPPED else draw(s.floats(0, 3))
    c = 0.0 if kind == ADJACENT else draw(s.floats(0, 3))
    return kk, RodovParams(a, b, c, r, alpha)


@given(members())
@settings(deadline=None, max_examples=60)
def test_fit_family_recovers_the_member(member):
    kk, params = member
    upper = norm_vector(params, kk.upper)
    family = fit_family(kk, upper)
    beta = params.a if kk.free == "a" else params.c
    found = family(beta)
    assert found.b == pytest.approx(params.b, rel=1e-9)
    assert found.alpha == pytest.approx(params.alpha, rel=1e-12)
    assert found.a == pytest.approx(params.a, rel=1e-9, abs=1e-9)
    assert found.c == pytest.approx(params.c, rel=1e-9, abs=1e-9)
    assert found.s == kk.r


def test_fit_family_rejects_landau_violations():
    kk = OrderVector((0, 1, 2, 3, 4))
    # M_3**2 = 9 > 2 * M_2 * M_4 = 2
    with pytest.raises(InfeasibleNorms):
        fit_family(kk, {2: 1.0, 3: 3.0, 4: 1.0})
    with pytest.raises(InfeasibleNorms):
        fit_family(kk, {2: 1.0, 3: 1.0})
    with pytest.raises(InfeasibleNorms):
        fit_family(OrderVector((0, 1, 2, 3)), {2: -1.0, 3: 1.0})
    with pytest.raises(InvalidOrderVector):
        fit_family(OrderVector((0, 1, 2)), {2: 1.0})


def test_fit_family_on_the_landau_boundary():
    kk = OrderVector((0, 1, 2, 3, 4))
    family = fit_family(kk, {2: 0.5, 3: 1.0, 4: 1.0})
    assert family.a == 0.0
    assert family.b == 1.0


@pytest.mark.parametrize(
    "kk", [(0, 1, 2, 3), (0, 1, 3, 4), (0, 1, 2, 4), (0, 2, 3, 5), (0, 1, 2, 3, 4)]
)
@given(s.floats(0.2, 3), s.floats(0.2, 3), s.floats(0, 1))
@settings(deadline=None, max_examples=20)
def test_lower_norms_increase_with_the_family_parameter(kk, alpha, b, a):
    kk = OrderVector(kk)
    upper = {kk.r: alpha, kk.r - 1: alpha * b, kk.r - 2: alpha * (a * b + b * b / 2)}
    family = fit_family(kk, upper)
    betas = np.concatenate([[0.0], np.geomspace(1e-3, 1e4, 20) * family.b])
    for order in range(min(kk.upper)):
        norms = [norm_vector(family(beta), [order])[order] for beta in betas]
        assert all(x < y for x, y in zip(norms, norms[1:]))
        assert norms[-1] > 1e3 * norms[0]


def test_family_state():
    params = RodovParams(0.5, 1.0, 0.0, 3, 2.0)
    state = FamilyState(params, 0.25, "a")
    assert state.beta == 0.5
    f = state.realize()
    assert f.sup_norm() == pytest.approx(
        norm_vector(params, [0])[0] + 0.25, rel=1e-12
    )
    assert state.as_dict()["params"]["alpha"] == 2.0
    with pytest.raises(InvalidParams):
        FamilyState(params, -1.0, "a")
    with pytest.raises(InvalidParams):
        FamilyState(params, 0.0, "b")
