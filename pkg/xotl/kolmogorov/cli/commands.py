#!/usr/bin/env python
# -*- coding: utf-8 -*-
# ---------------------------------------------------------------------
# Copyright (c) Merchise Autrement [~º/~] and Contributors
# All rights reserved.
#
# This is free software; you can do what the LICENCE file allows you to.
#

"""The commands of ``kolmo``."""

import logging
import sys
from contextlib import contextmanager

from .. import config
from . import Command
from .tools import write_json, write_table

logger = logging.getLogger(__name__)


@contextmanager
def _output(path):
    if path:
        with open(path, "w", encoding="utf-8", newline="") as out:
            yield out
    else:
        yield sys.stdout


def _floats(text, what):
    try:
        return [float(x) for x in text.split(",")]
    except ValueError:
        raise ValueError("Invalid %s %r" % (what, text))


def _orders(text):
    from ..splines import OrderVector

    return OrderVector.parse(text)


def _load_spec(args):
    """The class spec from ``--spec`` or ``--config``."""
    import json
    import os

    from ..modulus import ClassSpec, InvalidSpec

    if args.config:
        text = args.config
        if os.path.exists(text):
            with open(text, encoding="utf-8") as source:
                text = source.read()
        try:
            mapping = json.loads(text)
        except ValueError as error:
            raise InvalidSpec("Invalid --config: %s" % error)
        return ClassSpec.from_mapping(mapping)
    elif args.spec:
        return ClassSpec.parse(args.spec)
    else:
        raise InvalidSpec("Either --spec or --config is required")


class Spline(Command):
    """Sample a Rodov or Euler spline over one period as CSV."""

    __order__ = 1

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument("--a", type=float, default=0.0)
        parser.add_argument("--b", type=float, default=1.0)
        parser.add_argument("--c", type=float, default=0.0)
        parser.add_argument("--s", type=int, default=0, help="primitive order")
        parser.add_argument("--alpha", type=float, default=1.0, help="amplitude")
        parser.add_argument(
            "--frequency",
            type=float,
            help="build the Euler spline of this frequency instead",
        )
        parser.add_argument("--translate", type=float, default=0.0)
        parser.add_argument("--samples", type=int, default=1000)

    def run(self, args=None):
        from ..norms import norm_vector, rodov_norms
        from ..splines import EulerParams, RodovParams, build_rodov

        args = self.get_arg_parser().parse_args(args)
        if args.frequency is not None:
            params = EulerParams(args.frequency, args.s, args.alpha).as_rodov()
        else:
            params = RodovParams(args.a, args.b, args.c, args.s, args.alpha)
        if args.samples < 1:
            raise ValueError("--samples must be positive")
        spline = build_rodov(params)
        if args.translate:
            spline = spline.translate(args.translate)
        norms = rodov_norms(params.a, params.b, params.c, range(params.s + 1))
        header = {
            "params": params.as_dict(),
            "period": params.period,
            "translate": args.translate,
            "norms": {"psi_%d" % j: value for j, value in sorted(norms.items())},
            "derivative_norms": norm_vector(params, range(params.s + 1)).as_dict(),
        }
        t, values = spline.sample(args.samples)
        with _output(args.out) as out:
            write_table(header, ["t", "value"], zip(t, values), out)
        return 0


class Constant(Command):
    """Compute Kolmogorov, Favard or Dragomir constants."""

    __order__ = 2

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument("which", choices=["kolmogorov", "favard", "dragomir"])
        parser.add_argument("--k", type=int)
        parser.add_argument("--r", type=int)
        parser.add_argument("--eta", type=float)
        parser.add_argument(
            "--oracle",
            action="store_true",
            help="also run the grid-search oracle (dragomir)",
        )

    def run(self, args=None):
        from .. import modulus, norms

        args = self.get_arg_parser().parse_args(args)
        tol = config.current()
        result = {"constant": args.which, "tolerances": tol.as_dict()}
        if args.which == "kolmogorov":
            _require(args, "k", "r")
            result.update(k=args.k, r=args.r, method="favard-extremum")
            result["value"] = norms.kolmogorov_constant(args.k, args.r, tol=tol)
        elif args.which == "favard":
            _require(args, "r")
            result.update(r=args.r, method="euler-extremum")
            result["value"] = norms.favard_norm(args.r, tol=tol)
            result["series"] = norms.favard_series(args.r, tol=tol)
        else:
            _require(args, "eta")
            eta = args.eta
            classical = eta in (0, 1)
            result.update(eta=eta, method="classical" if classical else "modulus")
            result["value"] = modulus.dragomir_constant(eta, tol=tol)
            if args.oracle and not classical:
                result["oracle"] = modulus.dragomir_grid_search(eta)
        with _output(args.out) as out:
            write_json(result, out)
        return 0


def _require(args, *names):
    missing = [name for name in names if getattr(args, name) is None]
    if missing:
        raise ValueError("Missing options: %s" % ", ".join("--" + x for x in missing))


class Admissible(Command):
    """Decide whether derivative norms are realizable by one function."""

    __order__ = 3

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument("--orders", required=True, help="e.g. 0,1,2,4")
        parser.add_argument("--values", required=True, help="the norms M_k")

    def run(self, args=None):
        from ..norms import NormVector
        from ..problem import is_admissible

        args = self.get_arg_parser().parse_args(args)
        tol = config.current()
        kk = _orders(args.orders)
        values = NormVector(kk.entries, _floats(args.values, "norms"))
        verdict = is_admissible(kk, values, tol=tol)
        result = dict(verdict.as_dict(), orders=str(kk), kind=kk.kind)
        result["values"] = values.as_dict()
        result["tolerances"] = tol.as_dict()
        with _output(args.out) as out:
            write_json(result, out)
        return 0 if verdict else 1


class Modulus(Command):
    """Compute the modulus of continuity of the k-th derivative."""

    __order__ = 4

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument("--orders", required=True, help="e.g. 0,1,2,3")
        parser.add_argument("--spec", help="e.g. dragomir:0.5 or box:3=1")
        parser.add_argument("--config", help="class spec as JSON (text or file)")
        parser.add_argument("--delta", type=float, required=True)
        parser.add_argument(
            "--measure",
            action="store_true",
            help="also measure the dilation exponent",
        )

    def run(self, args=None):
        from ..modulus import measure_dilation_exponent, modulus

        args = self.get_arg_parser().parse_args(args)
        tol = config.current()
        kk = _orders(args.orders)
        spec = _load_spec(args)
        found = modulus(kk, spec, args.delta, tol=tol)
        result = dict(found.as_dict(), orders=str(kk), spec=spec.as_dict())
        result["dilation_exponent"] = spec.dilation_exponent(kk.k)
        if args.measure:
            result["measured_exponent"] = measure_dilation_exponent(kk, spec, tol=tol)
        result["tolerances"] = tol.as_dict()
        with _output(args.out) as out:
            write_json(result, out)
        return 0


class Verify(Command):
    """Check the comparison theorem on a test function."""

    __order__ = 5

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument("check", choices=["comparison"])
        parser.add_argument("--case", choices=["euler", "rodov"], default="euler")
        parser.add_argument("--orders", help="order vector for --case rodov")
        parser.add_argument("--r", type=int, default=2, help="order (euler)")
        parser.add_argument("--frequency", type=float, default=1.0)
        parser.add_argument("--amplitude", type=float, default=1.0)
        parser.add_argument("--a", type=float, default=0.5)
        parser.add_argument("--b", type=float, default=1.0)
        parser.add_argument("--c", type=float, default=0.5)
        parser.add_argument(
            "--scale",
            type=float,
            default=1.0,
            help="the test function is the scaled reference spline",
        )
        parser.add_argument("--translate", type=float, default=0.0)
        parser.add_argument(
            "--sine",
            type=float,
            nargs=2,
            metavar=("AMPLITUDE", "FREQUENCY"),
            help="use a sinusoid as test function instead",
        )
        parser.add_argument("--grid", type=int, default=2000)

    def run(self, args=None):
        from ..norms import Sinusoid
        from ..problem import verify_comparison_euler, verify_comparison_rodov
        from ..splines import EulerParams, RodovParams, build_rodov

        args = self.get_arg_parser().parse_args(args)
        tol = config.current()
        if args.case == "euler":
            reference = EulerParams(args.frequency, args.r, args.amplitude)
            psi = build_rodov(reference.as_rodov())
        else:
            if not args.orders:
                raise ValueError("--orders is required for --case rodov")
            kk = _orders(args.orders)
            reference = RodovParams(args.a, args.b, args.c, kk.r, args.amplitude)
            psi = build_rodov(reference)
        if args.sine:
            f = Sinusoid(*args.sine)
        else:
            f = args.scale * psi
            if args.translate:
                f = f.translate(args.translate)
        if args.case == "euler":
            report = verify_comparison_euler(f, reference, grid=args.grid, tol=tol)
        else:
            report = verify_comparison_rodov(f, kk, reference, grid=args.grid, tol=tol)
        result = dict(report.as_dict(), case=args.case, reference=reference.as_dict())
        result["tolerances"] = tol.as_dict()
        with _output(args.out) as out:
            write_json(result, out)
        return 0 if report.passed else 1
