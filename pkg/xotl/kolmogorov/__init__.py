#!/usr/bin/env python
# -*- coding: utf-8 -*-
# ---------------------------------------------------------------------
# Copyright (c) Merchise Autrement [~º/~] and Contributors
# All rights reserved.
#
# This is free software; you can do what the LICENCE file allows you to.
#
"""Extremal splines of the Kolmogorov problem.

``xotl.kolmogorov`` builds Euler perfect splines and Rodov splines as exact
periodic piecewise polynomials, computes the uniform norms of their
derivatives, decides whether a vector of derivative norms is realizable by a
single function, and computes the moduli of continuity that give sharp
multi-norm inequalities of Kolmogorov type.

The modules are layered bottom-up:

- `xotl.kolmogorov.piecewise`:mod: -- the exact arithmetic engine.
- `xotl.kolmogorov.splines`:mod: -- Euler and Rodov splines and the fitted
  one-parametric families.
- `xotl.kolmogorov.norms`:mod: -- norm vectors, Favard and Kolmogorov
  constants.
- `xotl.kolmogorov.problem`:mod: -- admissibility and comparison theorems.
- `xotl.kolmogorov.modulus`:mod: -- moduli of continuity and sharp constants.
- `xotl.kolmogorov.cli`:mod: -- the ``kolmo`` command line.

"""

from .release import VERSION as __version__  # noqa
