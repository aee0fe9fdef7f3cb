#!/usr/bin/env python
# -*- coding: utf-8 -*-
# ---------------------------------------------------------------------
# Copyright (c) Merchise Autrement [~º/~] and Contributors
# All rights reserved.
#
# This is free software; you can do what the LICENCE file allows you to.
#

import pytest

from xotl.kolmogorov.splines import FamilyState, RodovParams
from xotl.kolmogorov.verdict import Accepted, Rejected, Verdict, take


def test_verdict_variants():
    assert isinstance(Verdict(1), Accepted)
    assert isinstance(Verdict(None), Rejected)
    assert Verdict("witness")
    assert not Rejected("reason")
    assert Accepted(0)  # the variant decides, not the value


def test_no_rewrapping():
    yes = Accepted(3)
    assert Accepted(yes) is yes
    with pytest.raises(ValueError):
        Rejected(yes)
    with pytest.raises(TypeError):
        Accepted(1, 2)


def test_witness_and_reason():
    yes, no = Accepted("psi"), Rejected("too large")
    assert (yes.witness, yes.reason) == ("psi", None)
    assert (no.witness, no.reason) == (None, "too large")
    assert take(yes) == "psi"
    assert take(no) == "too large"
    assert take(5) == 5
    assert yes == Accepted("psi")
    assert yes != Rejected("psi")
    assert str(no) == "Rejected('too large')"


def test_as_dict():
    state = FamilyState(RodovParams(0.5, 1.0, 0.0, 3, 2.0), 0.25, "a")
    found = Accepted(state).as_dict()
    assert found["admissible"] is True
    assert found["witness"]["shift"] == 0.25
    assert found["witness"]["beta"] == 0.5
    assert Rejected("no").as_dict() == {"admissible": False, "reason": "no"}
