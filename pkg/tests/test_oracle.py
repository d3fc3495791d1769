from fractions import Fraction as Fr

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shintani_classnum import ShintaniError, bernoulli_eval, class_number_direct
from shintani_classnum.oracle import bernoulli_weight

from conftest import field_for


def test_bernoulli_values():
    assert bernoulli_eval(0, Fr(3, 7)) == 1
    assert bernoulli_eval(1, Fr(1, 7)) == Fr(-5, 14)
    assert bernoulli_eval(2, Fr(1, 7)) == Fr(13, 294)
    with pytest.raises(ShintaniError) as err:
        bernoulli_eval(3, 0)
    assert err.value.code == "L_OUT_OF_RANGE"


@given(st.fractions(min_value=0, max_value=1, max_denominator=200))
def test_bernoulli_reflection(x):
    assert bernoulli_eval(2, 1 - x) == bernoulli_eval(2, x)
    assert bernoulli_eval(1, 1 - x) == -bernoulli_eval(1, x)


def test_weight_uses_trace_of_powers(d3):
    # weights Tr(eps^-1) = 4, Tr(1) = 2, Tr(eps) = 4
    r1, r2 = Fr(1, 7), Fr(2, 7)
    expected = (
        4 * bernoulli_eval(2, r2) / 2
        + 2 * bernoulli_eval(1, r1) * bernoulli_eval(1, r2)
        + 4 * bernoulli_eval(2, r1) / 2
    )
    assert bernoulli_weight(d3, r1, r2) == expected


@pytest.mark.parametrize("d,p,h", [(3, 7, 2), (3, 19, 2), (3, 31, 6), (2, 11, 2), (2, 19, 6)])
def test_direct_known(d, p, h):
    assert class_number_direct(field_for(d), p) == h


@given(st.fractions(min_value=-5, max_value=5, max_denominator=30), st.sampled_from([(3, 7), (2, 11), (5, 7)]))
@settings(max_examples=15, deadline=None)
def test_shift_invariance(shift, pair):
    d, p = pair
    field = field_for(d)
    assert class_number_direct(field, p, shift) == class_number_direct(field, p)
