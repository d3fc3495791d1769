from fractions import Fraction as Fr

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shintani_classnum import QuadRat, ShintaniError, cycle_decompose, eps_expand, period_length_of_inv_p
from shintani_classnum.expansion import EpsExpansion, expansion_value_check
from shintani_classnum.field import exact_floor

from conftest import field_for


def test_inverse_seven(d3):
    exp = eps_expand(d3, QuadRat(Fr(1, 7)))
    assert exp.integer_digits == (0,)
    assert exp.fractional_preperiod == (0, 1)
    assert exp.period == (3, 2, 2, 0, 2, 2, 3, 0)
    assert exp.render() == "0.01(32202230)"


def test_inverse_nineteen(d3):
    assert eps_expand(d3, QuadRat(Fr(1, 19))).render() == "0.002(22231)"


def test_one_and_unit_square(d3):
    one = eps_expand(d3, QuadRat(1))
    assert one.integer_digits == (1,) and one.period == () and one.render() == "1"
    sq = eps_expand(d3, QuadRat(7, 4))
    assert sq.integer_digits == (1, 0, 0) and sq.render() == "100"


@pytest.mark.parametrize("p,ell", [(7, 8), (19, 5), (31, 32), (43, 11), (67, 34), (79, 80)])
def test_period_lengths_d3(d3, p, ell):
    assert period_length_of_inv_p(d3, p) == ell


@pytest.mark.parametrize("d", [2, 3, 5, 6, 7])
def test_period_equals_order_up_to_100(d):
    from shintani_classnum import eligibility

    field = field_for(d)
    for p in range(7, 100):
        if eligibility(field, p).eligible:
            period_length_of_inv_p(field, p)  # raises on mismatch


def test_rejects_non_positive(d3):
    with pytest.raises(ShintaniError) as err:
        eps_expand(d3, QuadRat(2, -2))  # 2 - 2 sqrt 3 < 0
    assert err.value.code == "NOT_POSITIVE"


def test_max_digits(d3):
    with pytest.raises(ShintaniError) as err:
        eps_expand(d3, QuadRat(Fr(1, 79)), max_digits=10)
    assert err.value.code == "MAX_DIGITS_EXCEEDED"


def test_render_wide_digits():
    exp = EpsExpansion((0,), (1,), (14, 2))
    assert exp.render() == "0.1,(14,2)"


alphas = st.tuples(st.integers(0, 40), st.integers(0, 40), st.sampled_from([1, 2, 3, 7, 11, 19]))


@given(alphas, st.sampled_from([2, 3, 5, 7, 13]))
@settings(max_examples=80, deadline=None)
def test_state_identity_and_digit_bound(abn, d):
    a, b, n = abn
    field = field_for(d)
    alpha = QuadRat(Fr(a, n), Fr(b, n))
    if field.sign(alpha) <= 0:
        return
    exp = eps_expand(field, alpha)
    top = field.trace_eps - 1
    digits = exp.integer_digits + exp.fractional_preperiod + exp.period
    assert all(0 <= x <= top for x in digits)
    assert exp.integer_digits == (0,) or exp.integer_digits[0] > 0
    horizon = len(exp.fractional_preperiod) + 2 * len(exp.period) + 2
    for k in range(horizon):
        s = expansion_value_check(field, alpha, exp, k)
        assert field.sign(s) >= 0 and exact_floor(field, s) == 0


def _rotations(word):
    return {word[i:] + word[:i] for i in range(len(word))}


@pytest.mark.parametrize("d,p", [(3, 7), (3, 19), (2, 11), (5, 7), (13, 7)])
def test_periods_rotate_along_cycles(d, p):
    field = field_for(d)
    cycles, _ = cycle_decompose(field, p)
    for c in cycles:
        words = [eps_expand(field, q.as_element(field)).period for q in c.points]
        base = _rotations(words[0])
        assert all(w in base for w in words)
        assert all(len(w) == c.length for w in words)
