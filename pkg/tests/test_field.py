from fractions import Fraction
from math import isqrt

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shintani_classnum import QuadInt, QuadRat, ShintaniError, eligibility, exact_floor, frac_part, make_field, verify_h1
from shintani_classnum.field import HALF_OPEN_LEFT, HALF_OPEN_RIGHT, check_pair, floor_surd, fundamental_unit, sign_surd

from conftest import field_for

SMALL_D = (2, 3, 5, 6, 7, 10, 11, 13, 15)


def brute_unit(d: int, bound: int = 200) -> tuple[int, int]:
    """Smallest totally positive unit > 1 by direct search over u + v*sqrt(d) (or halves)."""
    best = None
    half = d % 4 == 1
    for v in range(1, bound):
        for sign in (1, -1):
            # u^2 - d v^2 = 4*sign (halves) or sign
            k = 4 if half else 1
            u2 = d * v * v + k * sign
            u = isqrt(u2) if u2 > 0 else -1
            if u > 0 and u * u == u2:
                cand = (u, v, k, sign)
                if best is None:
                    best = cand
        if best:
            break
    u, v, k, sign = best
    if sign == -1:  # square it
        if k == 1:
            u, v = u * u + d * v * v, 2 * u * v
        else:
            u, v = (u * u + d * v * v) // 2, u * v
    # convert to basis {1, theta}
    if k == 1:
        return u, v
    return (u - v) // 2, v


@pytest.mark.parametrize("d", [2, 3, 5, 6, 7, 10, 11, 13, 14, 15])
def test_fundamental_unit_matches_brute_force(d):
    field = make_field(d, verify=False)
    assert (field.eps.a, field.eps.b) == brute_unit(d)
    assert field.norm(field.eps) == 1
    assert field.sign(field.eps) > 0


@pytest.mark.parametrize(
    "d,eps,tr", [(2, (3, 2), 6), (3, (2, 1), 4), (5, (1, 1), 3), (6, (5, 2), 10), (7, (8, 3), 16), (13, (4, 3), 11)]
)
def test_known_units(d, eps, tr):
    field = make_field(d)
    assert (field.eps.a, field.eps.b) == eps
    assert field.trace_eps == tr


def test_theta_data():
    f3, f5 = make_field(3), make_field(5)
    assert (f3.trace_theta, f3.norm_theta) == (0, -3)
    assert (f5.trace_theta, f5.norm_theta) == (1, -1)
    assert f3.discriminant == 12 and f5.discriminant == 5


def reduced_form_count(D: int) -> int:
    """Narrow class number: cycles of reduced indefinite forms of discriminant D under rho."""
    r = isqrt(D)

    def reduced(a, b):
        return 0 < b <= r and D < (2 * abs(a) + b) ** 2 and (2 * abs(a) - b <= 0 or (2 * abs(a) - b) ** 2 < D)

    forms = {
        (a, b, (b * b - D) // (4 * a))
        for a in range(-r, r + 1)
        if a
        for b in range(1, r + 1)
        if (b * b - D) % (4 * a) == 0 and reduced(a, b)
    }
    seen, cycles = set(), 0
    for f in sorted(forms):
        if f in seen:
            continue
        cycles += 1
        while f not in seen:
            seen.add(f)
            a, b, c = f
            k = 2 * abs(c)
            b2 = r - (r + b) % k
            f = (c, b2, (b2 * b2 - D) // (4 * c))
            assert f in forms
    return cycles


@pytest.mark.parametrize("d", SMALL_D)
def test_verify_h1_against_form_cycles(d):
    field = make_field(d, verify=False)
    D = field.discriminant
    h_plus = reduced_form_count(D)
    neg_unit = field.eps_fund != field.eps
    h = h_plus if neg_unit else h_plus // 2
    assert verify_h1(field) == (h == 1)


@pytest.mark.parametrize("d,expected", [(10, False), (15, False), (34, False), (79, False), (94, True), (163, True)])
def test_verify_h1_known(d, expected):
    assert verify_h1(make_field(d, verify=False)) is expected


def test_verify_h1_search_cap():
    with pytest.raises(ShintaniError) as err:
        verify_h1(make_field(199, verify=False))
    assert err.value.code == "SEARCH_EXHAUSTED"


@pytest.mark.parametrize("d,code", [(1, "D_TOO_SMALL"), (4, "NOT_SQUAREFREE"), (12, "NOT_SQUAREFREE")])
def test_make_field_errors(d, code):
    with pytest.raises(ShintaniError) as err:
        make_field(d)
    assert err.value.code == code


@pytest.mark.parametrize(
    "d,p,failures",
    [
        (3, 7, ()),
        (3, 5, ("P_LT_7", "P_NOT_3_MOD_4")),
        (3, 11, ("D_NOT_INERT",)),
        (3, 15, ("NOT_PRIME",)),
        (3, 9, ("NOT_PRIME", "P_NOT_3_MOD_4")),
        (10, 7, ("HF_NOT_ONE",)),
    ],
)
def test_eligibility(d, p, failures):
    field, report = check_pair(d, p)
    assert set(report.failures) == set(failures)
    assert report.eligible == (not failures)


def test_check_pair_not_squarefree():
    field, report = check_pair(8, 7)
    assert field is None and "D_NOT_SQUAREFREE" in report.failures


surd = st.tuples(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6), st.integers(1, 10**4))


@given(surd, st.sampled_from([2, 3, 5, 6, 7, 11, 13]))
def test_floor_surd_bounds(pqr, d):
    P, Q, R = pqr
    f = floor_surd(P, Q, R, d)
    # f <= (P + Q sqrt d)/R < f + 1, checked without floats
    assert sign_surd(P - f * R, Q, d) >= 0
    assert sign_surd(P - (f + 1) * R, Q, d) < 0


rat = st.fractions(min_value=-50, max_value=50, max_denominator=60)


@given(rat, rat, st.sampled_from([2, 3, 5, 7]))
def test_frac_part_idempotent_and_ranged(u, v, d):
    field = field_for(d)
    x = QuadRat(u, v)
    for interval in (HALF_OPEN_LEFT, HALF_OPEN_RIGHT):
        f = frac_part(field, x, interval)
        assert frac_part(field, f, interval) == f
        lo = field.sign(f)
        hi = field.sign(f - 1)
        if interval == HALF_OPEN_LEFT:
            assert lo >= 0 and hi < 0
        else:
            assert lo > 0 and hi <= 0
        diff = x - f
        assert diff.v == 0 and diff.u.denominator == 1


@given(rat, rat, st.sampled_from([2, 3, 5, 13]))
def test_exact_floor_integer_shift(u, v, d):
    field = field_for(d)
    x = QuadRat(u, v)
    n = exact_floor(field, x)
    assert exact_floor(field, x + 7) == n + 7


@given(st.integers(-200, 200), st.integers(-200, 200), st.integers(-200, 200), st.integers(-200, 200))
@settings(max_examples=60)
def test_norm_multiplicative(a, b, c, e):
    field = field_for(5)
    x, y = QuadInt(a, b), QuadInt(c, e)
    assert field.norm(field.mul(x, y)) == field.norm(x) * field.norm(y)
    assert field.trace(x) == 2 * a + b * field.trace_theta


def test_fundamental_unit_may_have_norm_minus_one():
    assert fundamental_unit(2, "sqrt", 0, -2) == QuadInt(1, 1)
    field = make_field(2)
    assert field.eps_fund == QuadInt(1, 1) and field.eps == QuadInt(3, 2)
