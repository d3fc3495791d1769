"""Class number as an alternating sum over the powers of a generator rho = a + b*theta.

The coordinates x(m), y(m) of rho^m satisfy a two-term linear recurrence and are the
Taylor coefficients of two rational functions with denominator C z^2 - D z + 1.  Each
rho^m picks out a fibre of t Shintani points; rescaled to odd integers in (-tp, tp) they
are fed to the binary form Q(Y1, Y2) = Tr(eps) Y1^2 + 4 Y1 Y2 + Tr(eps) Y2^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ShintaniError
from .field import FieldContext, Rational
from .residue import Generator
from .shintani import coset_reps_from_xy


@dataclass(frozen=True)
class RecurrenceParams:
    a: int
    b: int
    C: int
    D: int
    T: int
    N: int


def cd_constants(field: FieldContext, rho: Generator | tuple[int, int]) -> RecurrenceParams:
    a, b = (rho.a, rho.b) if isinstance(rho, Generator) else rho
    T, N = field.trace_theta, field.norm_theta
    return RecurrenceParams(a, b, a * a + a * b * T + N * b * b, 2 * a + b * T, T, N)


def xy_sequences(params: RecurrenceParams, count: int) -> tuple[list[int], list[int]]:
    """x(1..count), y(1..count) from x(m+1) = a x - N b y, y(m+1) = b x + (a + T b) y."""
    if count < 1:
        raise ValueError("count must be >= 1")
    a, b, T, N = params.a, params.b, params.T, params.N
    xs, ys = [a], [b]
    for _ in range(count - 1):
        x, y = xs[-1], ys[-1]
        xs.append(a * x - N * b * y)
        ys.append(b * x + (a + T * b) * y)
    return xs, ys


def _series_divide(num: list[int], den: list[int], count: int) -> list[int]:
    # den[0] == 1, so the quotient has integer coefficients
    out = []
    for n in range(count + 1):
        c = num[n] if n < len(num) else 0
        for k in range(1, min(n, len(den) - 1) + 1):
            c -= den[k] * out[n - k]
        out.append(c)
    return out


def series_coeffs_oracle(params: RecurrenceParams, count: int) -> tuple[list[int], list[int]]:
    """Coefficients of z^1..z^count in (az - Cz^2)/(Cz^2 - Dz + 1) and bz/(Cz^2 - Dz + 1)."""
    if count < 1:
        raise ValueError("count must be >= 1")
    den = [1, -params.D, params.C]
    X = _series_divide([0, params.a, -params.C], den, count)
    Y = _series_divide([0, params.b], den, count)
    return X[1:], Y[1:]


def q_form_eval(field: FieldContext, Y1: Rational, Y2: Rational) -> Rational:
    tr = field.trace_eps
    return tr * Y1 * Y1 + 4 * Y1 * Y2 + tr * Y2 * Y2


def residue_sequence(params: RecurrenceParams, p: int) -> list[tuple[int, int]]:
    """(x(m) mod p, y(m) mod p) for m = 1..p^2-1, running the recurrence mod p."""
    a, b, T, N = params.a, params.b, params.T, params.N
    x, y = a % p, b % p
    out = [(x, y)]
    for _ in range(p * p - 2):
        x, y = (a * x - N * b * y) % p, (b * x + (a + T * b) * y) % p
        out.append((x, y))
    return out


def signed_summands(field: FieldContext, p: int, params: RecurrenceParams) -> list[int]:
    """(-1)^m Q(x_i(m), y_i(m)) in m-major, i-minor order."""
    t = field.t
    out = []
    for m, (x, y) in enumerate(residue_sequence(params, p), start=1):
        sign = -1 if m % 2 else 1
        for X, Y in coset_reps_from_xy(field, p, m, x, y).scaled(t, p):
            out.append(sign * q_form_eval(field, X, Y))
    return out


def class_number_thm1(field: FieldContext, p: int, rho: Generator | tuple[int, int]) -> int:
    params = cd_constants(field, rho)
    total = sum(signed_summands(field, p, params))
    t = field.t
    denom = 16 * t * t * p * p
    h = Fraction(total, denom)
    if h.denominator != 1 or h <= 0:
        raise ShintaniError("NON_INTEGRAL_RESULT", f"sum/{denom} = {h} for d={field.d}, p={p}")
    return int(h)
