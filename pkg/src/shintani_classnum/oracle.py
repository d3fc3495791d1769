"""Brute-force class number: Shintani's Bernoulli-polynomial sum over every point of R.

Kept deliberately naive and independent of the generator, the recurrence, the cycle
machinery and the quadratic form used by the two theorem routes.  It walks R on its own
and evaluates the character through the norm: alpha in O_F, prime to p, is a square in
F_{p^2} exactly when N(alpha) is a square mod p.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .errors import ShintaniError
from .field import FieldContext, QuadInt, Rational, legendre

_ONE = Fraction(1)


def bernoulli_eval(l: int, x: Rational) -> Fraction:
    x = Fraction(x)
    if l == 0:
        return _ONE
    if l == 1:
        return x - Fraction(1, 2)
    if l == 2:
        return x * x - x + Fraction(1, 6)
    raise ShintaniError("L_OUT_OF_RANGE", f"l={l}")


def bernoulli_weight(field: FieldContext, r1: Rational, r2: Rational) -> Fraction:
    """sum over l1 + l2 = 2 of B_l1(r1)/l1! * B_l2(r2)/l2! * Tr(eps^(l2 - 1)).

    The trace is of the power eps^(l2 - 1), giving weights Tr(eps), 2, Tr(eps); reading
    it as Tr(eps)^(l2 - 1) gives non-integral results.
    """
    total = Fraction(0)
    for l1 in range(3):
        l2 = 2 - l1
        weight = field.trace(_eps_power(field, l2 - 1))
        total += bernoulli_eval(l1, r1) / factorial(l1) * bernoulli_eval(l2, r2) / factorial(l2) * weight
    return total


def _eps_power(field: FieldContext, k: int) -> QuadInt:
    base = field.eps if k >= 0 else field.conj(field.eps)
    out = QuadInt(1, 0)
    for _ in range(abs(k)):
        out = field.mul(out, base)
    return out


def class_number_direct(field: FieldContext, p: int, shift: Rational = 0) -> int:
    """Half the character-weighted Bernoulli sum; ``shift`` is added to every inner sum
    (the character sums to zero, so any constant leaves the result unchanged)."""
    s, t = field.s, field.t
    tp = t * p
    total = Fraction(0)
    for A in range(1, tp + 1):
        for B in range(tp):
            if (A + s * B) % t:
                continue
            # p*(A + B eps)/(tp) = (A + sB)/t + B theta
            n = field.norm(QuadInt((A + s * B) // t, B))
            chi = legendre(n, p)
            if chi == 0:
                continue
            total += chi * (bernoulli_weight(field, Fraction(A, tp), Fraction(B, tp)) + shift)
    h = total / 2
    if h.denominator != 1 or h <= 0:
        raise ShintaniError("NON_INTEGRAL_RESULT", f"Bernoulli sum / 2 = {h} for d={field.d}, p={p}")
    return int(h)
