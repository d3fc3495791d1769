"""Exact arithmetic in a real quadratic field F = Q(sqrt d) and its ring of integers Z[theta].

Elements are stored on the basis {1, theta}; theta is sqrt(d) when d is 2 or 3 mod 4 and
(1 + sqrt(d))/2 when d is 1 mod 4.  Every order comparison goes through integer square
roots, so nothing here touches floating point.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import isqrt
from typing import Union

from .errors import ShintaniError

Rational = Union[int, Fraction]

SQRT = "sqrt"
HALF = "half"

HALF_OPEN_RIGHT = "(0,1]"
HALF_OPEN_LEFT = "[0,1)"

DEFAULT_MAX_CONVERGENTS = 10**6
DEFAULT_SEARCH_CAP = 10**4


@dataclass(frozen=True)
class QuadInt:
    """a + b*theta with integer coordinates."""

    a: int
    b: int

    def __str__(self) -> str:
        return f"{self.a}{'+' if self.b >= 0 else '-'}{abs(self.b)}θ"


@dataclass(frozen=True)
class QuadRat:
    """u + v*theta with rational coordinates; equality is coordinate-wise."""

    u: Fraction
    v: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "u", Fraction(self.u))
        object.__setattr__(self, "v", Fraction(self.v))

    def __add__(self, other: QuadRat | Rational) -> QuadRat:
        if isinstance(other, QuadRat):
            return QuadRat(self.u + other.u, self.v + other.v)
        return QuadRat(self.u + other, self.v)

    __radd__ = __add__

    def __sub__(self, other: QuadRat | Rational) -> QuadRat:
        if isinstance(other, QuadRat):
            return QuadRat(self.u - other.u, self.v - other.v)
        return QuadRat(self.u - other, self.v)

    def __rsub__(self, other: Rational) -> QuadRat:
        return QuadRat(other - self.u, -self.v)

    def __neg__(self) -> QuadRat:
        return QuadRat(-self.u, -self.v)

    def scale(self, c: Rational) -> QuadRat:
        return QuadRat(self.u * c, self.v * c)

    def is_rational(self) -> bool:
        return self.v == 0


def floor_surd(P: int, Q: int, R: int, d: int) -> int:
    """floor((P + Q*sqrt(d)) / R) for integers with R != 0 and d > 0 not a square."""
    if R < 0:
        P, Q, R = -P, -Q, -R
    if Q == 0:
        return P // R
    root = isqrt(Q * Q * d)
    # Q*sqrt(d) is irrational, so floor((P + y)/R) == floor((P + floor(y))/R)
    fl = root if Q > 0 else -root - 1
    return (P + fl) // R


def sign_surd(P: int, Q: int, d: int) -> int:
    """Sign of P + Q*sqrt(d) by comparing squares."""
    if Q == 0:
        return (P > 0) - (P < 0)
    if P == 0:
        return 1 if Q > 0 else -1
    if (P > 0) == (Q > 0):
        return 1 if P > 0 else -1
    # opposite signs: the larger magnitude wins; equality impossible for non-square d
    if P * P > Q * Q * d:
        return 1 if P > 0 else -1
    return 1 if Q > 0 else -1


def _is_squarefree(n: int) -> bool:
    k = 2
    while k * k <= n:
        if n % (k * k) == 0:
            return False
        k += 1
    return True


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p, via Euler's criterion."""
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


@dataclass(frozen=True)
class FieldContext:
    d: int
    theta_kind: str
    trace_theta: int
    norm_theta: int
    eps_fund: QuadInt
    eps: QuadInt
    trace_eps: int
    h_F_verified: bool = dc_field(default=False, compare=False)

    @property
    def s(self) -> int:
        return self.eps.a

    @property
    def t(self) -> int:
        return self.eps.b

    @property
    def discriminant(self) -> int:
        return self.d if self.theta_kind == HALF else 4 * self.d

    # ring operations on the {1, theta} basis, theta^2 = T*theta - N

    def mul(self, x, y):
        T, N = self.trace_theta, self.norm_theta
        a, b = _coords(x)
        c, e = _coords(y)
        u = a * c - N * b * e
        v = a * e + b * c + T * b * e
        if isinstance(x, QuadInt) and isinstance(y, QuadInt):
            return QuadInt(u, v)
        return QuadRat(u, v)

    def conj(self, x):
        # theta' = T - theta
        a, b = _coords(x)
        if isinstance(x, QuadInt):
            return QuadInt(a + b * self.trace_theta, -b)
        return QuadRat(a + b * self.trace_theta, -b)

    def norm(self, x) -> Rational:
        a, b = _coords(x)
        return a * a + self.trace_theta * a * b + self.norm_theta * b * b

    def trace(self, x) -> Rational:
        a, b = _coords(x)
        return 2 * a + self.trace_theta * b

    def inverse(self, x: QuadRat) -> QuadRat:
        n = self.norm(x)
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.conj(QuadRat(*_coords(x))).scale(Fraction(1) / n)

    def surd(self, x) -> tuple[int, int, int]:
        """Integers (P, Q, R), R > 0, with x = (P + Q*sqrt(d)) / R."""
        a, b = _coords(x)
        a, b = Fraction(a), Fraction(b)
        if self.theta_kind == HALF:
            # a + b(1 + sqrt d)/2 = (2a + b + b sqrt d)/2
            num_p, num_q, den = 2 * a + b, b, Fraction(2)
        else:
            num_p, num_q, den = a, b, Fraction(1)
        common = _lcm(num_p.denominator, num_q.denominator)
        P = num_p * common
        Q = num_q * common
        R = den * common
        return int(P), int(Q), int(R)

    def sign(self, x) -> int:
        P, Q, _ = self.surd(x)
        return sign_surd(P, Q, self.d)

    def compare(self, x, y) -> int:
        return self.sign(_as_rat(x) - _as_rat(y))

    def eps_rat(self) -> QuadRat:
        return QuadRat(self.eps.a, self.eps.b)

    def eps_basis(self, r1: Rational, r2: Rational) -> QuadRat:
        """r1 + r2*eps on the {1, theta} basis."""
        return QuadRat(Fraction(r1) + self.s * Fraction(r2), self.t * Fraction(r2))

    def to_eps_coords(self, x: QuadRat) -> tuple[Fraction, Fraction]:
        """Inverse of eps_basis: x = r1 + r2*eps."""
        r2 = x.v / self.t
        return x.u - self.s * r2, r2


def _coords(x) -> tuple:
    if isinstance(x, QuadInt):
        return x.a, x.b
    if isinstance(x, QuadRat):
        return x.u, x.v
    return x, 0


def _as_rat(x) -> QuadRat:
    if isinstance(x, QuadRat):
        return x
    a, b = _coords(x)
    return QuadRat(a, b)


def _lcm(a: int, b: int) -> int:
    from math import gcd

    return a * b // gcd(a, b)


def exact_floor(field: FieldContext, x) -> int:
    P, Q, R = field.surd(x)
    return floor_surd(P, Q, R, field.d)


def frac_part(field: FieldContext, x, interval: str = HALF_OPEN_LEFT):
    """Representative of x mod Z in (0,1] or [0,1).

    Plain Fractions and ints come back as Fractions; quadratic elements as QuadRat.
    """
    if not isinstance(x, (QuadRat, QuadInt)):
        return frac_rational(Fraction(x), interval)
    x = _as_rat(x)
    n = exact_floor(field, x)
    y = x - n
    if interval == HALF_OPEN_RIGHT and y.u == 0 and y.v == 0:
        return QuadRat(1)
    return y


def frac_rational(x: Fraction, interval: str = HALF_OPEN_LEFT) -> Fraction:
    if interval == HALF_OPEN_LEFT:
        return x - (x.numerator // x.denominator)
    if interval == HALF_OPEN_RIGHT:
        # largest integer strictly below x
        n = -((-x.numerator) // x.denominator) - 1
        return x - n
    raise ValueError(f"unknown interval {interval!r}")


def _theta_data(d: int) -> tuple[str, int, int]:
    if d % 4 == 1:
        return HALF, 1, (1 - d) // 4
    # d = 2, 3 mod 4
    return SQRT, 0, -d


def fundamental_unit(
    d: int, theta_kind: str, T: int, N: int, max_convergents: int = DEFAULT_MAX_CONVERGENTS
) -> QuadInt:
    """Least unit > 1 of Z[theta], read off the continued fraction of theta.

    Each convergent h/k of theta gives the candidate (h - kT) + k*theta, whose
    conjugate is h - k*theta; the first one of norm +-1 is the fundamental unit.
    """
    P, Q = (1, 2) if theta_kind == HALF else (0, 1)
    h_prev, h = 0, 1
    k_prev, k = 1, 0
    for _ in range(max_convergents):
        a = floor_surd(P, 1, Q, d)
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev
        x, y = h - k * T, k
        if x * x + T * x * y + N * y * y in (1, -1):
            return QuadInt(x, y)
        P = a * Q - P
        Q = (d - P * P) // Q
    raise ShintaniError("MAX_CONVERGENTS", f"no unit within {max_convergents} convergents for d={d}")


def make_field(
    d: int,
    verify: bool = True,
    max_convergents: int = DEFAULT_MAX_CONVERGENTS,
    search_cap: int = DEFAULT_SEARCH_CAP,
) -> FieldContext:
    if d < 2:
        raise ShintaniError("D_TOO_SMALL", f"d={d}")
    if not _is_squarefree(d):
        raise ShintaniError("NOT_SQUAREFREE", f"d={d}")
    kind, T, N = _theta_data(d)
    unit = fundamental_unit(d, kind, T, N, max_convergents)
    ctx = FieldContext(d, kind, T, N, unit, unit, 0)
    if ctx.norm(unit) == -1:
        eps = ctx.mul(unit, unit)
    else:
        eps = unit
    ctx = dataclasses.replace(ctx, eps=eps, trace_eps=ctx.trace(eps))
    if verify:
        ctx = dataclasses.replace(ctx, h_F_verified=verify_h1(ctx, search_cap))
    return ctx


def _represents_norm(field: FieldContext, q: int, search_cap: int) -> bool:
    """Is there x + y*theta of norm +q or -q?

    A generator of a principal ideal of norm q can be moved by a unit so that both
    embeddings have absolute value at most sqrt(q * eps0); then |y| <= 2 sqrt(q eps0 / d).
    """
    E = exact_floor(field, field.eps_fund) + 1
    bound = isqrt(4 * q * E // field.d) + 1
    if bound > search_cap:
        raise ShintaniError(
            "SEARCH_EXHAUSTED", f"norm search for q={q} needs |y| <= {bound} > cap {search_cap}"
        )
    T, N = field.trace_theta, field.norm_theta
    for y in range(1, bound + 1):
        for target in (q, -q):
            # x^2 + T y x + (N y^2 - target) = 0
            disc = T * T * y * y - 4 * (N * y * y - target)
            if disc < 0:
                continue
            r = isqrt(disc)
            if r * r == disc and (r - T * y) % 2 == 0:
                return True
    return False


def verify_h1(field: FieldContext, search_cap: int = DEFAULT_SEARCH_CAP) -> bool:
    """Certify h_F = 1: every prime below the Minkowski bound sqrt(D)/2 that is not inert
    must have a prime above it generated by an element of norm +-q."""
    D = field.discriminant
    T, N = field.trace_theta, field.norm_theta
    q = 2
    while 4 * q * q <= D:
        if is_prime(q):
            has_root = any((x * x - T * x + N) % q == 0 for x in range(q))
            if has_root and not _represents_norm(field, q, search_cap):
                return False
        q += 1
    return True


@dataclass(frozen=True)
class EligibilityReport:
    d: int
    p: int
    failures: tuple[str, ...] = ()

    @property
    def eligible(self) -> bool:
        return not self.failures


def eligibility(field: FieldContext, p: int) -> EligibilityReport:
    failures = []
    prime = is_prime(p)
    if not prime:
        failures.append("NOT_PRIME")
    if p < 7:
        failures.append("P_LT_7")
    if p % 4 != 3:
        failures.append("P_NOT_3_MOD_4")
    if prime and p > 2 and legendre(field.d, p) != -1:
        failures.append("D_NOT_INERT")
    if not field.h_F_verified:
        failures.append("HF_NOT_ONE")
    return EligibilityReport(field.d, p, tuple(failures))


def check_pair(d: int, p: int) -> tuple[FieldContext | None, EligibilityReport]:
    """Eligibility of (d, p) without raising for a non-squarefree d."""
    try:
        field = make_field(d)
    except ShintaniError as exc:
        if exc.code == "NOT_SQUAREFREE":
            return None, EligibilityReport(d, p, ("D_NOT_SQUAREFREE",))
        raise
    return field, eligibility(field, p)
