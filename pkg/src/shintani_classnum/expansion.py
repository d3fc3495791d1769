"""Greedy base-eps expansions of positive elements of F.

eps is a Pisot unit, so the fractional states eps^k * alpha - (integer part) of an element
of (1/p)O_F range over a finite set and the digit stream is eventually periodic.  The
period is read off from the first repeated state.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import ShintaniError
from .field import FieldContext, QuadRat, exact_floor
from .residue import element_order, residue


@dataclass(frozen=True)
class EpsExpansion:
    integer_digits: tuple[int, ...]  # a_n, ..., a_0
    fractional_preperiod: tuple[int, ...]  # a_-1, a_-2, ...
    period: tuple[int, ...]  # empty for a terminating expansion

    @property
    def period_length(self) -> int:
        return len(self.period)

    def digit(self, k: int) -> int:
        """a_{-k} for k >= 1."""
        pre = self.fractional_preperiod
        if k <= len(pre):
            return pre[k - 1]
        if not self.period:
            return 0
        return self.period[(k - len(pre) - 1) % len(self.period)]

    def render(self) -> str:
        digits = (*self.integer_digits, *self.fractional_preperiod, *self.period)
        sep = "," if digits and max(digits) >= 10 else ""
        out = sep.join(map(str, self.integer_digits))
        if self.fractional_preperiod or self.period:
            out += "." + sep.join(map(str, self.fractional_preperiod))
        if self.period:
            out += ("," if sep and self.fractional_preperiod else "") + "(" + sep.join(map(str, self.period)) + ")"
        return out


def _is_primitive(word: tuple[int, ...]) -> bool:
    n = len(word)
    return all(n % k or word != word[k:] + word[:k] for k in range(1, n))


def eps_expand(field: FieldContext, alpha, max_digits: int | None = None) -> EpsExpansion:
    alpha = alpha if isinstance(alpha, QuadRat) else QuadRat(alpha)
    if field.sign(alpha) <= 0:
        raise ShintaniError("NOT_POSITIVE", "base-eps expansions need alpha > 0")
    eps = field.eps_rat()
    eps_inv = field.conj(eps)
    if max_digits is None:
        den = lcm(alpha.u.denominator, alpha.v.denominator)
        max_digits = 10 * field.t * den * den

    # integer part: highest n with eps^n <= alpha
    powers = [QuadRat(1)]
    while field.compare(field.mul(powers[-1], eps), alpha) <= 0:
        powers.append(field.mul(powers[-1], eps))
    integer_digits = []
    rem = alpha
    if field.compare(alpha, 1) < 0:
        integer_digits.append(0)
    else:
        for k in range(len(powers) - 1, -1, -1):
            a = exact_floor(field, field.mul(rem, _inv_power(field, eps_inv, k)))
            integer_digits.append(a)
            rem = rem - powers[k].scale(a)

    top = field.trace_eps - 1
    seen = {rem: 0}
    digits: list[int] = []
    state = rem
    while True:
        if len(digits) >= max_digits:
            raise ShintaniError("MAX_DIGITS_EXCEEDED", f"no repeat within {max_digits} digits")
        scaled = field.mul(state, eps)
        a = exact_floor(field, scaled)
        if not 0 <= a <= top:
            raise ShintaniError("INTERNAL_INCONSISTENCY", f"digit {a} outside 0..{top}")
        digits.append(a)
        state = scaled - a
        if state in seen:
            start = seen[state]
            break
        seen[state] = len(digits)

    if state == QuadRat(0):
        # terminating: the only cycle is the zero state emitting 0s
        return EpsExpansion(tuple(integer_digits), tuple(digits[:start]), ())
    period = tuple(digits[start:])
    if not _is_primitive(period):
        raise ShintaniError("INTERNAL_INCONSISTENCY", f"state cycle gives non-primitive period {period}")
    if all(x == top for x in period):
        raise ShintaniError("INTERNAL_INCONSISTENCY", "greedy digits ended in the forbidden all-top tail")
    return EpsExpansion(tuple(integer_digits), tuple(digits[:start]), period)


def _inv_power(field: FieldContext, eps_inv: QuadRat, k: int) -> QuadRat:
    out = QuadRat(1)
    for _ in range(k):
        out = field.mul(out, eps_inv)
    return out


def period_length_of_inv_p(field: FieldContext, p: int, max_digits: int | None = None) -> int:
    exp = eps_expand(field, QuadRat(Fraction(1, p)), max_digits)
    order = element_order(residue(field, p, field.eps.a, field.eps.b))
    if exp.period_length != order:
        raise ShintaniError(
            "INTERNAL_INCONSISTENCY", f"period {exp.period_length} of 1/{p} != ord(eps mod p) = {order}"
        )
    return exp.period_length


def expansion_value_check(field: FieldContext, alpha: QuadRat, exp: EpsExpansion, k: int) -> QuadRat:
    """eps^k * alpha minus the digits through a_{-k} shifted by eps^k; lies in [0, 1)."""
    eps = field.eps_rat()
    acc = QuadRat(0)
    for a in exp.integer_digits:
        acc = field.mul(acc, eps) + a
    for j in range(1, k + 1):
        acc = field.mul(acc, eps) + exp.digit(j)
    scaled = alpha
    for _ in range(k):
        scaled = field.mul(scaled, eps)
    return scaled - acc
