"""The Shintani set R = {r1 + r2*eps in (1/p)O_F : 0 < r1 <= 1, 0 <= r2 < 1} and its structure.

R is a set of representatives for (1/p)O_F modulo Z[eps].  Multiplying by p and reducing
mod p sends it onto F_{p^2}; the fibres are cosets of the kernel R ∩ O_F, which has t
elements when eps = s + t*theta.  The unit eps acts on R by multiplication followed by
reduction mod Z[eps], and the orbits of that action are the Shintani cycles.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ShintaniError
from .field import HALF_OPEN_LEFT, HALF_OPEN_RIGHT, FieldContext, QuadRat, frac_rational
from .residue import Generator, ResidueElem, element_order, residue


@dataclass(frozen=True, order=True)
class ShintaniPoint:
    """r1 + r2*eps; ordering is lexicographic on (r1, r2)."""

    r1: Fraction
    r2: Fraction

    def __str__(self) -> str:
        if self.r2 == 0:
            return str(self.r1)
        return f"{self.r1}+{self.r2}ε"

    def as_element(self, field: FieldContext) -> QuadRat:
        return field.eps_basis(self.r1, self.r2)


@dataclass(frozen=True)
class KernelElem:
    index: int
    point: ShintaniPoint


@dataclass(frozen=True)
class ShintaniCycle:
    rep: ShintaniPoint
    points: tuple[ShintaniPoint, ...]  # eps^i * rep for i = 1..length; the last one is rep

    @property
    def length(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class CosetReps:
    m: int
    xt: Fraction
    yt: Fraction
    fiber: tuple[ShintaniPoint, ...]  # i = 1..t

    def scaled(self, t: int, p: int) -> list[tuple[int, int]]:
        """The integers tp(2*x~_i - 1), tp(2*y~_i - 1) for every fibre point."""
        tp = t * p
        return [(int(tp * (2 * q.r1 - 1)), int(tp * (2 * q.r2 - 1))) for q in self.fiber]


def in_O_F(field: FieldContext, r: ShintaniPoint) -> bool:
    x = r.as_element(field)
    return x.u.denominator == 1 and x.v.denominator == 1


def enumerate_R(field: FieldContext, p: int) -> list[ShintaniPoint]:
    """A/(tp) + B/(tp) eps with 0 < A <= tp, 0 <= B < tp, A + sB = 0 mod t."""
    s, t = field.s, field.t
    tp = t * p
    return [
        ShintaniPoint(Fraction(A, tp), Fraction(B, tp))
        for A in range(1, tp + 1)
        for B in range(tp)
        if (A + s * B) % t == 0
    ]


def kernel_elements(field: FieldContext) -> list[KernelElem]:
    s, t = field.s, field.t
    return [
        KernelElem(i, ShintaniPoint(1 - frac_rational(Fraction(s * i, t)), Fraction(i, t)))
        for i in range(t)
    ]


def pi_map(field: FieldContext, p: int, r: ShintaniPoint) -> ResidueElem:
    """p*r written on {1, theta}, reduced mod p."""
    x = r.as_element(field)
    px, py = p * x.u, p * x.v
    if px.denominator != 1 or py.denominator != 1:
        raise ShintaniError("NOT_IN_R", f"{r} is not in (1/{p})O_F")
    return residue(field, p, px.numerator, py.numerator)


def oplus(r: ShintaniPoint, q: ShintaniPoint) -> ShintaniPoint:
    """Addition in (1/p)O_F / Z[eps] on the Shintani representatives."""
    return ShintaniPoint(
        frac_rational(r.r1 + q.r1, HALF_OPEN_RIGHT), frac_rational(r.r2 + q.r2, HALF_OPEN_LEFT)
    )


def coset_reps_from_xy(field: FieldContext, p: int, m: int, x: int, y: int) -> CosetReps:
    s, t = field.s, field.t
    tp = t * p
    base = Fraction(x, p) - Fraction(s * y, tp)
    xt = frac_rational(base, HALF_OPEN_RIGHT)
    yt = frac_rational(Fraction(y, tp), HALF_OPEN_LEFT)
    fiber = tuple(
        ShintaniPoint(
            frac_rational(base + 1 - frac_rational(Fraction(s * i, t)), HALF_OPEN_RIGHT),
            frac_rational(Fraction(y, tp) + Fraction(i, t), HALF_OPEN_LEFT),
        )
        for i in range(1, t + 1)
    )
    return CosetReps(m, xt, yt, fiber)


def coset_reps(field: FieldContext, p: int, rho: Generator, m: int) -> CosetReps:
    """The fibre of pi over rho^m, using the reduced coordinates of rho^m."""
    if not 1 <= m <= p * p - 1:
        raise ShintaniError("M_OUT_OF_RANGE", f"m={m} not in [1, {p * p - 1}]")
    x, y = (rho.rho ** m).pair
    return coset_reps_from_xy(field, p, m, x, y)


def eps_action(field: FieldContext, r: ShintaniPoint) -> ShintaniPoint:
    """eps * (r1 + r2 eps) = (1 - r2) + {r1 + Tr(eps) r2} eps."""
    return ShintaniPoint(1 - r.r2, frac_rational(r.r1 + field.trace_eps * r.r2, HALF_OPEN_LEFT))


def orbit(field: FieldContext, r: ShintaniPoint, limit: int | None = None) -> list[ShintaniPoint]:
    """[eps*r, eps^2*r, ..., r]."""
    out = []
    q = r
    while True:
        q = eps_action(field, q)
        out.append(q)
        if q == r:
            return out
        if limit is not None and len(out) > limit:
            raise ShintaniError("INTERNAL_INCONSISTENCY", f"orbit of {r} longer than {limit}")


def cycle_decompose(
    field: FieldContext, p: int, points: list[ShintaniPoint] | None = None
) -> tuple[list[ShintaniCycle], list[ShintaniPoint]]:
    """Nontrivial cycles (sorted by representative) and the trivial points R ∩ O_F."""
    if points is None:
        points = enumerate_R(field, p)
    seen: set[ShintaniPoint] = set()
    cycles = []
    trivial = []
    for r in sorted(points):
        if r in seen:
            continue
        if in_O_F(field, r):
            trivial.append(r)
            seen.add(r)
            continue
        orb = orbit(field, r, limit=len(points))
        seen.update(orb)
        rep = min(orb)
        k = orb.index(rep)
        # rotate so that the sequence reads eps*rep, ..., rep
        pts = tuple(orb[k + 1 :] + orb[: k + 1])
        cycles.append(ShintaniCycle(rep, pts))
    if cycles:
        expected = element_order(residue(field, p, field.eps.a, field.eps.b))
        bad = {c.length for c in cycles} - {expected}
        if bad:
            raise ShintaniError(
                "INTERNAL_INCONSISTENCY", f"cycle lengths {sorted(bad)} differ from ord(eps)={expected}"
            )
    return cycles, trivial
