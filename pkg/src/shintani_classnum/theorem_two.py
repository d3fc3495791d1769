"""Class number as a sum over Shintani cycles, one term per step of the eps-action."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ShintaniError
from .field import FieldContext
from .residue import is_square
from .shintani import ShintaniCycle, ShintaniPoint, cycle_decompose, pi_map
from .theorem_one import q_form_eval


def hecke_chi(field: FieldContext, p: int, r: ShintaniPoint) -> int:
    """Quadratic character of conductor pO_F on the ideal r*pO_F.

    pi(r) = rho^m for a generator rho, and the character is (-1)^m there, i.e. +1
    exactly on the squares of F_{p^2}^x.  Points of R ∩ O_F get 0.
    """
    x = pi_map(field, p, r)
    if x.is_zero():
        return 0
    return 1 if is_square(x) else -1


@dataclass(frozen=True)
class CycleTerm:
    rep: ShintaniPoint
    chi: int
    q_sum: Fraction  # sum over the cycle of Q(r1, r2)

    @property
    def contribution(self) -> Fraction:
        return self.chi * self.q_sum


def cycle_terms(
    field: FieldContext, p: int, cycles: list[ShintaniCycle] | None = None
) -> list[CycleTerm]:
    if cycles is None:
        cycles, _ = cycle_decompose(field, p)
    return [
        CycleTerm(
            c.rep,
            hecke_chi(field, p, c.rep),
            sum((Fraction(q_form_eval(field, q.r1, q.r2)) for q in c.points), Fraction(0)),
        )
        for c in cycles
    ]


def class_number_thm2(field: FieldContext, p: int, cycles: list[ShintaniCycle] | None = None) -> int:
    terms = cycle_terms(field, p, cycles)
    h = sum((term.contribution for term in terms), Fraction(0)) / 4
    if h.denominator != 1 or h <= 0:
        raise ShintaniError("NON_INTEGRAL_RESULT", f"cycle sum / 4 = {h} for d={field.d}, p={p}")
    return int(h)
