"""The residue field O_F / pO_F = F_{p^2} for a prime p inert in F."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import ShintaniError
from .field import FieldContext, QuadInt


@lru_cache(maxsize=None)
def prime_factors(n: int) -> tuple[int, ...]:
    """Distinct prime factors of n by trial division."""
    out = []
    k = 2
    while k * k <= n:
        if n % k == 0:
            out.append(k)
            while n % k == 0:
                n //= k
        k += 1
    if n > 1:
        out.append(n)
    return tuple(out)


@dataclass(frozen=True)
class ResidueElem:
    """x + y*theta mod p.  theta^2 = T*theta - N."""

    x: int
    y: int
    p: int
    T: int
    N: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", self.x % self.p)
        object.__setattr__(self, "y", self.y % self.p)

    def _new(self, x: int, y: int) -> ResidueElem:
        return ResidueElem(x, y, self.p, self.T, self.N)

    def __mul__(self, other: ResidueElem) -> ResidueElem:
        a, b, c, e = self.x, self.y, other.x, other.y
        return self._new(a * c - self.N * b * e, a * e + b * c + self.T * b * e)

    def __add__(self, other: ResidueElem) -> ResidueElem:
        return self._new(self.x + other.x, self.y + other.y)

    def __pow__(self, e: int) -> ResidueElem:
        return pow_elem(self, e)

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def is_one(self) -> bool:
        return self.x == 1 and self.y == 0

    @property
    def pair(self) -> tuple[int, int]:
        return self.x, self.y


def residue(field: FieldContext, p: int, x: int, y: int = 0) -> ResidueElem:
    return ResidueElem(x, y, p, field.trace_theta, field.norm_theta)


def pow_elem(x: ResidueElem, e: int) -> ResidueElem:
    if e < 0:
        raise ValueError("negative exponent")
    result = x._new(1, 0)
    base = x
    while e:
        if e & 1:
            result = result * base
        base = base * base
        e >>= 1
    return result


def element_order(x: ResidueElem) -> int:
    if x.is_zero():
        raise ShintaniError("ZERO_ELEMENT", "order of 0")
    order = x.p * x.p - 1
    for q in prime_factors(order):
        while order % q == 0 and pow_elem(x, order // q).is_one():
            order //= q
    return order


def is_square(x: ResidueElem) -> bool:
    if x.is_zero():
        raise ShintaniError("ZERO_ELEMENT", "square test of 0")
    return pow_elem(x, (x.p * x.p - 1) // 2).is_one()


def is_generator(x: ResidueElem) -> bool:
    if x.is_zero():
        return False
    n = x.p * x.p - 1
    return all(not pow_elem(x, n // q).is_one() for q in prime_factors(n))


@dataclass(frozen=True)
class Generator:
    rho: ResidueElem

    @property
    def a(self) -> int:
        return self.rho.x

    @property
    def b(self) -> int:
        return self.rho.y

    @property
    def order(self) -> int:
        return self.rho.p ** 2 - 1

    @property
    def lift(self) -> QuadInt:
        return QuadInt(self.a, self.b)


def find_generator(field: FieldContext, p: int) -> Generator:
    """Smallest (b, a) in lexicographic order, b >= 1, with a + b*theta of full order."""
    for b in range(1, p):
        for a in range(p):
            x = residue(field, p, a, b)
            if is_generator(x):
                return Generator(x)
    raise ShintaniError("NO_GENERATOR", f"no generator mod {p}; is p inert in F?")


def pinned_generator(field: FieldContext, p: int, a: int, b: int) -> Generator:
    x = residue(field, p, a, b)
    if not is_generator(x):
        raise ShintaniError("NOT_A_GENERATOR", f"{a}+{b}θ does not generate F_{p}^2 ^×")
    if x.y == 0:
        raise ShintaniError("NOT_A_GENERATOR", "b must be nonzero")
    return Generator(x)


def all_generators(field: FieldContext, p: int) -> list[Generator]:
    return [
        Generator(residue(field, p, a, b))
        for b in range(1, p)
        for a in range(p)
        if is_generator(residue(field, p, a, b))
    ]
