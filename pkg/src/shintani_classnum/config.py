"""Grid settings shared by the experiment scripts and the test-suite."""

from __future__ import annotations

from dataclasses import dataclass

from .field import eligibility, make_field, verify_h1


@dataclass(frozen=True)
class GridConfig:
    d_values: tuple[int, ...] = (2, 3, 5, 6, 7, 11, 13)
    pmax: int = 60  # exclusive
    methods: tuple[str, ...] = ("thm1", "thm2", "direct")

    def pairs(self) -> list[tuple[int, int]]:
        """Eligible (d, p) with h_F = 1 confirmed, in (d, p) order."""
        out = []
        for d in self.d_values:
            field = make_field(d)
            if not verify_h1(field):
                continue
            out.extend((d, p) for p in range(2, self.pmax) if eligibility(field, p).eligible)
        return out
