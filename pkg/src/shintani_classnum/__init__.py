"""Class numbers of F(sqrt(-p)) over real quadratic F with h_F = 1, via Shintani sets."""

from .errors import ShintaniError
from .config import GridConfig
from .expansion import EpsExpansion, eps_expand, period_length_of_inv_p
from .field import (
    EligibilityReport,
    FieldContext,
    QuadInt,
    QuadRat,
    eligibility,
    exact_floor,
    frac_part,
    make_field,
    verify_h1,
)
from .oracle import bernoulli_eval, class_number_direct
from .residue import ResidueElem, element_order, find_generator, is_square, pinned_generator
from .shintani import (
    ShintaniCycle,
    ShintaniPoint,
    coset_reps,
    cycle_decompose,
    enumerate_R,
    eps_action,
    kernel_elements,
    pi_map,
)
from .theorem_one import cd_constants, class_number_thm1, q_form_eval, series_coeffs_oracle, xy_sequences
from .theorem_two import class_number_thm2, hecke_chi

__all__ = [
    "EligibilityReport",
    "EpsExpansion",
    "FieldContext",
    "GridConfig",
    "QuadInt",
    "QuadRat",
    "ResidueElem",
    "ShintaniCycle",
    "ShintaniError",
    "ShintaniPoint",
    "bernoulli_eval",
    "cd_constants",
    "class_number_direct",
    "class_number_thm1",
    "class_number_thm2",
    "coset_reps",
    "cycle_decompose",
    "element_order",
    "eligibility",
    "enumerate_R",
    "eps_action",
    "eps_expand",
    "exact_floor",
    "find_generator",
    "frac_part",
    "hecke_chi",
    "is_square",
    "kernel_elements",
    "make_field",
    "period_length_of_inv_p",
    "pi_map",
    "pinned_generator",
    "q_form_eval",
    "series_coeffs_oracle",
    "verify_h1",
    "xy_sequences",
]
