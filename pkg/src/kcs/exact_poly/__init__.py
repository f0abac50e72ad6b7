"""Exact graded polynomial kernel: rings, ideals, loci, module Groebner bases."""

from .ring import GradedRing, Polynomial, ORDERS
from .ideal import (Ideal, Locus, groebner_basis, normal_form, radical_member,
                    saturation, locus_contained, loci_equal)
from .modules import (FreeModuleMap, Submodule, kernel_generators, module_quotient,
                      basis_column)
from .linalg import rank_over_domain
from .hilbert import HilbertSeries, hilbert_series
from .groebner import set_step_limit, reset_step_limit

__all__ = [
    "GradedRing", "Polynomial", "ORDERS", "Ideal", "Locus", "groebner_basis",
    "normal_form", "radical_member", "saturation", "locus_contained", "loci_equal",
    "FreeModuleMap", "Submodule", "kernel_generators", "module_quotient",
    "basis_column", "rank_over_domain", "HilbertSeries", "hilbert_series",
    "set_step_limit", "reset_step_limit",
]
