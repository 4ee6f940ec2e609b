"""Minimal Euclidean function on the Gaussian integers."""

from .counting import b_size, preimage_size, s_size, table
from .expansion import evaluate, expand_min
from .gaussian import GaussInt, canonical_octant, conj, div_exact, mul, norm, onepi_adic_val, two_adic_val
from .motzkin import build_levels, canonical_residue, coset_domain, surjects, surjects_via_triangle
from .phi import check_weight_identities, least_level, phi, w
from .regions import Kind, RegionQuery, decompose, enumerate_region, in_region, preimage

__all__ = [
    "GaussInt", "norm", "conj", "mul", "div_exact", "two_adic_val", "onepi_adic_val", "canonical_octant",
    "w", "least_level", "phi", "check_weight_identities",
    "Kind", "RegionQuery", "in_region", "enumerate_region", "decompose", "preimage",
    "evaluate", "expand_min",
    "canonical_residue", "coset_domain", "surjects", "surjects_via_triangle", "build_levels",
    "s_size", "b_size", "preimage_size", "table",
]
