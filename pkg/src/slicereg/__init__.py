"""Slice functions over real alternative algebras with antiinvolution.

Submodules: ``algebra`` (structure constants, cones), ``complexify``
(``A (x) C``), ``slicefn`` (stem and slice functions, star product),
``zeros`` (zero classification and multiplicities), ``cauchy``
(Cauchy and Pompeiu formulas) and ``cli``.
"""
from .algebra import (DEFAULT_TOL, AlgebraSpec, Element, conj, decompose, in_normal_cone,
                      in_quadratic_cone, inverse, is_sqrt_minus_one, make_custom, norm_elem,
                      slice_coords, trace, validate_algebra)
from .builtins import make_builtin
from .cauchy import ContourSpec, cauchy_boundary, cauchy_kernel, cauchy_pompeiu
from .complexify import CElement, cn, solve_K
from .errors import AdmissibilityError, NumericalError, SliceError
from .slicefn import (DomainDescriptor, SlicePoly, StemClosure, admissibility, normal, sconj,
                      slice_eval, spherical_derivative, spherical_value, sprod)
from .zeros import ZeroRecord, all_zeros, divide_char

__all__ = [
    "DEFAULT_TOL", "AlgebraSpec", "Element", "conj", "decompose", "in_normal_cone",
    "in_quadratic_cone", "inverse", "is_sqrt_minus_one", "make_custom", "norm_elem",
    "slice_coords", "trace", "validate_algebra", "make_builtin", "ContourSpec",
    "cauchy_boundary", "cauchy_kernel", "cauchy_pompeiu", "CElement", "cn", "solve_K",
    "AdmissibilityError", "NumericalError", "SliceError", "DomainDescriptor", "SlicePoly",
    "StemClosure", "admissibility", "normal", "sconj", "slice_eval", "spherical_derivative",
    "spherical_value", "sprod", "ZeroRecord", "all_zeros", "divide_char",
]
