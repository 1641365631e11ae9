"""
Algebra Package
Laurent polynomial arithmetic and logarithmic calculus
"""

from .laurent import (
    LaurentPolynomial,
    LaurentError,
    DimensionError,
    TorusPointError,
    ExactDivisionError,
    add,
    sub,
    mul,
    scale,
    exact_divide,
    evaluate,
    format_canonical,
    format_rational,
)
from .parser import ParseError, parse_laurent
from .calculus import (
    CalculusError,
    PolyVector,
    PolyMatrix,
    partial_derivative,
    theta,
    logarithmic_polar_map,
    affine_polar_map,
    jacobian,
    log_hessian,
    log_hessian_symmetric,
    classical_hessian,
    variables_product,
    det,
    det_cofactor,
    generic_rank,
    evaluate_matrix,
    rational_rank,
    has_vanishing_hessian,
    has_vanishing_log_hessian,
    log_gauss_point,
)

__all__ = [
    'LaurentPolynomial',
    'LaurentError',
    'DimensionError',
    'TorusPointError',
    'ExactDivisionError',
    'ParseError',
    'CalculusError',
    'PolyVector',
    'PolyMatrix',
    'add',
    'sub',
    'mul',
    'scale',
    'exact_divide',
    'evaluate',
    'format_canonical',
    'format_rational',
    'parse_laurent',
    'partial_derivative',
    'theta',
    'logarithmic_polar_map',
    'affine_polar_map',
    'jacobian',
    'log_hessian',
    'log_hessian_symmetric',
    'classical_hessian',
    'variables_product',
    'det',
    'det_cofactor',
    'generic_rank',
    'evaluate_matrix',
    'rational_rank',
    'has_vanishing_hessian',
    'has_vanishing_log_hessian',
    'log_gauss_point',
]
