"""
Analysis Package
Torus reduction engine and analysis reports
"""

from .reduction import (
    ReductionError,
    ReductionCheck,
    TorusAutomorphism,
    ReductionResult,
    Verification,
    support_lattice,
    orthogonal_lattice,
    hessian_rank_certified,
    build_automorphism,
    monomial_substitute,
    reduce_variables,
    verify_reduction,
    coset_invariance_check,
    subgroup_point,
    coset_invariance_at_point,
)
from .report import REPORT_FIELDS, AnalysisReport, analyze_polynomial

__all__ = [
    'ReductionError',
    'ReductionCheck',
    'TorusAutomorphism',
    'ReductionResult',
    'Verification',
    'AnalysisReport',
    'REPORT_FIELDS',
    'support_lattice',
    'orthogonal_lattice',
    'hessian_rank_certified',
    'build_automorphism',
    'monomial_substitute',
    'reduce_variables',
    'verify_reduction',
    'coset_invariance_check',
    'subgroup_point',
    'coset_invariance_at_point',
    'analyze_polynomial',
]
