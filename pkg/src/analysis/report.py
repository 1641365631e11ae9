"""
Analysis Report Module
Aggregates a reduction certificate into a stable, serialisable report
"""

import json
import time
from dataclasses import dataclass
from typing import Any, Dict, List, Tuple

from ..algebra.laurent import LaurentPolynomial, format_canonical
from ..algebra.parser import parse_laurent
from .reduction import ReductionResult, reduce_variables

# Field order of the JSON report
REPORT_FIELDS = (
    'n',
    'support_size',
    'exponent_rank',
    'hessian_rank',
    'k',
    'det_af_is_zero',
    'lambda_basis',
    'm_basis',
    'automorphism_rows',
    'reduced_polynomial',
    'verified',
    'elapsed_ms',
)


@dataclass(frozen=True)
class AnalysisReport:
    """Everything the analyze command reports about one polynomial"""
    n: int
    support_size: int
    exponent_rank: int
    hessian_rank: int
    k: int
    det_af_is_zero: bool
    lambda_basis: List[List[int]]
    m_basis: List[List[int]]
    automorphism_rows: List[List[int]]
    reduced_polynomial: str
    verified: bool
    elapsed_ms: int

    @classmethod
    def from_result(cls, f: LaurentPolynomial, result: ReductionResult, elapsed_ms: int) -> 'AnalysisReport':
        return cls(
            n=result.n,
            support_size=len(f),
            exponent_rank=result.r,
            hessian_rank=result.hessian_rank,
            k=result.k,
            det_af_is_zero=result.hessian_rank < result.n,
            lambda_basis=result.lambda_basis.to_lists(),
            m_basis=result.m_basis.to_lists(),
            automorphism_rows=[list(row) for row in result.automorphism.A],
            reduced_polynomial=format_canonical(result.reduced),
            verified=result.verified,
            elapsed_ms=elapsed_ms,
        )

    def to_dict(self) -> Dict[str, Any]:
        return {name: getattr(self, name) for name in REPORT_FIELDS}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def consistency_errors(self, result: ReductionResult) -> List[str]:
        """Violated report invariants (empty when consistent)"""
        errors = []
        if self.k != self.n - self.exponent_rank:
            errors.append(f"k = {self.k} but n - r = {self.n - self.exponent_rank}")
        if self.det_af_is_zero != (self.hessian_rank < self.n):
            errors.append("det_af_is_zero disagrees with the hessian rank")
        if parse_laurent(self.reduced_polynomial, self.n) != result.reduced:
            errors.append("reduced polynomial does not reparse to the computed one")
        return errors


def analyze_polynomial(f: LaurentPolynomial) -> Tuple[AnalysisReport, ReductionResult]:
    """Run the reduction and time it"""
    start = time.perf_counter()
    result = reduce_variables(f)
    elapsed_ms = int((time.perf_counter() - start) * 1000)
    return AnalysisReport.from_result(f, result, elapsed_ms), result
