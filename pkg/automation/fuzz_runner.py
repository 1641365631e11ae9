"""
Corpus Fuzz Automation Module
Runs the property suites of every module over a reproducible random corpus
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

import pandas as pd

from src.algebra.calculus import (
    det,
    det_cofactor,
    log_hessian,
    log_hessian_symmetric,
    variables_product,
)
from src.algebra.laurent import LaurentPolynomial, mul
from src.analysis.reduction import (
    ReductionResult,
    TorusAutomorphism,
    coset_invariance_check,
    hessian_rank_certified,
    monomial_substitute,
    reduce_variables,
    verify_reduction,
)
from src.data.corpus import CorpusSpec, generate_corpus_sample, instance_rng, random_unimodular

logger = logging.getLogger(__name__)

# Symbolic determinant checks run up to this many variables
SYMBOLIC_DET_MAX_N = 4


@dataclass
class InstanceContext:
    """One corpus instance together with its reduction"""
    spec: CorpusSpec
    index: int
    f: LaurentPolynomial
    result: ReductionResult


Check = Callable[[InstanceContext], bool]


# ==================== Checks ====================

def check_hessian_rank(ctx: InstanceContext) -> bool:
    """Generic rank of Af equals the rank of the support lattice"""
    return hessian_rank_certified(ctx.f, seed=ctx.index) == ctx.result.lambda_basis.rank


def check_reduction(ctx: InstanceContext) -> bool:
    return ctx.result.verified and bool(verify_reduction(ctx.f, ctx.result))


def check_coset_invariance(ctx: InstanceContext) -> bool:
    return coset_invariance_check(ctx.f, ctx.result.m_basis)


def check_determinants(ctx: InstanceContext) -> bool:
    """Column-scaling identity, Bareiss against cofactors, vanishing criterion"""
    f = ctx.f
    if f.n > SYMBOLIC_DET_MAX_N:
        return True
    af = log_hessian(f)
    det_af = det(af)
    if det(log_hessian_symmetric(f)) != mul(variables_product(f.n), det_af):
        return False
    if det_af != det_cofactor(af):
        return False
    return det_af.is_zero() == (ctx.result.r < f.n)


def check_functor_law(ctx: InstanceContext) -> bool:
    """Pulling back along A then B equals pulling back along A @ B"""
    rng = instance_rng(ctx.spec, ctx.index, stream=1)
    a = TorusAutomorphism.from_matrix(random_unimodular(rng, ctx.f.n))
    b = TorusAutomorphism.from_matrix(random_unimodular(rng, ctx.f.n))
    stepwise = monomial_substitute(monomial_substitute(ctx.f, a), b)
    return stepwise == monomial_substitute(ctx.f, a.compose(b))


def check_k_invariance(ctx: InstanceContext) -> bool:
    """The number of eliminable variables survives a monoidal change"""
    rng = instance_rng(ctx.spec, ctx.index, stream=2)
    u = TorusAutomorphism.from_matrix(random_unimodular(rng, ctx.f.n))
    return reduce_variables(monomial_substitute(ctx.f, u)).k == ctx.result.k


DEFAULT_CHECKS: Dict[str, Check] = {
    'hessian_rank': check_hessian_rank,
    'reduction': check_reduction,
    'coset_invariance': check_coset_invariance,
    'determinants': check_determinants,
    'functor_law': check_functor_law,
    'k_invariance': check_k_invariance,
}


# ==================== Runner ====================

@dataclass
class InstanceOutcome:
    """Per-check results of one instance"""
    index: int
    passed: Dict[str, bool]
    errors: Dict[str, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.passed.values())


@dataclass
class FuzzSummary:
    """Aggregate of a fuzz run, in index order"""
    spec: CorpusSpec
    total: int
    passed: int
    failed: int
    failures_by_check: Dict[str, int]
    first_failure: Optional[Tuple[int, int]] = None  # (seed, index)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> Dict:
        return {
            'n': self.spec.n,
            'rank': self.spec.rank,
            'seed': self.spec.seed,
            'total': self.total,
            'passed': self.passed,
            'failed': self.failed,
            'failures_by_check': self.failures_by_check,
            'first_failure': list(self.first_failure) if self.first_failure else None,
        }


def run_instance(spec: CorpusSpec, index: int, checks: Dict[str, Check]) -> InstanceOutcome:
    """
    Generate one instance and run every check on it

    A check that raises counts as failed; the exception text is kept.
    """
    passed: Dict[str, bool] = {}
    errors: Dict[str, str] = {}
    try:
        f = generate_corpus_sample(spec, index)
        ctx = InstanceContext(spec, index, f, reduce_variables(f))
    except Exception as e:
        logger.error(f"instance (seed={spec.seed}, index={index}) could not be prepared: {e}")
        return InstanceOutcome(index, {name: False for name in checks}, {'setup': str(e)})

    for name, check in checks.items():
        try:
            passed[name] = bool(check(ctx))
        except Exception as e:
            passed[name] = False
            errors[name] = str(e)
        if not passed[name]:
            logger.warning(f"check {name} failed on (seed={spec.seed}, index={index}): f = {f}")
    return InstanceOutcome(index, passed, errors)


def _run_default(args: Tuple[CorpusSpec, int]) -> InstanceOutcome:
    spec, index = args
    return run_instance(spec, index, DEFAULT_CHECKS)


class CorpusFuzzer:
    """
    Fuzz harness over a reproducible corpus

    The summary only depends on the spec: outcomes are aggregated in index
    order whatever the scheduling.
    """

    def __init__(self, checks: Optional[Dict[str, Check]] = None, workers: int = 1):
        self.checks = dict(checks) if checks is not None else dict(DEFAULT_CHECKS)
        self.workers = workers

    def run(self, spec: CorpusSpec) -> FuzzSummary:
        """
        Run all checks on every instance of the corpus

        Args:
            spec: Corpus parameters

        Returns:
            FuzzSummary with pass/fail counts and the first failing (seed, index)
        """
        indices = range(spec.instance_count)
        # custom checks may not be picklable, so only the default set fans out
        if self.workers > 1 and self.checks == DEFAULT_CHECKS and spec.instance_count > 1:
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                outcomes = list(pool.map(_run_default, [(spec, i) for i in indices]))
        else:
            outcomes = [run_instance(spec, i, self.checks) for i in indices]
        outcomes.sort(key=lambda outcome: outcome.index)
        return self._summarize(spec, outcomes)

    def run_many(self, specs: List[CorpusSpec]) -> List[FuzzSummary]:
        return [self.run(spec) for spec in specs]

    def _summarize(self, spec: CorpusSpec, outcomes: List[InstanceOutcome]) -> FuzzSummary:
        if not outcomes:
            return FuzzSummary(spec, 0, 0, 0, {name: 0 for name in self.checks})

        table = pd.DataFrame([outcome.passed for outcome in outcomes],
                             index=[outcome.index for outcome in outcomes])
        table = table.reindex(columns=list(self.checks)).fillna(False).astype(bool)
        row_ok = table.all(axis=1)
        failures_by_check = {name: int((~table[name]).sum()) for name in table.columns}
        failing = row_ok[~row_ok]
        first = (spec.seed, int(failing.index[0])) if len(failing) else None

        summary = FuzzSummary(
            spec=spec,
            total=len(outcomes),
            passed=int(row_ok.sum()),
            failed=int((~row_ok).sum()),
            failures_by_check=failures_by_check,
            first_failure=first,
        )
        logger.info(f"fuzz n={spec.n} r={spec.rank} seed={spec.seed}: "
                    f"{summary.passed}/{summary.total} passed")
        return summary


def format_summary(summary: FuzzSummary) -> str:
    """Human-readable fuzz summary"""
    spec = summary.spec
    lines = [
        f"corpus n={spec.n} r={spec.rank} terms<={spec.max_terms} "
        f"seed={spec.seed} count={spec.instance_count}",
        f"  passed: {summary.passed}/{summary.total}",
    ]
    for name, count in summary.failures_by_check.items():
        if count:
            lines.append(f"  {name}: {count} failures")
    if summary.first_failure:
        seed, index = summary.first_failure
        lines.append(f"  first failure: seed={seed} index={index}")
    return "\n".join(lines)
