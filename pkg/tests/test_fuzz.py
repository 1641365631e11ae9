"""Tests for the corpus fuzz runner"""

from automation import DEFAULT_CHECKS, CorpusFuzzer, format_summary, run_instance
from src.data import CorpusSpec, sweep_specs


def test_small_corpora_pass():
    fuzzer = CorpusFuzzer()
    specs = [CorpusSpec(n=n, rank=r, max_terms=5, seed=7, instance_count=3) for n in (1, 2, 3) for r in range(n + 1)]
    for summary in fuzzer.run_many(specs):
        assert summary.ok, format_summary(summary)
        assert summary.passed == summary.total == 3
        assert summary.first_failure is None


def test_full_sweep_passes():
    specs = sweep_specs(max_n=5, per_shape=12, max_terms=8, exponent_bound=4)
    summaries = CorpusFuzzer().run_many(specs)
    assert {s.spec.n for s in summaries} == {1, 2, 3, 4, 5}
    assert sum(s.total for s in summaries) >= 200
    for summary in summaries:
        assert summary.ok, format_summary(summary)


def test_every_check_runs():
    outcome = run_instance(CorpusSpec(n=3, rank=2, seed=1, instance_count=1), 0, DEFAULT_CHECKS)
    assert set(outcome.passed) == set(DEFAULT_CHECKS)
    assert outcome.ok and not outcome.errors


def test_symbolic_determinants_up_to_four_variables():
    check = {'determinants': DEFAULT_CHECKS['determinants']}
    for n in (4, 5):
        outcome = run_instance(CorpusSpec(n=n, rank=2, seed=5, instance_count=1), 0, check)
        assert outcome.ok and not outcome.errors


def test_empty_corpus_is_trivial_pass():
    summary = CorpusFuzzer().run(CorpusSpec(n=2, rank=1, instance_count=0))
    assert summary.ok
    assert (summary.total, summary.passed, summary.failed) == (0, 0, 0)


def test_corrupted_checker_reports_first_failure():
    def odd_indices_fail(ctx):
        return ctx.index % 2 == 0

    fuzzer = CorpusFuzzer(checks={'self_test': odd_indices_fail})
    summary = fuzzer.run(CorpusSpec(n=2, rank=1, seed=42, instance_count=4))
    assert not summary.ok
    assert summary.failed == 2
    assert summary.failures_by_check == {'self_test': 2}
    assert summary.first_failure == (42, 1)
    assert "first failure: seed=42 index=1" in format_summary(summary)


def test_raising_check_counts_as_failure():
    def broken(ctx):
        raise RuntimeError("boom")

    outcome = run_instance(CorpusSpec(n=1, rank=1, instance_count=1), 0, {'broken': broken})
    assert outcome.passed == {'broken': False}
    assert outcome.errors == {'broken': 'boom'}


def test_reproducible():
    spec = CorpusSpec(n=2, rank=2, seed=3, instance_count=4)
    assert CorpusFuzzer().run(spec).to_dict() == CorpusFuzzer().run(spec).to_dict()
