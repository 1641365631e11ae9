# Corpus fuzz automation
# Batch runs of the property suites over reproducible random corpora

from .fuzz_runner import CorpusFuzzer, FuzzSummary, InstanceOutcome, DEFAULT_CHECKS, format_summary, run_instance

__all__ = [
    'CorpusFuzzer',
    'FuzzSummary',
    'InstanceOutcome',
    'DEFAULT_CHECKS',
    'format_summary',
    'run_instance',
]
