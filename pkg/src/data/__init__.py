"""
Data Package
Reproducible random corpora for the property suites
"""

from .corpus import (
    CorpusError,
    CorpusSpec,
    generate_corpus_sample,
    instance_rng,
    iter_corpus,
    random_unimodular,
    sweep_specs,
)

__all__ = [
    'CorpusError',
    'CorpusSpec',
    'generate_corpus_sample',
    'instance_rng',
    'iter_corpus',
    'random_unimodular',
    'sweep_specs',
]
