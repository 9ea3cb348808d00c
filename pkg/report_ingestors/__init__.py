"""
Report Ingestors Package

Readers and writers for frame corpora and phenotype files, and the
pattern-based frame extractor for raw report sentences.
"""

from .corpus_io import (
    CorpusFormatError,
    CorpusValidationError,
    GoldPhenotypeRecord,
    load_gold,
    load_predictions,
    load_raw_text,
    load_reports,
    write_phenotypes,
    write_reports,
)
from .pattern_extractor import PatternFrameExtractor, extract_frames, extract_report

__all__ = [
    'CorpusFormatError',
    'CorpusValidationError',
    'GoldPhenotypeRecord',
    'load_gold',
    'load_predictions',
    'load_raw_text',
    'load_reports',
    'write_phenotypes',
    'write_reports',
    'PatternFrameExtractor',
    'extract_frames',
    'extract_report',
]
