from .vocabulary import BrainRegion, ConstraintCue, Laterality, Modality, Stage
from .lexicon import Lexicon, LexiconError, dump_lexicon, lexicon_from_defaults, load_lexicon
from .matcher import (
    match_cue,
    match_diagnosis,
    match_is_finding,
    match_is_related,
    match_lacunarity,
    match_laterality,
    match_region,
    match_stage_keyword,
)

__all__ = [
    "BrainRegion",
    "ConstraintCue",
    "Laterality",
    "Modality",
    "Stage",
    "Lexicon",
    "LexiconError",
    "dump_lexicon",
    "lexicon_from_defaults",
    "load_lexicon",
    "match_cue",
    "match_diagnosis",
    "match_is_finding",
    "match_is_related",
    "match_lacunarity",
    "match_laterality",
    "match_region",
    "match_stage_keyword",
]
