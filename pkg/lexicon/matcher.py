"""
Keyword matching primitives.

Every matcher lowercases and collapses whitespace before matching, and a phrase
only matches on word boundaries: it may not be preceded or followed by an ASCII
letter or digit. Hyphens and slashes count as boundaries.
"""

import re
from functools import lru_cache
from typing import Iterable, Optional, Pattern, Set, Tuple

from lexicon.lexicon import Lexicon, lexicon_from_defaults
from lexicon.vocabulary import BrainRegion, ConstraintCue, Laterality, Modality, Stage

# Fused two-lobe adjectives and the lobes they name.
COMPOUND_LOBES = (
    (r"fronto-?parietal", (BrainRegion.FRONTAL_LOBE, BrainRegion.PARIETAL_LOBE)),
    (r"fronto-?temporal", (BrainRegion.FRONTAL_LOBE, BrainRegion.TEMPORAL_LOBE)),
    (r"temporo-?parietal", (BrainRegion.TEMPORAL_LOBE, BrainRegion.PARIETAL_LOBE)),
    (r"parieto-?occipital", (BrainRegion.PARIETAL_LOBE, BrainRegion.OCCIPITAL_LOBE)),
    (r"temporo-?occipital", (BrainRegion.TEMPORAL_LOBE, BrainRegion.OCCIPITAL_LOBE)),
)

# Plural anatomy that implies both sides.
BILATERAL_PLURALS = ("thalami", "capsules")

ACUTE_SUBACUTE_PATTERN = r"acute(?: ?[/-] ?| to )sub[- ]?acute"

CORTICAL_TERMS = ("cortex", "cortical", "subcortical")

_LEFT_BOUNDARY = r"(?<![a-z0-9])"
_RIGHT_BOUNDARY = r"(?![a-z0-9])"


def normalize_text(text: str) -> str:
    return " ".join(text.lower().split())


def bounded(pattern: str) -> str:
    return f"{_LEFT_BOUNDARY}(?:{pattern}){_RIGHT_BOUNDARY}"


@lru_cache(maxsize=1024)
def phrase_pattern(phrases: Tuple[str, ...]) -> Optional[Pattern]:
    """Compile one alternation over `phrases`, longest first; None for an empty table."""
    if not phrases:
        return None
    ordered = sorted(set(phrases), key=lambda p: (-len(p), p))
    return re.compile(bounded("|".join(re.escape(p) for p in ordered)))


_COMPOUND_RES = tuple((re.compile(bounded(p)), lobes) for p, lobes in COMPOUND_LOBES)
_ACUTE_SUBACUTE_RE = re.compile(bounded(ACUTE_SUBACUTE_PATTERN))
_BILATERAL_PLURAL_RE = phrase_pattern(BILATERAL_PLURALS)
_CORTICAL_RE = phrase_pattern(CORTICAL_TERMS)

_default_lexicon: Optional[Lexicon] = None


def default_lexicon() -> Lexicon:
    global _default_lexicon
    if _default_lexicon is None:
        _default_lexicon = lexicon_from_defaults()
    return _default_lexicon


def contains_any(text: str, phrases: Iterable[str]) -> bool:
    pattern = phrase_pattern(tuple(phrases))
    return pattern is not None and pattern.search(normalize_text(text)) is not None


def match_is_finding(text: str, modality: Modality, lexicon: Optional[Lexicon] = None) -> bool:
    lexicon = lexicon or default_lexicon()
    phrases = lexicon.is_finding_ct if modality == Modality.CT else lexicon.is_finding_mri
    return contains_any(text, phrases)


def match_diagnosis(text: str, lexicon: Optional[Lexicon] = None) -> bool:
    lexicon = lexicon or default_lexicon()
    return contains_any(text, lexicon.is_diagnosis)


def match_is_related(text: str, modality: Modality, lexicon: Optional[Lexicon] = None) -> bool:
    """Step-1 filter: finding, IS diagnosis, stage or lacunar keyword present."""
    lexicon = lexicon or default_lexicon()
    return (
        match_is_finding(text, modality, lexicon)
        or match_diagnosis(text, lexicon)
        or match_stage_keyword(text, lexicon) is not None
        or match_lacunarity(text, lexicon)
    )


def match_region(ground_text: str, lexicon: Optional[Lexicon] = None) -> Set[BrainRegion]:
    """
    Map a Ground span to brain regions.

    Args:
        ground_text: Ground element text, e.g. "right frontoparietal distribution"

    Returns:
        Union of keyword hits, compound-lobe splits and vascular-territory hits
    """
    lexicon = lexicon or default_lexicon()
    text = normalize_text(ground_text)
    regions: Set[BrainRegion] = set()

    for region, phrases in lexicon.region_keywords.items():
        pattern = phrase_pattern(phrases)
        if pattern is not None and pattern.search(text):
            regions.add(region)

    for pattern, lobes in _COMPOUND_RES:
        if pattern.search(text):
            regions.update(lobes)

    for phrase, territory in lexicon.territory_map.items():
        if territory and phrase_pattern((phrase,)).search(text):
            regions.update(territory)

    return regions


def match_laterality(ground_text: str, lexicon: Optional[Lexicon] = None) -> Laterality:
    lexicon = lexicon or default_lexicon()
    text = normalize_text(ground_text)
    left = contains_any(text, lexicon.laterality_left)
    right = contains_any(text, lexicon.laterality_right)

    if contains_any(text, lexicon.laterality_bilateral) or (left and right):
        return Laterality.BILATERAL
    if left:
        return Laterality.LEFT
    if right:
        return Laterality.RIGHT
    if _BILATERAL_PLURAL_RE.search(text):
        return Laterality.BILATERAL
    return Laterality.UNSPECIFIED


def match_stage_keyword(text: str, lexicon: Optional[Lexicon] = None) -> Optional[Stage]:
    """Stage named directly in `text`; subacute is searched before acute."""
    lexicon = lexicon or default_lexicon()
    normalized = normalize_text(text)
    if _ACUTE_SUBACUTE_RE.search(normalized):
        return Stage.ACUTE_SUBACUTE
    if contains_any(normalized, lexicon.stage_subacute):
        return Stage.SUBACUTE
    if contains_any(normalized, lexicon.stage_acute):
        return Stage.ACUTE
    if contains_any(normalized, lexicon.stage_chronic):
        return Stage.CHRONIC
    return None


def match_lacunarity(text: str, lexicon: Optional[Lexicon] = None) -> bool:
    lexicon = lexicon or default_lexicon()
    return contains_any(text, lexicon.lacunar)


def match_cue(text: str, cue: ConstraintCue, lexicon: Optional[Lexicon] = None) -> bool:
    lexicon = lexicon or default_lexicon()
    return contains_any(text, lexicon.cue_phrases[cue])


def mentions_cortex(text: str) -> bool:
    return _CORTICAL_RE.search(normalize_text(text)) is not None
