"""
Lexicon tables and the keyed-table config format.

A config file has one `[section]` per table and one phrase per line:

    [stage_acute]
    acute

    [region:Cerebellum]
    cerebellum
    cerebellar

    [territory:mca]
    FrontalLobe
    ParietalLobe
    Insula

Lines starting with `#` are comments. A file passed as an override replaces only
the sections it contains; the rest come from the builtin defaults.
"""

import logging
import re
from dataclasses import dataclass, field
from typing import BinaryIO, Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple

from lexicon import defaults
from lexicon.vocabulary import BrainRegion, ConstraintCue, parse_label

logger = logging.getLogger(__name__)

PHRASE_TABLES = (
    "is_finding_ct",
    "is_finding_mri",
    "is_diagnosis",
    "stage_subacute",
    "stage_acute",
    "stage_chronic",
    "lacunar",
    "laterality_left",
    "laterality_right",
    "laterality_bilateral",
)

REGION_PREFIX = "region:"
TERRITORY_PREFIX = "territory:"
CUE_PREFIX = "cue:"

_SECTION_RE = re.compile(r"^\[([^\]]+)\]$")


class LexiconError(ValueError):
    """Raised when a lexicon table is missing or holds an invalid entry."""

    def __init__(self, table: str, message: str):
        self.table = table
        super().__init__(f"lexicon table [{table}]: {message}")


def normalize_phrase(phrase: str) -> str:
    return " ".join(phrase.lower().split())


@dataclass(frozen=True)
class Lexicon:
    """Immutable keyword tables. Build through `build_lexicon` or `load_lexicon`."""

    is_finding_ct: Tuple[str, ...]
    is_finding_mri: Tuple[str, ...]
    is_diagnosis: Tuple[str, ...]
    stage_subacute: Tuple[str, ...]
    stage_acute: Tuple[str, ...]
    stage_chronic: Tuple[str, ...]
    lacunar: Tuple[str, ...]
    laterality_left: Tuple[str, ...]
    laterality_right: Tuple[str, ...]
    laterality_bilateral: Tuple[str, ...]
    region_keywords: Mapping[BrainRegion, Tuple[str, ...]] = field(default_factory=dict)
    territory_map: Mapping[str, FrozenSet[BrainRegion]] = field(default_factory=dict)
    cue_phrases: Mapping[ConstraintCue, Tuple[str, ...]] = field(default_factory=dict)

    def phrases(self, table: str) -> Tuple[str, ...]:
        return getattr(self, table)

    def with_tables(self, **tables) -> "Lexicon":
        """Return a copy with the given tables replaced, re-validated."""
        raw = _as_raw_tables(self)
        raw.update({name: value for name, value in tables.items()})
        return build_lexicon(raw)


def _clean_phrases(table: str, phrases: Iterable[str]) -> Tuple[str, ...]:
    cleaned: List[str] = []
    for phrase in phrases:
        normalized = normalize_phrase(phrase)
        if not normalized:
            raise LexiconError(table, "empty phrase")
        # These would read back as a comment or a section header.
        if normalized.startswith("#") or _SECTION_RE.match(normalized):
            raise LexiconError(table, f"phrase {normalized!r} clashes with the config syntax")
        if normalized not in cleaned:
            cleaned.append(normalized)
    return tuple(cleaned)


def build_lexicon(tables: Mapping[str, object]) -> Lexicon:
    """
    Validate raw tables and freeze them into a Lexicon.

    Args:
        tables: phrase tables by name, plus `region_keywords`, `territory_map`
            and `cue_phrases` mappings

    Returns:
        Lexicon satisfying the lowercase / non-empty invariants
    """
    phrase_tables = {}
    for name in PHRASE_TABLES:
        if name not in tables:
            raise LexiconError(name, "missing mandatory table")
        phrase_tables[name] = _clean_phrases(name, tables[name])
        if not phrase_tables[name]:
            raise LexiconError(name, "table is empty")

    region_keywords = {}
    raw_regions = tables.get("region_keywords") or {}
    for region in BrainRegion:
        section = REGION_PREFIX + region.value
        if region not in raw_regions:
            raise LexiconError(section, "missing mandatory table")
        phrases = _clean_phrases(section, raw_regions[region])
        if not phrases:
            raise LexiconError(section, "region needs at least one phrase")
        region_keywords[region] = phrases

    territory_map = {}
    for phrase, regions in (tables.get("territory_map") or {}).items():
        key = normalize_phrase(phrase)
        if not key:
            raise LexiconError(TERRITORY_PREFIX, "empty territory phrase")
        territory_map[key] = frozenset(regions)

    cue_phrases = {}
    raw_cues = tables.get("cue_phrases") or {}
    for cue in ConstraintCue:
        section = CUE_PREFIX + cue.value
        if cue not in raw_cues:
            raise LexiconError(section, "missing mandatory table")
        phrases = _clean_phrases(section, raw_cues[cue])
        if not phrases:
            raise LexiconError(section, "cue needs at least one phrase")
        cue_phrases[cue] = phrases

    return Lexicon(
        region_keywords=region_keywords,
        territory_map=territory_map,
        cue_phrases=cue_phrases,
        **phrase_tables,
    )


def _default_tables() -> Dict[str, object]:
    return {
        "is_finding_ct": defaults.IS_FINDING_CT,
        "is_finding_mri": defaults.IS_FINDING_MRI,
        "is_diagnosis": defaults.IS_DIAGNOSIS,
        "stage_subacute": defaults.STAGE_SUBACUTE,
        "stage_acute": defaults.STAGE_ACUTE,
        "stage_chronic": defaults.STAGE_CHRONIC,
        "lacunar": defaults.LACUNAR,
        "laterality_left": defaults.LATERALITY_LEFT,
        "laterality_right": defaults.LATERALITY_RIGHT,
        "laterality_bilateral": defaults.LATERALITY_BILATERAL,
        "region_keywords": dict(defaults.REGION_KEYWORDS),
        "territory_map": dict(defaults.TERRITORY_MAP),
        "cue_phrases": dict(defaults.CUE_PHRASES),
    }


def _as_raw_tables(lexicon: Lexicon) -> Dict[str, object]:
    raw: Dict[str, object] = {name: lexicon.phrases(name) for name in PHRASE_TABLES}
    raw["region_keywords"] = dict(lexicon.region_keywords)
    raw["territory_map"] = dict(lexicon.territory_map)
    raw["cue_phrases"] = dict(lexicon.cue_phrases)
    return raw


def lexicon_from_defaults() -> Lexicon:
    return build_lexicon(_default_tables())


def _parse_sections(text: str) -> Dict[str, List[str]]:
    sections: Dict[str, List[str]] = {}
    current: Optional[str] = None
    for line_number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.strip()
        if not line or line.startswith("#"):
            continue
        header = _SECTION_RE.match(line)
        if header:
            current = header.group(1).strip()
            if current in sections:
                raise LexiconError(current, f"section repeated at line {line_number}")
            sections[current] = []
            continue
        if current is None:
            raise LexiconError("<none>", f"line {line_number} appears before any section header")
        sections[current].append(line)
    return sections


def _apply_sections(raw: Dict[str, object], sections: Mapping[str, List[str]]) -> None:
    region_keywords = dict(raw.get("region_keywords") or {})
    territory_map = dict(raw.get("territory_map") or {})
    cue_phrases = dict(raw.get("cue_phrases") or {})

    for section, lines in sections.items():
        if section in PHRASE_TABLES:
            raw[section] = lines
        elif section.startswith(REGION_PREFIX):
            label = section[len(REGION_PREFIX):]
            try:
                region = parse_label(BrainRegion, label)
            except ValueError as e:
                raise LexiconError(section, str(e)) from None
            region_keywords[region] = lines
        elif section.startswith(TERRITORY_PREFIX):
            phrase = section[len(TERRITORY_PREFIX):]
            try:
                territory_map[phrase] = {parse_label(BrainRegion, line) for line in lines}
            except ValueError as e:
                raise LexiconError(section, str(e)) from None
        elif section.startswith(CUE_PREFIX):
            label = section[len(CUE_PREFIX):]
            try:
                cue = parse_label(ConstraintCue, label)
            except ValueError as e:
                raise LexiconError(section, str(e)) from None
            cue_phrases[cue] = lines
        else:
            raise LexiconError(section, "unknown section")

    raw["region_keywords"] = region_keywords
    raw["territory_map"] = territory_map
    raw["cue_phrases"] = cue_phrases


def load_lexicon(source: Optional[BinaryIO] = None, merge_defaults: bool = True) -> Lexicon:
    """
    Load a lexicon from a config stream.

    Args:
        source: binary stream in the keyed-table format, or None for the builtin defaults
        merge_defaults: when True, sections in `source` replace the default tables;
            when False, `source` must define every mandatory table itself

    Returns:
        Validated Lexicon
    """
    if source is None:
        return lexicon_from_defaults()

    try:
        text = source.read().decode("utf-8")
    except UnicodeDecodeError as e:
        raise LexiconError(str(getattr(source, "name", "<file>")), f"not UTF-8: {e}") from None
    sections = _parse_sections(text)
    raw = _default_tables() if merge_defaults else {}
    _apply_sections(raw, sections)
    lexicon = build_lexicon(raw)
    logger.debug("[Lexicon] loaded %d sections (merge_defaults=%s)", len(sections), merge_defaults)
    return lexicon


def dump_lexicon(lexicon: Lexicon) -> str:
    """Render a lexicon in the config format; `load_lexicon(..., merge_defaults=False)` reads it back."""
    lines: List[str] = []

    def section(name: str, entries: Iterable[str]) -> None:
        lines.append(f"[{name}]")
        lines.extend(entries)
        lines.append("")

    for name in PHRASE_TABLES:
        section(name, lexicon.phrases(name))
    for region in BrainRegion:
        section(REGION_PREFIX + region.value, lexicon.region_keywords[region])
    for phrase in sorted(lexicon.territory_map):
        section(TERRITORY_PREFIX + phrase, sorted(r.value for r in lexicon.territory_map[phrase]))
    for cue in ConstraintCue:
        section(CUE_PREFIX + cue.value, lexicon.cue_phrases[cue])

    return "\n".join(lines)
