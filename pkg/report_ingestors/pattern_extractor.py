"""
Pattern-Based Frame Extractor

Builds spatial frames from raw report sentences with a fixed trigger list,
hedge markers and lexicon-anchored chunks. It lets the phenotyping pipeline run
end to end on plain text without a learned extractor.
"""

import re
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from agents.types import ElementKind, ReportDocument, Sentence, Span, SpatialFrame
from lexicon.lexicon import Lexicon
from lexicon.matcher import (
    default_lexicon,
    match_diagnosis,
    match_is_finding,
    match_lacunarity,
    match_laterality,
    match_region,
    match_stage_keyword,
)
from lexicon.vocabulary import Laterality, Modality


@dataclass(frozen=True)
class _Item:
    kind: str  # chunk | trigger | hedge | break | comma | coord
    start: int
    end: int


class PatternFrameExtractor:
    """Extract spatial frames from one sentence at a time"""

    TRIGGERS = ["in", "within", "of", "on", "at", "involving", "along", "near", "throughout"]

    HEDGE_MARKERS = [
        "consistent with",
        "suggesting",
        "suggestive of",
        "likely represents",
        "compatible with",
        "may represent",
    ]

    # Copulas, reporting verbs and relatives end a noun-phrase-like chunk.
    CHUNK_BREAKERS = [
        "is", "are", "was", "were", "be", "been",
        "noted", "seen", "identified", "demonstrated",
        "there", "which", "that", "with", "without", "also", "again",
    ]

    TOKEN_PATTERN = r"[A-Za-z0-9]+(?:[-/'][A-Za-z0-9]+)*|\S"

    def __init__(self, lexicon: Optional[Lexicon] = None):
        """
        Initialize the extractor

        Args:
            lexicon: keyword tables used to anchor Figure, Ground and Diagnosis chunks
        """
        self.lexicon = lexicon or default_lexicon()
        self.token_re = re.compile(self.TOKEN_PATTERN)
        hedges = sorted(self.HEDGE_MARKERS, key=len, reverse=True)
        self.hedge_re = re.compile(
            r"(?<![A-Za-z0-9])(?:" + "|".join(r"\s+".join(map(re.escape, h.split())) for h in hedges) + r")(?![A-Za-z0-9])",
            re.IGNORECASE,
        )
        self.triggers = frozenset(self.TRIGGERS)
        self.breakers = frozenset(self.CHUNK_BREAKERS)

    def is_anchor(self, text: str) -> bool:
        """A Figure or Diagnosis chunk must carry a finding, diagnosis, stage or lacunar keyword."""
        return (
            match_is_finding(text, Modality.CT, self.lexicon)
            or match_is_finding(text, Modality.MRI, self.lexicon)
            or match_diagnosis(text, self.lexicon)
            or match_stage_keyword(text, self.lexicon) is not None
            or match_lacunarity(text, self.lexicon)
        )

    def is_location(self, text: str) -> bool:
        return bool(match_region(text, self.lexicon)) or match_laterality(text, self.lexicon) != Laterality.UNSPECIFIED

    def segment(self, text: str) -> List[_Item]:
        """
        Split a sentence into chunks, triggers, hedge markers and breaks

        Args:
            text: sentence text

        Returns:
            Items in textual order
        """
        hedges = [(m.start(), m.end()) for m in self.hedge_re.finditer(text)]
        items: List[_Item] = [_Item("hedge", s, e) for s, e in hedges]
        chunk: Optional[Tuple[int, int]] = None
        conjunctions: List[Tuple[int, int]] = []

        def close_chunk():
            nonlocal chunk
            if chunk is not None:
                items.extend(self.split_coordination(text, chunk[0], chunk[1], conjunctions))
                chunk = None
            conjunctions.clear()

        for match in self.token_re.finditer(text):
            start, end = match.span()
            word = match.group().lower()
            if any(s <= start < e for s, e in hedges):
                close_chunk()
                continue
            if not word[0].isalnum():
                close_chunk()
                items.append(_Item("comma" if word == "," else "break", start, end))
            elif word in self.triggers:
                close_chunk()
                items.append(_Item("trigger", start, end))
            elif word in self.breakers:
                close_chunk()
                items.append(_Item("break", start, end))
            else:
                if word == "and" and chunk:
                    conjunctions.append((start, end))
                chunk = (chunk[0], end) if chunk else (start, end)
        close_chunk()

        items.sort(key=lambda item: item.start)
        return items

    def split_coordination(
        self, text: str, start: int, end: int, conjunctions: Sequence[Tuple[int, int]]
    ) -> List[_Item]:
        """
        Split a chunk at each inner "and" that starts a new mention

        The conjunct after "and" is a new mention when it names its own side after
        a region, or when it carries a finding anchor that the text before it
        lacks. "left frontal and parietal lobes", "the left and right thalami" and
        "encephalomalacia and gliosis" stay whole.

        Args:
            text: sentence text
            start: chunk start
            end: chunk end
            conjunctions: spans of the "and" tokens inside the chunk, in order

        Returns:
            Chunk items with a "coord" item at every split
        """
        items: List[_Item] = []
        piece_start = start
        for index, (and_start, and_end) in enumerate(conjunctions):
            conjunct_end = conjunctions[index + 1][0] if index + 1 < len(conjunctions) else end
            before = text[piece_start:and_start]
            after = text[and_end:conjunct_end]
            if not before.strip() or not after.strip():
                continue
            own_side = (
                match_laterality(after, self.lexicon) != Laterality.UNSPECIFIED
                and bool(match_region(before, self.lexicon))
            )
            new_finding = self.is_anchor(after) and not self.is_anchor(before)
            if not (own_side or new_finding):
                continue
            items.append(_Item("chunk", piece_start, piece_start + len(before.rstrip())))
            items.append(_Item("coord", and_start, and_end))
            piece_start = and_end + len(after) - len(after.lstrip())
        items.append(_Item("chunk", piece_start, end))
        return items

    def _grounds(self, text: str, items: List[_Item], position: int) -> List[Span]:
        grounds: List[Span] = []
        index = position + 1
        while index < len(items) and items[index].kind != "hedge":
            item = items[index]
            if item.kind == "chunk" and self.is_location(text[item.start:item.end]):
                grounds.append(Span(item.start, item.end, text[item.start:item.end]))
                # Coordinated locations belong to the same frame.
                while (
                    index + 2 < len(items)
                    and items[index + 1].kind in ("comma", "coord")
                    and items[index + 2].kind == "chunk"
                    and self.is_location(text[items[index + 2].start:items[index + 2].end])
                ):
                    index += 2
                    nxt = items[index]
                    grounds.append(Span(nxt.start, nxt.end, text[nxt.start:nxt.end]))
                break
            index += 1
        return grounds

    def _figure(self, text: str, items: List[_Item], position: int) -> Optional[Span]:
        for item in reversed(items[:position]):
            if item.kind == "chunk" and self.is_anchor(text[item.start:item.end]):
                return Span(item.start, item.end, text[item.start:item.end])
        return None

    def extract(self, text: str, sentence_index: int = 0) -> List[SpatialFrame]:
        """
        Extract frames from a sentence

        Args:
            text: sentence text
            sentence_index: position of the sentence in its report

        Returns:
            Frames ordered by trigger offset
        """
        items = self.segment(text)
        frames: List[Tuple[int, Span, List[Tuple[ElementKind, Span]]]] = []

        for position, item in enumerate(items):
            if item.kind != "trigger":
                continue
            figure = self._figure(text, items, position)
            if figure is None:
                continue
            elements = [(ElementKind.FIGURE, figure)]
            elements.extend((ElementKind.GROUND, g) for g in self._grounds(text, items, position))
            frames.append((position, Span(item.start, item.end, text[item.start:item.end]), elements))

        previous_hedge = -1
        for position, item in enumerate(items):
            if item.kind != "hedge":
                continue
            diagnosis = next(
                (
                    Span(c.start, c.end, text[c.start:c.end])
                    for c in items[position + 1:]
                    if c.kind == "chunk" and self.is_anchor(text[c.start:c.end])
                ),
                None,
            )
            if diagnosis is not None:
                hedge = Span(item.start, item.end, text[item.start:item.end])
                for trigger_position, _, elements in frames:
                    if previous_hedge < trigger_position < position:
                        elements.append((ElementKind.HEDGE, hedge))
                        elements.append((ElementKind.DIAGNOSIS, diagnosis))
            previous_hedge = position

        return [
            SpatialFrame(trigger=trigger, elements=tuple(elements), sentence_index=sentence_index)
            for _, trigger, elements in frames
        ]


def extract_frames(sentence_text: str, lexicon: Optional[Lexicon] = None, sentence_index: int = 0) -> List[SpatialFrame]:
    return PatternFrameExtractor(lexicon).extract(sentence_text, sentence_index)


def extract_report(
    report_id: str, modality: Modality, sentences: Sequence[str], lexicon: Optional[Lexicon] = None
) -> ReportDocument:
    """Wrap extracted frames for pre-split sentences into a ReportDocument."""
    extractor = PatternFrameExtractor(lexicon)
    return ReportDocument(
        report_id=report_id,
        modality=modality,
        sentences=tuple(
            Sentence(text=text, frames=tuple(extractor.extract(text, index)))
            for index, text in enumerate(sentences)
        ),
    )
