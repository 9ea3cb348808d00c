"""
Frame data model: spans, spatial frames, sentences and reports, plus the
Phenotype tuple produced from them.

All values are frozen. Spans are not checked on construction; validate_report
reports broken offsets as findings instead.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import List, Mapping, Optional, Tuple

from lexicon.vocabulary import BrainRegion, ConstraintCue, Laterality, Modality, Stage


class ElementKind(str, Enum):
    FIGURE = "Figure"
    GROUND = "Ground"
    HEDGE = "Hedge"
    DIAGNOSIS = "Diagnosis"
    RELATIVE_POSITION = "RelativePosition"
    DISTANCE = "Distance"
    POSITION_STATUS = "PositionStatus"
    REASON = "Reason"
    ASSOCIATED_PROCESS = "AssociatedProcess"


@dataclass(frozen=True)
class Span:
    start: int
    end: int
    text: str

    def overlaps(self, other: "Span") -> bool:
        return self.start < other.end and other.start < self.end

    def __str__(self):
        return f"{self.text!r}@{self.start}:{self.end}"


@dataclass(frozen=True)
class SpatialFrame:
    trigger: Span
    elements: Tuple[Tuple[ElementKind, Span], ...] = ()
    sentence_index: int = 0

    @property
    def figures(self) -> List[Span]:
        return elements_of(self, ElementKind.FIGURE)

    @property
    def grounds(self) -> List[Span]:
        return elements_of(self, ElementKind.GROUND)

    @property
    def diagnoses(self) -> List[Span]:
        return elements_of(self, ElementKind.DIAGNOSIS)


@dataclass(frozen=True)
class Sentence:
    text: str
    frames: Tuple[SpatialFrame, ...] = ()


@dataclass(frozen=True)
class ReportDocument:
    report_id: str
    modality: Modality
    sentences: Tuple[Sentence, ...] = ()

    def frames(self) -> List[SpatialFrame]:
        return [frame for sentence in self.sentences for frame in sentence.frames]


@dataclass(frozen=True)
class Phenotype:
    side: Laterality
    region: BrainRegion
    stage: Stage
    lacunar: bool

    def sort_key(self) -> Tuple[str, str, str, bool]:
        return (self.side.value, self.region.value, self.stage.value, self.lacunar)

    def __str__(self):
        lacunarity = "lacunar" if self.lacunar else "not lacunar"
        return f"{self.side.value}, {self.region.value}, {self.stage.value}, {lacunarity}"


@dataclass(frozen=True)
class ValidationFinding:
    report_id: str
    sentence_index: Optional[int]
    frame_index: Optional[int]
    element: str
    invariant: str
    message: str = field(default="", compare=False)

    def __str__(self):
        where = f"report {self.report_id!r}"
        if self.sentence_index is not None:
            where += f", sentence {self.sentence_index}"
        if self.frame_index is not None:
            where += f", frame {self.frame_index}"
        if self.element:
            where += f", {self.element}"
        return f"{where}: {self.invariant}" + (f" ({self.message})" if self.message else "")


def elements_of(frame: SpatialFrame, kind: ElementKind) -> List[Span]:
    """All spans of `kind` in `frame`, in textual order."""
    spans = [span for element_kind, span in frame.elements if element_kind == kind]
    return sorted(spans, key=lambda s: (s.start, s.end))


def _span_findings(span: Span, sentence_text: str) -> List[Tuple[str, str]]:
    problems = []
    if not span.start < span.end:
        problems.append(("span start < end violated", f"start={span.start} end={span.end}"))
        return problems
    if len(span.text) != span.end - span.start:
        problems.append(("span text length equals end - start violated", f"len={len(span.text)}"))
    if span.start < 0 or span.end > len(sentence_text):
        problems.append(("span within sentence violated", f"sentence length {len(sentence_text)}"))
    elif sentence_text[span.start:span.end] != span.text:
        problems.append((
            "span text equals sentence substring violated",
            f"{span.text!r} != {sentence_text[span.start:span.end]!r}",
        ))
    return problems


def validate_report(report: ReportDocument) -> List[ValidationFinding]:
    """
    Check span, ordering and bookkeeping invariants of a report.

    Args:
        report: report to check

    Returns:
        Findings, empty iff the report is well formed
    """
    findings: List[ValidationFinding] = []
    rid = report.report_id

    if not rid:
        findings.append(ValidationFinding(rid, None, None, "", "report_id non-empty violated"))

    for s_idx, sentence in enumerate(report.sentences):
        previous_start = None
        for f_idx, frame in enumerate(sentence.frames):
            if frame.sentence_index != s_idx:
                findings.append(ValidationFinding(
                    rid, s_idx, f_idx, "",
                    "sentence_index matches sentence position violated",
                    f"frame says {frame.sentence_index}",
                ))
            for invariant, message in _span_findings(frame.trigger, sentence.text):
                findings.append(ValidationFinding(rid, s_idx, f_idx, "trigger", invariant, message))

            counters = {}
            for kind, span in frame.elements:
                position = counters.get(kind, 0)
                counters[kind] = position + 1
                label = f"{kind.value}[{position}]"
                for invariant, message in _span_findings(span, sentence.text):
                    findings.append(ValidationFinding(rid, s_idx, f_idx, label, invariant, message))

            if previous_start is not None and frame.trigger.start < previous_start:
                findings.append(ValidationFinding(
                    rid, s_idx, f_idx, "trigger",
                    "frames ordered by trigger start violated",
                    f"{frame.trigger.start} after {previous_start}",
                ))
            previous_start = frame.trigger.start

    return findings


@dataclass(frozen=True)
class RegionSideEvidence:
    """Everything a report says about one (region, side) pair."""

    region: BrainRegion
    side: Laterality
    finding_texts: Tuple[str, ...] = ()
    diagnosis_texts: Tuple[str, ...] = ()
    ground_texts: Tuple[str, ...] = ()
    # Report-wide, shared by every pair of the same report.
    cue_flags: Mapping[ConstraintCue, bool] = field(default_factory=dict, compare=False)

    @property
    def key(self) -> Tuple[BrainRegion, Laterality]:
        return (self.region, self.side)

    def cue(self, cue: ConstraintCue) -> bool:
        return bool(self.cue_flags.get(cue, False))
