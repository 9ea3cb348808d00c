"""
Pydantic record models for the line-delimited corpus files.

Report corpus line:
    {"report_id": ..., "modality": "CT"|"MRI",
     "sentences": [{"text": ..., "frames": [{"trigger": {"start", "end", "text"},
                                             "elements": [{"kind", "start", "end", "text"}]}]}]}

Phenotype line (gold and predicted):
    {"report_id": ..., "phenotypes": [{"side", "region", "stage", "lacunar"}]}

Raw-text line (extract --from-text):
    {"report_id": ..., "modality": ..., "sentences": ["...", "..."]}
"""

from typing import List

from pydantic import BaseModel, ConfigDict, Field

from agents.types import ElementKind
from lexicon.vocabulary import BrainRegion, Laterality, Modality, Stage


class _Record(BaseModel):
    model_config = ConfigDict(extra="forbid")


class SpanRecord(_Record):
    start: int
    end: int
    text: str


class ElementRecord(_Record):
    kind: ElementKind
    start: int
    end: int
    text: str


class FrameRecord(_Record):
    trigger: SpanRecord
    elements: List[ElementRecord] = Field(default_factory=list)


class SentenceRecord(_Record):
    text: str
    frames: List[FrameRecord] = Field(default_factory=list)


class ReportRecord(_Record):
    report_id: str = Field(..., min_length=1)
    modality: Modality
    sentences: List[SentenceRecord] = Field(default_factory=list)


class PhenotypeEntry(_Record):
    side: Laterality
    region: BrainRegion
    stage: Stage
    lacunar: bool


class PhenotypeLine(_Record):
    report_id: str = Field(..., min_length=1)
    phenotypes: List[PhenotypeEntry] = Field(default_factory=list)


class RawTextRecord(_Record):
    report_id: str = Field(..., min_length=1)
    modality: Modality
    sentences: List[str] = Field(default_factory=list)
