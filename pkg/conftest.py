import re
from typing import Iterable, Optional, Sequence, Tuple

import pytest

from agents.types import ElementKind, ReportDocument, Sentence, Span, SpatialFrame
from lexicon.vocabulary import Modality


def locate(text: str, phrase: str, after: int = 0) -> Span:
    """Span of the first whole-word occurrence of `phrase` at or after `after`."""
    match = re.compile(r"(?<!\w)" + re.escape(phrase) + r"(?!\w)").search(text, after)
    assert match is not None, f"{phrase!r} not found in {text!r} after {after}"
    return Span(match.start(), match.end(), match.group())


def make_frame(
    text: str,
    trigger: str,
    figure: Optional[str] = None,
    grounds: Sequence[str] = (),
    hedge: Optional[str] = None,
    diagnosis: Optional[str] = None,
    sentence_index: int = 0,
    trigger_after: int = 0,
    extra: Iterable[Tuple[ElementKind, str]] = (),
) -> SpatialFrame:
    """
    Frame over `text`, locating every element by its surface string.

    The Figure is searched from the start of the sentence; the trigger after
    `trigger_after`; Grounds, Hedge and Diagnosis after the trigger.
    """
    trigger_span = locate(text, trigger, trigger_after)
    elements = []
    if figure is not None:
        elements.append((ElementKind.FIGURE, locate(text, figure)))
    cursor = trigger_span.end
    for ground in grounds:
        span = locate(text, ground, cursor)
        elements.append((ElementKind.GROUND, span))
        cursor = span.end
    if hedge is not None:
        span = locate(text, hedge, cursor)
        elements.append((ElementKind.HEDGE, span))
        cursor = span.end
    if diagnosis is not None:
        elements.append((ElementKind.DIAGNOSIS, locate(text, diagnosis, cursor)))
    for kind, phrase in extra:
        elements.append((kind, locate(text, phrase)))
    return SpatialFrame(trigger=trigger_span, elements=tuple(elements), sentence_index=sentence_index)


def make_report(report_id: str, modality: Modality, sentences: Sequence[Tuple[str, Sequence[dict]]]) -> ReportDocument:
    """Build a report from (text, [make_frame kwargs]) pairs."""
    built = []
    for index, (text, frames) in enumerate(sentences):
        built.append(Sentence(
            text=text,
            frames=tuple(make_frame(text, sentence_index=index, **kwargs) for kwargs in frames),
        ))
    return ReportDocument(report_id=report_id, modality=modality, sentences=tuple(built))


PONS_SENTENCE = "Hypodensity is noted in the pons which likely represents a lacunar infarct."

FRONTOPARIETAL_SENTENCE = "Hypoattenuation in the right frontoparietal distribution consistent with acute infarction."

CEREBELLUM_SENTENCE = "There is an acute infarction in the lateral aspect of right cerebellum."
MIDBRAIN_SENTENCE = "There are several small acute infarctions in the right midbrain."
GLIOSIS_SENTENCE = "Encephalomalacia and gliosis are seen in the left cerebellum."

CORTICAL_SENTENCE = "There is cortical hypodensity in the right frontal lobe with effacement of the adjacent sulci."


@pytest.fixture
def pons_report() -> ReportDocument:
    return make_report("pons", Modality.CT, [
        (PONS_SENTENCE, [dict(
            trigger="in", figure="Hypodensity", grounds=["the pons"],
            hedge="likely represents", diagnosis="a lacunar infarct",
        )]),
    ])


@pytest.fixture
def region_specific_report() -> ReportDocument:
    """Three regions with different stages and sides in one MRI report."""
    return make_report("region-specific", Modality.MRI, [
        (CEREBELLUM_SENTENCE, [
            dict(trigger="in", figure="an acute infarction", grounds=["the lateral aspect"]),
            dict(trigger="of", figure="the lateral aspect", grounds=["right cerebellum"]),
        ]),
        (MIDBRAIN_SENTENCE, [
            dict(trigger="in", figure="several small acute infarctions", grounds=["the right midbrain"]),
        ]),
        (GLIOSIS_SENTENCE, [
            dict(trigger="in", figure="Encephalomalacia and gliosis", grounds=["the left cerebellum"]),
        ]),
    ])


@pytest.fixture
def cortical_report() -> ReportDocument:
    return make_report("cortical", Modality.CT, [
        (CORTICAL_SENTENCE, [
            dict(trigger="in", figure="cortical hypodensity", grounds=["the right frontal lobe"]),
            dict(trigger="of", figure="effacement", grounds=["the adjacent sulci"]),
        ]),
    ])


@pytest.fixture
def frontoparietal_report() -> ReportDocument:
    return make_report("frontoparietal", Modality.CT, [
        (FRONTOPARIETAL_SENTENCE, [dict(
            trigger="in", figure="Hypoattenuation", grounds=["the right frontoparietal distribution"],
            hedge="consistent with", diagnosis="acute infarction",
        )]),
    ])
