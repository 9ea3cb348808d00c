"""
Corpus Readers and Writers

Reads and writes the line-delimited report corpora (sentences with frames),
gold phenotype files and predicted phenotype files.
"""

import logging
from dataclasses import dataclass, field
from typing import BinaryIO, FrozenSet, Iterable, Iterator, List, Sequence, Set, Tuple, Type, TypeVar

from pydantic import BaseModel, ValidationError

from agents.types import Phenotype, ReportDocument, Sentence, Span, SpatialFrame, ValidationFinding, validate_report
from report_ingestors.schemas import (
    ElementRecord,
    FrameRecord,
    PhenotypeEntry,
    PhenotypeLine,
    RawTextRecord,
    ReportRecord,
    SentenceRecord,
    SpanRecord,
)

logger = logging.getLogger(__name__)

# Annotation allows at most this many tuples per report; predictions are uncapped.
GOLD_PHENOTYPE_CAP = 5

_UNKNOWN_LABEL_MESSAGES = {
    "modality": "unknown modality",
    "kind": "unknown element kind",
    "side": "unknown side label",
    "region": "unknown region label",
    "stage": "unknown stage label",
}

RecordT = TypeVar("RecordT", bound=BaseModel)


class CorpusFormatError(ValueError):
    """A line of an input file could not be read."""

    def __init__(self, line_number: int, field_name: str, message: str):
        self.line_number = line_number
        self.field_name = field_name
        super().__init__(f"line {line_number}: {field_name}: {message}")


class CorpusValidationError(ValueError):
    """Loaded reports broke span or ordering invariants."""

    def __init__(self, findings: Sequence[ValidationFinding]):
        self.findings = list(findings)
        super().__init__(f"{len(self.findings)} validation finding(s); first: {self.findings[0]}")


@dataclass(frozen=True)
class GoldPhenotypeRecord:
    report_id: str
    phenotypes: FrozenSet[Phenotype]
    warnings: Tuple[str, ...] = field(default=(), compare=False)


def _describe(error: ValidationError) -> Tuple[str, str]:
    first = error.errors()[0]
    location = [str(part) for part in first.get("loc", ())]
    field_name = ".".join(location) or "<record>"
    last = location[-1] if location else ""
    if first.get("type") == "enum" and last in _UNKNOWN_LABEL_MESSAGES:
        return field_name, f"{_UNKNOWN_LABEL_MESSAGES[last]}: {first.get('input')!r}"
    return field_name, first.get("msg", "invalid value")


def _read_records(source: BinaryIO, model: Type[RecordT]) -> Iterator[Tuple[int, RecordT]]:
    for line_number, raw in enumerate(source, start=1):
        try:
            line = raw.decode("utf-8").strip()
        except UnicodeDecodeError as e:
            raise CorpusFormatError(line_number, "<line>", f"not UTF-8: {e}") from None
        if not line:
            continue
        try:
            yield line_number, model.model_validate_json(line)
        except ValidationError as e:
            field_name, message = _describe(e)
            raise CorpusFormatError(line_number, field_name, message) from None


def _span(record: SpanRecord) -> Span:
    return Span(record.start, record.end, record.text)


def _to_report(record: ReportRecord) -> ReportDocument:
    sentences = []
    for index, sentence in enumerate(record.sentences):
        frames = tuple(
            SpatialFrame(
                trigger=_span(frame.trigger),
                elements=tuple((e.kind, Span(e.start, e.end, e.text)) for e in frame.elements),
                sentence_index=index,
            )
            for frame in sentence.frames
        )
        sentences.append(Sentence(text=sentence.text, frames=frames))
    return ReportDocument(report_id=record.report_id, modality=record.modality, sentences=tuple(sentences))


def _to_record(report: ReportDocument) -> ReportRecord:
    return ReportRecord(
        report_id=report.report_id,
        modality=report.modality,
        sentences=[
            SentenceRecord(
                text=sentence.text,
                frames=[
                    FrameRecord(
                        trigger=SpanRecord(start=f.trigger.start, end=f.trigger.end, text=f.trigger.text),
                        elements=[
                            ElementRecord(kind=kind, start=span.start, end=span.end, text=span.text)
                            for kind, span in f.elements
                        ],
                    )
                    for f in sentence.frames
                ],
            )
            for sentence in report.sentences
        ],
    )


def load_reports(source: BinaryIO, validate: bool = True) -> List[ReportDocument]:
    """
    Read a frame corpus.

    Args:
        source: binary stream, one report per line
        validate: raise CorpusValidationError when any report has findings

    Returns:
        Reports in input order
    """
    reports: List[ReportDocument] = []
    seen: Set[str] = set()
    for line_number, record in _read_records(source, ReportRecord):
        if record.report_id in seen:
            raise CorpusFormatError(line_number, "report_id", f"duplicate report_id {record.report_id!r}")
        seen.add(record.report_id)
        reports.append(_to_report(record))

    if validate:
        findings = [finding for report in reports for finding in validate_report(report)]
        if findings:
            raise CorpusValidationError(findings)

    logger.info("[CorpusReader] loaded %d reports", len(reports))
    return reports


def write_reports(reports: Iterable[ReportDocument], sink: BinaryIO) -> None:
    for report in reports:
        sink.write(_to_record(report).model_dump_json().encode("utf-8") + b"\n")


def load_raw_text(source: BinaryIO) -> List[RawTextRecord]:
    records: List[RawTextRecord] = []
    seen: Set[str] = set()
    for line_number, record in _read_records(source, RawTextRecord):
        if record.report_id in seen:
            raise CorpusFormatError(line_number, "report_id", f"duplicate report_id {record.report_id!r}")
        seen.add(record.report_id)
        records.append(record)
    return records


def _phenotype(entry: PhenotypeEntry) -> Phenotype:
    return Phenotype(side=entry.side, region=entry.region, stage=entry.stage, lacunar=entry.lacunar)


def _load_phenotype_lines(source: BinaryIO, cap: int = 0) -> List[GoldPhenotypeRecord]:
    records: List[GoldPhenotypeRecord] = []
    seen: Set[str] = set()
    for line_number, line in _read_records(source, PhenotypeLine):
        if line.report_id in seen:
            raise CorpusFormatError(line_number, "report_id", f"duplicate report_id {line.report_id!r}")
        seen.add(line.report_id)

        phenotypes: List[Phenotype] = []
        warnings: List[str] = []
        for entry in line.phenotypes:
            phenotype = _phenotype(entry)
            if phenotype in phenotypes:
                warning = f"duplicate phenotype ({phenotype}) dropped"
                warnings.append(warning)
                logger.warning("[CorpusReader] line %d, report %s: %s", line_number, line.report_id, warning)
                continue
            phenotypes.append(phenotype)

        if cap and len(phenotypes) > cap:
            raise CorpusFormatError(
                line_number, "phenotypes",
                f"{len(phenotypes)} phenotypes exceed the cap of {cap} per report",
            )
        records.append(GoldPhenotypeRecord(line.report_id, frozenset(phenotypes), tuple(warnings)))
    return records


def load_gold(source: BinaryIO) -> List[GoldPhenotypeRecord]:
    """Read a gold phenotype file; at most five distinct tuples per report."""
    records = _load_phenotype_lines(source, cap=GOLD_PHENOTYPE_CAP)
    logger.info("[CorpusReader] loaded gold phenotypes for %d reports", len(records))
    return records


def load_predictions(source: BinaryIO) -> List[Tuple[str, FrozenSet[Phenotype]]]:
    return [(record.report_id, record.phenotypes) for record in _load_phenotype_lines(source)]


def write_phenotypes(records: Iterable[Tuple[str, Iterable[Phenotype]]], sink: BinaryIO) -> None:
    """
    Write phenotype records in canonical order.

    Args:
        records: (report_id, phenotypes) pairs
        sink: binary stream; records sorted by report_id, tuples by (side, region, stage, lacunar)
    """
    for report_id, phenotypes in sorted(records, key=lambda r: r[0]):
        line = PhenotypeLine(
            report_id=report_id,
            phenotypes=[
                PhenotypeEntry(side=p.side, region=p.region, stage=p.stage, lacunar=p.lacunar)
                for p in sorted(set(phenotypes), key=Phenotype.sort_key)
            ],
        )
        sink.write(line.model_dump_json().encode("utf-8") + b"\n")
