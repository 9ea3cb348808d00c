"""
Phenotype scoring.

Gold and predicted tuples are projected onto a variant (a subset of the four
features, optionally with coarse stages), deduplicated per report, and compared
as sets. Counts are summed over all reports before the ratios are taken (micro
averaging).
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from agents.types import Phenotype
from lexicon.vocabulary import Stage

logger = logging.getLogger(__name__)

AGGREGATION = "micro"


class Variant(str, Enum):
    BR = "BR"
    BR_CS = "BR+CS"
    BR_SSCO = "BR+SS_CO"
    BR_CS_SSCO = "BR+CS+SS_CO"
    BR_CS_SS = "BR+CS+SS"
    BR_CS_LC = "BR+CS+LC"
    BR_CS_SSCO_LC = "BR+CS+SS_CO+LC"

    @classmethod
    def parse(cls, name: str) -> "Variant":
        """Accept either the member name (BR_CS_SSCO) or the table label (BR+CS+SS_CO)."""
        for variant in cls:
            if name in (variant.name, variant.value):
                return variant
        raise ValueError(f"unknown variant {name!r}; expected one of {', '.join(v.name for v in cls)}")

    @property
    def uses_side(self) -> bool:
        return self not in (Variant.BR, Variant.BR_SSCO)

    @property
    def uses_stage(self) -> bool:
        return self == Variant.BR_CS_SS

    @property
    def uses_coarse_stage(self) -> bool:
        return self in (Variant.BR_SSCO, Variant.BR_CS_SSCO, Variant.BR_CS_SSCO_LC)

    @property
    def uses_lacunarity(self) -> bool:
        return self in (Variant.BR_CS_LC, Variant.BR_CS_SSCO_LC)


class CoarseStage(str, Enum):
    ACUTE = "CoarseAcute"
    CHRONIC = "CoarseChronic"
    UNKNOWN = "CoarseUnknown"


COARSE_STAGES = {
    Stage.ACUTE: CoarseStage.ACUTE,
    Stage.SUBACUTE: CoarseStage.ACUTE,
    Stage.ACUTE_SUBACUTE: CoarseStage.ACUTE,
    Stage.CHRONIC: CoarseStage.CHRONIC,
    Stage.CANT_DETERMINE: CoarseStage.UNKNOWN,
}


class EvaluationError(ValueError):
    pass


@dataclass(frozen=True)
class ReportCounts:
    report_id: str
    tp: int
    fp: int
    fn: int


@dataclass(frozen=True)
class EvalResult:
    variant: Variant
    tp: int
    fp: int
    fn: int
    precision: float
    recall: float
    f1: float
    aggregation: str = AGGREGATION
    per_report: Tuple[ReportCounts, ...] = field(default=(), compare=False)

    def to_dict(self, per_report: bool = False) -> Dict:
        result = {
            "variant": self.variant.name,
            "label": self.variant.value,
            "tp": self.tp,
            "fp": self.fp,
            "fn": self.fn,
            "precision": self.precision,
            "recall": self.recall,
            "f1": self.f1,
            "aggregation": self.aggregation,
        }
        if per_report:
            result["per_report"] = [
                {"report_id": c.report_id, "tp": c.tp, "fp": c.fp, "fn": c.fn} for c in self.per_report
            ]
        return result


def project(p: Phenotype, v: Variant) -> Tuple:
    """
    Keep only the features scored by `v`, in (region, side, stage, lacunar) order.

    Args:
        p: phenotype tuple
        v: evaluation variant

    Returns:
        Projected tuple, e.g. (Cerebellum, Left, CoarseChronic) for BR_CS_SSCO
    """
    projected: List = [p.region]
    if v.uses_side:
        projected.append(p.side)
    if v.uses_stage:
        projected.append(p.stage)
    if v.uses_coarse_stage:
        projected.append(COARSE_STAGES[p.stage])
    if v.uses_lacunarity:
        projected.append(p.lacunar)
    return tuple(projected)


def _ratio(numerator: int, denominator: int, name: str, variant: Variant) -> float:
    if denominator == 0:
        logger.warning("[Evaluator] %s undefined for %s (zero denominator); reported as 0", name, variant.name)
        return 0.0
    return numerator / denominator


def _projected(phenotypes: Iterable[Phenotype], v: Variant, exclude_unknown_stage: bool) -> Set[Tuple]:
    keep = (
        (lambda p: p.stage != Stage.CANT_DETERMINE)
        if exclude_unknown_stage and (v.uses_stage or v.uses_coarse_stage)
        else (lambda p: True)
    )
    return {project(p, v) for p in phenotypes if keep(p)}


def _index(records: Iterable, label: str) -> Dict[str, FrozenSet[Phenotype]]:
    indexed: Dict[str, FrozenSet[Phenotype]] = {}
    for record in records:
        report_id, phenotypes = (record.report_id, record.phenotypes) if hasattr(record, "report_id") else record
        if report_id in indexed:
            raise EvaluationError(f"duplicate report_id {report_id!r} in {label}")
        indexed[report_id] = frozenset(phenotypes)
    return indexed


def evaluate(
    gold: Sequence,
    predicted: Sequence[Tuple[str, Iterable[Phenotype]]],
    v: Variant,
    exclude_unknown_stage: bool = False,
) -> EvalResult:
    """
    Micro-averaged precision/recall/F1 of predicted against gold for one variant.

    Args:
        gold: GoldPhenotypeRecord values or (report_id, phenotypes) pairs
        predicted: (report_id, phenotypes) pairs; every id must appear in gold
        v: variant to project onto
        exclude_unknown_stage: drop CantDetermine tuples for stage-bearing variants

    Returns:
        EvalResult with per-report counts attached
    """
    gold_index = _index(gold, "gold")
    predicted_index = _index(predicted, "predictions")

    missing = sorted(set(predicted_index) - set(gold_index))
    if missing:
        raise EvaluationError(f"predicted report_id(s) missing from gold: {', '.join(missing)}")

    tp = fp = fn = 0
    per_report: List[ReportCounts] = []
    for report_id in sorted(gold_index):
        g = _projected(gold_index[report_id], v, exclude_unknown_stage)
        p = _projected(predicted_index.get(report_id, frozenset()), v, exclude_unknown_stage)
        counts = ReportCounts(report_id, len(g & p), len(p - g), len(g - p))
        tp, fp, fn = tp + counts.tp, fp + counts.fp, fn + counts.fn
        per_report.append(counts)

    precision = _ratio(tp, tp + fp, "precision", v)
    recall = _ratio(tp, tp + fn, "recall", v)
    f1 = 2 * precision * recall / (precision + recall) if precision + recall > 0 else _ratio(0, 0, "f1", v)
    return EvalResult(v, tp, fp, fn, precision, recall, f1, per_report=tuple(per_report))


def evaluate_all(
    gold: Sequence,
    predicted: Sequence[Tuple[str, Iterable[Phenotype]]],
    variants: Optional[Sequence[Variant]] = None,
    exclude_unknown_stage: bool = False,
) -> List[EvalResult]:
    return [evaluate(gold, predicted, v, exclude_unknown_stage) for v in (variants or list(Variant))]
