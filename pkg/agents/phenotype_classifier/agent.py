import asyncio
import logging
from typing import Dict, List, Optional, Sequence, Set, Tuple

from agents.base_agent import BaseAgent
from agents.frame_chainer.agent import FrameChain, FrameChainAgent
from agents.stage_reasoner.agent import StageReasoningAgent
from agents.types import Phenotype, RegionSideEvidence, ReportDocument, Span
from lexicon.lexicon import Lexicon
from lexicon.matcher import (
    default_lexicon,
    match_cue,
    match_is_related,
    match_lacunarity,
    match_laterality,
    match_region,
)
from lexicon.vocabulary import BrainRegion, ConstraintCue, Laterality

logger = logging.getLogger(__name__)

EvidenceKey = Tuple[BrainRegion, Laterality]


def propagate_laterality(grounds: Sequence[Span], lexicon: Optional[Lexicon] = None) -> List[Tuple[Span, Laterality]]:
    """
    Side for each coordinated Ground.

    A Ground without a laterality term takes the side of the nearest preceding
    lateralized Ground ("left frontal and parietal lobes" -> both Left).
    """
    lexicon = lexicon or default_lexicon()
    sides: List[Tuple[Span, Laterality]] = []
    inherited = Laterality.UNSPECIFIED
    for ground in grounds:
        side = match_laterality(ground.text, lexicon)
        if side == Laterality.UNSPECIFIED:
            side = inherited
        else:
            inherited = side
        sides.append((ground, side))
    return sides


def report_cue_texts(report: ReportDocument) -> List[str]:
    """Figure/Ground/Diagnosis texts of every frame plus each "Figure trigger Ground" relation."""
    texts: List[str] = []
    for frame in report.frames():
        figures = frame.figures
        grounds = frame.grounds
        texts.extend(span.text for span in figures)
        texts.extend(span.text for span in grounds)
        texts.extend(span.text for span in frame.diagnoses)
        texts.extend(f"{f.text} {frame.trigger.text} {g.text}" for f in figures for g in grounds)
    return texts


def report_cue_flags(report: ReportDocument, lexicon: Optional[Lexicon] = None) -> Dict[ConstraintCue, bool]:
    lexicon = lexicon or default_lexicon()
    texts = report_cue_texts(report)
    return {cue: any(match_cue(text, cue, lexicon) for text in texts) for cue in ConstraintCue}


def chain_is_related(chain: FrameChain, report: ReportDocument, lexicon: Lexicon) -> bool:
    texts = [span.text for span in chain.merged_figure + chain.merged_diagnosis]
    return any(match_is_related(text, report.modality, lexicon) for text in texts)


def collect_evidence(
    report: ReportDocument, lexicon: Optional[Lexicon] = None, chainer: Optional[FrameChainAgent] = None
) -> List[RegionSideEvidence]:
    """
    Group IS-related chains of a report by (region, side).

    Args:
        report: validated report
        lexicon: keyword tables (defaults when None)
        chainer: frame chaining agent (a fresh one when None)

    Returns:
        One evidence record per (region, side), in order of first mention
    """
    lexicon = lexicon or default_lexicon()
    chainer = chainer or FrameChainAgent()
    flags = report_cue_flags(report, lexicon)
    grouped: Dict[EvidenceKey, Dict[str, List[str]]] = {}

    for chain in chainer.chain([sentence.frames for sentence in report.sentences]):
        if not chain_is_related(chain, report, lexicon):
            continue
        figures = [span.text for span in chain.merged_figure]
        diagnoses = [span.text for span in chain.merged_diagnosis]
        for ground, side in propagate_laterality(chain.merged_ground, lexicon):
            for region in sorted(match_region(ground.text, lexicon), key=lambda r: r.value):
                # One record per (region, side); stage priority settles differing
                # stages for the pair instead of emitting one tuple per stage.
                bucket = grouped.setdefault((region, side), {"finding": [], "diagnosis": [], "ground": []})
                bucket["finding"].extend(figures)
                bucket["diagnosis"].extend(diagnoses)
                bucket["ground"].append(ground.text)

    return [
        RegionSideEvidence(
            region=region,
            side=side,
            finding_texts=tuple(bucket["finding"]),
            diagnosis_texts=tuple(bucket["diagnosis"]),
            ground_texts=tuple(bucket["ground"]),
            cue_flags=flags,
        )
        for (region, side), bucket in grouped.items()
    ]


def classify_report(
    report: ReportDocument,
    lexicon: Optional[Lexicon] = None,
    chainer: Optional[FrameChainAgent] = None,
    stage_reasoner: Optional[StageReasoningAgent] = None,
) -> Set[Phenotype]:
    """
    Phenotype tuples for one report.

    Args:
        report: validated report
        lexicon: keyword tables (defaults when None)
        chainer: frame chaining agent (a fresh one when None)
        stage_reasoner: stage agent (one over `lexicon` when None)

    Returns:
        Deduplicated (side, region, stage, lacunar) tuples; empty when no chain is IS-related
    """
    lexicon = lexicon or default_lexicon()
    stage_reasoner = stage_reasoner or StageReasoningAgent(lexicon)
    evidence = collect_evidence(report, lexicon, chainer)
    stages = stage_reasoner.reason(evidence, report.modality)

    phenotypes: Set[Phenotype] = set()
    for item in evidence:
        texts = item.finding_texts + item.diagnosis_texts
        phenotypes.add(Phenotype(
            side=item.side,
            region=item.region,
            stage=stages[item.key],
            lacunar=any(match_lacunarity(text, lexicon) for text in texts),
        ))
    if not phenotypes:
        logger.debug("[PhenotypeClassifier] report %s yielded no phenotype", report.report_id)
    return phenotypes


class PhenotypeClassifierAgent(BaseAgent):
    """Runs the chaining and stage agents over each report and assembles its phenotypes."""

    def __init__(self, lexicon: Optional[Lexicon] = None):
        super().__init__(name="PhenotypeClassifierAgent")
        self.lexicon = lexicon or default_lexicon()
        self.chainer = FrameChainAgent()
        self.stage_reasoner = StageReasoningAgent(self.lexicon)

    async def analyze(self, report: ReportDocument) -> Set[Phenotype]:
        return await asyncio.to_thread(classify_report, report, self.lexicon, self.chainer, self.stage_reasoner)

    async def analyze_all(self, reports: Sequence[ReportDocument]) -> List[Tuple[str, Set[Phenotype]]]:
        """Classify reports concurrently; results keep input order."""
        results = await asyncio.gather(*(self.analyze(report) for report in reports))
        return [(report.report_id, phenotypes) for report, phenotypes in zip(reports, results)]
