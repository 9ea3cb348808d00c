import logging
from typing import Dict, Iterable, Optional, Sequence, Tuple

from agents.types import RegionSideEvidence
from lexicon.lexicon import Lexicon
from lexicon.matcher import default_lexicon, match_cue, match_stage_keyword, mentions_cortex
from lexicon.vocabulary import CEREBRAL_REGIONS, BrainRegion, ConstraintCue, Laterality, Modality, Stage

logger = logging.getLogger(__name__)

# Direct descriptors win over indirect chronicity markers.
STAGE_PRIORITY = (Stage.ACUTE_SUBACUTE, Stage.SUBACUTE, Stage.ACUTE, Stage.CHRONIC)

CT_ACUTE_SUPPORT = (
    ConstraintCue.HYPERDENSE_MCA,
    ConstraintCue.HYPERDENSITY_BASILAR,
    ConstraintCue.LOSS_GRAY_WHITE_DIFFERENTIATION,
    ConstraintCue.SULCAL_EFFACEMENT,
)
CT_CHRONIC_SUPPORT = (ConstraintCue.PROMINENCE_VENTRICLES_SULCI, ConstraintCue.ATROPHY)
MRI_CHRONIC_CUES = (
    ConstraintCue.FACILITATED_DIFFUSION,
    ConstraintCue.GLIOSIS_ENCEPHALOMALACIA,
    ConstraintCue.DILATION_VENTRICLES,
)


def stage_from_keywords(texts: Iterable[str], lexicon: Lexicon) -> Optional[Stage]:
    """Highest-priority stage named in any of `texts`, or None."""
    found = {match_stage_keyword(text, lexicon) for text in texts}
    for stage in STAGE_PRIORITY:
        if stage in found:
            return stage
    return None


def is_cortical(evidence: RegionSideEvidence) -> bool:
    return evidence.region in CEREBRAL_REGIONS or any(mentions_cortex(t) for t in evidence.ground_texts)


def _localized(evidence: RegionSideEvidence, cue: ConstraintCue, lexicon: Lexicon) -> bool:
    return is_cortical(evidence) and any(match_cue(t, cue, lexicon) for t in evidence.finding_texts)


def stage_from_constraints(evidence: RegionSideEvidence, modality: Modality, lexicon: Lexicon) -> Optional[Stage]:
    if modality == Modality.CT:
        hypodensity = _localized(evidence, ConstraintCue.HYPODENSITY_CORTICAL_SUBCORTICAL, lexicon)
        if hypodensity and any(evidence.cue(c) for c in CT_ACUTE_SUPPORT):
            return Stage.ACUTE
        if (hypodensity and any(evidence.cue(c) for c in CT_CHRONIC_SUPPORT)) or evidence.cue(
            ConstraintCue.GLIOSIS_ENCEPHALOMALACIA
        ):
            return Stage.CHRONIC
        return None

    diffusion = _localized(evidence, ConstraintCue.RESTRICTED_OR_SLOW_DIFFUSION, lexicon)
    if diffusion or evidence.cue(ConstraintCue.LOSS_FLOW_VOID_MCA_BASILAR):
        return Stage.ACUTE
    if any(evidence.cue(c) for c in MRI_CHRONIC_CUES):
        return Stage.CHRONIC
    return None


def infer_stage(evidence: RegionSideEvidence, modality: Modality, lexicon: Optional[Lexicon] = None) -> Stage:
    """
    Stage for one (region, side) pair.

    Args:
        evidence: finding/diagnosis/ground texts for the pair and the report's cue flags
        modality: report modality; selects the constraint set
        lexicon: keyword tables (defaults when None)

    Returns:
        Stage named by a keyword, else inferred from the constraints, else CantDetermine
    """
    lexicon = lexicon or default_lexicon()
    stage = stage_from_keywords(evidence.finding_texts + evidence.diagnosis_texts, lexicon)
    if stage is not None:
        return stage
    stage = stage_from_constraints(evidence, modality, lexicon)
    if stage is not None:
        logger.debug("[StageReasoner] %s/%s staged %s by constraints", evidence.region.value, evidence.side.value, stage.value)
        return stage
    return Stage.CANT_DETERMINE


class StageReasoningAgent:
    """Assigns a stroke stage to every (region, side) pair of a report."""

    def __init__(self, lexicon: Optional[Lexicon] = None):
        self.lexicon = lexicon or default_lexicon()

    def reason(
        self, evidence: Sequence[RegionSideEvidence], modality: Modality
    ) -> Dict[Tuple[BrainRegion, Laterality], Stage]:
        return {item.key: infer_stage(item, modality, self.lexicon) for item in evidence}
