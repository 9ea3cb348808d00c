"""
Closed label vocabularies shared by the lexicon, the engine and the file formats.

Enum values are the exact labels written to and read from phenotype files.
"""

from enum import Enum


class Modality(str, Enum):
    CT = "CT"
    MRI = "MRI"


class BrainRegion(str, Enum):
    CEREBRAL_HEMISPHERE = "CerebralHemisphere"
    FRONTAL_LOBE = "FrontalLobe"
    OCCIPITAL_LOBE = "OccipitalLobe"
    PARIETAL_LOBE = "ParietalLobe"
    TEMPORAL_LOBE = "TemporalLobe"
    CEREBELLUM = "Cerebellum"
    BRAINSTEM = "Brainstem"
    BASAL_GANGLIA = "BasalGanglia"
    THALAMUS = "Thalamus"
    CEREBRAL_PEDUNCLE = "CerebralPeduncle"
    INTERNAL_EXTERNAL_CAPSULE = "InternalExternalCapsule"
    CORONA_RADIATA = "CoronaRadiata"
    INSULA = "Insula"
    WATERSHED = "Watershed"


# Regions counted as cortical/subcortical by the stage constraints.
CEREBRAL_REGIONS = frozenset({
    BrainRegion.CEREBRAL_HEMISPHERE,
    BrainRegion.FRONTAL_LOBE,
    BrainRegion.OCCIPITAL_LOBE,
    BrainRegion.PARIETAL_LOBE,
    BrainRegion.TEMPORAL_LOBE,
    BrainRegion.INSULA,
})


class Laterality(str, Enum):
    LEFT = "Left"
    RIGHT = "Right"
    BILATERAL = "Bilateral"
    UNSPECIFIED = "Unspecified"


class Stage(str, Enum):
    ACUTE = "Acute"
    SUBACUTE = "Subacute"
    ACUTE_SUBACUTE = "AcuteSubacute"
    CHRONIC = "Chronic"
    CANT_DETERMINE = "CantDetermine"


class ConstraintCue(str, Enum):
    HYPODENSITY_CORTICAL_SUBCORTICAL = "HypodensityCorticalSubcortical"
    HYPERDENSE_MCA = "HyperdenseMCA"
    HYPERDENSITY_BASILAR = "HyperdensityBasilar"
    LOSS_GRAY_WHITE_DIFFERENTIATION = "LossGrayWhiteDifferentiation"
    SULCAL_EFFACEMENT = "SulcalEffacement"
    PROMINENCE_VENTRICLES_SULCI = "ProminenceVentriclesSulci"
    ATROPHY = "Atrophy"
    GLIOSIS_ENCEPHALOMALACIA = "GliosisEncephalomalacia"
    RESTRICTED_OR_SLOW_DIFFUSION = "RestrictedOrSlowDiffusion"
    LOSS_FLOW_VOID_MCA_BASILAR = "LossFlowVoidMCABasilar"
    FACILITATED_DIFFUSION = "FacilitatedDiffusion"
    DILATION_VENTRICLES = "DilationVentricles"


def parse_label(enum_cls, label: str):
    """Look up an enum member by its file label, raising ValueError on unknown labels."""
    try:
        return enum_cls(label)
    except ValueError:
        raise ValueError(f"unknown {enum_cls.__name__} label: {label!r}") from None
