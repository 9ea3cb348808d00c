"""
Builtin keyword tables.

Finding, stage and lacunarity keywords are the radiologist-curated lists.
Region phrases other than basal ganglia follow standard neuroanatomy and can be
replaced through a lexicon config file.
"""

from lexicon.vocabulary import BrainRegion, ConstraintCue

IS_FINDING_CT = [
    "hypodensity",
    "hypodensities",
    "hyperdensity",
    "hyperdensities",
    "hypodense",
    "hypoattenuation",
    "hypo-attenuation",
    "low attenuation",
    "low-attenuation",
    "hypoattenuating",
    "hypo-attenuating",
    "low attenuating",
    "low-attenuating",
    "decreased attenuation",
    "lacune",
    "infarct",
    "lesion",
]

IS_FINDING_MRI = [
    "restricted diffusion",
    "slow diffusion",
    "susceptibility artifact",
    "signal",
    "infarct",
]

IS_DIAGNOSIS = [
    "infarct",
    "infarcts",
    "infarction",
    "infarctions",
    "ischemia",
    "ischemic",
    "stroke",
    "thromboembolic",
    "thromboembolism",
]

STAGE_SUBACUTE = ["sub-acute", "subacute", "sub acute", "evolving"]
STAGE_ACUTE = ["acute"]
STAGE_CHRONIC = ["encephalomalacia", "gliosis", "known", "old", "previous", "prior"]

LACUNAR = ["lacune", "lacunar"]

LATERALITY_LEFT = ["left"]
LATERALITY_RIGHT = ["right"]
LATERALITY_BILATERAL = ["both", "bilateral", "bilaterally"]

REGION_KEYWORDS = {
    BrainRegion.CEREBRAL_HEMISPHERE: ["cerebral hemisphere", "hemisphere"],
    BrainRegion.FRONTAL_LOBE: ["frontal"],
    BrainRegion.OCCIPITAL_LOBE: ["occipital"],
    BrainRegion.PARIETAL_LOBE: ["parietal"],
    BrainRegion.TEMPORAL_LOBE: ["temporal"],
    BrainRegion.CEREBELLUM: ["cerebellum", "cerebellar"],
    BrainRegion.BRAINSTEM: ["brainstem", "pons", "midbrain", "medulla", "medulla oblongata"],
    BrainRegion.BASAL_GANGLIA: [
        "basal ganglia",
        "caudate",
        "caudate nucleus",
        "caudate head",
        "caudate nucleus head",
        "putamen",
        "globus pallidus",
        "lentiform nucleus",
    ],
    BrainRegion.THALAMUS: ["thalamus", "thalami", "thalamic"],
    BrainRegion.CEREBRAL_PEDUNCLE: ["cerebral peduncle"],
    BrainRegion.INTERNAL_EXTERNAL_CAPSULE: ["internal capsule", "external capsule", "capsule", "capsules"],
    BrainRegion.CORONA_RADIATA: ["corona radiata"],
    BrainRegion.INSULA: ["insula", "insular"],
    BrainRegion.WATERSHED: ["watershed"],
}

# Vascular territories. Only the MCA supply area is fixed; the others are
# present so a config can fill them in.
TERRITORY_MAP = {
    "mca": {BrainRegion.FRONTAL_LOBE, BrainRegion.PARIETAL_LOBE, BrainRegion.INSULA},
    "middle cerebral artery": {BrainRegion.FRONTAL_LOBE, BrainRegion.PARIETAL_LOBE, BrainRegion.INSULA},
    "pca": set(),
    "aca": set(),
    "basilar": set(),
}

CUE_PHRASES = {
    ConstraintCue.HYPODENSITY_CORTICAL_SUBCORTICAL: [
        "hypodensity",
        "hypodensities",
        "hypodense",
        "hypoattenuation",
        "hypo-attenuation",
        "hypoattenuating",
        "hypo-attenuating",
        "low attenuation",
        "low-attenuation",
        "low attenuating",
        "low-attenuating",
        "decreased attenuation",
    ],
    ConstraintCue.HYPERDENSE_MCA: [
        "hyperdense mca",
        "hyperdense middle cerebral artery",
        "hyperdense left mca",
        "hyperdense right mca",
        "mca sign",
    ],
    ConstraintCue.HYPERDENSITY_BASILAR: [
        "hyperdense basilar",
        "hyperdense basilar artery",
        "hyperdensity in the basilar artery",
        "hyperdensity in basilar artery",
        "hyperdensity of the basilar artery",
    ],
    ConstraintCue.LOSS_GRAY_WHITE_DIFFERENTIATION: [
        "loss of gray-white matter differentiation",
        "loss of gray-white differentiation",
        "loss of gray white matter differentiation",
        "loss of gray white differentiation",
        "loss of grey-white matter differentiation",
        "loss of grey-white differentiation",
        "loss of the gray-white matter differentiation",
        "loss of normal gray-white differentiation",
    ],
    ConstraintCue.SULCAL_EFFACEMENT: [
        "sulcal effacement",
        "sulci effacement",
        "effaced sulci",
        "effacement of sulci",
        "effacement of the sulci",
        "effacement of adjacent sulci",
        "effacement of the adjacent sulci",
        "effacement of the overlying sulci",
    ],
    ConstraintCue.PROMINENCE_VENTRICLES_SULCI: [
        "prominence of the ventricles",
        "prominence of ventricles",
        "prominence of the sulci",
        "prominence of sulci",
        "prominent ventricles",
        "prominent sulci",
        "ex vacuo",
    ],
    ConstraintCue.ATROPHY: ["atrophy", "volume loss"],
    ConstraintCue.GLIOSIS_ENCEPHALOMALACIA: ["gliosis", "encephalomalacia", "encephalomalacic", "gliotic"],
    ConstraintCue.RESTRICTED_OR_SLOW_DIFFUSION: [
        "restricted diffusion",
        "restricting diffusion",
        "slow diffusion",
        "diffusion restriction",
        "reduced diffusion",
    ],
    ConstraintCue.LOSS_FLOW_VOID_MCA_BASILAR: [
        "loss of flow void in the mca",
        "loss of flow void in mca",
        "loss of flow void in the basilar artery",
        "loss of flow void in basilar artery",
        "loss of the normal flow void",
        "loss of normal flow void",
        "absent flow void",
    ],
    ConstraintCue.FACILITATED_DIFFUSION: ["facilitated diffusion", "increased diffusion"],
    ConstraintCue.DILATION_VENTRICLES: [
        "dilation of the ventricles",
        "dilation of ventricles",
        "dilatation of the ventricles",
        "ventricular dilation",
        "ventricular dilatation",
        "dilated ventricles",
    ],
}
