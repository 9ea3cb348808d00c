import io

import pytest

from lexicon import (
    BrainRegion,
    ConstraintCue,
    Laterality,
    LexiconError,
    Modality,
    Stage,
    dump_lexicon,
    lexicon_from_defaults,
    load_lexicon,
    match_cue,
    match_is_finding,
    match_lacunarity,
    match_laterality,
    match_region,
    match_stage_keyword,
)
from lexicon.defaults import IS_FINDING_CT, IS_FINDING_MRI


@pytest.mark.parametrize("text, modality, expected", [
    ("Hypoattenuation", Modality.CT, True),
    ("restricted diffusion", Modality.MRI, True),
    ("pneumothorax", Modality.CT, False),
    ("area of LOW   attenuation", Modality.CT, True),
    ("restricted diffusion", Modality.CT, False),
    ("infarction", Modality.CT, False),
])
def test_match_is_finding(text, modality, expected):
    assert match_is_finding(text, modality) is expected


@pytest.mark.parametrize("text, expected", [
    ("left globus pallidus", {BrainRegion.BASAL_GANGLIA}),
    ("right frontoparietal distribution", {BrainRegion.FRONTAL_LOBE, BrainRegion.PARIETAL_LOBE}),
    ("left MCA", {BrainRegion.FRONTAL_LOBE, BrainRegion.PARIETAL_LOBE, BrainRegion.INSULA}),
    ("the right parieto-occipital region", {BrainRegion.PARIETAL_LOBE, BrainRegion.OCCIPITAL_LOBE}),
    ("left temporooccipital lobe", {BrainRegion.TEMPORAL_LOBE, BrainRegion.OCCIPITAL_LOBE}),
    ("the pons", {BrainRegion.BRAINSTEM}),
    ("right midbrain", {BrainRegion.BRAINSTEM}),
    ("left frontal and parietal lobes", {BrainRegion.FRONTAL_LOBE, BrainRegion.PARIETAL_LOBE}),
    ("the lateral aspect", set()),
    ("right PCA territory", set()),
])
def test_match_region(text, expected):
    assert match_region(text) == expected


@pytest.mark.parametrize("text, expected", [
    ("left basal ganglia", Laterality.LEFT),
    ("the right midbrain", Laterality.RIGHT),
    ("thalami", Laterality.BILATERAL),
    ("internal capsules", Laterality.BILATERAL),
    ("both cerebellar hemispheres", Laterality.BILATERAL),
    ("left and right frontal lobes", Laterality.BILATERAL),
    ("pons", Laterality.UNSPECIFIED),
    ("thalamus", Laterality.UNSPECIFIED),
    ("the frontal lobe, on the right", Laterality.RIGHT),
])
def test_match_laterality(text, expected):
    assert match_laterality(text) == expected


@pytest.mark.parametrize("text, expected", [
    ("acute infarction", Stage.ACUTE),
    ("subacute infarction", Stage.SUBACUTE),
    ("sub-acute infarct", Stage.SUBACUTE),
    ("sub acute infarct", Stage.SUBACUTE),
    ("evolving infarct", Stage.SUBACUTE),
    ("acute/subacute infarct", Stage.ACUTE_SUBACUTE),
    ("acute-subacute infarcts", Stage.ACUTE_SUBACUTE),
    ("acute to subacute infarction", Stage.ACUTE_SUBACUTE),
    ("old lacunar infarct", Stage.CHRONIC),
    ("encephalomalacia", Stage.CHRONIC),
    ("status post", None),
    ("infarct", None),
])
def test_match_stage_keyword(text, expected):
    assert match_stage_keyword(text) == expected


def test_subacute_wins_over_acute_in_the_same_text():
    assert match_stage_keyword("subacute and acute infarcts") == Stage.SUBACUTE


@pytest.mark.parametrize("text, expected", [
    ("lacunar infarct", True),
    ("infarct", False),
    ("Lacune", True),
    ("lacunes", False),
])
def test_match_lacunarity(text, expected):
    assert match_lacunarity(text) is expected


@pytest.mark.parametrize("text, cue, expected", [
    ("effacement of the adjacent sulci", ConstraintCue.SULCAL_EFFACEMENT, True),
    ("gliosis", ConstraintCue.GLIOSIS_ENCEPHALOMALACIA, True),
    ("hypodensity", ConstraintCue.HYPERDENSE_MCA, False),
    ("hyperdense MCA", ConstraintCue.HYPERDENSE_MCA, True),
    ("loss of gray-white matter differentiation", ConstraintCue.LOSS_GRAY_WHITE_DIFFERENTIATION, True),
    ("restricted diffusion", ConstraintCue.RESTRICTED_OR_SLOW_DIFFUSION, True),
])
def test_match_cue(text, cue, expected):
    assert match_cue(text, cue) is expected


def test_default_tables_match_the_keyword_lists():
    lexicon = lexicon_from_defaults()

    assert set(lexicon.stage_chronic) == {"encephalomalacia", "gliosis", "known", "old", "previous", "prior"}
    assert set(lexicon.stage_subacute) == {"sub-acute", "subacute", "sub acute", "evolving"}
    assert lexicon.stage_acute == ("acute",)
    assert set(lexicon.lacunar) == {"lacune", "lacunar"}
    assert len(IS_FINDING_CT) == 17 and set(IS_FINDING_CT) <= set(lexicon.is_finding_ct)
    assert len(IS_FINDING_MRI) == 5 and set(IS_FINDING_MRI) <= set(lexicon.is_finding_mri)
    assert all(lexicon.cue_phrases[cue] for cue in ConstraintCue)
    assert set(lexicon.region_keywords) == set(BrainRegion)


def test_all_phrases_are_lowercase_and_non_empty():
    lexicon = lexicon_from_defaults()
    tables = [lexicon.is_finding_ct, lexicon.is_finding_mri, lexicon.stage_chronic, lexicon.lacunar]
    tables += list(lexicon.region_keywords.values()) + list(lexicon.cue_phrases.values())

    for table in tables:
        for phrase in table:
            assert phrase and phrase == phrase.lower()


def test_override_replaces_only_the_given_table():
    override = io.BytesIO(b"# custom lacunarity\n[lacunar]\nlacune\nlacunar\nlacunae\n")

    lexicon = load_lexicon(override)
    defaults = lexicon_from_defaults()

    assert lexicon.lacunar == ("lacune", "lacunar", "lacunae")
    assert lexicon.stage_chronic == defaults.stage_chronic
    assert lexicon.region_keywords == defaults.region_keywords
    assert match_lacunarity("multiple lacunae", lexicon)


def test_empty_region_section_is_rejected():
    with pytest.raises(LexiconError) as excinfo:
        load_lexicon(io.BytesIO(b"[region:Cerebellum]\n"))
    assert excinfo.value.table == "region:Cerebellum"


def test_unknown_region_name_is_rejected():
    with pytest.raises(LexiconError, match="region:Hippocampus"):
        load_lexicon(io.BytesIO(b"[region:Hippocampus]\nhippocampus\n"))


def test_strict_load_requires_every_table():
    with pytest.raises(LexiconError, match="missing mandatory table"):
        load_lexicon(io.BytesIO(b"[lacunar]\nlacune\n"), merge_defaults=False)


def test_empty_phrase_is_rejected():
    with pytest.raises(LexiconError, match="empty phrase"):
        lexicon_from_defaults().with_tables(lacunar=["lacune", "   "])


@pytest.mark.parametrize("phrase", ["#lacune", "[lacunar]"])
def test_phrase_clashing_with_config_syntax_is_rejected(phrase):
    with pytest.raises(LexiconError, match="clashes with the config syntax"):
        lexicon_from_defaults().with_tables(lacunar=["lacune", phrase])


def test_non_utf8_override_is_a_lexicon_error():
    with pytest.raises(LexiconError, match="not UTF-8"):
        load_lexicon(io.BytesIO(b"[lacunar]\nlacun\xe9\n"))


def test_territory_override_maps_pca():
    override = io.BytesIO(b"[territory:pca]\nOccipitalLobe\nThalamus\n")

    lexicon = load_lexicon(override)

    assert match_region("left PCA territory", lexicon) == {BrainRegion.OCCIPITAL_LOBE, BrainRegion.THALAMUS}


def test_dump_then_strict_load_round_trips():
    lexicon = load_lexicon(io.BytesIO(b"[lacunar]\nlacune\n"))

    reloaded = load_lexicon(io.BytesIO(dump_lexicon(lexicon).encode("utf-8")), merge_defaults=False)

    assert reloaded == lexicon


def test_matching_ignores_case_and_spacing():
    assert match_region("Left   GLOBUS\tPallidus") == match_region("left globus pallidus")
    assert match_stage_keyword("ACUTE\n infarct") == Stage.ACUTE


def test_adding_a_region_phrase_never_removes_a_region():
    base = lexicon_from_defaults()
    keywords = dict(base.region_keywords)
    keywords[BrainRegion.WATERSHED] = keywords[BrainRegion.WATERSHED] + ("border zone",)
    extended = base.with_tables(region_keywords=keywords)

    for text in ["left border zone and frontal lobe", "right MCA", "thalami"]:
        assert match_region(text, base) <= match_region(text, extended)
    assert BrainRegion.WATERSHED in match_region("left border zone", extended)
