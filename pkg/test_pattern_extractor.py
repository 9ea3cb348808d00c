import io

import pytest

from agents.phenotype_classifier.agent import classify_report
from agents.types import ElementKind, Phenotype, elements_of, validate_report
from conftest import FRONTOPARIETAL_SENTENCE, PONS_SENTENCE
from lexicon import BrainRegion, Laterality, Modality, Stage, load_lexicon
from report_ingestors import PatternFrameExtractor, extract_frames, extract_report


def texts(frame, kind):
    return [span.text for span in elements_of(frame, kind)]


def test_pons_sentence_yields_one_full_frame():
    frames = extract_frames(PONS_SENTENCE)

    assert len(frames) == 1
    frame = frames[0]
    assert frame.trigger.text == "in"
    assert texts(frame, ElementKind.FIGURE) == ["Hypodensity"]
    assert texts(frame, ElementKind.GROUND) == ["the pons"]
    assert texts(frame, ElementKind.HEDGE) == ["likely represents"]
    assert texts(frame, ElementKind.DIAGNOSIS) == ["a lacunar infarct"]


def test_unremarkable_study_has_no_frames():
    assert extract_frames("The study is unremarkable.") == []


def test_frontoparietal_sentence():
    [frame] = extract_frames(FRONTOPARIETAL_SENTENCE)

    assert texts(frame, ElementKind.FIGURE) == ["Hypoattenuation"]
    assert texts(frame, ElementKind.GROUND) == ["the right frontoparietal distribution"]
    assert texts(frame, ElementKind.HEDGE) == ["consistent with"]
    assert texts(frame, ElementKind.DIAGNOSIS) == ["acute infarction"]


def test_trigger_without_a_finding_is_skipped():
    assert extract_frames("The ventricles are normal in size.") == []


def test_chained_frames_for_nested_locations():
    frames = extract_frames("There is an acute infarction in the lateral aspect of right cerebellum.")

    assert [f.trigger.text for f in frames] == ["in", "of"]
    assert texts(frames[0], ElementKind.FIGURE) == ["an acute infarction"]
    assert texts(frames[1], ElementKind.GROUND) == ["right cerebellum"]


def test_comma_coordinated_grounds_join_one_frame():
    sentence = "Acute infarcts in the right thalamus, left caudate, and pons."

    [frame] = extract_frames(sentence)

    assert texts(frame, ElementKind.GROUND) == ["the right thalamus", "left caudate", "and pons"]


def test_hedge_attaches_to_every_frame_before_it():
    sentence = "Hypodensity in the left frontal lobe and hypodensity in the right insula compatible with infarcts."

    frames = extract_frames(sentence)

    assert len(frames) == 2
    assert all(texts(f, ElementKind.DIAGNOSIS) == ["infarcts"] for f in frames)


def test_sentence_index_is_carried():
    assert extract_frames(PONS_SENTENCE, sentence_index=4)[0].sentence_index == 4


def test_extraction_is_deterministic():
    sentence = "Acute infarcts in the right thalamus, left caudate, and pons consistent with embolic stroke."
    assert extract_frames(sentence) == extract_frames(sentence)


def test_extracted_reports_are_valid_and_anchored():
    sentences = [
        PONS_SENTENCE,
        FRONTOPARIETAL_SENTENCE,
        "There is an acute infarction in the lateral aspect of right cerebellum.",
        "Encephalomalacia and gliosis are seen in the left cerebellum.",
        "No hemorrhage.",
        "Old lacunar infarct within the left basal ganglia.",
    ]
    extractor = PatternFrameExtractor()

    report = extract_report("mixed", Modality.MRI, sentences)

    assert validate_report(report) == []
    for frame in report.frames():
        for span in elements_of(frame, ElementKind.FIGURE) + elements_of(frame, ElementKind.DIAGNOSIS):
            assert extractor.is_anchor(span.text)


def test_lexicon_override_changes_anchors():
    lexicon = load_lexicon(io.BytesIO(b"[is_finding_ct]\nfocus\n[is_diagnosis]\nstroke\n"))
    sentence = "A focus in the right thalamus."

    assert extract_frames(sentence) == []
    assert texts(extract_frames(sentence, lexicon)[0], ElementKind.GROUND) == ["the right thalamus"]


def test_from_text_pipeline_classifies_frontoparietal():
    report = extract_report("fp", Modality.CT, [FRONTOPARIETAL_SENTENCE])

    assert classify_report(report) == {
        Phenotype(Laterality.RIGHT, BrainRegion.FRONTAL_LOBE, Stage.ACUTE, False),
        Phenotype(Laterality.RIGHT, BrainRegion.PARIETAL_LOBE, Stage.ACUTE, False),
    }


def test_and_before_a_new_finding_starts_a_new_frame():
    sentence = "Acute infarct in the right frontal lobe and old infarct in the left frontal lobe."

    frames = extract_frames(sentence)

    assert [texts(f, ElementKind.FIGURE) for f in frames] == [["Acute infarct"], ["old infarct"]]
    assert [texts(f, ElementKind.GROUND) for f in frames] == [["the right frontal lobe"], ["the left frontal lobe"]]


def test_and_before_a_new_side_coordinates_grounds():
    [frame] = extract_frames("Acute infarcts in the right thalamus and left caudate.")

    assert texts(frame, ElementKind.GROUND) == ["the right thalamus", "left caudate"]


@pytest.mark.parametrize("sentence, ground", [
    ("Acute infarction involving left frontal and parietal lobes.", "left frontal and parietal lobes"),
    ("Acute infarcts in the left and right thalami.", "the left and right thalami"),
])
def test_and_inside_one_location_keeps_the_chunk(sentence, ground):
    [frame] = extract_frames(sentence)

    assert texts(frame, ElementKind.GROUND) == [ground]


def test_and_between_findings_keeps_the_figure():
    [frame] = extract_frames("Encephalomalacia and gliosis in the left cerebellum.")

    assert texts(frame, ElementKind.FIGURE) == ["Encephalomalacia and gliosis"]


def test_from_text_pipeline_keeps_coordinated_findings_apart():
    sentence = "Acute infarct in the right frontal lobe and old infarct in the left frontal lobe."
    report = extract_report("two-sides", Modality.CT, [sentence])

    assert classify_report(report) == {
        Phenotype(Laterality.RIGHT, BrainRegion.FRONTAL_LOBE, Stage.ACUTE, False),
        Phenotype(Laterality.LEFT, BrainRegion.FRONTAL_LOBE, Stage.CHRONIC, False),
    }


def test_from_text_pipeline_gives_each_coordinated_ground_its_side():
    report = extract_report("two-grounds", Modality.MRI, ["Acute infarcts in the right thalamus and left caudate."])

    assert classify_report(report) == {
        Phenotype(Laterality.RIGHT, BrainRegion.THALAMUS, Stage.ACUTE, False),
        Phenotype(Laterality.LEFT, BrainRegion.BASAL_GANGLIA, Stage.ACUTE, False),
    }
