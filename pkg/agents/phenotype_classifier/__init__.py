from .agent import PhenotypeClassifierAgent, classify_report, collect_evidence, propagate_laterality, report_cue_flags
