import argparse
import asyncio
import json
import logging
import sys
from contextlib import contextmanager
from typing import BinaryIO, Iterator, List, Optional

from agents.phenotype_classifier.agent import PhenotypeClassifierAgent
from agents.types import validate_report
from evaluation.scorer import EvaluationError, Variant, evaluate_all
from lexicon.lexicon import Lexicon, LexiconError, dump_lexicon, load_lexicon
from report_ingestors.corpus_io import (
    CorpusFormatError,
    CorpusValidationError,
    load_gold,
    load_predictions,
    load_raw_text,
    load_reports,
    write_phenotypes,
    write_reports,
)
from report_ingestors.pattern_extractor import extract_report

logger = logging.getLogger("stroke_phenotyper")

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_USAGE = 2


def _variant(name: str) -> Variant:
    try:
        return Variant.parse(name)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


@contextmanager
def _open_sink(path: str) -> Iterator[BinaryIO]:
    if path == "-":
        yield sys.stdout.buffer
        sys.stdout.buffer.flush()
    else:
        with open(path, "wb") as sink:
            yield sink


def _lexicon(path: Optional[str]) -> Lexicon:
    if path is None:
        return load_lexicon()
    with open(path, "rb") as source:
        return load_lexicon(source)


def cmd_extract(args: argparse.Namespace) -> int:
    lexicon = _lexicon(args.lexicon)

    if args.frames:
        with open(args.frames, "rb") as source:
            reports = load_reports(source)
    else:
        with open(args.from_text, "rb") as source:
            raw = load_raw_text(source)
        reports = [extract_report(r.report_id, r.modality, r.sentences, lexicon) for r in raw]
        findings = [finding for report in reports for finding in validate_report(report)]
        if findings:
            raise CorpusValidationError(findings)
        if args.frames_out:
            with _open_sink(args.frames_out) as sink:
                write_reports(reports, sink)

    agent = PhenotypeClassifierAgent(lexicon)
    records = asyncio.run(agent.analyze_all(reports))
    for report_id, phenotypes in records:
        logger.info("[Extract] %s: %d phenotype(s)", report_id, len(phenotypes))

    with _open_sink(args.out) as sink:
        write_phenotypes(records, sink)
    return EXIT_OK


def cmd_evaluate(args: argparse.Namespace) -> int:
    with open(args.gold, "rb") as source:
        gold = load_gold(source)
    with open(args.pred, "rb") as source:
        predicted = load_predictions(source)

    variants = args.variant or list(Variant)
    results = evaluate_all(gold, predicted, variants, args.exclude_unknown_stage)
    summary = {
        "aggregation": "micro",
        "exclude_unknown_stage": args.exclude_unknown_stage,
        "results": [result.to_dict(per_report=args.per_report) for result in results],
    }
    for result in results:
        logger.info(
            "[Evaluate] %-16s P=%.4f R=%.4f F1=%.4f (tp=%d fp=%d fn=%d)",
            result.variant.value, result.precision, result.recall, result.f1, result.tp, result.fp, result.fn,
        )

    with _open_sink(args.out) as sink:
        sink.write(json.dumps(summary, indent=2).encode("utf-8") + b"\n")
    return EXIT_OK


def cmd_validate(args: argparse.Namespace) -> int:
    with open(args.frames, "rb") as source:
        reports = load_reports(source, validate=False)
    findings = [finding for report in reports for finding in validate_report(report)]
    for finding in findings:
        print(finding)
    logger.info("[Validate] %d report(s), %d finding(s)", len(reports), len(findings))
    return EXIT_INPUT_ERROR if findings else EXIT_OK


def cmd_lexicon_dump(args: argparse.Namespace) -> int:
    sys.stdout.write(dump_lexicon(_lexicon(args.lexicon)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stroke-phenotyper",
        description="Classify ischemic stroke phenotypes from spatial frames in radiology reports",
    )
    parser.add_argument("--verbose", action="store_true", help="Debug-level diagnostics")
    commands = parser.add_subparsers(dest="command", required=True)

    extract = commands.add_parser("extract", help="Classify phenotypes for every report of a corpus")
    source = extract.add_mutually_exclusive_group(required=True)
    source.add_argument("--frames", help="Frame corpus (one report per line)")
    source.add_argument("--from-text", dest="from_text", help="Pre-split raw sentences; frames come from the pattern extractor")
    extract.add_argument("--lexicon", help="Lexicon override file")
    extract.add_argument("--out", required=True, help="Phenotype file to write ('-' for stdout)")
    extract.add_argument("--frames-out", dest="frames_out", help="Also write the extracted frame corpus (with --from-text)")
    extract.set_defaults(handler=cmd_extract)

    evaluate = commands.add_parser("evaluate", help="Score predicted phenotypes against gold")
    evaluate.add_argument("--gold", required=True, help="Gold phenotype file")
    evaluate.add_argument("--pred", required=True, help="Predicted phenotype file")
    evaluate.add_argument("--variant", action="append", type=_variant, help="Variant to score (repeatable; default: all seven)")
    evaluate.add_argument("--exclude-unknown-stage", dest="exclude_unknown_stage", action="store_true",
                          help="Drop CantDetermine tuples for stage-bearing variants")
    evaluate.add_argument("--per-report", dest="per_report", action="store_true", help="Include per-report counts")
    evaluate.add_argument("--out", default="-", help="Metrics file ('-' for stdout)")
    evaluate.set_defaults(handler=cmd_evaluate)

    validate = commands.add_parser("validate", help="List span and ordering findings of a frame corpus")
    validate.add_argument("--frames", required=True, help="Frame corpus")
    validate.set_defaults(handler=cmd_validate)

    lexicon = commands.add_parser("lexicon", help="Lexicon utilities")
    lexicon_commands = lexicon.add_subparsers(dest="lexicon_command", required=True)
    dump = lexicon_commands.add_parser("dump", help="Print the effective lexicon in config format")
    dump.add_argument("--lexicon", help="Lexicon override file")
    dump.set_defaults(handler=cmd_lexicon_dump)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(levelname)s %(message)s",
        stream=sys.stderr,
        force=True,
    )

    try:
        return args.handler(args)
    except CorpusValidationError as e:
        print(f"error: {len(e.findings)} validation finding(s)", file=sys.stderr)
        for finding in e.findings:
            print(f"  {finding}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except (CorpusFormatError, LexiconError, EvaluationError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
