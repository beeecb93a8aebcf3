"""Command-line front end: ``ontomatch match | eval | batch``."""
from __future__ import annotations

import argparse
import logging
import os
import sys

from .alignment import assemble_alignment, read_alignment, serialize_alignment
from .assignment import filter_assignment, kuhn_munkres
from .engine import EngineConfig, build_all_blocks
from .errors import OntoMatchError
from .evaluation import AlignmentFileError, batch_evaluate, evaluate, format_table, format_tsv, read_manifest
from .lexicon import fixture_lexicon, load_lexicon_file
from .metrics import MetricId
from .ontology import load_ontology

log = logging.getLogger("ontomatch")

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_IO = 2


class _Parser(argparse.ArgumentParser):
    # usage errors share the generic failure code
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _unit_float(text):
    value = float(text)
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"{text} is not in [0, 1]")
    return value


def build_parser():
    parser = _Parser(prog="ontomatch", description="Align two ontologies and evaluate alignments.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    m = sub.add_parser("match", help="align a source ontology with a target ontology")
    m.add_argument("source")
    m.add_argument("target")
    m.add_argument("--metric", default="levenshtein", choices=[x.value for x in MetricId])
    lex = m.add_mutually_exclusive_group()
    lex.add_argument("--lexicon", help="lexicon file, or 'fixture' for the bundled one")
    lex.add_argument("--no-lexicon", action="store_true", help="pure string matching")
    m.add_argument("--semantic-trigger", type=_unit_float, default=0.8,
                   help="string scores below this consult the lexicon (default 0.8)")
    m.add_argument("--threshold", type=_unit_float, default=0.5,
                   help="drop assigned pairs scoring below this (default 0.5)")
    m.add_argument("--output", help="write the alignment here instead of stdout")
    m.add_argument("--base1", help="base IRI override for the source")
    m.add_argument("--base2", help="base IRI override for the target")

    e = sub.add_parser("eval", help="score a system alignment against a reference")
    e.add_argument("system")
    e.add_argument("reference")

    b = sub.add_parser("batch", help="evaluate every pair listed in a manifest")
    b.add_argument("manifest", help="lines of system<TAB>reference<TAB>label")
    b.add_argument("--tsv", help="also write label/P/R/F rows here")
    return parser


def _load_lexicon(args):
    if args.no_lexicon or not args.lexicon:
        return None
    if args.lexicon == "fixture":
        return fixture_lexicon()
    return load_lexicon_file(args.lexicon)


def run_match(args):
    src = load_ontology(args.source, base=args.base1)
    tgt = load_ontology(args.target, base=args.base2)
    lex = _load_lexicon(args)
    cfg = EngineConfig(MetricId(args.metric), args.semantic_trigger, args.threshold)

    solved = []
    for matrix in build_all_blocks(src, tgt, cfg, lex):
        assignment = filter_assignment(kuhn_munkres(matrix), matrix, cfg.acceptance_threshold)
        log.debug("%s block %dx%d: kept %d pairs", matrix.kind.value, *matrix.shape, len(assignment.pairs))
        solved.append((matrix, assignment))
    alignment = assemble_alignment(solved, src.uri, tgt.uri)
    text = serialize_alignment(alignment)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print(f"solved {len(solved)} blocks, emitted {len(alignment.cells)} cells", file=sys.stderr)
    return EXIT_OK


def run_eval(args):
    loaded = []
    for path in (args.system, args.reference):
        try:
            loaded.append(read_alignment(path))
        except (OSError, OntoMatchError) as exc:
            raise AlignmentFileError(path, exc) from exc
    report = evaluate(*loaded)
    print(f"correct={report.correct} system={report.system_total} reference={report.reference_total}")
    print(f"P={report.precision:.6f} R={report.recall:.6f} F={report.f_measure:.6f}")
    return EXIT_OK


def run_batch(args):
    root = os.path.dirname(os.path.abspath(args.manifest))
    try:
        listed = read_manifest(args.manifest)
    except OSError as exc:
        raise AlignmentFileError(args.manifest, exc) from exc
    triples = [(os.path.join(root, s), os.path.join(root, r), label) for s, r, label in listed]
    rows = batch_evaluate(triples)
    sys.stdout.write(format_table(rows))
    if args.tsv:
        with open(args.tsv, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(format_tsv(rows))
    return EXIT_OK


_COMMANDS = {"match": run_match, "eval": run_eval, "batch": run_batch}


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(name)s: %(message)s")
    try:
        return _COMMANDS[args.command](args)
    except (OntoMatchError, ValueError) as exc:
        print(f"ontomatch: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"ontomatch: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
