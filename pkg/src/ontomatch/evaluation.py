"""Precision, recall and F-measure of a system alignment against a reference."""
from __future__ import annotations

from dataclasses import dataclass

from .alignment import read_alignment
from .errors import OntoMatchError


class AlignmentFileError(OntoMatchError):
    def __init__(self, path, cause):
        self.path = path
        self.cause = cause
        super().__init__(f"{path}: {cause}")


@dataclass(frozen=True)
class EvalReport:
    correct: int
    system_total: int
    reference_total: int

    @property
    def precision(self):
        return self.correct / self.system_total if self.system_total else 0.0

    @property
    def recall(self):
        return self.correct / self.reference_total if self.reference_total else 0.0

    @property
    def f_measure(self):
        p, r = self.precision, self.recall
        return 2 * p * r / (p + r) if p + r else 0.0


def evaluate(system, reference):
    """Count system cells whose entity pair appears in the reference (measures ignored)."""
    sys_pairs = system.pairs()
    ref_pairs = reference.pairs()
    return EvalReport(len(sys_pairs & ref_pairs), len(sys_pairs), len(ref_pairs))


@dataclass(frozen=True)
class ReportRow:
    label: str
    report: EvalReport


def batch_evaluate(pairs):
    """Evaluate ``(system_path, reference_path, label)`` triples in order."""
    rows = []
    for system_path, reference_path, label in pairs:
        loaded = []
        for path in (system_path, reference_path):
            try:
                loaded.append(read_alignment(path))
            except (OSError, OntoMatchError) as exc:
                raise AlignmentFileError(path, exc) from exc
        rows.append(ReportRow(label, evaluate(*loaded)))
    return rows


def _fmt(x):
    return f"{x:.6f}"


def format_table(rows):
    header = ("label", "P", "R", "F")
    body = [(r.label, _fmt(r.report.precision), _fmt(r.report.recall), _fmt(r.report.f_measure)) for r in rows]
    widths = [max(len(line[k]) for line in [header, *body]) for k in range(4)]
    lines = []
    for line in [header, *body]:
        cells = [line[0].ljust(widths[0])] + [v.rjust(w) for v, w in zip(line[1:], widths[1:])]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines) + "\n"


def format_tsv(rows):
    lines = ["label\tP\tR\tF"]
    for r in rows:
        lines.append("\t".join([r.label, _fmt(r.report.precision), _fmt(r.report.recall), _fmt(r.report.f_measure)]))
    return "\n".join(lines) + "\n"


def read_manifest(path):
    """Parse ``system<TAB>reference<TAB>label`` lines; blank and '#' lines are skipped."""
    triples = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 3 or not all(p.strip() for p in parts):
                raise OntoMatchError(f"{path}:{lineno}: expected system<TAB>reference<TAB>label")
            triples.append(tuple(p.strip() for p in parts))
    return triples
