"""Score matrices: string metric per entity pair, with lexical fallback."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import KindMismatch
from .lexicon import semantic_score
from .metrics import MetricId, similarity_block
from .ontology import EntityKind, display_name, entities_by_kind


@dataclass(frozen=True)
class EngineConfig:
    metric: MetricId = MetricId.LEVENSHTEIN
    semantic_trigger: float = 0.8
    acceptance_threshold: float = 0.5

    def __post_init__(self):
        object.__setattr__(self, "metric", MetricId(self.metric))
        for name in ("semantic_trigger", "acceptance_threshold"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {value}")


@dataclass(frozen=True, eq=False)
class ScoreMatrix:
    rows: tuple[str, ...]
    cols: tuple[str, ...]
    cells: np.ndarray
    kind: EntityKind
    metric: MetricId

    @property
    def shape(self):
        return self.cells.shape

    def __eq__(self, other):
        if not isinstance(other, ScoreMatrix):
            return NotImplemented
        return (
            (self.rows, self.cols, self.kind, self.metric) == (other.rows, other.cols, other.kind, other.metric)
            and np.array_equal(self.cells, other.cells)
        )


def _single_kind(entities, side):
    kinds = {e.kind for e in entities}
    if len(kinds) > 1:
        raise KindMismatch(f"{side} entities mix kinds: {sorted(k.value for k in kinds)}")
    return kinds.pop() if kinds else None


def build_matrix(src, tgt, cfg, lex=None):
    """Score ``src x tgt``; cells under the semantic trigger may be lifted by the lexicon."""
    ks, kt = _single_kind(src, "source"), _single_kind(tgt, "target")
    if ks is not None and kt is not None and ks is not kt:
        raise KindMismatch(f"source kind {ks.value} != target kind {kt.value}")
    kind = ks or kt or EntityKind.CLASS

    xs = [display_name(e) for e in src]
    ys = [display_name(e) for e in tgt]
    cells = similarity_block(cfg.metric, xs, ys)
    if lex is not None and len(lex):
        for i, j in zip(*np.nonzero(cells < cfg.semantic_trigger)):
            sem = semantic_score(lex, xs[i], ys[j])
            if sem > cells[i, j]:
                cells[i, j] = sem
    np.clip(cells, 0.0, 1.0, out=cells)
    return ScoreMatrix(tuple(e.iri for e in src), tuple(e.iri for e in tgt), cells, kind, cfg.metric)


def build_all_blocks(src_onto, tgt_onto, cfg, lex=None):
    blocks = []
    for kind in EntityKind:
        src = entities_by_kind(src_onto, kind)
        tgt = entities_by_kind(tgt_onto, kind)
        if src and tgt:
            blocks.append(build_matrix(src, tgt, cfg, lex))
    return blocks
