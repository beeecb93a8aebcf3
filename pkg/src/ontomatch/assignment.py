"""Maximum-weight one-to-one assignment (Kuhn-Munkres) on score matrices."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import EmptyMatrix


@dataclass(frozen=True)
class Assignment:
    pairs: tuple[tuple[int, int], ...]
    total_weight: float

    def __post_init__(self):
        pairs = tuple(sorted((int(r), int(c)) for r, c in self.pairs))
        rows = [r for r, _ in pairs]
        cols = [c for _, c in pairs]
        if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
            raise ValueError("assignment reuses a row or column")
        object.__setattr__(self, "pairs", pairs)


def _cells(matrix):
    return np.asarray(getattr(matrix, "cells", matrix), dtype=np.float64)


def kuhn_munkres(matrix):
    """Optimal assignment maximising the summed score.

    Accepts a :class:`~ontomatch.engine.ScoreMatrix` or any 2-D array. A
    rectangular matrix is zero-padded to square; pairs landing on padding are
    dropped, so ``len(pairs) == min(m, n)``.
    """
    scores = _cells(matrix)
    if scores.ndim != 2 or 0 in scores.shape:
        raise EmptyMatrix(f"cannot assign on a matrix of shape {scores.shape}")
    m, n = scores.shape
    size = max(m, n)
    padded = np.zeros((size, size))
    padded[:m, :n] = scores
    cost = padded.max() - padded
    row_to_col = kernels.hungarian(np.ascontiguousarray(cost))
    pairs = [(r, int(c)) for r, c in enumerate(row_to_col) if r < m and c < n]
    total = float(sum(scores[r, c] for r, c in pairs))
    return Assignment(tuple(pairs), total)


def filter_assignment(a, matrix, threshold):
    """Keep only pairs scoring at least ``threshold``."""
    scores = _cells(matrix)
    kept = tuple((r, c) for r, c in a.pairs if scores[r, c] >= threshold)
    return Assignment(kept, float(sum(scores[r, c] for r, c in kept)))
