"""The four string similarity metrics, each returning a score in [0, 1]."""
from __future__ import annotations

import enum
from collections import Counter

import numpy as np

from . import kernels

QGRAM_SIZE = 2
QGRAM_PAD = "#"


class MetricId(enum.Enum):
    LEVENSHTEIN = "levenshtein"
    QGRAM = "qgram"
    SMITH_WATERMAN = "smith-waterman"
    JACCARD = "jaccard"

    @classmethod
    def parse(cls, name):
        try:
            return cls(name)
        except ValueError:
            valid = ", ".join(m.value for m in cls)
            raise ValueError(f"unknown metric {name!r}; choose one of: {valid}") from None


def levenshtein_sim(x, y):
    """``1 - edits / max(len)``; identical strings (including two empty ones) score 1."""
    longest = max(len(x), len(y))
    if longest == 0:
        return 1.0
    return 1.0 - kernels.edit_distance(kernels.encode(x), kernels.encode(y)) / longest


def _padded_bigrams(s):
    if not s:
        return Counter()
    p = QGRAM_PAD + s + QGRAM_PAD
    return Counter(p[i:i + QGRAM_SIZE] for i in range(len(p) - QGRAM_SIZE + 1))


def qgram_sim(x, y):
    """Dice coefficient over padded bigram multisets."""
    gx, gy = _padded_bigrams(x), _padded_bigrams(y)
    total = sum(gx.values()) + sum(gy.values())
    if total == 0:
        return 1.0
    return 2.0 * sum((gx & gy).values()) / total


def smith_waterman_sim(x, y):
    """Best local alignment score (+2/-1/-1) over the best achievable, ``2 * min(len)``."""
    if not x and not y:
        return 1.0
    shortest = min(len(x), len(y))
    if shortest == 0:
        return 0.0
    score = kernels.smith_waterman_score(kernels.encode(x), kernels.encode(y))
    return score / (kernels.SW_MATCH * shortest)


def _bigram_set(token):
    if len(token) < 2:
        return {token}
    return {token[i:i + 2] for i in range(len(token) - 1)}


def jaccard_sim(x, y):
    """Jaccard over word sets; two single words are compared by character bigrams."""
    tx, ty = x.split(), y.split()
    if len(tx) == 1 and len(ty) == 1:
        sx, sy = _bigram_set(tx[0]), _bigram_set(ty[0])
    else:
        sx, sy = set(tx), set(ty)
    union = sx | sy
    if not union:
        return 1.0
    return len(sx & sy) / len(union)


_SCALAR = {
    MetricId.LEVENSHTEIN: levenshtein_sim,
    MetricId.QGRAM: qgram_sim,
    MetricId.SMITH_WATERMAN: smith_waterman_sim,
    MetricId.JACCARD: jaccard_sim,
}

_BLOCK = {
    MetricId.LEVENSHTEIN: lambda *packed: kernels.levenshtein_block(*packed),
    MetricId.SMITH_WATERMAN: lambda *packed: kernels.smith_waterman_block(*packed),
}


def similarity(metric, x, y):
    return _SCALAR[MetricId(metric)](x, y)


def similarity_block(metric, xs, ys):
    """Score every ``(xs[i], ys[j])`` pair; returns a ``len(xs) x len(ys)`` array."""
    metric = MetricId(metric)
    if metric in _BLOCK and xs and ys:
        return _BLOCK[metric](*kernels.pack(xs), *kernels.pack(ys))
    fn = _SCALAR[metric]
    out = np.empty((len(xs), len(ys)))
    for i, x in enumerate(xs):
        for j, y in enumerate(ys):
            out[i, j] = fn(x, y)
    return out
