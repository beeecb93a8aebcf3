"""Hot numeric kernels: edit distance, local alignment, and the Hungarian solver.

Every kernel exists twice: an explicit-loop version compiled with numba and a
row-vectorised numpy version. The public names at the bottom of the module
dispatch on :data:`ontomatch._accel.USE_NUMBA`; both variants are importable
directly for testing and benchmarking.

Strings enter the kernels as ``int32`` arrays of code points (see
:func:`encode`). Blocks of strings are packed into one flat code array plus an
offsets array of length ``k + 1``.
"""
import numpy as np

from ._accel import USE_NUMBA, njit

SW_MATCH = 2
SW_MISMATCH = -1
SW_GAP = -1


def encode(s):
    return np.frombuffer(s.encode("utf-32-le"), dtype=np.uint32).astype(np.int32)


def pack(strings):
    """Pack strings into ``(codes, offsets)`` for the block kernels."""
    lengths = np.fromiter((len(s) for s in strings), dtype=np.int64, count=len(strings))
    offsets = np.zeros(len(strings) + 1, dtype=np.int64)
    np.cumsum(lengths, out=offsets[1:])
    codes = encode("".join(strings)) if strings else np.zeros(0, dtype=np.int32)
    return codes, offsets


# ---------------------------------------------------------------------------
# explicit loops (numba targets)


def _edit_distance_loops(a, b):
    n = a.shape[0]
    m = b.shape[0]
    if n == 0:
        return m
    if m == 0:
        return n
    prev = np.arange(m + 1)
    cur = np.empty(m + 1, dtype=prev.dtype)
    for i in range(1, n + 1):
        cur[0] = i
        ai = a[i - 1]
        for j in range(1, m + 1):
            sub = prev[j - 1] + (0 if ai == b[j - 1] else 1)
            dele = prev[j] + 1
            ins = cur[j - 1] + 1
            best = sub
            if dele < best:
                best = dele
            if ins < best:
                best = ins
            cur[j] = best
        prev, cur = cur, prev
    return prev[m]


def _smith_waterman_loops(a, b):
    n = a.shape[0]
    m = b.shape[0]
    prev = np.zeros(m + 1, dtype=np.int64)
    cur = np.zeros(m + 1, dtype=np.int64)
    best = 0
    for i in range(1, n + 1):
        cur[0] = 0
        ai = a[i - 1]
        for j in range(1, m + 1):
            h = prev[j - 1] + (SW_MATCH if ai == b[j - 1] else SW_MISMATCH)
            up = prev[j] + SW_GAP
            left = cur[j - 1] + SW_GAP
            if up > h:
                h = up
            if left > h:
                h = left
            if h < 0:
                h = 0
            cur[j] = h
            if h > best:
                best = h
        prev, cur = cur, prev
    return best


def _hungarian_loops(cost):
    # Shortest augmenting path with row/column potentials; 1-based internals,
    # column 0 is the virtual source.
    n = cost.shape[0]
    u = np.zeros(n + 1)
    v = np.zeros(n + 1)
    p = np.zeros(n + 1, dtype=np.int64)
    way = np.zeros(n + 1, dtype=np.int64)
    minv = np.empty(n + 1)
    used = np.zeros(n + 1, dtype=np.bool_)
    for i in range(1, n + 1):
        p[0] = i
        j0 = 0
        minv[:] = np.inf
        used[:] = False
        while True:
            used[j0] = True
            i0 = p[j0]
            delta = np.inf
            j1 = 0
            for j in range(1, n + 1):
                if not used[j]:
                    c = cost[i0 - 1, j - 1] - u[i0] - v[j]
                    if c < minv[j]:
                        minv[j] = c
                        way[j] = j0
                    if minv[j] < delta:
                        delta = minv[j]
                        j1 = j
            for j in range(n + 1):
                if used[j]:
                    u[p[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if p[j0] == 0:
                break
        while True:
            j1 = way[j0]
            p[j0] = p[j1]
            j0 = j1
            if j0 == 0:
                break
    row_to_col = np.empty(n, dtype=np.int64)
    for j in range(1, n + 1):
        row_to_col[p[j] - 1] = j - 1
    return row_to_col


_edit_distance_jit = njit(_edit_distance_loops)
_smith_waterman_jit = njit(_smith_waterman_loops)
hungarian_numba = njit(_hungarian_loops)


@njit
def _levenshtein_block_jit(codes_a, offs_a, codes_b, offs_b):
    m = offs_a.shape[0] - 1
    n = offs_b.shape[0] - 1
    out = np.empty((m, n))
    for i in range(m):
        a = codes_a[offs_a[i]:offs_a[i + 1]]
        for j in range(n):
            b = codes_b[offs_b[j]:offs_b[j + 1]]
            longest = max(a.shape[0], b.shape[0])
            if longest == 0:
                out[i, j] = 1.0
            else:
                out[i, j] = 1.0 - _edit_distance_jit(a, b) / longest
    return out


@njit
def _smith_waterman_block_jit(codes_a, offs_a, codes_b, offs_b):
    m = offs_a.shape[0] - 1
    n = offs_b.shape[0] - 1
    out = np.empty((m, n))
    for i in range(m):
        a = codes_a[offs_a[i]:offs_a[i + 1]]
        for j in range(n):
            b = codes_b[offs_b[j]:offs_b[j + 1]]
            shortest = min(a.shape[0], b.shape[0])
            if a.shape[0] == 0 and b.shape[0] == 0:
                out[i, j] = 1.0
            elif shortest == 0:
                out[i, j] = 0.0
            else:
                out[i, j] = _smith_waterman_jit(a, b) / (SW_MATCH * shortest)
    return out


def edit_distance_numba(a, b):
    return int(_edit_distance_jit(a, b))


def smith_waterman_numba(a, b):
    return int(_smith_waterman_jit(a, b))


def levenshtein_block_numba(codes_a, offs_a, codes_b, offs_b):
    return _levenshtein_block_jit(codes_a, offs_a, codes_b, offs_b)


def smith_waterman_block_numba(codes_a, offs_a, codes_b, offs_b):
    return _smith_waterman_block_jit(codes_a, offs_a, codes_b, offs_b)


# ---------------------------------------------------------------------------
# numpy fallbacks


def edit_distance_numpy(a, b):
    n, m = len(a), len(b)
    if n == 0:
        return m
    if m == 0:
        return n
    idx = np.arange(m + 1)
    prev = idx.copy()
    cand = np.empty(m + 1, dtype=np.int64)
    for i in range(n):
        cand[0] = i + 1
        np.minimum(prev[1:] + 1, prev[:-1] + (b != a[i]), out=cand[1:])
        # insertions chain left to right: cur[j] = min_k<=j cand[k] + (j - k)
        prev = np.minimum.accumulate(cand - idx) + idx
    return int(prev[-1])


def smith_waterman_numpy(a, b):
    n, m = len(a), len(b)
    if n == 0 or m == 0:
        return 0
    idx = np.arange(m + 1)
    prev = np.zeros(m + 1, dtype=np.int64)
    cand = np.zeros(m + 1, dtype=np.int64)
    best = 0
    for i in range(n):
        s = np.where(b == a[i], SW_MATCH, SW_MISMATCH)
        np.maximum(prev[:-1] + s, prev[1:] + SW_GAP, out=cand[1:])
        np.maximum(cand, 0, out=cand)
        # horizontal gaps: cur[j] = max_k<=j cand[k] + GAP * (j - k)
        prev = np.maximum.accumulate(cand + idx) - idx
        best = max(best, int(prev.max()))
    return best


def _block_numpy(pair_fn, codes_a, offs_a, codes_b, offs_b):
    m, n = len(offs_a) - 1, len(offs_b) - 1
    out = np.empty((m, n))
    cols = [codes_b[offs_b[j]:offs_b[j + 1]] for j in range(n)]
    for i in range(m):
        a = codes_a[offs_a[i]:offs_a[i + 1]]
        for j, b in enumerate(cols):
            out[i, j] = pair_fn(a, b)
    return out


def _lev_pair(a, b):
    longest = max(len(a), len(b))
    return 1.0 if longest == 0 else 1.0 - edit_distance_numpy(a, b) / longest


def _sw_pair(a, b):
    if len(a) == 0 and len(b) == 0:
        return 1.0
    shortest = min(len(a), len(b))
    return 0.0 if shortest == 0 else smith_waterman_numpy(a, b) / (SW_MATCH * shortest)


def levenshtein_block_numpy(codes_a, offs_a, codes_b, offs_b):
    return _block_numpy(_lev_pair, codes_a, offs_a, codes_b, offs_b)


def smith_waterman_block_numpy(codes_a, offs_a, codes_b, offs_b):
    return _block_numpy(_sw_pair, codes_a, offs_a, codes_b, offs_b)


def hungarian_numpy(cost):
    n = cost.shape[0]
    u = np.zeros(n + 1)
    v = np.zeros(n + 1)
    p = np.zeros(n + 1, dtype=np.int64)
    way = np.zeros(n + 1, dtype=np.int64)
    for i in range(1, n + 1):
        p[0] = i
        j0 = 0
        minv = np.full(n + 1, np.inf)
        used = np.zeros(n + 1, dtype=bool)
        while True:
            used[j0] = True
            i0 = p[j0]
            free = ~used[1:]
            c = cost[i0 - 1] - u[i0] - v[1:]
            better = free & (c < minv[1:])
            minv[1:][better] = c[better]
            way[1:][better] = j0
            masked = np.where(free, minv[1:], np.inf)
            j1 = int(np.argmin(masked)) + 1
            delta = masked[j1 - 1]
            u[p[used]] += delta
            v[used] -= delta
            minv[~used] -= delta
            j0 = j1
            if p[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            p[j0] = p[j1]
            j0 = j1
    row_to_col = np.empty(n, dtype=np.int64)
    row_to_col[p[1:] - 1] = np.arange(n)
    return row_to_col


# ---------------------------------------------------------------------------
# dispatch

if USE_NUMBA:
    edit_distance = edit_distance_numba
    smith_waterman_score = smith_waterman_numba
    levenshtein_block = levenshtein_block_numba
    smith_waterman_block = smith_waterman_block_numba
    hungarian = hungarian_numba
else:
    edit_distance = edit_distance_numpy
    smith_waterman_score = smith_waterman_numpy
    levenshtein_block = levenshtein_block_numpy
    smith_waterman_block = smith_waterman_block_numpy
    hungarian = hungarian_numpy


def warm_up():
    """Trigger JIT compilation so later timings exclude it."""
    a, b = encode("ab"), encode("ba")
    codes, offs = pack(["ab", "c"])
    edit_distance(a, b)
    smith_waterman_score(a, b)
    levenshtein_block(codes, offs, codes, offs)
    smith_waterman_block(codes, offs, codes, offs)
    hungarian(np.zeros((2, 2)))
