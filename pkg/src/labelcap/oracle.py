"""Brute-force ground truth for the image set of the labeling map.

Every source string in ``q**n`` is visited in lexicographic order, in
chunks, and the resulting labeling sequences are deduplicated through an
integer encoding (base ``k+1``, most significant digit first, so code order
equals lexicographic order of the labeling sequences). Nothing here depends
on the automaton module; it is the independent side of every cross-check.

Slope estimates ``log2(|F_n| / |F_{n-1}|)`` approach the capacity but do
not prove anything about the limsup; use them with a tolerance.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import BudgetExceededError, enumeration_budget
from .words import LabelSet

_CHUNK = 1 << 18  # source strings per vectorized batch


@dataclass(frozen=True)
class ImageCensus:
    n: int
    count: int
    sequences: tuple[tuple[int, ...], ...] | None = None


def _check_budget(q: int, n: int, budget: int | None) -> None:
    limit = enumeration_budget() if budget is None else budget
    if q**n > limit:
        raise BudgetExceededError(
            f"enumerating {q}^{n} = {q**n} source strings exceeds the budget of {limit}"
        )


def _image_codes(ls: LabelSet, n: int, budget: int | None) -> np.ndarray:
    """Sorted unique integer codes of all labeling sequences of length n."""
    q = ls.alphabet.size
    _check_budget(q, n, budget)
    base = ls.k + 1
    if n == 0:
        return np.zeros(1, dtype=object)
    if base**n >= 2**63:
        raise BudgetExceededError(f"labeling sequences of length {n} over {base} symbols do not fit in 64 bits")
    weights = np.array([base ** (n - 1 - i) for i in range(n)], dtype=np.int64)
    # patterns grouped by length, each as its base-q integer value
    by_length: dict[int, list[tuple[int, int]]] = {}
    for j, w in enumerate(ls.words(), start=1):
        value = 0
        for s in w:
            value = value * q + s
        by_length.setdefault(len(w), []).append((j, value))

    # Each chunk fixes the first h symbols and runs over all q^m completions
    # (h + m = n). Occurrences starting at positions >= h only see the low
    # part, so their contribution to the code is the same for every chunk.
    m = 0
    while m < n and q ** (m + 1) <= _CHUNK:
        m += 1
    h = n - m
    low = np.zeros((q**m, m), dtype=np.int64)
    span = np.arange(q**m, dtype=np.int64)
    for t in range(m):
        low[:, t] = (span // q ** (m - 1 - t)) % q
    c_low = np.zeros((q**m, m), dtype=np.int64)
    for ell, pats in by_length.items():
        if ell > m:
            continue
        windows = _windows(low, ell, m - ell + 1, q)
        for j, value in pats:
            c_low[:, : m - ell + 1][windows == value] = j
    low_codes = c_low @ weights[h:]

    seen: np.ndarray = np.empty(0, dtype=np.int64)
    x = np.empty((q**m, n), dtype=np.int64)
    x[:, h:] = low
    for prefix in itertools.product(range(q), repeat=h):
        x[:, :h] = prefix
        c = np.zeros((q**m, h), dtype=np.int64)
        for ell, pats in by_length.items():
            starts = min(h, n - ell + 1)
            if starts <= 0:
                continue
            windows = _windows(x, ell, starts, q)
            for j, value in pats:
                c[:, :starts][windows == value] = j
        codes = np.unique(low_codes + c @ weights[:h])
        seen = np.union1d(seen, codes)
    return seen


def _windows(x: np.ndarray, ell: int, starts: int, q: int) -> np.ndarray:
    """Column i holds the base-q value of x[:, i : i + ell], for i < starts."""
    out = np.zeros((x.shape[0], starts), dtype=np.int64)
    for t in range(ell):
        out = out * q + x[:, t : starts + t]
    return out


def _decode(code: int, n: int, base: int) -> tuple[int, ...]:
    digits = []
    for _ in range(n):
        code, d = divmod(code, base)
        digits.append(d)
    return tuple(reversed(digits))


def enumerate_valid_labelings(ls: LabelSet, n: int, budget: int | None = None) -> ImageCensus:
    """Exact, deduplicated image set ``F_n`` in lexicographic order."""
    codes = _image_codes(ls, n, budget)
    base = ls.k + 1
    seqs = tuple(_decode(int(c), n, base) for c in codes)
    return ImageCensus(n, len(seqs), seqs)


def count_valid_labelings(ls: LabelSet, n: int, budget: int | None = None) -> int:
    """``|F_n|`` by exhaustive enumeration of the sources."""
    return int(len(_image_codes(ls, n, budget)))


def capacity_slope_estimate(ls: LabelSet, nmax: int, budget: int | None = None) -> list[float]:
    """Slopes ``s_n = log2(|F_n| / |F_{n-1}|)`` for ``n = 2..nmax``."""
    counts = [count_valid_labelings(ls, n, budget) for n in range(1, nmax + 1)]
    return [math.log2(counts[i] / counts[i - 1]) for i in range(1, len(counts))]


def rll_count(d: int, n: int) -> int:
    """Number of binary words of length n with at least d zeros between any two ones."""
    if d < 0 or n < 0:
        raise ValueError("d and n must be non-negative")
    # state: None before the first one, else zeros seen since the last one (capped at d)
    counts: dict[int | None, int] = {None: 1}
    for _ in range(n):
        nxt: dict[int | None, int] = {}
        for gap, c in counts.items():
            zero = None if gap is None else min(gap + 1, d)
            nxt[zero] = nxt.get(zero, 0) + c
            if gap is None or gap >= d:
                nxt[0] = nxt.get(0, 0) + c
        counts = nxt
    return sum(counts.values())
