"""The labeling channel: labeling sequences and complete labeling sequences."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .words import Label, LabelSet


@dataclass(frozen=True)
class LabelingSequence:
    values: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        if any(not 0 <= v <= self.k for v in self.values):
            raise ValueError(f"labeling values must lie in 0..{self.k}")

    def __len__(self) -> int:
        return len(self.values)

    def __str__(self) -> str:
        if self.k < 10:
            return "".join(str(v) for v in self.values)
        return ",".join(str(v) for v in self.values)


class _Matcher:
    """Aho-Corasick automaton over symbol indices.

    Each node stores the label indices ending there, including those
    inherited along failure links, so a scan reports every occurrence.
    """

    def __init__(self, patterns: Sequence[Sequence[int]], q: int) -> None:
        self.q = q
        self.goto: list[dict[int, int]] = [{}]
        self.out: list[list[int]] = [[]]
        self.depth = [0]
        for j, pat in enumerate(patterns):
            node = 0
            for s in pat:
                nxt = self.goto[node].get(s)
                if nxt is None:
                    nxt = len(self.goto)
                    self.goto[node][s] = nxt
                    self.goto.append({})
                    self.out.append([])
                    self.depth.append(self.depth[node] + 1)
                node = nxt
            self.out[node].append(j)
        self.fail = [0] * len(self.goto)
        queue = deque(self.goto[0].values())
        while queue:
            node = queue.popleft()
            for s, child in self.goto[node].items():
                f = self.fail[node]
                while f and s not in self.goto[f]:
                    f = self.fail[f]
                cand = self.goto[f].get(s, 0)
                self.fail[child] = cand if cand != child else 0
                self.out[child] = self.out[child] + self.out[self.fail[child]]
                queue.append(child)

    def step(self, node: int, s: int) -> int:
        while node and s not in self.goto[node]:
            node = self.fail[node]
        return self.goto[node].get(s, 0)

    def occurrences(self, x: Sequence[int]) -> list[tuple[int, int]]:
        """``(start, label index)`` for every occurrence in ``x``."""
        found = []
        node = 0
        for i, s in enumerate(x):
            node = self.step(node, s)
            for j in self.out[node]:
                found.append((i, j))
        return found


def _as_word(x: Sequence[int] | str, ls_or_label: LabelSet | Label) -> tuple[int, ...]:
    if isinstance(x, str):
        return ls_or_label.alphabet.parse(x)
    return tuple(x)


def labeling_sequence(x: Sequence[int] | str, ls: LabelSet) -> LabelingSequence:
    """Mark, at each position, the (1-based) index of the label starting there.

    A label of length l only counts at positions with l symbols remaining,
    so every label occurrence fits inside ``x``.
    """
    word = _as_word(x, ls)
    patterns = ls.words()
    matcher = _Matcher(patterns, ls.alphabet.size)
    c = [0] * len(word)
    for end, j in matcher.occurrences(word):
        start = end - len(patterns[j]) + 1
        assert c[start] == 0, "prefix-free labels cannot start at the same position"
        c[start] = j + 1
    return LabelingSequence(tuple(c), ls.k)


def labeling_sequence_naive(x: Sequence[int] | str, ls: LabelSet) -> LabelingSequence:
    """Window-by-window reference implementation of :func:`labeling_sequence`."""
    word = _as_word(x, ls)
    n = len(word)
    c = [0] * n
    for i in range(n):
        for j, pat in enumerate(ls.words()):
            if i + len(pat) <= n and word[i : i + len(pat)] == pat:
                assert c[i] == 0
                c[i] = j + 1
    return LabelingSequence(tuple(c), ls.k)


def complete_labeling_sequence(x: Sequence[int] | str, label: Label) -> tuple[int, ...]:
    """Binary sequence that is 1 on every position covered by an occurrence of ``label``."""
    word = _as_word(x, label)
    ell = len(label)
    starts = labeling_sequence(word, LabelSet((label,))).values
    return complete_from_starts(starts, ell)


def complete_from_starts(starts: Sequence[int], ell: int) -> tuple[int, ...]:
    """Expand occurrence starts of a length-``ell`` label to covered positions."""
    covered = [0] * len(starts)
    run = 0
    for i, c in enumerate(starts):
        if c:
            run = ell
        if run:
            covered[i] = 1
            run -= 1
    return tuple(covered)
