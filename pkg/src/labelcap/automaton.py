"""Exact image counting and capacity for arbitrary prefix-free label sets.

Whether a label starts at position i depends on the symbols to its right,
so the source is read right to left. The transducer state is the window of
up to ``l_max - 1`` symbols already read (the right context of the current
position); reading a symbol emits the index of the label that starts there,
or 0. Reversing the output gives the labeling sequence, and reversal keeps
the number of distinct outputs of each length unchanged.

The image language is then presented deterministically by a subset
construction over output symbols. Path counts from the start state give
``|F_n|`` exactly; the capacity is the largest Perron value over the
strongly connected components of that presentation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .capacity import AUTOMATON, CapacityValue
from .errors import BudgetExceededError, subset_state_cap
from .spectral import spectral_radius
from .words import LabelSet

Window = tuple[int, ...]


@dataclass(frozen=True)
class OutputTransducer:
    """Input-deterministic transducer: ``step[s][a] == (next_state, output)``."""

    q: int
    k: int
    windows: tuple[Window, ...]
    step: tuple[tuple[tuple[int, int], ...], ...]
    initial: tuple[int, ...]

    @property
    def n_states(self) -> int:
        return len(self.windows)

    def index(self, window: Sequence[int]) -> int:
        return self.windows.index(tuple(window))

    def run(self, x: Sequence[int]) -> tuple[int, ...]:
        """Labeling sequence of ``x`` (needs a single initial state)."""
        if len(self.initial) != 1:
            raise ValueError("run() needs a transducer with a single initial state")
        s = self.initial[0]
        out = []
        for a in reversed(x):
            s, c = self.step[s][a]
            out.append(c)
        return tuple(reversed(out))


def build_reverse_transducer(ls: LabelSet, boundary: bool = True) -> OutputTransducer:
    """Right-to-left transducer for the labeling map of ``ls``.

    With ``boundary=True`` the states are all windows of length
    ``0..l_max-1`` and the initial state is the empty window, which
    reproduces the end-of-sequence rule exactly. With ``boundary=False``
    only full windows are kept and every one of them is initial; this
    variant ignores end effects and serves to check that they do not
    change the capacity.
    """
    q, k = ls.alphabet.size, ls.k
    w = ls.max_length - 1
    patterns = ls.words()
    lengths = range(w + 1) if boundary else [w]
    windows: list[Window] = []
    for length in lengths:
        windows.extend(ls.alphabet.words(length))
    pos = {win: i for i, win in enumerate(windows)}
    step = []
    for win in windows:
        row = []
        for a in range(q):
            ext = (a,) + win
            out = 0
            for j, pat in enumerate(patterns, start=1):
                if len(pat) <= len(ext) and ext[: len(pat)] == pat:
                    out = j
                    break
            row.append((pos[ext[:w]], out))
        step.append(tuple(row))
    initial = (pos[()],) if boundary else tuple(range(len(windows)))
    return OutputTransducer(q, k, tuple(windows), tuple(step), initial)


def minimize_transducer(t: OutputTransducer) -> OutputTransducer:
    """Merge states with identical future behaviour (Moore partition refinement).

    The quotient emits the same output word as the original for every input
    from every state, so output languages and image counts are unchanged.
    Each class is represented by its shortest, lexicographically least window.
    """
    block = _renumber([tuple(c for _, c in row) for row in t.step])
    while True:
        sig = [(block[s], tuple((block[nxt], c) for nxt, c in t.step[s])) for s in range(t.n_states)]
        new = _renumber(sig)
        if max(new) == max(block):
            break
        block = new
    reps: dict[int, int] = {}
    for s in range(t.n_states):
        b = block[s]
        if b not in reps or (len(t.windows[s]), t.windows[s]) < (len(t.windows[reps[b]]), t.windows[reps[b]]):
            reps[b] = s
    order = sorted(reps, key=lambda b: (len(t.windows[reps[b]]), t.windows[reps[b]]))
    new_id = {b: i for i, b in enumerate(order)}
    windows = tuple(t.windows[reps[b]] for b in order)
    step = tuple(
        tuple((new_id[block[nxt]], c) for nxt, c in t.step[reps[b]]) for b in order
    )
    initial = tuple(sorted({new_id[block[s]] for s in t.initial}))
    return OutputTransducer(t.q, t.k, windows, step, initial)


def _renumber(keys: Sequence[object]) -> list[int]:
    ids: dict[object, int] = {}
    return [ids.setdefault(key, len(ids)) for key in keys]


@dataclass(frozen=True)
class DeterministicPresentation:
    """Deterministic edge-labeled graph presenting the (reversed) image language.

    ``subsets[i]`` is the set of transducer states (as a bitmask) that subset
    state ``i`` stands for; ``edges[i]`` maps each output symbol to the
    successor state. State 0 is the start; every state accepts.
    """

    k: int
    subsets: tuple[int, ...]
    edges: tuple[dict[int, int], ...]
    transducer: OutputTransducer = field(repr=False)

    @property
    def n_states(self) -> int:
        return len(self.subsets)

    @property
    def start(self) -> int:
        return 0

    def adjacency(self) -> np.ndarray:
        """Entry (u, v) counts the output symbols leading from u to v."""
        a = np.zeros((self.n_states, self.n_states), dtype=np.int64)
        for u, out in enumerate(self.edges):
            for v in out.values():
                a[u, v] += 1
        return a

    def is_deterministic(self) -> bool:
        # edges are keyed by output symbol, so this checks the keys are valid symbols
        return all(all(0 <= c <= self.k for c in out) for out in self.edges)

    def accepts(self, word: Sequence[int]) -> bool:
        """Whether ``word`` (in reading order, i.e. reversed) labels a path from the start."""
        s = 0
        for c in word:
            if c not in self.edges[s]:
                return False
            s = self.edges[s][c]
        return True

    def to_dot(self, name: str = "presentation") -> str:
        lines = [f"digraph {name} {{", "  rankdir=LR;", '  start [shape=point];', "  start -> s0;"]
        for u in range(self.n_states):
            members = [self.transducer.windows[i] for i in _bits(self.subsets[u])]
            label = "|".join("".join(map(str, w)) or "ε" for w in members[:4])
            if len(members) > 4:
                label += f"|…(+{len(members) - 4})"
            lines.append(f'  s{u} [shape=circle, label="{u}", tooltip="{label}"];')
        for u, out in enumerate(self.edges):
            by_target: dict[int, list[int]] = {}
            for c, v in sorted(out.items()):
                by_target.setdefault(v, []).append(c)
            for v, cs in by_target.items():
                lines.append(f'  s{u} -> s{v} [label="{",".join(map(str, cs))}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _bits(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def determinize_image(
    t: OutputTransducer, cap: int | None = None, minimize: bool = True
) -> DeterministicPresentation:
    """Subset construction of the transducer's output projection.

    Raises :class:`BudgetExceededError` past ``cap`` subset states
    (default 10**6, overridable through ``LABELCAP_BUDGET``).
    """
    if minimize:
        t = minimize_transducer(t)
    limit = subset_state_cap() if cap is None else cap
    # succ[s][c]: bitmask of states reachable from s while emitting c
    succ = []
    for row in t.step:
        masks: dict[int, int] = {}
        for nxt, c in row:
            masks[c] = masks.get(c, 0) | (1 << nxt)
        succ.append(masks)
    start = 0
    for s in t.initial:
        start |= 1 << s
    ids = {start: 0}
    subsets = [start]
    edges: list[dict[int, int]] = []
    i = 0
    while i < len(subsets):
        mask = subsets[i]
        out: dict[int, int] = {}
        for s in _bits(mask):
            for c, m in succ[s].items():
                out[c] = out.get(c, 0) | m
        row = {}
        for c in sorted(out):
            target = out[c]
            if target not in ids:
                if len(subsets) >= limit:
                    raise BudgetExceededError(f"determinization exceeded {limit} subset states")
                ids[target] = len(subsets)
                subsets.append(target)
            row[c] = ids[target]
        edges.append(row)
        i += 1
    return DeterministicPresentation(t.k, tuple(subsets), tuple(edges), t)


def exact_image_count(dp: DeterministicPresentation, n: int) -> int:
    """Number of length-n paths from the start state, i.e. ``|F_n|``, in big integers."""
    if n < 0:
        raise ValueError("n must be non-negative")
    counts = {dp.start: 1}
    for _ in range(n):
        nxt: dict[int, int] = {}
        for u, c in counts.items():
            for v in dp.edges[u].values():
                nxt[v] = nxt.get(v, 0) + c
        counts = nxt
    return sum(counts.values())


def image_counts(dp: DeterministicPresentation, nmax: int) -> list[int]:
    """``[|F_0|, ..., |F_nmax|]``."""
    out = [1]
    counts = {dp.start: 1}
    for _ in range(nmax):
        nxt: dict[int, int] = {}
        for u, c in counts.items():
            for v in dp.edges[u].values():
                nxt[v] = nxt.get(v, 0) + c
        counts = nxt
        out.append(sum(counts.values()))
    return out


def presentation(ls: LabelSet, boundary: bool = True, cap: int | None = None) -> DeterministicPresentation:
    return determinize_image(build_reverse_transducer(ls, boundary), cap)


def capacity_via_automaton(ls: LabelSet, boundary: bool = True, cap: int | None = None, tol: float = 1e-12) -> CapacityValue:
    """Capacity of ``ls`` from the deterministic presentation of its image."""
    dp = presentation(ls, boundary, cap)
    lam = spectral_radius(dp.adjacency(), tol)
    notes = []
    if ls.max_length > 6 or ls.alphabet.size > 6 or ls.k > 16:
        notes.append("outside the tested envelope (l_max <= 6, q <= 6, k <= 16)")
    return CapacityValue.from_lambda(lam, AUTOMATON, tolerance=1e-9, notes=tuple(notes))
