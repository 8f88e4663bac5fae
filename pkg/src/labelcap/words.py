"""Alphabets, labels and label sets, plus the word combinatorics on them.

Labels are stored as tuples of symbol indices over an :class:`Alphabet`.
The helpers here compute periods, overlaps, borders and the almost-periodic
decomposition, and sort a single label into one of the capacity classes
handled by :mod:`labelcap.closed_form`.
"""

from __future__ import annotations

import itertools
import string
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import InvalidLabelError

_DNA = "ACGT"
_WIDE = string.digits + string.ascii_lowercase


@dataclass(frozen=True)
class Alphabet:
    """A q-ary alphabet with display characters.

    For ``q <= 4`` the default display is a prefix of ``ACGT``; larger
    alphabets use ``0-9a-z``. Alphabets beyond 36 symbols have no default
    display and can only be used through symbol indices.
    """

    size: int
    symbols: str | None = None

    def __post_init__(self) -> None:
        if self.size < 1:
            raise InvalidLabelError(f"alphabet size must be >= 1, got {self.size}")
        if self.symbols is None:
            if self.size <= 4:
                default = _DNA[: self.size]
            elif self.size <= len(_WIDE):
                default = _WIDE[: self.size]
            else:
                default = None
            object.__setattr__(self, "symbols", default)
        elif len(self.symbols) != self.size or len(set(self.symbols)) != self.size:
            raise InvalidLabelError(
                f"alphabet display {self.symbols!r} must have exactly {self.size} distinct characters"
            )

    @classmethod
    def from_symbols(cls, symbols: str) -> Alphabet:
        return cls(len(symbols), symbols)

    @property
    def q(self) -> int:
        return self.size

    def index(self, ch: str) -> int:
        if self.symbols is None or ch not in self.symbols:
            raise InvalidLabelError(f"symbol {ch!r} is not in alphabet {self.symbols!r}")
        return self.symbols.index(ch)

    def parse(self, text: str, indices: bool = False) -> tuple[int, ...]:
        """Parse a display string (``"AATAA"``) or indices (``"0,0,3,0,0"``).

        A string without commas is read as display characters unless
        ``indices`` is set or the alphabet has no display.
        """
        text = text.strip()
        if not text:
            raise InvalidLabelError("empty word")
        if indices or "," in text or (self.symbols is None and text.isdigit()):
            try:
                word = tuple(int(tok) for tok in text.split(","))
            except ValueError as exc:
                raise InvalidLabelError(f"cannot parse indices {text!r}") from exc
        else:
            word = tuple(self.index(ch) for ch in text)
        for s in word:
            if not 0 <= s < self.size:
                raise InvalidLabelError(f"symbol index {s} out of range for q={self.size}")
        return word

    def render(self, word: Sequence[int]) -> str:
        if self.symbols is None:
            return ",".join(str(s) for s in word)
        return "".join(self.symbols[s] for s in word)

    def words(self, length: int) -> Iterator[tuple[int, ...]]:
        """All words of ``length`` in lexicographic order."""
        return itertools.product(range(self.size), repeat=length)


DNA = Alphabet(4)


@dataclass(frozen=True)
class Label:
    symbols: tuple[int, ...]
    alphabet: Alphabet = field(default=DNA, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "symbols", tuple(int(s) for s in self.symbols))
        if not self.symbols:
            raise InvalidLabelError("a label must have length >= 1")
        for s in self.symbols:
            if not 0 <= s < self.alphabet.size:
                raise InvalidLabelError(
                    f"symbol index {s} out of range for q={self.alphabet.size}"
                )

    @classmethod
    def parse(cls, text: str, alphabet: Alphabet = DNA, indices: bool = False) -> Label:
        return cls(alphabet.parse(text, indices), alphabet)

    def __len__(self) -> int:
        return len(self.symbols)

    def __str__(self) -> str:
        return self.alphabet.render(self.symbols)

    def __repr__(self) -> str:
        return f"Label({str(self)!r})"


@dataclass(frozen=True)
class LabelSet:
    """An ordered, prefix-free collection of labels over one alphabet."""

    labels: tuple[Label, ...]

    def __post_init__(self) -> None:
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        if not labels:
            raise InvalidLabelError("a label set must contain at least one label")
        alphabet = labels[0].alphabet
        if any(lab.alphabet != alphabet for lab in labels):
            raise InvalidLabelError("all labels must share one alphabet")
        for a, b in itertools.permutations(labels, 2):
            if a.symbols == b.symbols:
                raise InvalidLabelError(f"duplicate label {a}")
            if len(a) < len(b) and b.symbols[: len(a)] == a.symbols:
                raise InvalidLabelError(f"label {a} is a prefix of label {b}")

    @classmethod
    def of(cls, *labels: str | Sequence[int] | Label, alphabet: Alphabet = DNA) -> LabelSet:
        out = []
        for lab in labels:
            if isinstance(lab, Label):
                out.append(lab)
            elif isinstance(lab, str):
                out.append(Label.parse(lab, alphabet))
            else:
                out.append(Label(tuple(lab), alphabet))
        return cls(tuple(out))

    @classmethod
    def parse(cls, text: str, alphabet: Alphabet = DNA) -> LabelSet:
        """Parse ``"AC,G"``; use ``;`` to separate index-form labels (``"0,1;2"``).

        Without ``;``, a comma list of integers that are not display
        characters of the alphabet (``"0,0,3,0,0"`` over ACGT) is one
        index-form label.
        """
        tokens = [t.strip() for t in text.split(",") if t.strip()]
        display = alphabet.symbols or ""
        if ";" not in text and tokens and all(t.isdigit() and not all(ch in display for ch in t) for t in tokens):
            return cls((Label.parse(text, alphabet, indices=True),))
        if ";" in text:
            return cls(tuple(Label.parse(p, alphabet, indices=True) for p in text.split(";") if p.strip()))
        return cls(tuple(Label.parse(p, alphabet) for p in text.split(",") if p.strip()))

    @property
    def alphabet(self) -> Alphabet:
        return self.labels[0].alphabet

    @property
    def k(self) -> int:
        return len(self.labels)

    @property
    def max_length(self) -> int:
        return max(len(lab) for lab in self.labels)

    def words(self) -> list[tuple[int, ...]]:
        return [lab.symbols for lab in self.labels]

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[Label]:
        return iter(self.labels)

    def __str__(self) -> str:
        return ",".join(str(lab) for lab in self.labels)


def _word(x: Label | Sequence[int]) -> tuple[int, ...]:
    return x.symbols if isinstance(x, Label) else tuple(x)


def border_array(word: Sequence[int]) -> list[int]:
    """KMP failure function: entry i is the longest proper border of word[:i+1]."""
    fail = [0] * len(word)
    k = 0
    for i in range(1, len(word)):
        while k and word[i] != word[k]:
            k = fail[k - 1]
        if word[i] == word[k]:
            k += 1
        fail[i] = k
    return fail


def period(label: Label | Sequence[int]) -> int:
    """Smallest divisor p of the length such that the label is a power of its p-prefix."""
    w = _word(label)
    n = len(w)
    for p in range(1, n + 1):
        if n % p == 0 and all(w[i] == w[i - p] for i in range(p, n)):
            return p
    return n


def is_periodic(label: Label | Sequence[int]) -> bool:
    return period(label) < len(_word(label))


def overlap(a: Label | Sequence[int], b: Label | Sequence[int]) -> int:
    """Longest suffix of ``a`` that equals a prefix of ``b`` (0 if none).

    The length ranges over ``1..min(|a|, |b|)``; a full-length match is
    counted, which is why equal arguments are rejected.
    """
    wa, wb = _word(a), _word(b)
    if wa == wb:
        raise InvalidLabelError("overlap is only defined between distinct labels")
    for r in range(min(len(wa), len(wb)), 0, -1):
        if wa[len(wa) - r :] == wb[:r]:
            return r
    return 0


def cyclic_overlap(label: Label | Sequence[int]) -> int:
    """Length of the longest proper border (0 for single symbols)."""
    w = _word(label)
    return border_array(w)[-1] if w else 0


def is_cyclic(label: Label | Sequence[int]) -> bool:
    return cyclic_overlap(label) > 0


def almost_periodic(label: Label | Sequence[int]) -> tuple[int, int] | None:
    """Smallest ``(p', t)`` with the label = whole copies of its p'-prefix plus a t-prefix.

    Requires ``0 < t < p' < len``; returns ``None`` for labels without
    such a decomposition.
    """
    w = _word(label)
    n = len(w)
    for p in range(1, n):
        t = n % p
        if t and all(w[i] == w[i - p] for i in range(p, n)):
            return p, t
    return None


def contains(big: Sequence[int], small: Sequence[int]) -> bool:
    m = len(small)
    return any(tuple(big[i : i + m]) == tuple(small) for i in range(len(big) - m + 1))


@dataclass(frozen=True)
class LabelClass:
    """Capacity class of a single label.

    ``kind`` is one of ``KINDS``. ``param`` is the period for
    ``periodic-noncyclic-period`` and the border length for the two
    cyclic-overlap kinds; ``condition`` records which sufficient condition
    (1: the border is border-free, 2: almost periodic with border-free
    suffix) placed a label in ``nonperiodic-cyclic-overlap``.
    """

    kind: str
    length: int
    period: int
    cyclic_overlap: int
    param: int | None = None
    condition: int | None = None

    NONCYCLIC = "noncyclic"
    PERIODIC = "periodic-noncyclic-period"
    CYCLIC_OVERLAP = "nonperiodic-cyclic-overlap"
    PERIOD_ONE_OVERLAP = "nonperiodic-period-one-overlap"
    UNCOVERED = "uncovered"
    KINDS = (NONCYCLIC, PERIODIC, CYCLIC_OVERLAP, PERIOD_ONE_OVERLAP, UNCOVERED)

    @property
    def covered(self) -> bool:
        return self.kind != self.UNCOVERED

    def __str__(self) -> str:
        if self.kind == self.PERIODIC:
            return f"{self.kind}(p={self.param})"
        if self.kind == self.CYCLIC_OVERLAP:
            return f"{self.kind}(r={self.param}, condition={self.condition})"
        if self.kind == self.PERIOD_ONE_OVERLAP:
            return f"{self.kind}(r={self.param})"
        return self.kind


def classify(label: Label | Sequence[int]) -> LabelClass:
    w = _word(label)
    n = len(w)
    p = period(w)
    r = cyclic_overlap(w)

    def make(kind: str, param: int | None = None, condition: int | None = None) -> LabelClass:
        return LabelClass(kind, n, p, r, param, condition)

    if r == 0:
        return make(LabelClass.NONCYCLIC)
    if p < n:
        if not is_cyclic(w[:p]):
            return make(LabelClass.PERIODIC, p)
        return make(LabelClass.UNCOVERED)
    if not is_cyclic(w[:r]):
        return make(LabelClass.CYCLIC_OVERLAP, r, 1)
    ap = almost_periodic(w)
    if ap is not None and not is_cyclic(w[: ap[1]]):
        return make(LabelClass.CYCLIC_OVERLAP, r, 2)
    if period(w[:r]) == 1:
        return make(LabelClass.PERIOD_ONE_OVERLAP, r)
    return make(LabelClass.UNCOVERED)


def all_labels(q: int, max_length: int, min_length: int = 1) -> Iterable[Label]:
    """Every label over ``Alphabet(q)`` with length in ``[min_length, max_length]``."""
    alphabet = Alphabet(q)
    for n in range(min_length, max_length + 1):
        for w in alphabet.words(n):
            yield Label(w, alphabet)


def canonical_relabeling(words: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Rename symbols in order of first appearance across ``words``."""
    mapping: dict[int, int] = {}
    out = []
    for w in words:
        row = []
        for s in w:
            if s not in mapping:
                mapping[s] = len(mapping)
            row.append(mapping[s])
        out.append(tuple(row))
    return tuple(out)
