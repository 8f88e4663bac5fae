"""Largest achievable capacity t(k, 2, q): pair search, Table-2 style
forbidden-substring capacities, and the three- and nine-label lower bounds."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .automaton import capacity_via_automaton
from .capacity import AUTOMATON, CapacityValue
from .errors import BudgetExceededError, enumeration_budget
from .polynomial import IntPolynomial, largest_real_root
from .spectral import spectral_radius
from .words import DNA, Alphabet, Label, LabelSet

Word = tuple[int, ...]

PAIR_POLYNOMIAL = IntPolynomial.from_descending([1, -3, 3, -3, 1, -1])
THREE_LABEL_POLYNOMIAL = IntPolynomial.from_descending([1, -3, 2, -3, 2, -1])
NINE_LABEL_POLYNOMIAL = IntPolynomial.from_descending([1, -4, 0, 2, 0])
NINE_LABELS = ("AC", "CA", "GA", "GC", "GG", "TA", "TC", "TG", "TT")
NINE_LABEL_FORBIDDEN = ("AGT", "CGT")

# Pair archetypes over symbols a=0, b=1, c=2, each with the substrings its
# labeling sequences (over {0, 1, 2}) can never contain, and the root the
# capacity is expected to match.
TABLE2: tuple[tuple[str, tuple[str, ...], IntPolynomial], ...] = (
    ("ab,ac", ("11", "12", "21", "22"), IntPolynomial.from_descending([1, -1, -2])),
    ("ab,bc", ("11", "21", "22"), IntPolynomial.from_descending([1, -1, -2, -1])),
    ("ab,ba", ("11", "101", "22", "202"), PAIR_POLYNOMIAL),
    ("aa,bb", ("12", "101", "21", "202"), PAIR_POLYNOMIAL),
    ("aa,bc", ("12", "101", "21", "22"), IntPolynomial.from_descending([1, -2, 0, 0, -1])),
    ("aa,ab", ("101", "102", "21", "22"), PAIR_POLYNOMIAL),
)

TOP_PAIR_TYPES = frozenset({"aa,ab", "aa,bb", "ab,ba"})


def _first_occurrence(word: Sequence[int]) -> Word:
    ids: dict[int, int] = {}
    return tuple(ids.setdefault(s, len(ids)) for s in word)


def pair_type(a: Sequence[int], b: Sequence[int]) -> str:
    """Name of the archetype of a pair of length-2 labels, e.g. ``"aa,ab"``.

    Pairs are identified up to relabeling, order and reversal of both labels,
    so (aa, ba) is reported as ``aa,ab`` and (ab, cb) as ``ab,ac``.
    """
    a, b = tuple(a), tuple(b)
    if len(a) != 2 or len(b) != 2:
        raise ValueError("pair types are defined for length-2 labels")
    candidates = []
    for x, y in ((a, b), (b, a), (a[::-1], b[::-1]), (b[::-1], a[::-1])):
        candidates.append(_first_occurrence(x + y))
    pat = min(candidates)
    letters = "abcd"
    return f"{letters[pat[0]]}{letters[pat[1]]},{letters[pat[2]]}{letters[pat[3]]}"


def canonical_set(words: Iterable[Sequence[int]], q: int) -> tuple[Word, ...]:
    """Lexicographically least image of a set of words under all q! relabelings."""
    words = [tuple(w) for w in words]
    best = None
    for perm in itertools.permutations(range(q)):
        image = tuple(sorted(tuple(perm[s] for s in w) for w in words))
        if best is None or image < best:
            best = image
    return best


@dataclass(frozen=True)
class SearchResult:
    """Best capacity over candidate label sets and every set attaining it (within 1e-9)."""

    capacity: CapacityValue
    witnesses: tuple[tuple[str, ...], ...]
    witness_types: tuple[str, ...]
    candidates: int
    reduced: bool


PairSearchResult = SearchResult


def _search(q: int, k: int, ell: int, reduce_symmetry: bool, budget: int | None) -> SearchResult:
    alphabet = Alphabet(q)
    words = list(alphabet.words(ell))
    total = math.comb(len(words), k)
    limit = enumeration_budget() if budget is None else budget
    if total > limit:
        raise BudgetExceededError(f"{total} candidate sets exceed the budget of {limit}")
    classes: dict[tuple[Word, ...], list[tuple[Word, ...]]] = {}
    for combo in itertools.combinations(words, k):
        key = canonical_set(combo, q) if reduce_symmetry else combo
        classes.setdefault(key, []).append(combo)
    caps: dict[tuple[Word, ...], CapacityValue] = {}
    for key in classes:
        ls = LabelSet(tuple(Label(w, alphabet) for w in key))
        caps[key] = capacity_via_automaton(ls)
    top = max(c.log2_lambda for c in caps.values())
    best_key = min((key for key, c in caps.items() if abs(c.log2_lambda - top) < 1e-9))
    witnesses = []
    for key, members in classes.items():
        if abs(caps[key].log2_lambda - top) < 1e-9:
            witnesses.extend(members)
    witnesses.sort()
    rendered = tuple(tuple(alphabet.render(w) for w in combo) for combo in witnesses)
    types: tuple[str, ...] = ()
    if k == 2 and ell == 2:
        types = tuple(sorted({pair_type(a, b) for a, b in witnesses}))
    return SearchResult(caps[best_key], rendered, types, len(caps), reduce_symmetry)


def best_pair_capacity(q: int, reduce_symmetry: bool = True) -> PairSearchResult:
    """t(2, 2, q) by exhaustive search over pairs of distinct length-2 labels.

    With ``reduce_symmetry`` each relabeling class is evaluated once; the
    witnesses are still listed in full.
    """
    if q < 2:
        raise ValueError("need q >= 2")
    return _search(q, 2, 2, reduce_symmetry, None)


def search_label_sets(k: int, q: int, ell: int = 2, reduce_symmetry: bool = True, budget: int | None = None) -> SearchResult:
    """Best capacity over all k-sets of length-``ell`` labels. No optimality theorem backs this."""
    if k < 1 or q < 2 or ell < 1:
        raise ValueError("need k >= 1, q >= 2, ell >= 1")
    return _search(q, k, ell, reduce_symmetry, budget)


def _resolve_alphabet(alphabet: int | str | Alphabet, patterns: Sequence[str]) -> Alphabet:
    if isinstance(alphabet, Alphabet):
        return alphabet
    if isinstance(alphabet, str):
        return Alphabet.from_symbols(alphabet)
    if alphabet <= 10:
        digits = Alphabet.from_symbols("0123456789"[:alphabet])
        if all(all(ch in digits.symbols for ch in p) for p in patterns):
            return digits
    return Alphabet(alphabet)


def forbidden_substring_capacity(alphabet: int | str | Alphabet, patterns: Sequence[str]) -> CapacityValue:
    """Capacity of all sequences over ``alphabet`` that avoid every pattern as a substring.

    States are the allowed windows of the last m - 1 symbols (m the longest
    pattern); a step appends one symbol and is allowed when no pattern ends
    at the new position. This construction does not touch the labeling
    transducer, so it cross-checks it independently. An integer alphabet
    uses the digits 0..q-1 when every pattern is written in them.
    """
    alph = _resolve_alphabet(alphabet, patterns)
    q = alph.size
    pats = [tuple(alph.parse(p)) for p in patterns]
    if any(len(p) == 0 for p in pats):
        raise ValueError("patterns must be nonempty")
    if not pats:
        return CapacityValue.from_lambda(float(q), AUTOMATON, tolerance=1e-12)
    m = max(len(p) for p in pats)

    def clean(w: Word) -> bool:
        return not any(w[i : i + len(p)] == p for p in pats for i in range(len(w) - len(p) + 1))

    states = [w for w in alph.words(m - 1) if clean(w)]
    index = {w: i for i, w in enumerate(states)}
    a = np.zeros((len(states), len(states)), dtype=np.int64)
    for w in states:
        for s in range(q):
            ext = w + (s,)
            if any(ext[len(ext) - len(p) :] == p for p in pats):
                continue
            a[index[w], index[ext[1:]]] += 1
    lam = spectral_radius(a)
    return CapacityValue.from_lambda(lam, AUTOMATON, tolerance=1e-9, notes=("forbidden-substring presentation",))


def _instantiate(archetype: str, alphabet: Alphabet) -> LabelSet:
    return LabelSet(tuple(Label(tuple("abcd".index(ch) for ch in part), alphabet) for part in archetype.split(",")))


@dataclass(frozen=True)
class ArchetypeRow:
    archetype: str
    labels: str
    patterns: tuple[str, ...]
    automaton: CapacityValue
    forbidden: CapacityValue
    expected_lambda: float

    @property
    def agrees(self) -> bool:
        return abs(self.automaton.log2_lambda - self.forbidden.log2_lambda) < 1e-9


def pair_type_table_check(q: int = 3) -> list[ArchetypeRow]:
    """Labeling capacity of each pair archetype next to its forbidden-substring capacity."""
    if q < 3:
        raise ValueError("the archetypes need q >= 3")
    alphabet = Alphabet(q)
    rows = []
    for name, patterns, poly in TABLE2:
        ls = _instantiate(name, alphabet)
        rows.append(
            ArchetypeRow(
                name,
                str(ls),
                patterns,
                capacity_via_automaton(ls),
                forbidden_substring_capacity(3, patterns),
                largest_real_root(poly),
            )
        )
    return rows


def nine_label_set(q: int = 4) -> LabelSet:
    alphabet = DNA if q == 4 else Alphabet(q)
    if q < 4:
        raise ValueError("the nine-label set needs q >= 4")
    return LabelSet(tuple(Label(DNA.parse(text), alphabet) for text in NINE_LABELS))


def nine_label_lower_bound(q: int = 4) -> CapacityValue:
    """Automaton capacity of the fixed nine-label set, embedded in a q-ary alphabet."""
    return capacity_via_automaton(nine_label_set(q))


def three_label_set(q: int = 3) -> LabelSet:
    if q < 3:
        raise ValueError("need q >= 3")
    return _instantiate("aa,bb,ab", Alphabet(q))


def three_label_lower_bound(q: int = 3) -> CapacityValue:
    """Automaton capacity of (aa, bb, ab) over q symbols."""
    return capacity_via_automaton(three_label_set(q))
