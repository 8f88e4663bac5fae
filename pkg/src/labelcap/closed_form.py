"""Closed-form capacity polynomials and the capacity ordering of short labels.

Every formula here yields an integer polynomial whose largest real root
``lam`` gives the capacity ``log2(lam)``. Label sets outside the covered
cases return ``None`` and callers fall back to
:func:`labelcap.automaton.capacity_via_automaton`.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass

from .automaton import capacity_via_automaton
from .capacity import FORMULA, CapacityValue
from .errors import UnsupportedScopeError
from .polynomial import IntPolynomial, largest_real_root
from .words import (
    Label,
    LabelClass,
    LabelSet,
    all_labels,
    canonical_relabeling,
    classify,
    contains,
    is_cyclic,
    overlap,
    period,
)


def _poly(terms: list[tuple[int, int]]) -> IntPolynomial:
    coeffs: dict[int, int] = {}
    for e, c in terms:
        coeffs[e] = coeffs.get(e, 0) + c
    return IntPolynomial.from_terms(coeffs)


def noncyclic_polynomial(ell: int) -> IntPolynomial:
    """``x^l - x^(l-1) - 1``."""
    return _poly([(ell, 1), (ell - 1, -1), (0, -1)])


def periodic_polynomial(ell: int, p: int) -> IntPolynomial:
    """``x^(l+1) - x^l - x^(l-p+1) + x^(l-p) - 1`` for a label with non-cyclic period p."""
    return _poly([(ell + 1, 1), (ell, -1), (ell - p + 1, -1), (ell - p, 1), (0, -1)])


def cyclic_overlap_polynomial(ell: int, r: int) -> IntPolynomial:
    """``x^l - x^(l-1) - x^r + x^(r-1) - 1`` for a non-periodic label with border r."""
    return _poly([(ell, 1), (ell - 1, -1), (r, -1), (r - 1, 1), (0, -1)])


def capacity_polynomial(label: Label) -> IntPolynomial | None:
    """Polynomial for a single label, or ``None`` when its class has no closed form."""
    cls = classify(label)
    ell = len(label)
    if cls.kind == LabelClass.NONCYCLIC:
        return noncyclic_polynomial(ell)
    if cls.kind == LabelClass.PERIODIC:
        return periodic_polynomial(ell, cls.param)
    if cls.kind == LabelClass.CYCLIC_OVERLAP:
        return cyclic_overlap_polynomial(ell, cls.param)
    if cls.kind == LabelClass.PERIOD_ONE_OVERLAP:
        return noncyclic_polynomial(ell - cls.param)
    return None


def max_single_label_polynomial(ell: int) -> IntPolynomial:
    """``x^(l+1) - 2x^l + x^(l-1) - 1``, the capacity of a constant label of length l.

    Maximality over all labels of that length is established for l <= 5;
    longer lengths emit a warning.
    """
    if ell < 1:
        raise ValueError("label length must be >= 1")
    if ell > 5:
        warnings.warn(f"maximality of the constant label is only established for length <= 5 (got {ell})", stacklevel=2)
    return _poly([(ell + 1, 1), (ell, -2), (ell - 1, 1), (0, -1)])


def rll_capacity_polynomial(q: int, d: int) -> IntPolynomial:
    """``x^(d+1) - x^d - (q-1)`` for the q-ary (d, inf) run-length constraint."""
    if q < 2 or d < 0:
        raise ValueError("need q >= 2 and d >= 0")
    return _poly([(d + 1, 1), (d, -1), (0, -(q - 1))])


def _factor_free(words: list[tuple[int, ...]]) -> bool:
    return not any(contains(a, b) for a, b in itertools.permutations(words, 2) if len(a) > len(b))


def _overlaps(a: tuple[int, ...], b: tuple[int, ...]) -> list[int]:
    """Every r in 1..min(|a|,|b|) with suffix_r(a) == prefix_r(b)."""
    return [r for r in range(1, min(len(a), len(b)) + 1) if a[len(a) - r :] == b[:r]]


def multi_label_case(ls: LabelSet) -> str | None:
    """Which covered multi-label case applies: ``non-overlapping``, ``one-side-overlap``,
    ``two-period-one`` or ``None``."""
    words = ls.words()
    if len(words) < 2:
        return None
    # the theorems assume room to pad between occurrences: at least three
    # symbols, one of which starts no label (binary sets and sets such as
    # (A, C, G) over three symbols violate the formulas)
    q = ls.alphabet.size
    if q < 3 or len({w[0] for w in words}) == q:
        return None
    if len(words) == 2:
        a, b = words
        if len(a) == len(b) > 1 and period(a) == 1 and period(b) == 1:
            return "two-period-one"
    if any(is_cyclic(w) for w in words):
        return None
    pairs = list(itertools.combinations(words, 2))
    if all(overlap(a, b) == 0 and overlap(b, a) == 0 for a, b in pairs):
        return "non-overlapping"
    # with one label inside the other (A in CA, overlap t = |A|) the
    # one-side formula overcounts, so containment is excluded here
    if len(words) == 2 and _factor_free(words):
        a, b = words
        ab, ba = _overlaps(a, b), _overlaps(b, a)
        if (len(ab) == 1 and not ba) or (len(ba) == 1 and not ab):
            return "one-side-overlap"
    return None


def multi_label_polynomial(ls: LabelSet) -> IntPolynomial | None:
    case = multi_label_case(ls)
    words = ls.words()
    if case == "non-overlapping":
        top = max(len(w) for w in words)
        terms = [(top, 1), (top - 1, -1)]
        for w in words:
            terms.append((top - len(w), -1))
        return _poly(terms)
    if case == "one-side-overlap":
        a, b = words
        if overlap(a, b) == 0:
            a, b = b, a
        t = overlap(a, b)
        l1, l2 = len(a), len(b)
        return _poly([(l1 + l2 - 1, 1), (l1 + l2 - 2, -1), (l1 - 1, -1), (l2 - 1, -1), (t - 1, -1)])
    if case == "two-period-one":
        ell = len(words[0])
        x = IntPolynomial.x()
        inner = _poly([(ell + 1, 1), (ell, -2), (ell - 1, 1), (0, -2)])
        return x ** (ell - 1) * (x - 1) * inner - (x + 1)
    return None


def formula_polynomial(ls: LabelSet) -> IntPolynomial | None:
    if ls.k == 1:
        return capacity_polynomial(ls.labels[0])
    return multi_label_polynomial(ls)


def cap_formula(ls: LabelSet, tol: float = 1e-12) -> CapacityValue | None:
    """Closed-form capacity, or ``None`` for label sets no formula covers."""
    if ls.alphabet.size < 2:
        return None
    poly = formula_polynomial(ls)
    if poly is None:
        return None
    lam = largest_real_root(poly, tol=tol, q=ls.alphabet.size)
    return CapacityValue.from_lambda(lam, FORMULA, poly, tolerance=tol)


@dataclass(frozen=True)
class CapacityClass:
    """Labels sharing one capacity (equal within 1e-9)."""

    capacity: CapacityValue
    labels: tuple[Label, ...]

    def representatives(self) -> list[str]:
        """One label per alphabet-relabeling pattern, shortest first."""
        seen: dict[tuple[int, ...], Label] = {}
        for lab in self.labels:
            key = canonical_relabeling([lab.symbols])[0]
            seen.setdefault(key, Label(key, lab.alphabet))
        return [str(lab) for lab in sorted(seen.values(), key=lambda l: (len(l), l.symbols))]

    def __contains__(self, label: Label | str) -> bool:
        text = str(label)
        return any(str(lab) == text for lab in self.labels)


def order_labels_by_capacity(q: int, max_length: int = 5, tol: float = 1e-9) -> list[CapacityClass]:
    """Group every label of length <= ``max_length`` by automaton capacity, largest first.

    Capacities depend only on the relabeling pattern of a label, so each
    pattern is computed once and shared with the labels it stands for.
    """
    if q < 2:
        raise ValueError("need q >= 2")
    if max_length > 5:
        raise UnsupportedScopeError("the capacity ordering is only established for labels of length <= 5")
    by_pattern: dict[tuple[int, ...], CapacityValue] = {}
    values: list[tuple[Label, CapacityValue]] = []
    for lab in all_labels(q, max_length):
        key = canonical_relabeling([lab.symbols])[0]
        if key not in by_pattern:
            by_pattern[key] = capacity_via_automaton(LabelSet((Label(key, lab.alphabet),)))
        values.append((lab, by_pattern[key]))
    values.sort(key=lambda lv: -lv[1].log2_lambda)
    classes: list[tuple[CapacityValue, list[Label]]] = []
    for lab, cap in values:
        if classes and abs(classes[-1][0].log2_lambda - cap.log2_lambda) < tol:
            classes[-1][1].append(lab)
        else:
            classes.append((cap, [lab]))
    return [CapacityClass(cap, tuple(labs)) for cap, labs in classes]
