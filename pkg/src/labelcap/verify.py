"""Cross-method regression checks run by ``label verify``."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .automaton import capacity_via_automaton, image_counts, presentation
from .closed_form import cap_formula
from .maxcap import (
    NINE_LABEL_FORBIDDEN,
    NINE_LABEL_POLYNOMIAL,
    THREE_LABEL_POLYNOMIAL,
    best_pair_capacity,
    forbidden_substring_capacity,
    nine_label_lower_bound,
    pair_type_table_check,
    three_label_lower_bound,
    TOP_PAIR_TYPES,
)
from .oracle import count_valid_labelings
from .pathunique import (
    complement_label_set,
    extremal_path_unique_graph,
    h_max,
    is_path_unique,
    is_path_unique_bruteforce,
)
from .polynomial import largest_real_root
from .words import Alphabet, LabelSet, all_labels, canonical_relabeling

SUITE = ("AC", "A", "ATA", "CGCG", "AA", "AATAA", "ACGT,GTT", "AC,GT,AGCT", "AA,CC", "AA,CC,AC")

# values as printed, so the comparison can respect the printed precision
PUBLISHED_LAMBDAS = {
    "ATA": "1.618",
    "CGCG": "1.44",
    "AA": "1.7549",
    "A": "2",
    "AC,GT,AGCT": "2.075",
    "ACGT,GTT": "1.685",
    "AA,CC": "2.206",
    "AA,CC,AC": "2.582",
}


def printed_tolerance(printed: str) -> float:
    """max(1e-3, half a unit in the last printed digit): "1.44" allows 0.005."""
    decimals = len(printed.split(".")[1]) if "." in printed else 0
    return max(1e-3, 0.5 * 10.0**-decimals + 1e-12)


def matches_printed(value: float, printed: str) -> bool:
    return abs(value - float(printed)) <= printed_tolerance(printed)


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str


def _check(name: str, fn: Callable[[], tuple[bool, str]]) -> CheckResult:
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failed check, not a crashed suite
        return CheckResult(name, False, f"{type(exc).__name__}: {exc}")
    return CheckResult(name, ok, detail)


def _published_constants() -> tuple[bool, str]:
    bad = []
    for text, printed in PUBLISHED_LAMBDAS.items():
        ls = LabelSet.parse(text)
        values = [capacity_via_automaton(ls).lam]
        f = cap_formula(ls)
        if f is not None:
            values.append(f.lam)
        if not all(matches_printed(v, printed) for v in values):
            bad.append(text)
    return not bad, f"{len(PUBLISHED_LAMBDAS)} constants" if not bad else "off: " + " ".join(bad)


def _formula_vs_automaton() -> tuple[bool, str]:
    # capacity only depends on the relabeling pattern, so one label per pattern suffices
    seen = set()
    checked = worst = 0
    for lab in all_labels(4, 5):
        key = canonical_relabeling([lab.symbols])[0]
        if key in seen:
            continue
        seen.add(key)
        ls = LabelSet((lab,))
        f = cap_formula(ls)
        if f is None:
            continue
        checked += 1
        worst = max(worst, abs(f.log2_lambda - capacity_via_automaton(ls).log2_lambda))
    return worst < 1e-9, f"{checked} label patterns, max difference {worst:.1e}"


def _oracle_counts(nmax: int) -> tuple[bool, str]:
    bad = []
    for text in SUITE:
        ls = LabelSet.parse(text)
        auto = image_counts(presentation(ls), nmax)
        for n in range(1, nmax + 1):
            if auto[n] != count_valid_labelings(ls, n):
                bad.append(f"{text}@{n}")
    return not bad, "all equal" if not bad else "mismatch: " + " ".join(bad)


def _boundary_insensitivity() -> tuple[bool, str]:
    worst = 0.0
    for text in SUITE:
        ls = LabelSet.parse(text)
        a = capacity_via_automaton(ls, boundary=True).log2_lambda
        b = capacity_via_automaton(ls, boundary=False).log2_lambda
        worst = max(worst, abs(a - b))
    return worst < 1e-9, f"max difference {worst:.1e}"


def _path_unique() -> tuple[bool, str]:
    for n in range(1, 9):
        g = extremal_path_unique_graph(n)
        if len(g) != h_max(n) or not is_path_unique(g) or not is_path_unique_bruteforce(g):
            return False, f"extremal graph n={n} fails"
        if 2 <= n <= 6 and any(is_path_unique(g.with_edge(*e)) for e in g.absent_edges()):
            return False, f"extremal graph n={n} is not edge-maximal"
    cap = capacity_via_automaton(complement_label_set(extremal_path_unique_graph(4))).log2_lambda
    return abs(cap - 2) < 1e-9, f"complement of the extremal 4-vertex graph: capacity {cap:.12f}"


def _pairs() -> tuple[bool, str]:
    res = best_pair_capacity(3)
    target = largest_real_root(THREE_LABEL_POLYNOMIAL)  # sanity: the triple beats the pair
    ok = abs(res.capacity.lam - 2.2055694304) < 1e-6 and set(res.witness_types) == TOP_PAIR_TYPES
    ok = ok and res.capacity.lam < target
    rows = pair_type_table_check(3)
    ok = ok and all(r.agrees and abs(r.automaton.lam - r.expected_lambda) < 1e-9 for r in rows)
    return ok, f"t(2,2,3): lambda={res.capacity.lam:.9f}, types={','.join(res.witness_types)}"


def _bounds() -> tuple[bool, str]:
    nine = nine_label_lower_bound()
    forb = forbidden_substring_capacity(Alphabet(4), NINE_LABEL_FORBIDDEN)
    root = largest_real_root(NINE_LABEL_POLYNOMIAL)
    three = three_label_lower_bound(3)
    ok = nine.log2_lambda >= math.log2(3.866) - 1e-6 and abs(forb.lam - root) < 1e-9
    ok = ok and abs(three.lam - largest_real_root(THREE_LABEL_POLYNOMIAL)) < 1e-9
    return ok, f"nine: lambda={nine.lam:.9f}; three: lambda={three.lam:.9f}"


def run_all(oracle_n: int = 8) -> list[CheckResult]:
    return [
        _check("published constants", _published_constants),
        _check("formula vs automaton (q=4, l<=5)", _formula_vs_automaton),
        _check(f"automaton vs oracle counts (n<={oracle_n})", lambda: _oracle_counts(oracle_n)),
        _check("boundary insensitivity", _boundary_insensitivity),
        _check("path-unique graphs", _path_unique),
        _check("t(2,2,3) and pair archetypes", _pairs),
        _check("three- and nine-label bounds", _bounds),
    ]
