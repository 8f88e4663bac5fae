"""Acceptance criteria, one test each. Every test prints a PASS/FAIL line."""

import itertools
import math

import pytest

from conftest import SUITE
from test_spectral import EXAMPLE_MATRICES, TERNARY

from labelcap import (
    DNA,
    Alphabet,
    DiGraph,
    IntPolynomial,
    LabelSet,
    best_pair_capacity,
    cap_formula,
    capacity_slope_estimate,
    capacity_via_automaton,
    characteristic_polynomial,
    complement_label_set,
    count_valid_labelings,
    extremal_path_unique_graph,
    forbidden_substring_capacity,
    h_max,
    image_counts,
    is_path_unique,
    largest_real_root,
    minimal_label_count,
    nine_label_lower_bound,
    order_labels_by_capacity,
    pair_type_table_check,
    spectral_radius,
)
from labelcap.automaton import presentation
from labelcap.maxcap import NINE_LABEL_FORBIDDEN, NINE_LABEL_POLYNOMIAL, TOP_PAIR_TYPES, nine_label_set
from labelcap.verify import matches_printed
from labelcap.words import all_labels, cyclic_overlap


@pytest.fixture
def report(capsys):
    """Print one PASS/FAIL line outside pytest's capture, then assert."""

    def emit(number, title, failures):
        status = "PASS" if not failures else "FAIL"
        with capsys.disabled():
            print(f"\n{status} criterion {number}: {title}" + ("" if not failures else f" ({'; '.join(failures)})"))
        assert not failures

    return emit


def _both_methods(text):
    ls = LabelSet.parse(text)
    values = [capacity_via_automaton(ls)]
    f = cap_formula(ls)
    if f is not None:
        values.append(f)
    return values


def test_criterion_1_single_label_constants(report):
    failures = []
    for text, printed in (("ATA", "1.618"), ("CGCG", "1.44"), ("AA", "1.7549")):
        values = _both_methods(text)
        if len(values) != 2:
            failures.append(f"{text}: no formula")
        failures += [f"{text}: {v.method} {v.lam:.6f}" for v in values if not matches_printed(v.lam, printed)]
    values = _both_methods("A")
    if len(values) != 2 or any(abs(v.log2_lambda - 1) > 1e-12 for v in values):
        failures.append("A: capacity is not 1")
    report(1, "single-label constants ATA, CGCG, AA, A", failures)


def test_criterion_2_multi_label_constants(report):
    failures = []
    cases = (
        ("AC,GT,AGCT", "2.075"),
        ("ACGT,GTT", "1.685"),
        ("AA,CC", "2.206"),
        ("AA,CC,AC", "2.582"),
    )
    for text, printed in cases:
        for v in _both_methods(text):
            if abs(v.lam - float(printed)) > 1e-3:
                failures.append(f"{text}: {v.method} {v.lam:.6f}")
    report(2, "multi-label constants 2.075, 1.685, 2.206, 2.582", failures)


def test_criterion_3_cross_method_equivalence(report):
    failures = []
    checked = 0
    for lab in all_labels(4, 5):
        ls = LabelSet((lab,))
        f = cap_formula(ls)
        if f is None:
            continue
        checked += 1
        diff = abs(f.log2_lambda - capacity_via_automaton(ls).log2_lambda)
        if diff >= 1e-9:
            failures.append(f"{lab}: {diff:.1e}")
    if checked != 1364:
        failures.append(f"only {checked} labels covered")
    for text in SUITE:
        ls = LabelSet.parse(text)
        auto = image_counts(presentation(ls), 10)
        failures += [f"{text}@{n}" for n in range(1, 11) if auto[n] != count_valid_labelings(ls, n)]
    report(3, f"formula = automaton on {checked} labels; counts = oracle for n <= 10", failures)


def test_criterion_4_extremal_classes(report):
    by_length = {}
    for lab in all_labels(4, 5):
        by_length.setdefault(len(lab), []).append((lab, capacity_via_automaton(LabelSet((lab,))).log2_lambda))
    failures = []
    for ell, items in by_length.items():
        lo = min(c for _, c in items)
        hi = max(c for _, c in items)
        argmin = {lab.symbols for lab, c in items if c - lo < 1e-9}
        argmax = {lab.symbols for lab, c in items if hi - c < 1e-9}
        noncyclic = {lab.symbols for lab, _ in items if cyclic_overlap(lab) == 0}
        expected_max = {(s,) * ell for s in range(4)}
        if ell % 2:
            h = (ell - 1) // 2
            expected_max |= {(s,) * h + (t,) + (s,) * h for s in range(4) for t in range(4)}
        if argmin != noncyclic:
            failures.append(f"minimum at length {ell}")
        if argmax != expected_max:
            failures.append(f"maximum at length {ell}")
    total = sum(len(v) for v in by_length.values())
    if total != 1364:
        failures.append(f"{total} labels")
    report(4, "minimum = non-cyclic labels, maximum = constant and centered-symbol labels", failures)


# the rows of the ordering figure, largest capacity first
ORDER_ROWS = (
    {"A"},
    {"AA"},
    {"AC", "AAA", "ACA"},
    {"AAAA"},
    {"ACG", "ACGA", "AAAAA", "AACAA"},
    {"ACAC", "ACACA"},
    {"ACGAC"},
    {"ACGT", "ACGTA"},
    {"ACGAT"},
)


def test_criterion_5_ordering_chain(report):
    classes = order_labels_by_capacity(4, 5)
    failures = []
    if len(classes) != len(ORDER_ROWS):
        failures.append(f"{len(classes)} classes")
    for i, (cls, row) in enumerate(zip(classes, ORDER_ROWS)):
        if not all(text in cls for text in row):
            failures.append(f"row {i}: {sorted(row)} vs {cls.representatives()}")
    for upper, lower in zip(classes, classes[1:]):
        if not upper.capacity.log2_lambda > lower.capacity.log2_lambda + 1e-9:
            failures.append("an inequality is not strict")
    report(5, "capacity chain for labels of length <= 5", failures)


def test_criterion_6_path_unique(report):
    failures = []
    expected_h = {2: 2, 3: 4, 4: 6, 5: 9, 6: 12, 7: 16, 8: 20}
    failures += [f"h({n})" for n, h in expected_h.items() if h_max(n) != h]
    for n in range(2, 9):
        g = extremal_path_unique_graph(n)
        if len(g) != h_max(n) or not is_path_unique(g):
            failures.append(f"extremal n={n}")
        if n <= 6 and any(is_path_unique(g.with_edge(*e)) for e in g.absent_edges()):
            failures.append(f"extremal n={n} not edge-maximal")
    if minimal_label_count(2, 4) != 10:
        failures.append("s(2,4)")
    g = DiGraph(4, [tuple(DNA.parse(e)) for e in ("AA", "AC", "AT", "GG", "GC", "GT")])
    labels = complement_label_set(g)
    cap = capacity_via_automaton(labels).log2_lambda
    if len(labels) != 10 or abs(cap - 2) > 1e-9:
        failures.append(f"10-label set capacity {cap:.9f}")
    alphabet = Alphabet(2)
    pairs = list(itertools.product(range(2), repeat=2))
    for mask in range(16):
        g = DiGraph(2, [e for i, e in enumerate(pairs) if mask >> i & 1])
        if len(g) == 4:
            # no labels at all: the labeling sequence is constant, capacity 0
            full = False
        else:
            full = abs(capacity_via_automaton(complement_label_set(g, alphabet)).log2_lambda - 1) < 1e-9
        if full != is_path_unique(g):
            failures.append(f"q=2 subgraph {sorted(g.edges)}")
    report(6, "h(2..8), extremal graphs, s(2,4)=10, 10-label set, q=2 equivalence", failures)


def test_criterion_7_best_pair(report):
    failures = []
    res = best_pair_capacity(3, reduce_symmetry=False)
    target = math.log2(largest_real_root(IntPolynomial.from_descending([1, -3, 3, -3, 1, -1])))
    if abs(res.capacity.log2_lambda - target) > 1e-6 or abs(res.capacity.lam - 2.206) > 1e-3:
        failures.append(f"t(2,2,3) lambda {res.capacity.lam:.6f}")
    if set(res.witness_types) != TOP_PAIR_TYPES:
        failures.append(f"witness types {res.witness_types}")
    expected = {"ab,ac": 2.0, "ab,bc": 2.148, "aa,bc": 2.107, "ab,ba": 2.206, "aa,bb": 2.206, "aa,ab": 2.206}
    for row in pair_type_table_check(3):
        if not row.agrees or abs(row.automaton.lam - expected[row.archetype]) > 1e-3:
            failures.append(f"{row.archetype}: {row.automaton.lam:.4f}")
    report(7, f"t(2,2,3) over {res.candidates} pairs and the archetype table", failures)


def test_criterion_8_nine_label_bound(report):
    failures = []
    assert len(nine_label_set().labels) == 9
    nine = nine_label_lower_bound()
    if nine.log2_lambda < math.log2(3.866) - 1e-6:
        failures.append(f"nine labels {nine.lam:.6f}")
    forb = forbidden_substring_capacity(4, NINE_LABEL_FORBIDDEN)
    root = largest_real_root(NINE_LABEL_POLYNOMIAL)
    if abs(forb.log2_lambda - math.log2(root)) > 1e-9:
        failures.append(f"avoiding AGT, CGT: {forb.lam} vs {root}")
    report(8, f"nine-label bound lambda={nine.lam:.6f}", failures)


def test_criterion_9_oracle_slope(report):
    failures = []
    for text in ("AA", "AC", "ATA"):
        ls = LabelSet.parse(text)
        slope = capacity_slope_estimate(ls, 12)[-1]
        exact = cap_formula(ls).log2_lambda
        if abs(slope - exact) > 0.05:
            failures.append(f"{text}: slope {slope:.4f} vs {exact:.4f}")
    report(9, "oracle slope at n=12 for AA, AC, ATA", failures)


def test_criterion_10_numerical_core(report):
    failures = []
    golden = largest_real_root(IntPolynomial.from_descending([1, -1, -1]))
    if abs(golden - (1 + math.sqrt(5)) / 2) > 1e-12:
        failures.append(f"golden ratio {golden!r}")
    if abs(spectral_radius(TERNARY) - 3) > 1e-9:
        failures.append("ternary graph")
    for name, m in EXAMPLE_MATRICES.items():
        root = largest_real_root(characteristic_polynomial(m), q=len(m))
        if abs(spectral_radius(m) - root) > 1e-9:
            failures.append(name)
    report(10, "root finder, spectral radius and characteristic polynomials", failures)
