import math
import warnings

import pytest

from labelcap import (
    IntPolynomial,
    Label,
    LabelSet,
    UnsupportedScopeError,
    cap_formula,
    capacity_polynomial,
    capacity_via_automaton,
    largest_real_root,
    max_single_label_polynomial,
    multi_label_polynomial,
    order_labels_by_capacity,
    rll_capacity_polynomial,
)
from labelcap.closed_form import (
    cyclic_overlap_polynomial,
    multi_label_case,
    noncyclic_polynomial,
    periodic_polynomial,
)
from labelcap.polynomial import count_roots
from labelcap.words import Alphabet

root = largest_real_root


def desc(p):
    return p.descending()


class TestSingleLabel:
    def test_reference_polynomials(self):
        assert desc(capacity_polynomial(Label.parse("ACG"))) == [1, -1, 0, -1]
        assert desc(capacity_polynomial(Label.parse("CGCG"))) == [1, -1, -1, 1, 0, -1]
        assert desc(capacity_polynomial(Label.parse("ATA"))) == [1, -1, -1, 0]
        assert desc(capacity_polynomial(Label.parse("AATAA"))) == [1, -1, 0, -1]

    def test_uncovered(self):
        assert capacity_polynomial(Label.parse("AAGAAGAA")) is None
        assert cap_formula(LabelSet.parse("AAGAAGAA")) is None

    def test_ac_is_golden(self):
        assert cap_formula(LabelSet.parse("AC")).lam == pytest.approx((1 + 5**0.5) / 2, abs=1e-12)

    def test_single_symbol(self):
        assert cap_formula(LabelSet.parse("A")).log2_lambda == pytest.approx(1.0, abs=1e-12)

    def test_unary_alphabet_has_no_formula(self):
        assert cap_formula(LabelSet.parse("A", Alphabet(1))) is None


class TestMaxLabel:
    def test_values(self):
        assert desc(max_single_label_polynomial(2)) == [1, -2, 1, -1]
        assert root(max_single_label_polynomial(2)) == pytest.approx(1.7549, abs=1e-4)
        assert root(max_single_label_polynomial(1)) == pytest.approx(2.0, abs=1e-12)

    def test_odd_length_equals_shorter_noncyclic(self):
        for ell in (1, 2, 3):
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                assert root(max_single_label_polynomial(2 * ell - 1)) == pytest.approx(
                    root(noncyclic_polynomial(ell)), abs=1e-12
                )

    def test_warns_beyond_scope(self):
        with pytest.warns(UserWarning):
            max_single_label_polynomial(6)


class TestMultiLabel:
    def test_example_8(self):
        ls = LabelSet.parse("AC,GT,AGCT")
        assert multi_label_case(ls) == "non-overlapping"
        assert desc(multi_label_polynomial(ls)) == [1, -1, -2, 0, -1]

    def test_example_10(self):
        ls = LabelSet.parse("ACGT,GTT")
        assert multi_label_case(ls) == "one-side-overlap"
        assert desc(multi_label_polynomial(ls)) == [1, -1, 0, -1, -1, -1, 0]
        # order of the pair does not matter
        assert multi_label_polynomial(LabelSet.parse("GTT,ACGT")) == multi_label_polynomial(ls)

    def test_two_period_one(self):
        ls = LabelSet.parse("AA,CC")
        assert multi_label_case(ls) == "two-period-one"
        assert desc(multi_label_polynomial(ls)) == [1, -3, 3, -3, 1, -1]

    def test_guards(self):
        # cyclic members
        assert multi_label_case(LabelSet.parse("ATA,CG")) is None
        # every symbol starts a label
        assert multi_label_case(LabelSet.parse("A,C,G", Alphabet(3))) is None
        # binary alphabets fall outside the multi-label theorems
        assert multi_label_case(LabelSet.parse("AA,CC", Alphabet(2))) is None
        # overlaps in both directions
        assert multi_label_case(LabelSet.parse("ACG,GCA")) is None
        # one label inside the other with a one-sided overlap
        assert multi_label_case(LabelSet.parse("A,CA")) is None

    def test_containment_guard_is_needed(self):
        # the one-side formula with t = 1 would give x^2 - x - 1 - x - 1, root 1 + sqrt 3
        wrong = root(IntPolynomial.from_descending([1, -2, -2]))
        auto = capacity_via_automaton(LabelSet.parse("A,CA")).lam
        assert wrong == pytest.approx(1 + 3**0.5)
        assert auto == pytest.approx(1 + 2**0.5, abs=1e-9)

    def test_non_overlapping_with_containment(self):
        # CG inside ACGT: pairwise non-overlapping, and the formula still holds
        ls = LabelSet.parse("ACGT,CG")
        assert multi_label_case(ls) == "non-overlapping"
        assert cap_formula(ls).close_to(capacity_via_automaton(ls))


class TestRll:
    def test_values(self):
        assert desc(rll_capacity_polynomial(2, 1)) == [1, -1, -1]
        assert root(rll_capacity_polynomial(2, 0)) == pytest.approx(2.0)
        assert root(rll_capacity_polynomial(3, 1)) == pytest.approx(2.0)

    def test_validation(self):
        with pytest.raises(ValueError):
            rll_capacity_polynomial(1, 0)


class TestMonotonicity:
    def test_noncyclic_decreasing_in_length(self):
        roots = [root(noncyclic_polynomial(ell)) for ell in range(2, 9)]
        assert all(a > b for a, b in zip(roots, roots[1:]))

    def test_period_ordering(self):
        roots = [root(periodic_polynomial(6, p)) for p in (1, 2, 3)]
        assert roots[0] > roots[1] > roots[2]

    def test_overlap_ordering(self):
        assert root(cyclic_overlap_polynomial(5, 1)) < root(cyclic_overlap_polynomial(5, 2))

    def test_single_root_in_bracket(self):
        polys = [noncyclic_polynomial(l) for l in range(1, 9)]
        polys += [periodic_polynomial(l, p) for l in range(2, 9) for p in range(1, l) if l % p == 0]
        polys += [cyclic_overlap_polynomial(l, r) for l in range(3, 9) for r in range(1, l // 2 + 1)]
        for p in polys:
            assert count_roots(p, 1 + 1e-9, 5) == 1, str(p)


class TestOrdering:
    def test_refuses_beyond_five(self):
        with pytest.raises(UnsupportedScopeError):
            order_labels_by_capacity(4, 6)

    def test_small_chain(self):
        classes = order_labels_by_capacity(4, 3)
        reps = [c.representatives() for c in classes]
        assert reps[0] == ["A"] and reps[1] == ["AA"]
        assert {"AC", "AAA", "ACA"} <= set(reps[2])
        assert sum(len(c.labels) for c in classes) == 4 + 16 + 64
