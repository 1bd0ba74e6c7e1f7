from fractions import Fraction

import pytest

from pypowersums.classification import (
    KNOWN_HITS,
    ClassificationRecord,
    Condition,
    classify,
    kellner_row,
    kellner_scan,
    mersenne_mod8_obstruction,
    power_of_three_obstruction,
    quarter_square_parity_check,
    record_from_values,
    strict_inequality_check,
    theorem_predicate,
    theorem_row,
)
from pypowersums.engines import PairedEngine
from pypowersums.sums import exact_ratio


class TestTheoremPredicate:
    @pytest.mark.parametrize(
        "k, n, expected",
        [
            (7, 2, (True, Condition.A)),
            (1, 10, (True, Condition.B)),
            (2, 3, (True, Condition.C)),
            (4, 4, (False, Condition.NONE)),
        ],
    )
    def test_examples(self, k, n, expected):
        assert theorem_predicate(k, n) == expected

    def test_overlap_reports_first_condition(self):
        assert theorem_predicate(1, 2) == (True, Condition.A)

    def test_k_one_n_three_is_condition_c(self):
        assert theorem_predicate(1, 3) == (True, Condition.C)

    def test_rejects_n_below_two(self):
        with pytest.raises(ValueError, match="n >= 2"):
            theorem_predicate(3, 1)


class TestClassify:
    def test_k_two_n_three(self):
        undertest = classify(2, 3)

        assert undertest.predicted_integer
        assert undertest.actual_integer
        assert undertest.ratio == 2
        assert undertest.cofactor_witness == 3

    def test_k_one_n_eight(self):
        undertest = classify(1, 8)

        assert undertest.matched_condition is Condition.B
        assert undertest.ratio == 1
        assert undertest.cofactor_witness == 2

    def test_k_three_n_five(self):
        undertest = classify(3, 5)

        assert not undertest.predicted_integer
        assert not undertest.actual_integer
        assert undertest.ratio == exact_ratio(3, 5)
        assert undertest.cofactor_witness is None

    def test_no_cofactor_at_n_two(self):
        undertest = classify(5, 2)

        assert undertest.ratio == 31
        assert undertest.cofactor_witness is None

    def test_record_invariants(self):
        record = ClassificationRecord(1, 4, Condition.B, Fraction(1), 2)

        assert record.agrees
        assert record.predicted_integer and record.actual_integer

    def test_record_from_values_keeps_non_dividing_quotient(self):
        undertest = record_from_values(2, 3, 4, 8)

        assert undertest.ratio == 2
        assert undertest.cofactor_witness == 2
        assert undertest.cofactor_witness * 4 != 3**2

    def test_theorem_holds_on_grid(self):
        for k in range(1, 40):
            for a_n, record in theorem_row(k, 2, 300):
                assert record.agrees, (k, record.n)
                if record.cofactor_witness is not None:
                    assert record.cofactor_witness * a_n == record.n**k

    def test_row_agrees_with_single_cells(self):
        row = [record for _, record in theorem_row(6, 5, 40, PairedEngine)]
        assert row == [classify(6, n) for n in range(5, 41)]

    def test_condition_b_value(self):
        for n in range(2, 400, 2):
            assert classify(1, n).ratio == 1

    def test_condition_a_value(self):
        for k in range(1, 80):
            assert classify(k, 2).ratio == 2**k - 1

    def test_odd_n_k_one_ratio_before_reduction(self):
        for n in range(3, 400, 2):
            a_next, a_n = (n + 1) // 2, (n - 1) // 2
            assert classify(1, n).ratio == Fraction(a_next, a_n)
            assert a_next * (n - 1) == a_n * (n + 1)

    @pytest.mark.slow
    def test_full_grid(self):
        for k in range(1, 201):
            for a_n, record in theorem_row(k, 2, 2000):
                assert record.agrees, (k, record.n)
                assert a_n > 0


class TestProofSteps:
    @pytest.mark.parametrize("k, expected", [(2, 1), (3, None), (1, None)])
    def test_power_of_three_obstruction(self, k, expected):
        assert power_of_three_obstruction(k) == expected

    def test_only_hit_is_k_two(self):
        assert [k for k in range(1, 2001) if power_of_three_obstruction(k)] == [2]

    def test_mod8_obstruction(self):
        assert not mersenne_mod8_obstruction(1)
        assert not mersenne_mod8_obstruction(2)
        assert all(mersenne_mod8_obstruction(k) for k in range(3, 10**6 + 1))

    @pytest.mark.parametrize("k, n", [(3, 4), (5, 6), (3, 10)])
    def test_strict_inequality_examples(self, k, n):
        assert strict_inequality_check(k, n)

    def test_strict_inequality_grid(self):
        for k in range(3, 52, 2):
            for n in range(4, 201, 2):
                assert strict_inequality_check(k, n)
                assert quarter_square_parity_check(k, n)

    def test_strict_inequality_rejects_even_k(self):
        with pytest.raises(ValueError, match="k must be odd"):
            strict_inequality_check(4, 6)

    def test_strict_inequality_rejects_odd_n(self):
        with pytest.raises(ValueError, match="n must be even"):
            strict_inequality_check(3, 5)


class TestKellner:
    def test_small_scan(self):
        assert kellner_scan(5, 10) == [(1, 3, 2), (3, 3, 4)]

    def test_single_cell(self):
        assert kellner_scan(1, 3) == [(1, 3, 2)]

    def test_no_hits_for_k_two(self):
        assert kellner_row(2, 3, 500) == []

    def test_desk_scale_scan(self):
        hits = kellner_scan(30, 200)

        assert {(k, n) for k, n, _ in hits} == KNOWN_HITS

    def test_rejects_small_bounds(self):
        with pytest.raises(ValueError, match="n_max must be at least 3"):
            kellner_scan(4, 2)

    @pytest.mark.slow
    def test_acceptance_range(self):
        assert kellner_scan(100, 500) == [(1, 3, 2), (3, 3, 4)]
