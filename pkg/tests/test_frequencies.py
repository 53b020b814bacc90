from fractions import Fraction
from itertools import permutations

import pytest

from resmat.frequencies import (
    MIN_PRODUCT_BOUND,
    NUM_CLASSES,
    class_representatives,
    configuration_class,
    empirical_scan,
    exact_frequencies,
)
from resmat.matrices import canonical_form
from resmat.qr import is_qr_matrix, qr_matrix_from_primes


class TestClassTable:
    def test_ten_representatives(self):
        reps = class_representatives()
        assert [c.class_id for c in reps] == list(range(1, NUM_CLASSES + 1))
        for c in reps:
            assert is_qr_matrix(c.representative).verdict
            assert canonical_form(c.representative) == c.representative

    def test_representatives_strictly_ordered(self):
        reps = [c.representative for c in class_representatives()]
        keys = [r._key() for r in reps]
        assert keys == sorted(keys) and len(set(keys)) == len(keys)


class TestConfigurationClass:
    def test_fixture(self):
        assert configuration_class(3, 7, 13).class_id == 6

    def test_order_invariant(self):
        ids = {
            configuration_class(*triple).class_id
            for triple in permutations((3, 7, 13))
        }
        assert ids == {6}

    def test_class_matches_canonical_form(self):
        for triple in ((3, 5, 7), (5, 13, 17), (3, 11, 23), (7, 11, 19)):
            c = configuration_class(*triple)
            mat = qr_matrix_from_primes(triple)
            assert canonical_form(mat) == c.representative

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            configuration_class(3, 3, 7)
        with pytest.raises(ValueError):
            configuration_class(2, 3, 7)
        with pytest.raises(ValueError):
            configuration_class(3, 7, 15)


class TestExactFrequencies:
    def test_multiset(self):
        report = exact_frequencies()
        assert report.total == 64
        assert sum(report.counts) == 64
        expected = sorted(
            [
                Fraction(1, 32),
                Fraction(1, 16),
                Fraction(1, 16),
                Fraction(3, 32),
                Fraction(3, 32),
                Fraction(3, 32),
                Fraction(3, 32),
                Fraction(3, 32),
                Fraction(3, 16),
                Fraction(3, 16),
            ]
        )
        assert sorted(report.frequencies) == expected

    def test_deterministic(self):
        assert exact_frequencies() == exact_frequencies()


class TestEmpiricalScan:
    def test_bound_too_small(self):
        with pytest.raises(ValueError):
            empirical_scan(MIN_PRODUCT_BOUND - 1)

    def test_minimal_bound_single_triple(self):
        report = empirical_scan(MIN_PRODUCT_BOUND)
        assert report.total == 1
        cid = configuration_class(3, 5, 7).class_id
        assert report.counts[cid - 1] == 1

    def test_bound_is_inclusive(self):
        # 3 * 5 * 7 = 105 is admitted at bound 105 but not at any lower bound
        assert empirical_scan(105).total == 1
        assert empirical_scan(106).total == 1
        assert empirical_scan(164).total == 1  # 3 * 5 * 11 = 165 excluded
        assert empirical_scan(165).total == 2

    def test_monotone_in_bound(self):
        prev = 0
        for bound in (105, 200, 500, 1000, 3000):
            total = empirical_scan(bound).total
            assert total >= prev
            prev = total

    def test_counts_match_direct_classification(self):
        from resmat.rational import sieve_primes

        bound = 2000
        report = empirical_scan(bound)
        direct = [0] * NUM_CLASSES
        odd = sieve_primes(bound)[1:]
        for i, p in enumerate(odd):
            for j in range(i + 1, len(odd)):
                q = odd[j]
                for k in range(j + 1, len(odd)):
                    r = odd[k]
                    if p * q * r > bound:
                        break
                    direct[configuration_class(p, q, r).class_id - 1] += 1
        assert list(report.counts) == direct
        assert report.total == sum(direct)

    def test_frequencies_sum_to_one(self):
        report = empirical_scan(5000)
        assert sum(report.frequencies) == 1
