import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qubrute import ctz, flip_sequence, gray_permutation

from _reference import log2_ctz, popcount_ctz


class TestCtz:
    @pytest.mark.parametrize("k, expected", [
        (1, 0),
        (2, 1),
        (12, 2),
        (2**20, 20),
        (3, 0),
        (40, 3),
    ])
    def test_known_values(self, k, expected):
        assert ctz(k) == expected

    def test_first_terms_form_the_carry_sequence(self):
        # 0,1,0,2,0,1,0,3,0,1,0,2,0 for k = 1..13
        assert [ctz(k) for k in range(1, 14)] == [0, 1, 0, 2, 0, 1, 0, 3, 0, 1, 0, 2, 0]

    @pytest.mark.parametrize("k", [0, -1, -7])
    def test_rejects_non_positive(self, k):
        with pytest.raises(ValueError):
            ctz(k)

    def test_popcount_and_log2_identities_small_range(self):
        for k in range(1, 4096):
            c = ctz(k)
            assert c == popcount_ctz(k)
            assert c == log2_ctz(k)

    @given(k=st.integers(min_value=1, max_value=2**62))
    def test_popcount_identity_property(self, k):
        assert ctz(k) == popcount_ctz(k)


class TestFlipSequence:
    def test_two_bits(self):
        assert list(flip_sequence(2)) == [0, 1, 0]

    def test_one_bit(self):
        assert list(flip_sequence(1)) == [0]

    @pytest.mark.parametrize("n", [3, 5])
    def test_visits_every_vector_exactly_once(self, n):
        state = 0
        visited = [state]
        for l in flip_sequence(n):
            state ^= 1 << l
            visited.append(state)
        assert len(visited) == 2**n
        assert sorted(visited) == list(range(2**n))

    def test_emits_exactly_2n_minus_1_indices_in_range(self):
        flips = list(flip_sequence(4))
        assert len(flips) == 15
        assert all(0 <= l < 4 for l in flips)

    @pytest.mark.parametrize("n", [0, -1, 41])
    def test_width_validation_is_eager(self, n):
        with pytest.raises(ValueError):
            flip_sequence(n)


class TestGrayPermutation:
    def test_base_case(self):
        assert gray_permutation(1) == [0, 1]

    def test_two_bits(self):
        # One application of the reflect-and-prefix recursion to (0, 1):
        # keep 00, 01; then reversed with the high bit set: 11, 10.
        assert gray_permutation(2) == [0, 1, 3, 2]

    @pytest.mark.parametrize("a, b", [(0, 1), (1, 3), (3, 2)])
    def test_consecutive_pairs_differ_in_one_bit(self, a, b):
        assert bin(a ^ b).count("1") == 1

    @pytest.mark.parametrize("k_bits", range(1, 11))
    def test_is_a_permutation(self, k_bits):
        seq = gray_permutation(k_bits)
        assert sorted(seq) == list(range(2**k_bits))

    @pytest.mark.parametrize("k_bits", range(1, 11))
    def test_unit_hamming_steps_at_ctz_positions(self, k_bits):
        seq = gray_permutation(k_bits)
        for idx in range(1, len(seq)):
            step = seq[idx - 1] ^ seq[idx]
            assert bin(step).count("1") == 1
            assert step == 1 << ctz(idx)

    @pytest.mark.parametrize("k_bits", [0, -2, 21])
    def test_width_validation(self, k_bits):
        with pytest.raises(ValueError):
            gray_permutation(k_bits)


class TestConsistency:
    @pytest.mark.parametrize("n", range(1, 9))
    def test_flip_stream_reproduces_the_permutation(self, n):
        perm = gray_permutation(n)
        state = 0
        assert perm[0] == state
        for m, l in enumerate(flip_sequence(n), start=1):
            state ^= 1 << l
            assert state == perm[m]

    @settings(max_examples=50, deadline=None)
    @given(n=st.integers(min_value=1, max_value=14), data=st.data())
    def test_prefix_of_flips_lands_on_permutation_entry(self, n, data):
        m = data.draw(st.integers(min_value=0, max_value=2**n - 1))
        state = 0
        for k in range(1, m + 1):
            state ^= 1 << ctz(k)
        assert state == gray_permutation(n)[m]
