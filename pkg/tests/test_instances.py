import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qubrute import (
    DimensionCapError,
    ParseError,
    QuboInstance,
    SplitMix64,
    bench_seed,
    parse_instance,
    random_instance,
    serialize_instance,
)


class TestSplitMix64:
    def test_reference_outputs_seed_1234567(self):
        # Published outputs of the reference implementation.
        rng = SplitMix64(1234567)
        assert [rng.next_u64() for _ in range(3)] == [
            6457827717110365317,
            3203168211198807973,
            9817491932198370423,
        ]

    def test_reference_output_seed_zero(self):
        assert SplitMix64(0).next_u64() == 16294208416658607535

    def test_unit_draws_stay_in_range(self):
        rng = SplitMix64(99)
        draws = [rng.next_unit() for _ in range(1000)]
        assert all(0.0 <= u < 1.0 for u in draws)
        sym = [rng.next_symmetric() for _ in range(1000)]
        assert all(-1.0 <= u < 1.0 for u in sym)


class TestRandomInstance:
    def test_deterministic_per_seed(self):
        a = random_instance(8, seed=123)
        b = random_instance(8, seed=123)
        assert a == b

    def test_different_seeds_differ(self):
        assert random_instance(8, seed=1) != random_instance(8, seed=2)

    def test_full_density_fills_the_upper_triangle(self):
        inst = random_instance(5, seed=7, density=1.0)
        assert np.count_nonzero(np.triu(inst.coeffs)) == 15

    def test_low_density_thins_entries(self):
        inst = random_instance(10, seed=7, density=0.2)
        filled = np.count_nonzero(inst.coeffs)
        assert 0 < filled < 55

    def test_entries_lie_in_unit_interval(self):
        inst = random_instance(12, seed=3)
        assert np.all(np.abs(inst.coeffs) <= 1.0)

    def test_empirical_mean_is_near_zero(self):
        # Uniform on [-1, 1]: the mean over >= 10^4 pooled entries should
        # sit well inside (-0.02, 0.02).
        values = []
        seed = 0
        while len(values) < 10_000:
            inst = random_instance(40, seed=seed)
            values.extend(inst.coeffs[np.triu_indices(40)])
            seed += 1
        mean = float(np.mean(values[:10_000]))
        assert -0.02 < mean < 0.02

    @pytest.mark.parametrize("n, density", [(0, 1.0), (-3, 1.0), (5, 0.0), (5, 1.5)])
    def test_rejects_invalid_arguments(self, n, density):
        with pytest.raises(ValueError):
            random_instance(n, seed=1, density=density)

    def test_dimension_cap(self):
        with pytest.raises(DimensionCapError):
            random_instance(41, seed=1)


class TestBenchSeed:
    def test_deterministic(self):
        assert bench_seed(20, 3) == bench_seed(20, 3)

    def test_spreads_inputs(self):
        seeds = {bench_seed(n, rep) for n in range(4, 25) for rep in range(10)}
        assert len(seeds) == 21 * 10


class TestParse:
    def test_diagonal_example(self):
        inst = parse_instance("n 2\n0 0 -1\n1 1 -2\n")
        assert inst == QuboInstance(np.diag([-1.0, -2.0]))

    def test_comments_and_blank_lines(self):
        text = "# generated\n\nn 2  # dimension\n0 1 0.5\n"
        inst = parse_instance(text)
        assert inst.coeffs[0, 1] == 0.5

    def test_lower_entry_folds_by_default(self):
        inst = parse_instance("n 2\n0 1 5\n1 0 5\n")
        assert inst.coeffs[0, 1] == 10.0

    def test_lower_entry_rejected_in_strict_mode(self):
        with pytest.raises(ParseError) as err:
            parse_instance("n 2\n0 1 5\n1 0 5\n", strict=True)
        assert err.value.lineno == 3

    @pytest.mark.parametrize("text, lineno, fragment", [
        ("m 2\n", 1, "header"),
        ("n\n", 1, "header"),
        ("n two\n", 1, "dimension"),
        ("n 0\n", 1, "dimension"),
        ("n 2\n0 0\n", 2, "entry"),
        ("n 2\n0 0 1 9\n", 2, "entry"),
        ("n 2\nx 0 1\n", 2, "index"),
        ("n 2\n0 2 1\n", 2, "out of range"),
        ("n 2\n0 0 abc\n", 2, "value"),
        ("n 2\n0 0 nan\n", 2, "non-finite"),
        ("n 2\n0 0 inf\n", 2, "non-finite"),
        ("n 2\n0 1 1\n0 1 2\n", 3, "duplicate"),
        ("", 1, "missing header"),
        ("# only a comment\n", 1, "missing header"),
    ])
    def test_errors_carry_line_numbers(self, text, lineno, fragment):
        with pytest.raises(ParseError) as err:
            parse_instance(text)
        assert err.value.lineno == lineno
        assert fragment in str(err.value)

    def test_dimension_over_cap_is_not_a_parse_error(self):
        with pytest.raises(DimensionCapError):
            parse_instance("n 41\n")


class TestSerialize:
    def test_diagonal_example_text(self):
        text = serialize_instance(QuboInstance(np.diag([-1.0, -2.0])))
        assert text == "n 2\n0 0 -1\n1 1 -2\n"

    def test_zero_matrix_is_header_only(self):
        assert serialize_instance(QuboInstance(np.zeros((3, 3)))) == "n 3\n"

    def test_entries_ascend_row_major(self):
        inst = QuboInstance([[1.0, 2.0], [0.0, 3.0]])
        assert serialize_instance(inst) == "n 2\n0 0 1\n0 1 2\n1 1 3\n"

    @pytest.mark.parametrize("seed", range(5))
    def test_round_trip_is_exact(self, seed):
        inst = random_instance(10, seed=seed)
        assert parse_instance(serialize_instance(inst)) == inst

    @settings(max_examples=40, deadline=None)
    @given(n=st.integers(min_value=1, max_value=12), seed=st.integers(0, 2**64 - 1))
    def test_round_trip_property(self, n, seed):
        inst = random_instance(n, seed)
        assert parse_instance(serialize_instance(inst)) == inst

    def test_serialization_is_stable(self):
        inst = random_instance(7, seed=55)
        assert serialize_instance(inst) == serialize_instance(inst)
