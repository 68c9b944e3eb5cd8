"""One-pass permutation construction, cycle structure, fast iteration."""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import oacm_perm, single_square, small_configs
from oacm import (
    AcmParams,
    ParameterError,
    Permutation,
    apply_iterations,
    build_oacm_permutation,
    compose,
    cycle_decompose,
    image_period,
    invert,
    matrix_period,
)


class TestPermutationType:
    def test_identity(self):
        perm = Permutation.identity(3, 4)
        assert np.array_equal(perm.forward, np.arange(12))

    def test_rejects_non_bijection(self):
        with pytest.raises(ParameterError):
            Permutation(2, 2, np.array([0, 0, 1, 2]))

    def test_rejects_wrong_length(self):
        with pytest.raises(ParameterError):
            Permutation(2, 2, np.arange(5))

    def test_equality(self):
        a = Permutation.identity(2, 3)
        b = Permutation(2, 3, np.arange(6))
        assert a == b
        assert a != Permutation(3, 2, np.arange(6))

    def test_bytes_round_trip(self):
        perm = oacm_perm(5, 7, 4, 1, p=2, q=3)
        assert Permutation.from_bytes(perm.to_bytes()) == perm

    def test_bytes_bad_magic(self):
        with pytest.raises(ParameterError):
            Permutation.from_bytes(b"JUNK!" + bytes(16))

    def test_bytes_wrong_length(self):
        data = Permutation.identity(2, 2).to_bytes()
        with pytest.raises(ParameterError):
            Permutation.from_bytes(data[:-1])


class TestBuild:
    def test_two_by_two_three_cycle(self):
        # Pixel (1,0) -> (1,1) -> (0,1) -> (1,0); origin stays put.
        perm = build_oacm_permutation(single_square(2), 1, 1)
        assert perm.forward.tolist() == [0, 3, 1, 2]

    def test_zero_parameters_give_identity(self):
        perm = oacm_perm(6, 9, 4, 2, p=0, q=0)
        assert perm == Permutation.identity(6, 9)

    def test_negative_parameters_rejected(self):
        with pytest.raises(ParameterError):
            oacm_perm(4, 4, 2, 0, p=-1)

    def test_inverse_build_matches_inverted_forward(self):
        # Inverse map per square, squares in reverse order: must equal the
        # inverse bijection of the forward pass, on a grid of small configs.
        for h, w in ((4, 4), (5, 9), (12, 7)):
            for s in (2, 3, min(h, w)):
                for o in (0, 1, s - 1):
                    for p, q in ((1, 1), (2, 1), (0, 3)):
                        fwd = oacm_perm(h, w, s, o, p, q)
                        bwd = oacm_perm(h, w, s, o, p, q, inverse=True)
                        assert bwd == invert(fwd), (h, w, s, o, p, q)


class TestInvertCompose:
    def test_invert_identity(self):
        assert invert(Permutation.identity(3, 3)) == Permutation.identity(3, 3)

    def test_invert_twice(self):
        perm = oacm_perm(8, 8, 5, 2)
        assert invert(invert(perm)) == perm

    def test_invert_three_cycle(self):
        perm = build_oacm_permutation(single_square(2), 1, 1)
        assert invert(perm).forward.tolist() == [0, 2, 3, 1]

    def test_compose_identity(self):
        perm = oacm_perm(4, 6, 3, 1)
        ident = Permutation.identity(4, 6)
        assert compose(perm, ident) == perm
        assert compose(ident, perm) == perm

    def test_compose_with_inverse(self):
        perm = oacm_perm(7, 5, 4, 2)
        assert compose(perm, invert(perm)) == Permutation.identity(7, 5)

    def test_three_cycle_squared_is_inverse(self):
        perm = build_oacm_permutation(single_square(2), 1, 1)
        assert compose(perm, perm) == invert(perm)

    def test_compose_dimension_mismatch(self):
        with pytest.raises(ParameterError):
            compose(Permutation.identity(2, 3), Permutation.identity(3, 2))


class TestCycleDecompose:
    def test_identity_cycles(self):
        cycles = cycle_decompose(Permutation.identity(2, 2))
        assert [c.tolist() for c in cycles.cycles] == [[0], [1], [2], [3]]

    def test_two_by_two_lengths(self):
        cycles = cycle_decompose(build_oacm_permutation(single_square(2), 1, 1))
        assert sorted(cycles.lengths.tolist()) == [1, 3]

    def test_three_by_three_lengths(self):
        cycles = cycle_decompose(build_oacm_permutation(single_square(3), 1, 1))
        assert sorted(cycles.lengths.tolist()) == [1, 4, 4]
        assert image_period(cycles) == 4

    def test_cycles_partition_the_indices(self):
        perm = oacm_perm(9, 13, 6, 2, p=3, q=2)
        cycles = cycle_decompose(perm)
        seen = np.concatenate(cycles.cycles)
        assert sorted(seen.tolist()) == list(range(9 * 13))
        assert int(cycles.lengths.sum()) == 9 * 13

    def test_cycles_follow_forward(self):
        perm = oacm_perm(6, 6, 4, 1, p=2, q=5)
        for cyc in cycle_decompose(perm).cycles:
            for i, j in zip(cyc, np.roll(cyc, -1)):
                assert perm.forward[i] == j

    def test_cycles_start_at_smallest_index_in_order(self):
        perm = oacm_perm(8, 5, 3, 1)
        cycles = cycle_decompose(perm).cycles
        heads = [int(c[0]) for c in cycles]
        assert all(int(c[0]) == min(c.tolist()) for c in cycles)
        assert heads == sorted(heads)


class TestApplyIterations:
    def test_zero_iterations(self):
        cycles = cycle_decompose(oacm_perm(5, 5, 3, 1))
        src = np.arange(25, dtype=np.uint8)
        assert np.array_equal(apply_iterations(cycles, 0, src), src)

    def test_period_many_iterations(self):
        cycles = cycle_decompose(oacm_perm(6, 6, 4, 2))
        period = image_period(cycles)
        src = np.arange(36, dtype=np.int64) * 3
        assert np.array_equal(apply_iterations(cycles, period, src), src)

    def test_one_iteration_matches_forward(self):
        perm = oacm_perm(4, 7, 3, 1, p=2, q=1)
        cycles = cycle_decompose(perm)
        src = np.arange(28)
        out = apply_iterations(cycles, 1, src)
        expect = np.empty_like(src)
        expect[perm.forward] = src
        assert np.array_equal(out, expect)

    def test_negative_iterations_walk_back(self):
        cycles = cycle_decompose(oacm_perm(6, 9, 5, 2))
        src = np.arange(54) % 7
        assert np.array_equal(
            apply_iterations(cycles, -3, apply_iterations(cycles, 3, src)), src
        )

    def test_huge_iteration_counts_reduce(self):
        cycles = cycle_decompose(oacm_perm(8, 8, 6, 3))
        period = image_period(cycles)
        src = np.arange(64)
        z = 10**120 * period + 7
        assert np.array_equal(
            apply_iterations(cycles, z, src), apply_iterations(cycles, 7, src)
        )

    def test_buffer_size_mismatch(self):
        cycles = cycle_decompose(Permutation.identity(3, 3))
        with pytest.raises(ParameterError):
            apply_iterations(cycles, 1, np.zeros(8))

    def test_values_conserved(self):
        cycles = cycle_decompose(oacm_perm(7, 11, 5, 1, p=4, q=2))
        rng = np.random.default_rng(0)
        src = rng.integers(0, 256, 77, dtype=np.uint8)
        out = apply_iterations(cycles, 9, src)
        assert sorted(out.tolist()) == sorted(src.tolist())

    @given(small_configs(), st.sampled_from([0, 1, 2, 7, 31]))
    def test_matches_naive_repeated_application(self, config, z):
        h, w, s, o, p, q = config
        perm = oacm_perm(h, w, s, o, p, q)
        cycles = cycle_decompose(perm)
        naive = np.arange(h * w)
        for _ in range(z):
            naive = perm.forward[naive]
        assert np.array_equal(cycles.iterated_forward(z), naive)

    def test_inverse_cycles_undo_forward_cycles(self):
        perm = oacm_perm(10, 6, 4, 1, p=2, q=3)
        fwd = cycle_decompose(perm)
        bwd = cycle_decompose(invert(perm))
        rng = np.random.default_rng(1)
        src = rng.integers(0, 256, 60, dtype=np.uint8)
        for z in (1, 5, 12):
            assert np.array_equal(
                apply_iterations(bwd, z, apply_iterations(fwd, z, src)), src
            )


class TestImagePeriod:
    def test_identity_period(self):
        assert image_period(cycle_decompose(Permutation.identity(4, 4))) == 1

    def test_single_square_matches_matrix_period(self):
        cycles = cycle_decompose(build_oacm_permutation(single_square(512), 1, 1))
        assert image_period(cycles) == 384
        assert image_period(cycles) == matrix_period(AcmParams(1, 1, 512))

    def test_period_divisible_by_every_length(self):
        cycles = cycle_decompose(oacm_perm(12, 18, 7, 3, p=2, q=1))
        period = image_period(cycles)
        assert all(period % int(length) == 0 for length in cycles.lengths)
