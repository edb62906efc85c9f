"""Extremal recursion: values, provenance, packings, certificates, scans."""

import math

import pytest

from specpack import spectra, wolfkeller
from specpack.wolfkeller import (
    Connected,
    Split,
    balls_class,
    connectedness_certificate,
    crossover_scan,
    cubes_class,
    dirichlet_disks_class,
    dirichlet_min_check,
    disks_class,
    extremal_sequence,
    squares_class,
    unpack_geometry,
)

PI = math.pi


class TestSequenceValues:
    def test_disks_n8_connected(self, disks_sequence):
        assert disks_sequence.value(8) == pytest.approx(88.83, abs=5e-3)
        dec = disks_sequence.decomposition(8)
        assert isinstance(dec, Connected) and dec.index == 8 and not dec.tie

    def test_disks_n22(self, disks_sequence):
        assert disks_sequence.value(22) == pytest.approx(241.56, abs=5e-3)
        assert disks_sequence.leaf_counts(22) == {8: 2, 1: 6}
        assert disks_sequence.expression(22) == "2μ_8 + 6μ_1"

    def test_squares_n22_connected(self, squares_sequence):
        assert squares_sequence.value(22) == pytest.approx(246.74, abs=5e-3)
        dec = squares_sequence.decomposition(22)
        assert isinstance(dec, Connected) and not dec.tie

    def test_squares_n2_split(self, squares_sequence):
        assert squares_sequence.value(2) == pytest.approx(2 * PI**2, rel=1e-12)
        assert isinstance(squares_sequence.decomposition(2), Split)

    def test_squares_tie_rows(self, squares_sequence):
        for n in (4, 8, 9, 13):
            dec = squares_sequence.decomposition(n)
            assert isinstance(dec, Connected) and dec.tie
            assert squares_sequence.expression(n) == f"{n}μ_1 = μ_{n}"

    def test_monotone_nondecreasing(self, disks_sequence, squares_sequence):
        for seq in (disks_sequence, squares_sequence):
            vals = [seq.value(n) for n in range(1, seq.K + 1)]
            assert all(a <= b for a, b in zip(vals, vals[1:]))

    def test_superadditivity(self, disks_sequence):
        seq = disks_sequence
        for n in range(2, 31):
            vn = seq.value(n)
            for j in range(1, n):
                assert vn >= seq.value(j) + seq.value(n - j) - 1e-12 * vn

    def test_superadditivity_3d(self):
        seq = extremal_sequence(balls_class(), 40)
        for n in range(2, 41):
            sn = seq.value(n) ** 1.5
            for j in range(1, n):
                combo = seq.value(j) ** 1.5 + seq.value(n - j) ** 1.5
                assert sn >= combo - 1e-12 * sn

    def test_recursion_against_exhaustive(self, disks_sequence):
        # brute force over the connected candidate and every split 1..n-1
        base = spectra.disk_spectrum("neumann", 30).nonzero_values()
        best = {}
        for n in range(1, 31):
            cands = [base[n - 1]]
            for j in range(1, n):
                cands.append(best[j] + best[n - j])
            best[n] = max(cands)
            assert disks_sequence.value(n) == pytest.approx(best[n], rel=1e-12)

    def test_semiring_reordering_bitwise_stable(self, disks_sequence):
        # plain addition in 2D: reversed-order max must match bitwise
        seq = disks_sequence
        for n in range(2, 60):
            rev = max(
                seq.value(j) + seq.value(n - j)
                for j in reversed(range(1, n // 2 + 1))
            )
            assert rev == seq.split_value(n)

    def test_argmax_invariance_under_common_scaling(self):
        cls = disks_class()
        base = {cls.base_shapes[0]: spectra.disk_spectrum("neumann", 25).nonzero_values()}
        seq1 = extremal_sequence(cls, 25, base_values=base)
        scaled = {k: [4.0 * v for v in vs] for k, vs in base.items()}
        seq4 = extremal_sequence(cls, 25, base_values=scaled)
        for n in range(1, 26):
            assert seq4.value(n) == 4.0 * seq1.value(n)  # exact: power-of-two factor
            assert seq4.decomposition(n) == seq1.decomposition(n)

    def test_argmax_invariance_3d(self):
        cls = balls_class()
        base = {cls.base_shapes[0]: spectra.ball_spectrum("neumann", 20).nonzero_values()}
        seq1 = extremal_sequence(cls, 20, base_values=base)
        scaled = {k: [4.0 * v for v in vs] for k, vs in base.items()}
        seq4 = extremal_sequence(cls, 20, base_values=scaled)
        for n in range(1, 21):
            assert seq4.value(n) == pytest.approx(4.0 * seq1.value(n), rel=1e-12)
            assert type(seq4.decomposition(n)) is type(seq1.decomposition(n))

    def test_short_base_rejected(self):
        cls = disks_class()
        base = {cls.base_shapes[0]: [10.65]}
        with pytest.raises(ValueError):
            extremal_sequence(cls, 5, base_values=base)


class TestGeometry:
    def test_single_disk_at_n1(self, disks_sequence):
        packed = unpack_geometry(disks_sequence, 1)
        assert len(packed.components) == 1
        assert packed.components[0].volume == pytest.approx(1.0, abs=1e-15)

    def test_two_half_disks_at_n16(self, disks_sequence):
        packed = unpack_geometry(disks_sequence, 16)
        assert [c.volume for c in packed.components] == pytest.approx([0.5, 0.5])
        assert all(c.support_index == 8 for c in packed.components)

    def test_n22_packing(self, disks_sequence):
        packed = unpack_geometry(disks_sequence, 22)
        vols = [c.volume for c in packed.components]
        assert vols[:2] == pytest.approx([0.36774, 0.36774], abs=5e-6)
        assert vols[2:] == pytest.approx([0.044087] * 6, abs=5e-6)
        assert packed.total_volume == pytest.approx(1.0, abs=1e-12)

    def test_volume_closure_everywhere(self, disks_sequence, squares_sequence):
        for seq in (disks_sequence, squares_sequence):
            for n in range(1, seq.K + 1):
                packed = unpack_geometry(seq, n)
                assert packed.total_volume == pytest.approx(1.0, abs=1e-12)

    def test_component_supports_extremal_value(self, disks_sequence):
        base = spectra.disk_spectrum("neumann", 30).nonzero_values()
        for n in (5, 16, 22, 30):
            packed = unpack_geometry(disks_sequence, n)
            for c in packed.components:
                rescaled = base[c.support_index - 1] / c.volume
                assert rescaled == pytest.approx(disks_sequence.value(n), rel=1e-9)

    def test_round_trip_through_union_spectrum(self, disks_sequence, squares_sequence):
        for seq in (disks_sequence, squares_sequence):
            for n in range(1, 31):
                packed = unpack_geometry(seq, n)
                parts = [
                    (spectra.spectrum_of(c.shape, n), c.volume)
                    for c in packed.components
                ]
                union = spectra.union_spectrum(parts, n)
                assert union.eigenvalue(n) == pytest.approx(
                    seq.value(n), rel=1e-9
                )


class TestCertificates:
    def test_disks_n8(self, disks_sequence):
        assert connectedness_certificate(
            disks_sequence.connected_value(8), disks_sequence, 8
        )

    def test_single_disk_not_certified_at_2(self, disks_sequence):
        mu2_single = spectra.disk_spectrum("neumann", 2).nonzero(2)
        assert not connectedness_certificate(mu2_single, disks_sequence, 2)

    def test_squares_n22(self, squares_sequence):
        assert connectedness_certificate(25 * PI**2, squares_sequence, 22)
        # the best split (16+7) pi^2 fails the certificate
        assert not connectedness_certificate(23 * PI**2, squares_sequence, 22)


class TestCrossoverScan:
    def test_2d_through_25(self, disks_sequence, squares_sequence):
        assert crossover_scan(disks_sequence, squares_sequence, 25) == [22, 23]

    def test_2d_through_83(self, disks_sequence, squares_sequence):
        assert crossover_scan(disks_sequence, squares_sequence, 83) == [22, 23, 83]

    def test_values_at_23(self, disks_sequence, squares_sequence):
        assert disks_sequence.value(23) == pytest.approx(252.21, abs=5e-3)
        assert squares_sequence.value(23) == pytest.approx(256.61, abs=5e-3)

    def test_dimension_mismatch_rejected(self, disks_sequence):
        seq3 = extremal_sequence(balls_class(), 5)
        with pytest.raises(ValueError):
            crossover_scan(disks_sequence, seq3, 5)

    def test_length_guard(self, disks_sequence, squares_sequence):
        with pytest.raises(ValueError):
            crossover_scan(disks_sequence, squares_sequence, 1000)


class TestDirichletMirror:
    def test_min_check(self):
        check, seq = dirichlet_min_check(13)
        assert check.square_value == pytest.approx(20 * PI**2, rel=1e-12)
        assert check.disks_value > check.square_value
        assert check.disks_exceed_square

    def test_faber_krahn_head(self):
        seq = extremal_sequence(dirichlet_disks_class(), 3)
        assert seq.value(1) == pytest.approx(PI * 2.4048256**2, abs=1e-5)

    def test_krahn_two_equal_disks_at_2(self):
        seq = extremal_sequence(dirichlet_disks_class(), 3)
        packed = unpack_geometry(seq, 2)
        assert [c.volume for c in packed.components] == pytest.approx([0.5, 0.5])
        assert seq.value(2) == pytest.approx(2 * seq.value(1), rel=1e-12)

    def test_min_sequence_monotone(self):
        seq = extremal_sequence(dirichlet_disks_class(), 13)
        vals = [seq.value(n) for n in range(1, 14)]
        assert all(a <= b for a, b in zip(vals, vals[1:]))


class TestExport:
    def test_csv_shape(self, disks_sequence):
        lines = disks_sequence.to_csv().splitlines()
        assert lines[0] == "n,value,provenance"
        assert lines[22].startswith("22,")
        assert lines[22].endswith(",2*mu8+6*mu1")
        assert len(lines) == disks_sequence.K + 1

    def test_csv_tie_rendering(self, squares_sequence):
        lines = squares_sequence.to_csv().splitlines()
        assert lines[9].endswith(",9*mu1=mu9")

    def test_class_validation(self):
        with pytest.raises(ValueError):
            wolfkeller.DomainClass("bad", (), "maximize")
        with pytest.raises(ValueError):
            wolfkeller.DomainClass(
                "bad", (spectra.disk(), spectra.ball()), "maximize"
            )
        with pytest.raises(ValueError):
            wolfkeller.DomainClass("bad", (spectra.disk(),), "extremize")


class TestThreeDimensional:
    def test_no_crossover_to_120(self):
        balls = extremal_sequence(balls_class(), 120)
        cubes = extremal_sequence(cubes_class(), 120)
        assert crossover_scan(balls, cubes, 120) == []

    def test_ball_class_head(self):
        balls = extremal_sequence(balls_class(), 3)
        # two equal balls beat one ball at n = 2: factor 2^(2/3)
        assert balls.value(2) == pytest.approx(
            balls.value(1) * 2 ** (2 / 3), rel=1e-12
        )
        assert isinstance(balls.decomposition(2), Split)
