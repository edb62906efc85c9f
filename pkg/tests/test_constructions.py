"""Prescribed-mu_2 constructions and the convex eigenvalue bound."""

import math

import numpy as np
import pytest

from specpack import constructions, spectra
from specpack.constructions import (
    ConstructionError,
    RangeTarget,
    kroger_bound,
    mu1_max,
    mu2_max,
    mu2_range_domain,
    verified_mu2,
)

PI = math.pi


class TestRangeDomain:
    def test_zero_target_three_disks(self):
        domain = mu2_range_domain(0.0)
        assert len(domain.components) == 3
        mu1, mu2, mu3 = verified_mu2(domain)
        assert mu1 == 0.0 and mu2 == 0.0
        assert mu3 > 0.0

    def test_top_of_range_two_half_disks(self):
        t = mu2_max()
        domain = mu2_range_domain(t)
        assert [c.volume for c in domain.components] == pytest.approx([0.5, 0.5])
        _, mu2, _ = verified_mu2(domain)
        assert mu2 == pytest.approx(t, abs=1e-9)
        assert t == pytest.approx(21.30, abs=5e-3)

    def test_low_branch_example(self):
        t = PI**2
        target = RangeTarget(t, t / 100)
        domain = mu2_range_domain(target, branch="rect_low")
        rect = domain.components[0].shape
        b = PI / math.sqrt(t)
        a = (t - t / 100) / (PI * math.sqrt(t))
        assert rect.sides == pytest.approx((a, b))
        mu1, mu2, _ = verified_mu2(domain)
        assert mu1 == 0.0
        assert mu2 == pytest.approx(t, abs=1e-9)
        # area identity a*b + eps/t = 1 is exact by construction
        assert domain.total_volume == pytest.approx(1.0, abs=1e-15)

    def test_generic_midrange(self):
        for t in (5.0, 10.2, 15.0):
            mu0_, mu2, mu3 = verified_mu2(mu2_range_domain(t))
            assert mu0_ == 0.0
            assert mu2 == pytest.approx(t, abs=1e-9)

    def test_grid_of_100(self):
        top = mu2_max()
        for t in np.linspace(top / 100, top, 100):
            domain = mu2_range_domain(float(t))
            assert domain.total_volume == pytest.approx(1.0, abs=1e-12)
            mu1, mu2, mu3 = verified_mu2(domain)
            assert mu1 == 0.0
            assert mu2 == pytest.approx(float(t), abs=1e-9)
            if t <= mu1_max():
                # rectangle branches: mu_2 is simple, mu_3 strictly above
                assert mu3 > t
            else:
                # two disks: the supporting first disk mode is double
                assert mu3 >= mu2 - 1e-12

    def test_branch_boundaries_both_sides(self):
        for t, branches in (
            (PI**2, ("rect_low", "rect_high")),
            (mu1_max(), ("rect_high", "two_disks")),
        ):
            for branch in branches:
                domain = mu2_range_domain(t, branch=branch)
                assert domain.total_volume == pytest.approx(1.0, abs=1e-12)
                _, mu2, _ = verified_mu2(domain)
                assert mu2 == pytest.approx(t, abs=1e-9)

    def test_out_of_range_rejected(self):
        with pytest.raises(ConstructionError):
            mu2_range_domain(-0.5)
        with pytest.raises(ConstructionError):
            mu2_range_domain(mu2_max() * 1.01)

    def test_bad_epsilon_rejected(self):
        with pytest.raises(ConstructionError):
            RangeTarget(5.0, 6.0)  # epsilon >= t in the low branch
        with pytest.raises(ConstructionError):
            RangeTarget(5.0, 0.0)

    def test_filler_eigenvalue_strictly_above_target(self):
        for t in (2.0, 9.0, 10.4):
            domain = mu2_range_domain(t)
            for c in domain.components:
                if c.support_index is None:
                    first = spectra.spectrum_of(c.shape, 1).nonzero(1) / c.volume
                    assert first > t

    def test_branch_override_validation(self):
        with pytest.raises(ConstructionError):
            mu2_range_domain(5.0, branch="pentagon")
        with pytest.raises(ConstructionError):
            mu2_range_domain(5.0, branch="two_disks")  # needs t >= pi j'^2


class TestKrogerBound:
    def test_unit_area_disk(self):
        d = 2 / math.sqrt(PI)
        bound = kroger_bound(1, d)
        assert bound == pytest.approx((2 * 2.4048256) ** 2 * PI / 4, abs=1e-4)
        assert bound >= 10.65

    def test_unit_square(self):
        bound = kroger_bound(1, math.sqrt(2))
        assert bound == pytest.approx(4.8096512**2 / 2, abs=1e-4)
        assert bound >= PI**2

    def test_validity_on_convex_catalog(self):
        rng = np.random.default_rng(7)
        shapes = [("disk", None)] + [("rect", 1.0)] + [
            ("rect", float(a)) for a in rng.uniform(1.0, 4.0, 5)
        ]
        for kind, aspect in shapes:
            if kind == "disk":
                spec = spectra.disk_spectrum("neumann", 20)
                diameter = 2 / math.sqrt(PI)
            else:
                a = math.sqrt(aspect)
                b = 1 / a
                spec = spectra.rectangle_spectrum(a, b, "neumann", 20)
                diameter = math.hypot(a, b)
            for m in range(1, 21):
                assert spec.nonzero(m) <= kroger_bound(m, diameter) * (1 + 1e-12)

    def test_input_validation(self):
        with pytest.raises(ValueError):
            kroger_bound(0, 1.0)
        with pytest.raises(ValueError):
            kroger_bound(1, 0.0)
