import math

import numpy as np
import pytest

from superres import (
    DegenerateGeometryError,
    DomainError,
    ModelParams,
    OutOfReachError,
    coherence_of,
    concurrence_max,
    concurrence_normalized,
    concurrence,
    make_sources,
    numeric_concurrence,
    overlap,
    spectral,
    theta_from_concurrence,
)

# values pinned by the position-grid oracle (trapezoid quadrature and
# central differences agree with the closed forms to <= 1e-9 relative)
D_S2 = 0.6065306597126334
D1_S2 = -0.3032653298563167
SQRT_1ME = 0.7950600976206501           # sqrt(1 - e^-1)
CNORM_PI4 = 0.3934491505312938
CNORM_PI4_PHI = 0.47063536569414455     # same point at phi = 1.1
CMAX_03 = 0.14916019176262738
A4SQ_S2 = 0.029995148412831477
A3SQ_S2 = 0.010330629752552056


class TestOverlap:
    def test_zero_separation(self):
        tri = overlap(0.0, 1.0)
        assert tri.d == 1.0
        assert tri.d1 == 0.0
        assert tri.d2 == -0.25

    def test_two_sigma_point(self):
        tri = overlap(2.0, 1.0)
        assert tri.d == pytest.approx(D_S2, abs=1e-15)
        assert tri.d1 == pytest.approx(D1_S2, abs=1e-15)
        assert tri.d2 == 0.0   # second derivative vanishes exactly at s = 2 sigma

    def test_matches_grid_quadrature(self):
        hp, hm = make_sources(1.0, 1.0)
        assert abs(hp.inner(hm) - overlap(1.0, 1.0).d) < 1e-10

    def test_derivative_relations(self):
        for s in np.linspace(0.1, 6.0, 25):
            for sigma in (0.5, 1.0, 2.0):
                tri = overlap(s, sigma)
                assert 0.0 < tri.d < 1.0
                assert tri.d1 <= 0.0
                assert tri.d1 == pytest.approx(-(s / (4 * sigma**2)) * tri.d, rel=1e-14)

    @pytest.mark.parametrize("s,sigma", [(-0.1, 1.0), (1.0, 0.0), (1.0, -2.0)])
    def test_rejects_bad_inputs(self, s, sigma):
        with pytest.raises(DomainError):
            overlap(s, sigma)


class TestCoherence:
    def test_endpoints(self):
        assert coherence_of(0.0) == 1.0
        assert abs(coherence_of(math.pi / 2)) < 1e-15
        assert coherence_of(math.pi / 4) == pytest.approx(math.sqrt(0.5), abs=1e-15)

    @pytest.mark.parametrize("theta", [-0.1, math.pi / 2 + 0.1, 3.2])
    def test_rejects_out_of_range(self, theta):
        with pytest.raises(DomainError):
            coherence_of(theta)


class TestConcurrence:
    def test_vanishes_at_zero_separation(self):
        assert concurrence(ModelParams(0.0, 1.0, math.pi / 2)) == 0.0

    def test_vanishes_at_full_coherence(self):
        assert concurrence(ModelParams(3.0, 1.0, 0.0)) == 0.0

    def test_incoherent_value(self):
        c = concurrence(ModelParams(2.0, 1.0, math.pi / 2))
        assert c == pytest.approx(SQRT_1ME, abs=1e-12)

    def test_normalized_equals_plain_at_theta_half_pi(self):
        p = ModelParams(2.0, 1.0, math.pi / 2)
        assert concurrence_normalized(p) == pytest.approx(concurrence(p), abs=1e-15)

    def test_normalized_value(self):
        p = ModelParams(2.0, 1.0, math.pi / 4)
        assert concurrence_normalized(p) == pytest.approx(CNORM_PI4, abs=1e-12)

    def test_normalized_agrees_with_purity_oracle(self):
        for s in (0.5, 1.0, 2.0, 3.0):
            for theta in (0.0, math.pi / 8, math.pi / 4, math.pi / 2):
                for phi in (0.0, 1.1, -2.0):
                    p = ModelParams(s, 1.0, theta, phi)
                    assert concurrence_normalized(p) == pytest.approx(
                        numeric_concurrence(p), abs=1e-8
                    )

    def test_normalized_with_phase(self):
        p = ModelParams(2.0, 1.0, math.pi / 4, 1.1)
        assert concurrence_normalized(p) == pytest.approx(CNORM_PI4_PHI, abs=1e-12)

    def test_conventions_differ_away_from_half_pi(self):
        p = ModelParams(2.0, 1.0, math.pi / 4)
        assert abs(concurrence(p) - concurrence_normalized(p)) > 0.1


class TestThetaFromConcurrence:
    def test_endpoints(self):
        assert theta_from_concurrence(2.0, 1.0, 0.0) == 0.0
        assert theta_from_concurrence(2.0, 1.0, SQRT_1ME) == pytest.approx(
            math.pi / 2, abs=1e-6
        )

    def test_out_of_reach_names_the_maximum(self):
        with pytest.raises(OutOfReachError) as err:
            theta_from_concurrence(0.3, 1.0, 0.2)
        assert err.value.c_max == pytest.approx(CMAX_03, abs=1e-12)
        assert "C_max" in str(err.value)

    def test_degenerate_at_zero_separation(self):
        with pytest.raises(DegenerateGeometryError):
            theta_from_concurrence(0.0, 1.0, 0.0)

    def test_round_trip(self):
        for s in np.linspace(0.2, 5.0, 12):
            c_max = concurrence_max(s, 1.0)
            for frac in np.linspace(0.0, 0.999, 15):
                c = frac * c_max
                theta = theta_from_concurrence(s, 1.0, c)
                back = concurrence(ModelParams(s, 1.0, theta))
                assert abs(back - c) < 1e-12


class TestSpectral:
    def test_eigenvalues_at_half_pi(self):
        spec = spectral(ModelParams(2.0, 1.0, math.pi / 2))
        assert spec.lambda1 == pytest.approx((1 - D_S2) / 2, abs=1e-14)
        assert spec.lambda2 == pytest.approx((1 + D_S2) / 2, abs=1e-14)

    def test_pure_at_full_coherence(self):
        spec = spectral(ModelParams(2.0, 1.0, 0.0))
        assert spec.lambda1 == 0.0
        assert spec.lambda2 == pytest.approx(1.0, abs=1e-14)

    def test_eigenvalues_sum_to_one(self):
        rng = np.random.default_rng(7)
        for _ in range(50):
            p = ModelParams(
                s=float(rng.uniform(0.05, 6.0)),
                sigma=float(rng.uniform(0.3, 3.0)),
                theta=float(rng.uniform(0.0, math.pi / 2)),
            )
            spec = spectral(p)
            assert abs(spec.lambda1 + spec.lambda2 - 1.0) < 1e-12
            assert 0.0 <= spec.lambda1 <= 1.0

    def test_extension_coefficients(self):
        spec = spectral(ModelParams(2.0, 1.0, math.pi / 2))
        assert spec.a3**2 == pytest.approx(A3SQ_S2, rel=1e-12)
        assert spec.a4**2 == pytest.approx(A4SQ_S2, rel=1e-12)

    def test_coefficients_positive(self):
        for s in np.linspace(1e-3, 6.0, 30):
            spec = spectral(ModelParams(s, 1.0, 0.3))
            assert spec.a3 > 0.0 and spec.a4 > 0.0

    def test_small_separation_leading_order(self):
        # a3^2 -> t/48 sigma^2 and a4^2 -> t/16 sigma^2 with t = s^2/8 sigma^2;
        # guards the cancellation-free evaluation at tiny s
        s = 1e-3
        t = s * s / 8.0
        spec = spectral(ModelParams(s, 1.0, 0.3))
        assert spec.a3**2 == pytest.approx(t / 48.0, rel=1e-3)
        assert spec.a4**2 == pytest.approx(t / 16.0, rel=1e-3)

    def test_degenerate_and_phase_rejections(self):
        with pytest.raises(DegenerateGeometryError):
            spectral(ModelParams(0.0, 1.0, 0.3))
        with pytest.raises(DomainError):
            spectral(ModelParams(1.0, 1.0, 0.3, phi=0.5))


def test_concurrence_coherence_identity():
    # C^2 + (1 - d^2) gamma^2 = 1 - d^2 restates the two definitions
    for s in np.linspace(0.1, 5.0, 20):
        om = 1.0 - overlap(s, 1.0).d ** 2
        for theta in np.linspace(0.0, math.pi / 2, 20):
            p = ModelParams(s, 1.0, theta)
            c = concurrence(p)
            g = coherence_of(theta)
            assert abs(c * c + om * g * g - om) < 1e-15
