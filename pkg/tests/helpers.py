"""Shared brute-force helpers for the test suite.

These deliberately rebuild quantities from sampled amplitudes and finite
differences so the closed forms under test are checked against an
independent route.
"""

import math

import numpy as np

from superres import default_grid, make_sources


def grid_eigvec_derivative_norms(s: float, sigma: float = 1.0,
                                 eps: float = 1e-5) -> tuple[float, float]:
    """Squared norms of d e1/ds and d e2/ds, from central differences of the
    grid-sampled eigenmodes (overlap taken by trapezoid, not closed form)."""
    grid = default_grid(s + 1.0, sigma)

    def modes(sv):
        hp, hm = make_sources(sv, sigma, grid)
        d = hp.inner(hm)
        e1 = (hm.values - hp.values) / math.sqrt(2.0 * (1.0 - d))
        e2 = (hm.values + hp.values) / math.sqrt(2.0 * (1.0 + d))
        return e1, e2

    e1_hi, e2_hi = modes(s + eps)
    e1_lo, e2_lo = modes(s - eps)
    de1 = (e1_hi - e1_lo) / (2.0 * eps)
    de2 = (e2_hi - e2_lo) / (2.0 * eps)
    w = grid.weights
    return float(w @ (de1 * de1)), float(w @ (de2 * de2))


def hg_pure_qfi(s: float, sigma: float = 1.0, n_max: int = 40,
                eps: float = 1e-5) -> float:
    """Pure-state FI of the displaced source computed entirely in
    Hermite-Gauss coefficient space (displaced-ground-state law)."""

    def coeffs(sv):
        a = sv / (4.0 * sigma)
        c = np.empty(n_max + 1)
        c[0] = math.exp(-a * a / 2.0)
        for n in range(1, n_max + 1):
            c[n] = c[n - 1] * a / math.sqrt(n)
        return c

    mid = coeffs(s)
    delta = (coeffs(s + eps) - coeffs(s - eps)) / (2.0 * eps)
    return 4.0 * (float(delta @ delta) - float(mid @ delta) ** 2)
