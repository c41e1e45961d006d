"""Two-source model: parameters, Gaussian overlap algebra, and the spectral
data of the reduced spatial state.

Conventions
-----------
Two equal-intensity point sources sit at ``x = -s/2`` and ``x = +s/2`` on the
image plane.  The point-spread amplitude is the Gaussian

    h(x) = (2 pi sigma^2)^(-1/4) exp(-x^2 / 4 sigma^2),

so that the intensity ``h^2`` is a normal density of width ``sigma``.  The
displaced amplitudes ``h_pm(x) = h(x +- s/2)`` overlap by

    d = <h_+|h_-> = exp(-s^2 / 8 sigma^2).

Each source carries an auxiliary (non-spatial) state; the two auxiliary
vectors overlap by ``gamma = e^{i phi} cos(theta)``, so ``|gamma| =
cos(theta)`` is the degree of coherence and ``theta`` interpolates between
fully coherent (theta = 0) and fully incoherent (theta = pi/2) sources.
The entanglement between the spatial and auxiliary factors is quantified by
the (unnormalized-state) concurrence

    C = sin(theta) * sqrt(1 - d^2),

which is the convention used on all concurrence axes in this package.  The
field written with a bare 1/sqrt(2) prefactor has squared norm
``1 + d cos(theta) cos(phi)``; every density-matrix quantity here refers to
the state normalized to unit trace, and the physically normalized concurrence
``C / (1 + d cos(theta) cos(phi))`` is exposed separately.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateGeometryError, DomainError, OutOfReachError

_HALF_PI = math.pi / 2


@dataclass(frozen=True)
class ModelParams:
    """Physical configuration of the two-source field.

    Attributes
    ----------
    s : float
        Source separation (length units), ``s >= 0``.
    sigma : float
        PSF width (length units), ``sigma > 0``.
    theta : float
        Auxiliary mixing angle in radians, ``0 <= theta <= pi/2``.
    phi : float
        Relative phase of the auxiliary overlap, ``-pi < phi <= pi``.
        All closed-form operations require ``phi = 0``; only the
        brute-force oracle accepts other values.
    """

    s: float
    sigma: float
    theta: float
    phi: float = 0.0

    def __post_init__(self):
        if not (self.sigma > 0.0) or not math.isfinite(self.sigma):
            raise DomainError(f"sigma must be positive and finite, got {self.sigma}")
        if self.s < 0.0 or not math.isfinite(self.s):
            raise DomainError(f"separation s must be nonnegative, got {self.s}")
        if not (0.0 <= self.theta <= _HALF_PI):
            raise DomainError(f"theta must lie in [0, pi/2], got {self.theta}")
        if not (-math.pi < self.phi <= math.pi):
            raise DomainError(f"phi must lie in (-pi, pi], got {self.phi}")

    def require_phi_zero(self, what: str) -> None:
        """Closed-form operations are derived at phi = 0 and reject other values."""
        if self.phi != 0.0:
            raise DomainError(f"{what} requires phi = 0, got phi = {self.phi}")


@dataclass(frozen=True)
class OverlapTriple:
    """Gaussian source overlap and its first two separation derivatives.

    ``d = exp(-s^2/8 sigma^2)``, ``d1 = -(s/4 sigma^2) d`` (1/length) and
    ``d2 = (d/4 sigma^2)(s^2/4 sigma^2 - 1)`` (1/length^2).  ``d1`` is
    negative for s > 0 and ``d2`` vanishes exactly at ``s = 2 sigma``.
    """

    d: float
    d1: float
    d2: float


@dataclass(frozen=True)
class SpectralData:
    """Eigenvalues of the reduced spatial state plus the norms of the
    eigenvector separation-derivatives.

    ``lambda1``/``lambda2`` weight the antisymmetric/symmetric spatial modes
    and always sum to one.  ``a3 = |d e1/ds|`` and ``a4 = |d e2/ds|``
    (both 1/length) normalize the derivative directions that extend the
    two-mode support to a four-dimensional frame.
    """

    lambda1: float
    lambda2: float
    a3: float
    a4: float


def overlap(s: float, sigma: float) -> OverlapTriple:
    """Overlap ``d = exp(-s^2/8 sigma^2)`` of the displaced PSF amplitudes,
    with its first and second derivatives in ``s``.

    Raises
    ------
    DomainError
        If ``sigma <= 0`` or ``s < 0``.
    """
    if not (sigma > 0.0) or not math.isfinite(sigma):
        raise DomainError(f"sigma must be positive and finite, got {sigma}")
    if s < 0.0 or not math.isfinite(s):
        raise DomainError(f"separation s must be nonnegative, got {s}")
    sig2 = sigma * sigma
    d = math.exp(-s * s / (8.0 * sig2))
    d1 = -(s / (4.0 * sig2)) * d
    d2 = (d / (4.0 * sig2)) * (s * s / (4.0 * sig2) - 1.0)
    return OverlapTriple(d=d, d1=d1, d2=d2)


def coherence_of(theta: float) -> float:
    """Degree of coherence ``|gamma| = cos(theta)`` for theta in [0, pi/2]."""
    if not (0.0 <= theta <= _HALF_PI):
        raise DomainError(f"theta must lie in [0, pi/2], got {theta}")
    return math.cos(theta)


def one_minus_d(s: float, sigma: float) -> float:
    """``1 - d`` evaluated without cancellation (accurate at small s)."""
    return -math.expm1(-s * s / (8.0 * sigma * sigma))


def one_minus_d_squared(s: float, sigma: float) -> float:
    """``1 - d^2`` evaluated without cancellation (accurate at small s)."""
    return -math.expm1(-s * s / (4.0 * sigma * sigma))


def concurrence_max(s: float, sigma: float) -> float:
    """Largest reachable concurrence at separation ``s``: ``sqrt(1 - d^2)``."""
    if not (sigma > 0.0):
        raise DomainError(f"sigma must be positive, got {sigma}")
    if s < 0.0:
        raise DomainError(f"separation s must be nonnegative, got {s}")
    return math.sqrt(one_minus_d_squared(s, sigma))


def concurrence(p: ModelParams) -> float:
    """Concurrence ``C = sin(theta) sqrt(1 - d^2)`` of the bare-prefactor field.

    This is the convention used by every concurrence axis in this package.
    It vanishes at ``s = 0`` (where the spatial factor drops out) and at
    ``theta = 0`` (where the auxiliary factor drops out).
    """
    return math.sin(p.theta) * concurrence_max(p.s, p.sigma)


def concurrence_normalized(p: ModelParams) -> float:
    """Concurrence of the unit-normalized field.

    Dividing the two-source field by its norm ``sqrt(1 + d cos(theta)
    cos(phi))`` rescales the concurrence to

        C_norm = sin(theta) sqrt(1 - d^2) / (1 + d cos(theta) cos(phi)).

    Equals :func:`concurrence` when theta = pi/2 or in the d -> 0
    limit.  Valid for any phi.
    """
    d = overlap(p.s, p.sigma).d
    return concurrence(p) / (1.0 + d * math.cos(p.theta) * math.cos(p.phi))


def theta_from_concurrence(s: float, sigma: float, c: float) -> float:
    """Mixing angle realizing concurrence ``c`` at separation ``s``.

    Inverts ``C = sin(theta) sqrt(1 - d^2)`` on theta in [0, pi/2].

    Raises
    ------
    DegenerateGeometryError
        At ``s = 0``, where only ``C = 0`` is reachable and theta is
        undetermined.
    OutOfReachError
        If ``c`` exceeds ``C_max = sqrt(1 - d^2)`` (beyond rounding slack).
    """
    if c < 0.0:
        raise DomainError(f"concurrence must be nonnegative, got {c}")
    if s == 0.0:
        raise DegenerateGeometryError(
            "at s = 0 every theta yields zero concurrence; theta is undetermined"
        )
    c_max = concurrence_max(s, sigma)
    z = c / c_max
    if z > 1.0:
        # a few ulps of slack so that C_max itself round-trips
        if z - 1.0 > 1e-12:
            raise OutOfReachError(c, c_max)
        z = 1.0
    return math.asin(z)


def spectral(p: ModelParams) -> SpectralData:
    """Eigensystem data of the reduced spatial state at phi = 0.

    The unit-trace spatial state is diagonal in the antisymmetric/symmetric
    modes ``e1 = (h_- - h_+)/sqrt(2(1-d))``, ``e2 = (h_- + h_+)/sqrt(2(1+d))``
    with eigenvalues

        lambda1 = (1 - d)(1 - cos theta) / (2 (1 + d cos theta)),
        lambda2 = (1 + d)(1 + cos theta) / (2 (1 + d cos theta)).

    The derivative-direction norms are

        a3^2 = [1 + d(1 - s^2/4 sigma^2)] / (16 sigma^2 (1-d)) - d1^2/(4(1-d)^2),
        a4^2 = [1 - d(1 - s^2/4 sigma^2)] / (16 sigma^2 (1+d)) - d1^2/(4(1+d)^2).

    Raises
    ------
    DegenerateGeometryError
        At ``s = 0`` the antisymmetric direction ``e1`` is undefined.
    """
    p.require_phi_zero("spectral")
    if p.s == 0.0:
        raise DegenerateGeometryError(
            "the antisymmetric mode direction is undefined at s = 0"
        )
    sig2 = p.sigma * p.sigma
    t = p.s * p.s / (8.0 * sig2)
    e = -math.expm1(-t)          # 1 - d, no cancellation
    ct = math.cos(p.theta)
    omc = 2.0 * math.sin(p.theta / 2.0) ** 2   # 1 - cos(theta), no cancellation
    den = 1.0 + (1.0 - e) * ct
    lam1 = e * omc / (2.0 * den)
    lam2 = (2.0 - e) * (1.0 + ct) / (2.0 * den)
    # a3^2 / a4^2 in forms whose leading small-s terms cancel algebraically,
    # not in floating point (required near s -> 0 where both are O(s^2));
    # below t = 1e-3 even the combined a3 numerator (an O(t^3) residue of
    # O(t^2) pieces) runs out of bits, so its series takes over there
    if t < 1e-3:
        a3sq = t * (1.0 - t * t / 30.0) / (48.0 * sig2)
    else:
        a3sq = (2.0 * (e - t) - e * e + 2.0 * t * e) / (16.0 * sig2 * e * e)
    a4sq = (2.0 * e - e * e + 2.0 * t - 2.0 * t * e) / (16.0 * sig2 * (2.0 - e) ** 2)
    return SpectralData(
        lambda1=lam1,
        lambda2=lam2,
        a3=math.sqrt(max(a3sq, 0.0)),
        a4=math.sqrt(max(a4sq, 0.0)),
    )
