"""Single-parameter (separation-only) Fisher information.

The total Fisher information of the two-source field is the weighted sum of
the pure-state Fisher informations of its two auxiliary-basis branches,
``F_tot = <Phi_1|Phi_1> F_1 + <Phi_2|Phi_2> F_2``.  Carried out in closed
form this gives, in terms of coherence ``gamma``,

    F_tot = 1/(4 sigma^2)
            - gamma d (4 sigma^2 - s^2) / (16 sigma^4)
            - gamma^2 d^2 s^2 / (8 sigma^4 (1 + gamma^2 + 2 d gamma)),

and, in terms of concurrence ``C`` (with om = 1 - d^2, R = om - C^2),

    F_tot = 1/(4 sigma^2)
            - d (4 sigma^2 - s^2) sqrt(R) / (16 sigma^4 sqrt(om))
            - d^2 s^2 R / (8 sigma^4 (om + R + 2 d sqrt(om R))).

The two forms are equivalent under ``C^2 = (1 - gamma^2)(1 - d^2)``.  Note
the ``1/sigma^4`` in the last term of both: it is forced by dimensional
analysis and by the weighted-sum derivation, and is invisible at the
``sigma = 1`` convention used everywhere in the bundled sweeps.

At ``gamma = 0`` (incoherent sources) the information is ``1/(4 sigma^2)``
for every separation; at full coherence it collapses to zero as ``s -> 0``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import (
    ContractViolationError,
    DegenerateGeometryError,
    DomainError,
    OutOfReachError,
)
from .state_model import ModelParams, one_minus_d_squared, overlap

_EPS = math.ulp(1.0)


@dataclass(frozen=True)
class FiRecord:
    """One evaluated Fisher-information point with its state descriptors."""

    s: float
    sigma: float
    theta: float
    gamma: float
    concurrence: float
    f_tot: float


def f_tot_coherence(s: float, sigma: float, gamma: float) -> FiRecord:
    """Total FI as a function of separation and coherence ``gamma`` in [0, 1].

    Valid for any ``s >= 0``; at ``s = 0`` and full coherence the result is
    exactly zero (the resolution limit in its sharpest form).
    """
    if not (0.0 <= gamma <= 1.0):
        raise DomainError(f"gamma must lie in [0, 1], got {gamma}")
    d = overlap(s, sigma).d   # validates s, sigma
    sig2 = sigma * sigma
    sig4 = sig2 * sig2
    f = (
        1.0 / (4.0 * sig2)
        - gamma * d * (4.0 * sig2 - s * s) / (16.0 * sig4)
        - gamma * gamma * d * d * s * s
        / (8.0 * sig4 * (1.0 + gamma * gamma + 2.0 * d * gamma))
    )
    om = one_minus_d_squared(s, sigma)
    return FiRecord(
        s=s,
        sigma=sigma,
        theta=math.acos(gamma),
        gamma=gamma,
        concurrence=math.sqrt((1.0 - gamma * gamma) * om),
        f_tot=f,
    )


def f_tot_concurrence(s: float, sigma: float, c: float) -> FiRecord:
    """Total FI as a function of separation and concurrence ``c``.

    Requires ``s > 0`` (the coefficient ``sqrt(1 - d^2)`` sits in a
    denominator) and ``0 <= c <= C_max(s) = sqrt(1 - d^2)``.

    Raises
    ------
    DegenerateGeometryError
        At ``s = 0``; approach that column through the coherence form.
    OutOfReachError
        If ``c`` exceeds the reachable maximum (beyond rounding slack).
    """
    if c < 0.0:
        raise DomainError(f"concurrence must be nonnegative, got {c}")
    if s == 0.0:
        raise DegenerateGeometryError(
            "the concurrence form is singular at s = 0; use f_tot_coherence"
        )
    d = overlap(s, sigma).d
    sig2 = sigma * sigma
    sig4 = sig2 * sig2
    om = one_minus_d_squared(s, sigma)
    if c * c - om > 1e-12 * om:
        raise OutOfReachError(c, math.sqrt(om))
    rem = om - c * c
    if rem < 4.0 * _EPS * om:
        # c sits at (or within rounding of) the reachable boundary; the
        # subtraction carries no information there and the exact boundary
        # value is 1/(4 sigma^2)
        rem = 0.0
    root = math.sqrt(rem)
    root_om = math.sqrt(om)
    den = om + rem + 2.0 * d * root_om * root   # = 2 - 2 d^2 - c^2 + 2 d sqrt(om) sqrt(rem)
    f = (
        1.0 / (4.0 * sig2)
        - d * (4.0 * sig2 - s * s) * root / (16.0 * sig4 * root_om)
        - d * d * s * s * rem / (8.0 * sig4 * den)
    )
    gamma = min(root / root_om, 1.0)
    return FiRecord(
        s=s,
        sigma=sigma,
        theta=math.acos(gamma),
        gamma=gamma,
        concurrence=c,
        f_tot=f,
    )


def pure_state_fi(
    family: Callable[[float], object],
    s: float,
    fd_step: float = 1e-5,
) -> float:
    """Fisher information ``2 Tr[(d rho/ds)^2]`` of a normalized pure-state
    family given on a position grid.

    ``family(s)`` must return a grid field (any object with ``values`` and a
    ``grid`` carrying trapezoid ``weights``) normalized to one for every
    ``s`` in a neighborhood.  The derivative is taken by central differences
    and the trace is evaluated exactly through the rank-2 structure of the
    differenced projector:

        2 Tr[(d rho)^2] = 4 [ <m|m><delta|delta> + <m|delta>^2 ],

    with ``m`` the midpoint average and ``delta`` the central difference of
    the state vectors.  For a normalized family this equals
    ``4 (<d psi|d psi> - <psi|d psi>^2)``.

    Raises
    ------
    ContractViolationError
        If either sampled state deviates from unit norm by more than 1e-8.
    """
    lo = family(s - fd_step)
    hi = family(s + fd_step)
    w = lo.grid.weights
    vlo, vhi = lo.values, hi.values
    for v in (vlo, vhi):
        nrm = float(w @ (v * v))
        if abs(nrm - 1.0) > 1e-8:
            raise ContractViolationError(
                f"pure_state_fi requires a normalized family; got |psi|^2 = {nrm!r}"
            )
    m = 0.5 * (vhi + vlo)
    delta = (vhi - vlo) / (2.0 * fd_step)
    mm = float(w @ (m * m))
    dd = float(w @ (delta * delta))
    md = float(w @ (m * delta))
    return 4.0 * (mm * dd + md * md)


def weighted_fi_reconstruct(p: ModelParams, variant: str = "quantum-only") -> float:
    """Rebuild the total FI as a branch-weighted sum of pure-state FIs.

    The field splits into two auxiliary-basis branches with weights
    ``N1 = <Phi_1|Phi_1> = (1 + gamma^2 + 2 d gamma)/2`` and
    ``N2 = <Phi_2|Phi_2> = (1 - gamma^2)/2`` (gamma = cos theta, phi = 0).
    Branch FIs are the quantum Fisher informations of the *normalized*
    branch states, evaluated in closed form through the overlap algebra.

    Variants
    --------
    ``"quantum-only"``
        ``N1 F1 + N2 F2`` with the raw (non-renormalized) weights.  This is
        the combination that reproduces :func:`f_tot_coherence` exactly; the
        calibration test in the suite pins that fact.
    ``"quantum-plus-weight"``
        Adds the classical information ``sum_i (d p_i/ds)^2 / p_i`` of the
        trace-renormalized weights ``p_i = N_i / (N1 + N2)``.  Kept as the
        rejected alternative: it overshoots the closed form wherever the
        weights depend on ``s``.

    At ``theta = 0`` the second branch has zero weight and contributes zero.
    """
    if variant not in ("quantum-only", "quantum-plus-weight"):
        raise DomainError(f"unknown variant {variant!r}")
    p.require_phi_zero("weighted_fi_reconstruct")
    tri = overlap(p.s, p.sigma)
    d, d1 = tri.d, tri.d1
    g = math.cos(p.theta)
    sig2 = p.sigma * p.sigma
    sig4 = sig2 * sig2

    big_m = 1.0 + g * g + 2.0 * d * g          # <u|u> for u = h_+ + gamma h_-
    n1 = 0.5 * big_m
    n2 = 0.5 * (1.0 - g * g)

    # <du|du> = (1+g^2)/16 sigma^2 + 2 g <dh_+|dh_->, with
    # <dh_+|dh_-> = -d (4 sigma^2 - s^2)/(64 sigma^4); <u|du> = g d1
    dudu = (1.0 + g * g) / (16.0 * sig2) - 2.0 * g * d * (4.0 * sig2 - p.s * p.s) / (64.0 * sig4)
    f1 = 4.0 * (dudu / big_m - (g * d1) ** 2 / (big_m * big_m))
    f2 = 1.0 / (4.0 * sig2)

    total = n1 * f1 + (n2 * f2 if n2 > 0.0 else 0.0)

    if variant == "quantum-plus-weight":
        trace = 1.0 + d * g
        p1 = n1 / trace
        p2 = n2 / trace
        dp1 = g * d1 * (1.0 - g * g) / (2.0 * trace * trace)
        for weight, dw in ((p1, dp1), (p2, -dp1)):
            if weight > 1e-15:
                total += dw * dw / weight
    return total
