"""Two-parameter estimation: density-matrix derivatives, symmetric
logarithmic derivatives, the quantum Fisher information matrix, and the
nuisance-corrected precision quantities.

Everything is expressed in the orthonormal frame ``{e1, e2, e3, e4}`` where
``e1``/``e2`` are the antisymmetric/symmetric eigenmodes of the reduced
spatial state and ``e3 = (d e1/ds)/a3``, ``e4 = (d e2/ds)/a4`` extend the
support with the derivative directions (parity keeps all four orthogonal).
In that frame, with ``B = dd/ds`` and ``den = 1 + d cos(theta)``,

    rho           = diag(lambda1, lambda2, 0, 0)
    d rho/ds      : diag part (-y, +y) with y = B sin^2(theta) / (2 den^2),
                    plus lambda1 a3 at (1,3)/(3,1) and lambda2 a4 at (2,4)/(4,2)
    d rho/dtheta  : diag(+x, -x, 0, 0) with x = (1 - d^2) sin(theta) / (2 den^2)

The SLD for parameter ``i`` solves ``d rho/di = (L rho + rho L)/2`` and in
the eigenframe is ``L[k,l] = 2 <e_k|d rho|e_l> / (lambda_k + lambda_l)``
restricted to pairs with nonvanishing eigenvalue sum.  QFIM elements follow
either from those matrix elements (the route used here, in the cancelled
form ``(d lambda)^2 / lambda``) or from the generic trace rule
``F_ij = Tr[rho (L_i L_j + L_j L_i)]/2`` (kept for consistency checks).

Nuisance-corrected precisions:

    H_s = F_ss - F_st^2 / F_tt,     H_theta = F_tt - F_st^2 / F_ss.

``H_s`` is invariant under reparametrizing the nuisance by coherence
``gamma = cos(theta)`` or by concurrence; both charts are provided through
exact Jacobian transport of the theta-parametrized matrix.

Degenerate corners (all at phi = 0, s > 0):

* ``theta = 0``: lambda1 vanishes; individual SLD entries diverge but the
  QFIM terms have finite limits ``F_ss -> 4 a4^2``, ``F_tt -> (1-d)/(1+d)``,
  ``F_st -> 0``, substituted whenever ``lambda1 < 1e-12``.  (Exactly at the
  point the state is pure and the pointwise theta-information is zero; the
  continuous extension is what the precision surfaces plot.)
* ``gamma = 1``: the coherence chart has an infinite nuisance block;
  ``precision_gamma`` returns the limiting ``h_s`` with ``h_nuisance = inf``.
* concurrence at its reachable maximum (theta = pi/2): the concurrence
  chart is singular there; use the theta chart, whose ``h_s`` is identical.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateGeometryError, DomainError
from .state_model import (
    ModelParams,
    SpectralData,
    one_minus_d,
    one_minus_d_squared,
    overlap,
    spectral,
    theta_from_concurrence,
)

_LAMBDA_FLOOR = 1e-12       # below this, use the analytic theta -> 0 limits
_SUPPORT_CUTOFF = 1e-12     # eigenvalue-pair cutoff in the SLD eigenframe sum
_NUISANCE_FLOOR = 1e-14     # F_tt below this (with F_st ~ 0): no correction


@dataclass(frozen=True)
class Rho4:
    """Reduced spatial state in the four-mode frame (diagonal, rank <= 2)."""

    matrix: np.ndarray
    s: float
    sigma: float
    theta: float


@dataclass(frozen=True)
class SldPair:
    """Symmetric logarithmic derivatives for separation and mixing angle."""

    l_s: np.ndarray       # units 1/length
    l_theta: np.ndarray   # dimensionless


@dataclass(frozen=True)
class Qfim2:
    """2x2 quantum Fisher information matrix for (s, nuisance)."""

    f_ss: float
    f_tt: float
    f_st: float
    tag: str = "theta"    # "theta" | "gamma" | "concurrence"


@dataclass(frozen=True)
class PrecisionPair:
    """Nuisance-corrected information for s, and for the nuisance itself."""

    h_s: float
    h_nuisance: float


def _require_regular(p: ModelParams, what: str) -> None:
    p.require_phi_zero(what)
    if p.s == 0.0:
        raise DegenerateGeometryError(f"{what} is undefined at s = 0")


def _lambda_derivatives(p: ModelParams):
    """lambda1/2, their s- and theta-derivatives, and the spectral data."""
    tri = overlap(p.s, p.sigma)
    e = one_minus_d(p.s, p.sigma)           # 1 - d
    ct = math.cos(p.theta)
    st = math.sin(p.theta)
    omc = 2.0 * math.sin(p.theta / 2.0) ** 2    # 1 - cos(theta)
    den = 1.0 + tri.d * ct
    lam1 = e * omc / (2.0 * den)
    lam2 = (2.0 - e) * (1.0 + ct) / (2.0 * den)
    y = tri.d1 * st * st / (2.0 * den * den)    # dlam2/ds; dlam1/ds = -y
    x = one_minus_d_squared(p.s, p.sigma) * st / (2.0 * den * den)  # dlam1/dtheta
    return lam1, lam2, -y, y, x, -x, tri, spectral(p)


def rho4(p: ModelParams) -> Rho4:
    """Unit-trace reduced spatial state: ``diag(lambda1, lambda2, 0, 0)``."""
    _require_regular(p, "rho4")
    lam1, lam2, *_ = _lambda_derivatives(p)
    return Rho4(matrix=np.diag([lam1, lam2, 0.0, 0.0]), s=p.s, sigma=p.sigma, theta=p.theta)


def drho_ds(p: ModelParams) -> np.ndarray:
    """Separation derivative of the reduced state in the four-mode frame."""
    _require_regular(p, "drho_ds")
    lam1, lam2, dl1, dl2, _, _, _, spec = _lambda_derivatives(p)
    m = np.zeros((4, 4))
    m[0, 0] = dl1
    m[1, 1] = dl2
    m[0, 2] = m[2, 0] = lam1 * spec.a3
    m[1, 3] = m[3, 1] = lam2 * spec.a4
    return m


def drho_dtheta(p: ModelParams) -> np.ndarray:
    """Mixing-angle derivative: ``diag(+x, -x, 0, 0)`` (eigenvectors are
    theta-independent, so no off-diagonal support)."""
    _require_regular(p, "drho_dtheta")
    _, _, _, _, x, _, _, _ = _lambda_derivatives(p)
    m = np.zeros((4, 4))
    m[0, 0] = x
    m[1, 1] = -x
    return m


def _sld_from_derivative(lams: np.ndarray, drho: np.ndarray) -> np.ndarray:
    l = np.zeros_like(drho)
    for k in range(4):
        for j in range(4):
            den = lams[k] + lams[j]
            if den > _SUPPORT_CUTOFF:
                l[k, j] = 2.0 * drho[k, j] / den
    return l


def sld_pair(p: ModelParams) -> SldPair:
    """SLD operators for (s, theta) in the four-mode frame.

    Solves the defining relation entry-wise in the eigenframe; entries on
    eigenvalue pairs summing to (numerically) zero are unconstrained and set
    to zero.  Nonzero structure: ``L_s`` at (1,1), (2,2), (1,3), (2,4) (with
    symmetric partners), ``L_theta`` at (1,1), (2,2) only.
    """
    _require_regular(p, "sld_pair")
    lam1, lam2, *_ = _lambda_derivatives(p)
    lams = np.array([lam1, lam2, 0.0, 0.0])
    return SldPair(
        l_s=_sld_from_derivative(lams, drho_ds(p)),
        l_theta=_sld_from_derivative(lams, drho_dtheta(p)),
    )


def _theta_limit_qfim(spec: SpectralData, e: float) -> tuple[float, float, float]:
    """theta -> 0 limits: (F_ss, F_tt, F_st) = (4 a4^2, (1-d)/(1+d), 0)."""
    return 4.0 * spec.a4 * spec.a4, e / (2.0 - e), 0.0


def qfim(p: ModelParams) -> Qfim2:
    """QFIM for (s, theta), assembled from the eigenframe element formulas.

    Diagonal SLD contributions enter in the cancelled form
    ``(d lambda)^2 / lambda`` so that nothing blows up as ``lambda1 -> 0``;
    below ``lambda1 = 1e-12`` the analytic limits take over.
    """
    _require_regular(p, "qfim")
    lam1, lam2, dl1s, dl2s, dl1t, dl2t, _, spec = _lambda_derivatives(p)
    if lam1 < _LAMBDA_FLOOR:
        e = one_minus_d(p.s, p.sigma)
        f_ss, f_tt, f_st = _theta_limit_qfim(spec, e)
    else:
        f_ss = (
            dl1s * dl1s / lam1
            + dl2s * dl2s / lam2
            + 4.0 * (lam1 * spec.a3 ** 2 + lam2 * spec.a4 ** 2)
        )
        f_tt = dl1t * dl1t / lam1 + dl2t * dl2t / lam2
        f_st = dl1s * dl1t / lam1 + dl2s * dl2t / lam2
    return Qfim2(f_ss=f_ss, f_tt=f_tt, f_st=f_st, tag="theta")


def qfim_from_slds(rho: Rho4, slds: SldPair) -> Qfim2:
    """QFIM through the generic trace rule ``F_ij = Tr[rho {L_i, L_j}]/2``.

    Redundant with :func:`qfim` by construction; kept as the independent
    internal-consistency route.
    """
    r = rho.matrix
    ls, lt = slds.l_s, slds.l_theta

    def elem(a, b):
        return 0.5 * float(np.trace(r @ (a @ b + b @ a)))

    return Qfim2(f_ss=elem(ls, ls), f_tt=elem(lt, lt), f_st=elem(ls, lt), tag="theta")


def _h_pair(f_ss: float, f_tt: float, f_st: float) -> PrecisionPair:
    if f_tt < _NUISANCE_FLOOR and abs(f_st) < _NUISANCE_FLOOR:
        # no nuisance information and no cross term: no correction to apply
        return PrecisionPair(h_s=f_ss, h_nuisance=f_tt)
    return PrecisionPair(
        h_s=f_ss - f_st * f_st / f_tt,
        h_nuisance=f_tt - f_st * f_st / f_ss,
    )


def precision(p: ModelParams) -> PrecisionPair:
    """Nuisance-corrected informations ``H_s`` and ``H_theta``."""
    q = qfim(p)
    return _h_pair(q.f_ss, q.f_tt, q.f_st)


def qfim_gamma(s: float, sigma: float, gamma: float) -> Qfim2:
    """QFIM for (s, gamma) with coherence ``gamma = cos(theta)`` in [0, 1).

    Obtained from the theta-parametrized matrix by the exact chain rule with
    ``d theta/d gamma = -1/sin(theta)``.  At ``gamma = 1`` the nuisance
    block diverges; use :func:`precision_gamma`, which carries the limit.
    """
    if not (0.0 <= gamma <= 1.0):
        raise DomainError(f"gamma must lie in [0, 1], got {gamma}")
    if gamma == 1.0:
        raise DomainError(
            "the coherence-parametrized matrix diverges at gamma = 1; "
            "precision_gamma handles that limit"
        )
    theta = math.acos(gamma)
    q = qfim(ModelParams(s=s, sigma=sigma, theta=theta))
    j = -1.0 / math.sin(theta)
    return Qfim2(f_ss=q.f_ss, f_tt=q.f_tt * j * j, f_st=q.f_st * j, tag="gamma")


def precision_gamma(s: float, sigma: float, gamma: float) -> PrecisionPair:
    """``H_s`` and ``H_gamma`` under the coherence nuisance.

    ``H_s`` equals the theta-chart value exactly (reparametrization
    invariance).  At ``gamma = 1`` it takes the theta -> 0 limit
    ``H_s = F_ss = 4 a4^2`` while ``H_gamma`` diverges (returned as inf).
    """
    if gamma == 1.0:
        q = qfim(ModelParams(s=s, sigma=sigma, theta=0.0))
        return PrecisionPair(h_s=q.f_ss, h_nuisance=math.inf)
    g = qfim_gamma(s, sigma, gamma)
    return _h_pair(g.f_ss, g.f_tt, g.f_st)


def _concurrence_chart(s: float, sigma: float, c: float):
    """theta and the Jacobian rows of (s, theta) w.r.t. (s, C)."""
    theta = theta_from_concurrence(s, sigma, c)
    ct = math.cos(theta)
    if ct < 1e-9:
        raise DomainError(
            "the concurrence chart is singular at the reachable maximum "
            "(theta = pi/2); use the theta or gamma chart there"
        )
    tri = overlap(s, sigma)
    om = one_minus_d_squared(s, sigma)
    th_c = 1.0 / (ct * math.sqrt(om))                      # d theta/dC at fixed s
    th_s = math.sin(theta) * tri.d * tri.d1 / (ct * om)    # d theta/ds at fixed C
    return theta, th_s, th_c


def qfim_concurrence(s: float, sigma: float, c: float) -> Qfim2:
    """QFIM for (s, C): Jacobian transport of the theta-parametrized matrix.

    The concurrence depends on both ``s`` and ``theta``, so the chart mixes
    the parameters:  with ``t_s = d theta/ds|_C`` and ``t_C = d theta/dC|_s``,

        G_ss = F_ss + 2 t_s F_st + t_s^2 F_tt
        G_sC = t_C (F_st + t_s F_tt)
        G_CC = t_C^2 F_tt.
    """
    theta, th_s, th_c = _concurrence_chart(s, sigma, c)
    q = qfim(ModelParams(s=s, sigma=sigma, theta=theta))
    g_ss = q.f_ss + 2.0 * th_s * q.f_st + th_s * th_s * q.f_tt
    g_sc = th_c * (q.f_st + th_s * q.f_tt)
    g_cc = th_c * th_c * q.f_tt
    return Qfim2(f_ss=g_ss, f_tt=g_cc, f_st=g_sc, tag="concurrence")


def precision_concurrence(s: float, sigma: float, c: float) -> PrecisionPair:
    """``H_s`` and ``H_C`` under the concurrence nuisance (theta < pi/2)."""
    g = qfim_concurrence(s, sigma, c)
    return _h_pair(g.f_ss, g.f_tt, g.f_st)


def commutator_expectation(p: ModelParams) -> float:
    """``Tr(rho [L_s, L_theta])`` — zero for this family, so one optimal
    measurement can serve both parameters."""
    r = rho4(p).matrix
    slds = sld_pair(p)
    comm = slds.l_s @ slds.l_theta - slds.l_theta @ slds.l_s
    return float(np.trace(r @ comm))
