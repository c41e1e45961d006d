"""Brute-force verification layer on a discretized position grid.

Everything here is computed from sampled Gaussian amplitudes with trapezoid
integration, finite differences, and dense eigendecompositions — none of the
closed forms from the analytic modules are reused.  The two-source state is
held literally as a (grid x 2) array over the auxiliary basis, so partial
traces and purities are actual matrix operations.

Defaults (4096 points, halfwidth ``8 sigma + s``, central differences with
step ``1e-5 sigma``, support cutoff ``1e-12``) keep truncation and round-off
each below ~1e-8 over the tested parameter range; every oracle evaluation
runs in well under a second.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import ConfigurationError, ContractViolationError, DomainError
from .qfim_two_param import Qfim2
from .state_model import ModelParams

_FIT_SLACK = 1e-4   # tolerance (in sigma units) so FD probes at s +- eps fit


@dataclass
class Grid:
    """Uniform symmetric position grid with trapezoid weights.

    ``n_points`` must be a power of two, at least 1024; the spacing is
    ``2 halfwidth / (n_points - 1)``.  The sample points and weights are
    frozen after construction.
    """

    halfwidth: float
    n_points: int = 4096
    x: np.ndarray = field(init=False, repr=False)
    weights: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        n = self.n_points
        if n < 1024 or (n & (n - 1)) != 0:
            raise ConfigurationError(
                f"n_points must be a power of two >= 1024, got {n}"
            )
        if not (self.halfwidth > 0.0):
            raise ConfigurationError(f"halfwidth must be positive, got {self.halfwidth}")
        self.x = np.linspace(-self.halfwidth, self.halfwidth, n)
        w = np.full(n, self.spacing)
        w[0] *= 0.5
        w[-1] *= 0.5
        self.weights = w
        self.x.setflags(write=False)
        self.weights.setflags(write=False)

    @property
    def spacing(self) -> float:
        return 2.0 * self.halfwidth / (self.n_points - 1)

    def fits(self, s: float, sigma: float) -> bool:
        """Whether states of separation ``s`` keep eight PSF widths of margin."""
        return self.halfwidth >= 8.0 * sigma + s - _FIT_SLACK * sigma


@dataclass(frozen=True)
class GridField:
    """Real spatial amplitude sampled on a grid (units 1/sqrt(length))."""

    grid: Grid
    values: np.ndarray

    def inner(self, other: "GridField") -> float:
        return float(self.grid.weights @ (self.values * other.values))

    def norm(self) -> float:
        return math.sqrt(float(self.grid.weights @ (self.values * self.values)))


def default_grid(s: float, sigma: float, n_points: int = 4096,
                 halfwidth: float | None = None) -> Grid:
    """Grid wide enough for sources at separation ``s``: halfwidth 8 sigma + s."""
    return Grid(halfwidth=8.0 * sigma + s if halfwidth is None else halfwidth,
                n_points=n_points)


def _psf(x: np.ndarray, sigma: float) -> np.ndarray:
    return (2.0 * math.pi * sigma * sigma) ** (-0.25) * np.exp(-x * x / (4.0 * sigma * sigma))


def _check_fit(grid: Grid, s: float, sigma: float) -> None:
    if not grid.fits(s, sigma):
        raise ConfigurationError(
            f"grid halfwidth {grid.halfwidth} too narrow for s = {s}, "
            f"sigma = {sigma} (needs at least 8 sigma + s)"
        )


def make_sources(s: float, sigma: float, grid: Grid | None = None) -> tuple[GridField, GridField]:
    """Sampled displaced PSF amplitudes ``h(x + s/2)``, ``h(x - s/2)``,
    unit-normalized under the trapezoid rule."""
    if not (sigma > 0.0):
        raise DomainError(f"sigma must be positive, got {sigma}")
    if s < 0.0:
        raise DomainError(f"separation s must be nonnegative, got {s}")
    if grid is None:
        grid = default_grid(s, sigma)
    _check_fit(grid, s, sigma)
    fields = []
    for sign in (+1.0, -1.0):
        v = _psf(grid.x + sign * s / 2.0, sigma)
        # intensity below 1e-12 at the edges keeps trapezoid tails ~1e-15
        if v[0] ** 2 > 1e-12 or v[-1] ** 2 > 1e-12:
            raise ConfigurationError("intensity has not decayed at the grid edge")
        v = v / math.sqrt(float(grid.weights @ (v * v)))
        v.setflags(write=False)
        fields.append(GridField(grid=grid, values=v))
    return fields[0], fields[1]


def _branch_columns(grid: Grid, s: float, sigma: float, theta: float, phi: float):
    """Non-normalized branch amplitudes (Phi_1, Phi_2) on the grid."""
    hp = _psf(grid.x + s / 2.0, sigma).astype(complex)
    hm = _psf(grid.x - s / 2.0, sigma).astype(complex)
    c = np.exp(1j * phi) * math.cos(theta)
    phi1 = (hp + c * hm) / math.sqrt(2.0)
    phi2 = np.exp(1j * phi) * math.sin(theta) * hm / math.sqrt(2.0)
    return phi1, phi2


def two_source_state(p: ModelParams, grid: Grid | None = None) -> np.ndarray:
    """Unit-norm two-source state as a literal (n_points, 2) array over the
    auxiliary basis ``{phi_1, phi_1_perp}``."""
    if grid is None:
        grid = default_grid(p.s, p.sigma)
    _check_fit(grid, p.s, p.sigma)
    phi1, phi2 = _branch_columns(grid, p.s, p.sigma, p.theta, p.phi)
    state = np.stack([phi1, phi2], axis=1)
    n2 = float(np.real(np.einsum("i,ik,ik->", grid.weights, state.conj(), state)))
    return state / math.sqrt(n2)


def numeric_concurrence(p: ModelParams, n_points: int = 4096,
                        halfwidth: float | None = None) -> float:
    """Concurrence through purity: ``C = sqrt(2 (1 - Tr rho_aux^2))``.

    The auxiliary reduced state is obtained by contracting the (grid x 2)
    state over the position index with trapezoid weights.  For a unit-trace
    2x2 state ``2 (1 - Tr rho^2) = 4 det rho``, and the determinant form is
    evaluated directly (the literal purity subtraction would drown small
    concurrences in round-off).  Any phi.
    """
    grid = default_grid(p.s, p.sigma, n_points=n_points, halfwidth=halfwidth)
    state = two_source_state(p, grid)
    rho_aux = np.einsum("i,ik,il->kl", grid.weights, state.conj(), state)
    det = float(np.real(rho_aux[0, 0] * rho_aux[1, 1]
                        - rho_aux[0, 1] * rho_aux[1, 0]))
    return 2.0 * math.sqrt(max(0.0, det))


def numeric_pure_qfi(family: Callable[[float], GridField], s: float,
                     fd_step: float = 1e-5) -> float:
    """Pure-state Fisher information via the overlap-derivative form
    ``4 (<d psi|d psi> - <psi|d psi>^2)`` with a central-difference
    derivative.  The family must stay unit-normalized (checked to 1e-8)."""
    mid = family(s)
    lo = family(s - fd_step)
    hi = family(s + fd_step)
    w = mid.grid.weights
    for f in (mid, lo, hi):
        nrm = float(w @ (f.values * f.values))
        if abs(nrm - 1.0) > 1e-8:
            raise ContractViolationError(
                f"numeric_pure_qfi requires a normalized family; got |psi|^2 = {nrm!r}"
            )
    delta = (hi.values - lo.values) / (2.0 * fd_step)
    dd = float(w @ (delta * delta))
    pd = float(w @ (mid.values * delta))
    return 4.0 * (dd - pd * pd)


def _orthonormal_fd_basis(grid: Grid, s: float, sigma: float) -> np.ndarray:
    """Six-vector orthonormal basis spanning both sources and their first
    two spatial derivatives — enough to hold every state within O(fd_step^3)
    during finite differencing in s."""
    sig2 = sigma * sigma
    vecs = []
    for sign in (+1.0, -1.0):
        u = grid.x + sign * s / 2.0
        base = _psf(u, sigma)
        vecs.append(base)
        vecs.append(-(u / (2.0 * sig2)) * base)
        vecs.append((u * u / (4.0 * sig2 * sig2) - 1.0 / (2.0 * sig2)) * base)
    basis = []
    w = grid.weights
    for v in vecs:
        v = v.astype(complex)
        for b in basis:
            v = v - (w @ (b.conj() * v)) * b
        v = v / math.sqrt(float(np.real(w @ (v.conj() * v))))
        basis.append(v)
    return np.array(basis)


def _project_rho(basis: np.ndarray, grid: Grid, s: float, sigma: float,
                 theta: float, phi: float) -> np.ndarray:
    phi1, phi2 = _branch_columns(grid, s, sigma, theta, phi)
    n2 = float(np.real(grid.weights @ (phi1.conj() * phi1 + phi2.conj() * phi2)))
    c1 = basis.conj() @ (grid.weights * phi1)
    c2 = basis.conj() @ (grid.weights * phi2)
    return (np.outer(c1, c1.conj()) + np.outer(c2, c2.conj())) / n2


def _hermitize(m: np.ndarray) -> np.ndarray:
    return 0.5 * (m + m.conj().T)


def _qfim_element(lams: np.ndarray, da: np.ndarray, db: np.ndarray,
                  cutoff: float) -> float:
    """Spectral-sum QFIM element
    ``sum_{k,l: lam_k+lam_l > cutoff} 2 Re[da_kl db_lk] / (lam_k + lam_l)``."""
    total = 0.0
    n = len(lams)
    for k in range(n):
        for j in range(n):
            den = lams[k] + lams[j]
            if den > cutoff:
                total += 2.0 * float((da[k, j] * db[j, k]).real) / den
    return total


def numeric_qfim(p: ModelParams, fd_step: float | None = None,
                 rank_cutoff: float = 1e-12, n_points: int = 4096,
                 halfwidth: float | None = None) -> Qfim2:
    """QFIM for (s, theta) by central finite differences of the projected
    density matrix and the spectral SLD sum.  Supports any phi.

    ``fd_step`` must lie in ``[1e-6, 1e-4] * sigma`` (default ``1e-5 sigma``);
    a very small ``rank_cutoff`` amplifies round-off in the near-null
    subspace and triggers a diagnostic warning.
    """
    if p.s == 0.0:
        raise DomainError("numeric_qfim requires s > 0")
    eps = 1e-5 * p.sigma if fd_step is None else fd_step
    if not (1e-6 * p.sigma <= eps <= 1e-4 * p.sigma):
        raise DomainError(
            f"fd_step must lie in [1e-6, 1e-4] * sigma, got {eps}"
        )
    if rank_cutoff < 1e-13:
        warnings.warn(
            "rank_cutoff below 1e-13 amplifies round-off in the spectral sum",
            RuntimeWarning,
            stacklevel=2,
        )
    grid = default_grid(p.s, p.sigma, n_points=n_points, halfwidth=halfwidth)
    _check_fit(grid, p.s, p.sigma)
    basis = _orthonormal_fd_basis(grid, p.s, p.sigma)

    def rho(sv, tv):
        return _project_rho(basis, grid, sv, p.sigma, tv, p.phi)

    r0 = _hermitize(rho(p.s, p.theta))
    drs = (rho(p.s + eps, p.theta) - rho(p.s - eps, p.theta)) / (2.0 * eps)
    drt = (rho(p.s, p.theta + eps) - rho(p.s, p.theta - eps)) / (2.0 * eps)
    lams, vecs = np.linalg.eigh(r0)
    ds = _hermitize(vecs.conj().T @ drs @ vecs)
    dt = _hermitize(vecs.conj().T @ drt @ vecs)
    return Qfim2(
        f_ss=_qfim_element(lams, ds, ds, rank_cutoff),
        f_tt=_qfim_element(lams, dt, dt, rank_cutoff),
        f_st=_qfim_element(lams, ds, dt, rank_cutoff),
        tag="theta",
    )


def hg_coefficients(s: float, sigma: float, n_max: int) -> np.ndarray:
    """Hermite-Gauss expansion coefficients of the displaced source.

    In the width-``sigma`` Hermite-Gauss basis the source ``h(x - s/2)``
    has coefficients ``c_n = exp(-a^2/2) a^n / sqrt(n!)`` with
    ``a = s / (4 sigma)``; the mirrored source carries ``(-1)^n c_n``, so
    that ``sum_n (-1)^n c_n^2`` reproduces the overlap ``d``.

    Raises
    ------
    DomainError
        If ``n_max < 20``.
    ConfigurationError
        If the truncation residual ``1 - sum c_n^2`` exceeds 1e-12.
    """
    if n_max < 20:
        raise DomainError(f"n_max must be at least 20, got {n_max}")
    if not (sigma > 0.0):
        raise DomainError(f"sigma must be positive, got {sigma}")
    if s < 0.0:
        raise DomainError(f"separation s must be nonnegative, got {s}")
    a = s / (4.0 * sigma)
    c = np.empty(n_max + 1)
    c[0] = math.exp(-a * a / 2.0)
    for n in range(1, n_max + 1):
        c[n] = c[n - 1] * a / math.sqrt(n)
    residual = 1.0 - float(c @ c)
    if residual > 1e-12:
        raise ConfigurationError(
            f"n_max = {n_max} too small: truncation residual {residual:.3e} > 1e-12"
        )
    return c
