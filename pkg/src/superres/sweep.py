"""Parameter sweeps over (separation, nuisance) with nuisance one of theta,
concurrence, or coherence; figure-preset grids, oracle comparison, and
deterministic CSV/JSON emission.

Sweeps walk the Cartesian product of the two axes in s-major order.
Concurrence requests beyond the reachable maximum at a given separation are
emitted with ``status=out_of_reach`` (fields other than the request left
blank) so that rectangular surface layouts survive.  Identical specs produce
byte-identical output files.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable

import numpy as np

from .errors import DomainError, OutOfReachError
from .fisher_single import f_tot_coherence, f_tot_concurrence
from .numeric_oracle import GridField, default_grid, numeric_pure_qfi, numeric_qfim, _psf
from .qfim_two_param import (
    precision,
    precision_concurrence,
    precision_gamma,
    qfim,
    qfim_concurrence,
    qfim_gamma,
)
from .state_model import (
    ModelParams,
    concurrence,
    concurrence_max,
    overlap,
    spectral,
    theta_from_concurrence,
)

MODES = ("single", "qfim", "verify")
NUISANCES = ("theta", "concurrence", "coherence")
FORMATS = ("csv", "json")
CSV_FIELDS = (
    "s", "sigma", "theta", "gamma", "C", "d",
    "f_tot", "f_ss", "f_tt", "f_st", "h_s", "h_nuisance",
)
DELTA_FIELDS = ("delta_f_tot", "delta_f_ss", "delta_f_tt", "delta_f_st")
VERIFY_TOLERANCE = 1e-6

_HALF_PI = math.pi / 2


@dataclass
class SweepSpec:
    """Validated description of one sweep block."""

    mode: str
    nuisance: str = "coherence"
    sigma: float = 1.0
    phi: float = 0.0
    s_range: tuple[float, float, int] = (1e-3, 5.0, 50)
    nuisance_range: tuple[float, float, int] | None = None
    fmt: str = "csv"
    oracle: bool = False
    grid_points: int = 4096
    grid_halfwidth: float | None = None
    fd_step: float | None = None

    def __post_init__(self):
        self.validate()

    def validate(self) -> None:
        if self.mode not in MODES:
            raise DomainError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.nuisance not in NUISANCES:
            raise DomainError(
                f"nuisance must be one of {NUISANCES}, got {self.nuisance!r}"
            )
        if self.fmt not in FORMATS:
            raise DomainError(f"format must be one of {FORMATS}, got {self.fmt!r}")
        if not (self.sigma > 0.0):
            raise DomainError(f"sigma must be positive, got {self.sigma}")
        if self.phi != 0.0:
            raise DomainError(
                f"closed-form sweeps require phi = 0, got phi = {self.phi}"
            )
        if self.nuisance_range is None:
            top = _HALF_PI if self.nuisance == "theta" else 1.0
            self.nuisance_range = (0.0, top, 50)
        for name, rng in (("s", self.s_range), ("nuisance", self.nuisance_range)):
            lo, hi, steps = rng
            if steps < 1:
                raise DomainError(f"{name}-steps must be >= 1, got {steps}")
            if hi < lo:
                raise DomainError(f"{name}-range must have max >= min, got {rng}")
        if self.s_range[0] < 0.0:
            raise DomainError(f"s-range must be nonnegative, got {self.s_range}")
        if self.mode in ("qfim", "verify") and self.s_range[0] <= 0.0:
            raise DomainError("qfim/verify sweeps require s > 0 (start at e.g. 1e-3)")
        nu_lo, nu_hi, _ = self.nuisance_range
        if self.nuisance == "theta" and not (0.0 <= nu_lo and nu_hi <= _HALF_PI):
            raise DomainError(f"theta range must lie in [0, pi/2], got {self.nuisance_range}")
        if self.nuisance == "coherence" and not (0.0 <= nu_lo and nu_hi <= 1.0):
            raise DomainError(f"coherence range must lie in [0, 1], got {self.nuisance_range}")
        if self.nuisance == "concurrence" and nu_lo < 0.0:
            raise DomainError(f"concurrence range must be nonnegative, got {self.nuisance_range}")
        if self.mode == "verify" and self.nuisance != "theta":
            raise DomainError("verify mode compares the theta-parametrized matrix; "
                              "use --nuisance theta")


@dataclass
class SweepRecord:
    """One sweep point; unpopulated fields stay None (emitted blank/absent)."""

    s: float
    sigma: float
    theta: float | None = None
    gamma: float | None = None
    C: float | None = None
    d: float | None = None
    f_tot: float | None = None
    f_ss: float | None = None
    f_tt: float | None = None
    f_st: float | None = None
    h_s: float | None = None
    h_nuisance: float | None = None
    status: str = "ok"
    delta_f_tot: float | None = None
    delta_f_ss: float | None = None
    delta_f_tt: float | None = None
    delta_f_st: float | None = None


def _axis(rng: tuple[float, float, int]) -> np.ndarray:
    lo, hi, steps = rng
    return np.array([lo]) if steps == 1 else np.linspace(lo, hi, steps)


def _numeric_f_tot(s: float, sigma: float, theta: float, n_points: int,
                   fd_step: float, halfwidth: float | None = None) -> float:
    """Grid reconstruction of the weighted FI (oracle side of single mode)."""
    grid = default_grid(s, sigma, n_points=n_points, halfwidth=halfwidth)
    g = math.cos(theta)
    w = grid.weights

    def phi1_hat(sv: float) -> GridField:
        u = _psf(grid.x + sv / 2.0, sigma) + g * _psf(grid.x - sv / 2.0, sigma)
        return GridField(grid=grid, values=u / math.sqrt(float(w @ (u * u))))

    def phi2_hat(sv: float) -> GridField:
        v = _psf(grid.x - sv / 2.0, sigma)
        return GridField(grid=grid, values=v / math.sqrt(float(w @ (v * v))))

    u0 = _psf(grid.x + s / 2.0, sigma) + g * _psf(grid.x - s / 2.0, sigma)
    n1 = 0.5 * float(w @ (u0 * u0))
    n2 = 0.5 * math.sin(theta) ** 2
    total = n1 * numeric_pure_qfi(phi1_hat, s, fd_step)
    if n2 > 0.0:
        total += n2 * numeric_pure_qfi(phi2_hat, s, fd_step)
    return total


def _single_record(spec: SweepSpec, s: float, nu: float) -> SweepRecord:
    sigma = spec.sigma
    d = overlap(s, sigma).d
    if spec.nuisance == "concurrence":
        if s == 0.0:
            # only C = 0 is reachable; that column is the full-coherence limit
            if nu > 0.0:
                return SweepRecord(s=s, sigma=sigma, C=nu, d=d, status="out_of_reach")
            rec = f_tot_coherence(s, sigma, 1.0)
        else:
            try:
                rec = f_tot_concurrence(s, sigma, nu)
            except OutOfReachError:
                return SweepRecord(s=s, sigma=sigma, C=nu, d=d, status="out_of_reach")
    elif spec.nuisance == "coherence":
        rec = f_tot_coherence(s, sigma, nu)
    else:
        rec = f_tot_coherence(s, sigma, math.cos(nu))
    out = SweepRecord(
        s=s, sigma=sigma, theta=rec.theta, gamma=rec.gamma,
        C=rec.concurrence, d=d, f_tot=rec.f_tot,
    )
    if spec.oracle:
        num = _numeric_f_tot(s, sigma, rec.theta, spec.grid_points,
                             spec.fd_step if spec.fd_step is not None else 1e-5 * sigma,
                             spec.grid_halfwidth)
        out.delta_f_tot = abs(out.f_tot - num) / max(abs(num), 1e-300)
    return out


def _qfim_record(spec: SweepSpec, s: float, nu: float) -> SweepRecord:
    sigma = spec.sigma
    d = overlap(s, sigma).d
    out = SweepRecord(s=s, sigma=sigma, d=d)
    if spec.nuisance == "theta":
        p = ModelParams(s=s, sigma=sigma, theta=nu)
        q = qfim(p)
        h = precision(p)
        out.theta, out.gamma, out.C = nu, math.cos(nu), concurrence(p)
        out.f_ss, out.f_tt, out.f_st = q.f_ss, q.f_tt, q.f_st
        out.h_s, out.h_nuisance = h.h_s, h.h_nuisance
    elif spec.nuisance == "coherence":
        out.gamma = nu
        out.theta = math.acos(nu)
        out.C = concurrence(ModelParams(s=s, sigma=sigma, theta=out.theta))
        if nu == 1.0:
            h = precision_gamma(s, sigma, 1.0)
            out.f_ss, out.h_s = h.h_s, h.h_s   # H_s = G_ss in this limit
        else:
            q = qfim_gamma(s, sigma, nu)
            h = precision_gamma(s, sigma, nu)
            out.f_ss, out.f_tt, out.f_st = q.f_ss, q.f_tt, q.f_st
            out.h_s, out.h_nuisance = h.h_s, h.h_nuisance
    else:
        c_max = concurrence_max(s, sigma)
        if nu * nu - c_max * c_max > 1e-12 * c_max * c_max:
            return SweepRecord(s=s, sigma=sigma, C=nu, d=d, status="out_of_reach")
        out.C = nu
        out.theta = theta_from_concurrence(s, sigma, nu)
        out.gamma = math.cos(out.theta)
        try:
            q = qfim_concurrence(s, sigma, nu)
            h = precision_concurrence(s, sigma, nu)
            out.f_ss, out.f_tt, out.f_st = q.f_ss, q.f_tt, q.f_st
            out.h_s, out.h_nuisance = h.h_s, h.h_nuisance
        except DomainError:
            # concurrence chart singular at maximum reach; H_s is
            # chart-invariant so report it from the theta chart
            out.h_s = precision(ModelParams(s=s, sigma=sigma, theta=out.theta)).h_s
    if spec.oracle:
        _attach_qfim_deltas(spec, s, out)
    return out


def _attach_qfim_deltas(spec: SweepSpec, s: float, out: SweepRecord) -> None:
    """Oracle deltas always compare the theta-parametrized matrix."""
    p = ModelParams(s=s, sigma=spec.sigma, theta=out.theta)
    ana = qfim(p)
    num = numeric_qfim(p, fd_step=spec.fd_step, n_points=spec.grid_points,
                       halfwidth=spec.grid_halfwidth)
    out.delta_f_ss = abs(ana.f_ss - num.f_ss) / max(abs(num.f_ss), 1e-300)
    if spectral(p).lambda1 >= 1e-12:
        # below the floor the analytic side reports the continuous limit
        # while the pointwise derivative vanishes; only f_ss is comparable
        out.delta_f_tt = abs(ana.f_tt - num.f_tt) / max(abs(num.f_tt), 1e-300)
        out.delta_f_st = abs(ana.f_st - num.f_st) / max(abs(num.f_st), 1e-300)


def run_sweep(spec: SweepSpec) -> list[SweepRecord]:
    """Evaluate the Cartesian product of the two axes, s-major."""
    spec.validate()
    records = []
    make = _single_record if spec.mode == "single" else _qfim_record
    for s in _axis(spec.s_range):
        for nu in _axis(spec.nuisance_range):
            records.append(make(spec, float(s), float(nu)))
    return records


def max_oracle_delta(records: Iterable[SweepRecord]) -> float:
    """Largest populated oracle delta (0.0 if none are populated)."""
    worst = 0.0
    for rec in records:
        for name in DELTA_FIELDS:
            v = getattr(rec, name)
            if v is not None:
                worst = max(worst, v)
    return worst


def figure_preset(name: str) -> list[SweepSpec]:
    """Sweep blocks reproducing the bundled figure data sets.

    ``fig1a``/``fig1b``: single-parameter FI surfaces over (s, C) and
    (s, gamma).  ``fig1c``: the fixed s = 0.3 sigma line, once along each
    axis (two blocks).  ``fig2a``/``fig2b``: two-parameter precision H_s
    over (s, C) and (s, gamma).  All use sigma = 1, phi = 0,
    s in [1e-3, 5] (the closed forms are singular at s = 0) and 200-point
    axes by default.
    """
    n = 200
    s_rng = (1e-3, 5.0, n)
    presets = {
        "fig1a": [SweepSpec(mode="single", nuisance="concurrence",
                            s_range=s_rng, nuisance_range=(0.0, 1.0, n))],
        "fig1b": [SweepSpec(mode="single", nuisance="coherence",
                            s_range=s_rng, nuisance_range=(0.0, 1.0, n))],
        "fig1c": [
            SweepSpec(mode="single", nuisance="coherence",
                      s_range=(0.3, 0.3, 1), nuisance_range=(0.0, 1.0, n)),
            SweepSpec(mode="single", nuisance="concurrence",
                      s_range=(0.3, 0.3, 1),
                      nuisance_range=(0.0, concurrence_max(0.3, 1.0), n)),
        ],
        "fig2a": [SweepSpec(mode="qfim", nuisance="concurrence",
                            s_range=s_rng, nuisance_range=(0.0, 1.0, n))],
        "fig2b": [SweepSpec(mode="qfim", nuisance="coherence",
                            s_range=s_rng, nuisance_range=(0.0, 1.0, n))],
    }
    if name not in presets:
        raise DomainError(
            f"unknown figure preset {name!r}; available: {', '.join(sorted(presets))}"
        )
    return presets[name]


def _fmt(v: float | None) -> str:
    if v is None or not math.isfinite(v):
        return ""
    return f"{v:.16e}"


def _record_dict(rec: SweepRecord, include_deltas: bool) -> dict:
    out = {}
    for name in CSV_FIELDS + (DELTA_FIELDS if include_deltas else ()):
        v = getattr(rec, name)
        if v is not None and math.isfinite(v):
            out[name] = v
    out["status"] = rec.status
    return out


def emit(records: Iterable[SweepRecord], fmt: str, destination: str | Path | IO[str],
         include_deltas: bool = False) -> None:
    """Write records as CSV (17-significant-digit scientific notation) or
    JSON (array of objects, unpopulated keys absent).  Output is
    byte-identical across runs for identical inputs."""
    if fmt not in FORMATS:
        raise DomainError(f"format must be one of {FORMATS}, got {fmt!r}")
    records = list(records)
    if hasattr(destination, "write"):
        _emit_stream(records, fmt, destination, include_deltas)
        return
    path = Path(destination)
    try:
        with open(path, "w", newline="") as fh:
            _emit_stream(records, fmt, fh, include_deltas)
    except OSError as exc:
        raise OSError(f"cannot write sweep output to {path}: {exc}") from exc


def _emit_stream(records: list[SweepRecord], fmt: str, fh: IO[str],
                 include_deltas: bool) -> None:
    if fmt == "csv":
        names = CSV_FIELDS + (DELTA_FIELDS if include_deltas else ()) + ("status",)
        fh.write(",".join(names) + "\n")
        for rec in records:
            cells = [_fmt(getattr(rec, n)) for n in names[:-1]]
            fh.write(",".join(cells + [rec.status]) + "\n")
    else:
        json.dump([_record_dict(r, include_deltas) for r in records], fh, indent=2)
        fh.write("\n")
