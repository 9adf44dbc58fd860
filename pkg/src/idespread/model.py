"""Demographic parameters and fecundity functions.

The non-spatial skeleton of the model is the scalar recursion
``N' = s*N + F(N)``: a fraction ``s`` of adults survives the season and
``F`` converts the standing density into surviving offspring.  This module
holds the parameter set, the Beverton-Holt recruitment function, a
tabulated alternative for measured recruitment curves, and report-style
validation of both.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

import numpy as np

from .errors import DomainError

__all__ = [
    "ModelParams",
    "BevertonHolt",
    "TabulatedFecundity",
    "CheckResult",
    "ValidationReport",
    "beverton_holt",
    "validate_params",
    "validate_fecundity",
    "growth_lipschitz_bound",
]

# Relative step used for finite-difference derivative estimates of a
# fecundity curve (scaled by the carrying capacity).
_FD_STEP_FRAC = 1e-5
# Relative tolerance for derivative-based checks (smoothness surrogate and
# the low-density slope); tabulated inputs are resolution-limited and may
# honestly fail these.
_DERIV_RTOL = 1e-6


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class ValidationReport:
    """Outcome of a report-style validation: one entry per invariant."""

    checks: list[CheckResult] = field(default_factory=list)
    metrics: dict[str, float] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(CheckResult(name, bool(passed), detail))

    def check_passed(self, name: str):
        """Result of the named check, or None if absent."""
        for c in self.checks:
            if c.name == name:
                return c.passed
        return None

    def summary(self) -> str:
        lines = []
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            line = f"{mark}  {c.name}"
            if c.detail:
                line += f"  ({c.detail})"
            lines.append(line)
        return "\n".join(lines)

    def to_json_dict(self) -> dict:
        return {
            "passed": self.passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail}
                for c in self.checks
            ],
            "metrics": dict(self.metrics),
        }


# ---------------------------------------------------------------------------
# parameters
# ---------------------------------------------------------------------------

def _param_failures(s, r, M, p_A, p_J) -> list[str]:
    failures = []
    if not (np.isfinite(s) and 0.0 <= s < 1.0):
        failures.append("s out of [0,1)")
    if not (np.isfinite(r) and r > 1.0):
        failures.append("r must be > 1")
    if not (np.isfinite(M) and M > 0.0):
        failures.append("M must be > 0")
    if not (np.isfinite(p_A) and 0.0 <= p_A <= 1.0):
        failures.append("p_A out of [0,1]")
    if not (np.isfinite(p_J) and 0.0 <= p_J <= 1.0):
        failures.append("p_J out of [0,1]")
    return failures


@dataclass(frozen=True)
class ModelParams:
    """Demographic constants of the model.

    ``k`` is derived as ``1 - s`` rather than stored, so the constraint
    ``k + s = 1`` cannot be violated by construction.

    Attributes:
        s: Adult season-to-season survival probability, in [0, 1).
        r: Low-density per-capita offspring factor, > 1.
        M: Carrying capacity of the non-spatial recursion, > 0.
        p_A: Fraction of adults that disperse, in [0, 1].
        p_J: Fraction of juveniles that disperse, in [0, 1].
    """

    s: float
    r: float
    M: float
    p_A: float
    p_J: float

    def __post_init__(self):
        failures = _param_failures(self.s, self.r, self.M, self.p_A, self.p_J)
        if failures:
            raise ValueError("invalid model parameters: " + "; ".join(failures))

    @property
    def k(self) -> float:
        """Juvenile survival factor, exactly 1 - s."""
        return 1.0 - self.s

    @property
    def contraction_constant(self) -> float:
        """s*(1-p_A) + (1-p_J)*k*r, the sedentary-update Lipschitz bound."""
        return self.s * (1.0 - self.p_A) + (1.0 - self.p_J) * self.k * self.r


def validate_params(params) -> ValidationReport:
    """Check every parameter invariant, report-style (never raises).

    Accepts a ModelParams or a plain mapping with keys s, r, M, p_A, p_J,
    so that invalid raw inputs can still be diagnosed.  The report carries
    the contraction constant as a metric and a dedicated "contraction"
    check that passes iff the constant is < 1.
    """
    if isinstance(params, ModelParams):
        raw = {"s": params.s, "r": params.r, "M": params.M,
               "p_A": params.p_A, "p_J": params.p_J}
    else:
        raw = dict(params)

    report = ValidationReport()
    values = {}
    for key in ("s", "r", "M", "p_A", "p_J"):
        try:
            values[key] = float(raw[key])
        except (KeyError, TypeError, ValueError):
            values[key] = float("nan")
            report.add(f"{key} present", False, f"missing or non-numeric {key}")

    s, r, M, p_A, p_J = (values[k] for k in ("s", "r", "M", "p_A", "p_J"))
    failures = _param_failures(s, r, M, p_A, p_J)

    report.add("s in [0,1)", "s out of [0,1)" not in failures,
               f"s = {s:.6g}")
    report.add("r > 1", "r must be > 1" not in failures, f"r = {r:.6g}")
    report.add("M > 0", "M must be > 0" not in failures, f"M = {M:.6g}")
    report.add("p_A in [0,1]", "p_A out of [0,1]" not in failures,
               f"p_A = {p_A:.6g}")
    report.add("p_J in [0,1]", "p_J out of [0,1]" not in failures,
               f"p_J = {p_J:.6g}")

    k = 1.0 - s
    report.metrics["k"] = k
    p_contr = s * (1.0 - p_A) + (1.0 - p_J) * k * r
    report.metrics["p_contr"] = p_contr
    contraction_ok = bool(np.isfinite(p_contr) and p_contr < 1.0)
    report.metrics["contraction_ok"] = float(contraction_ok)
    report.add(
        "contraction",
        contraction_ok,
        f"s*(1-p_A) + (1-p_J)*k*r = {p_contr:.6g} (must be < 1)",
    )
    return report


# ---------------------------------------------------------------------------
# fecundity
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BevertonHolt:
    """Saturating recruitment F(u) = k*r*M*u / (M + (r-1)*u).

    Monotone increasing, bounded by k*r*M/(r-1), with F(0) = 0,
    F(M) = k*M and low-density slope F'(0) = k*r.
    """

    k: float
    r: float
    M: float

    @classmethod
    def from_params(cls, params: ModelParams) -> "BevertonHolt":
        return cls(k=params.k, r=params.r, M=params.M)

    def __call__(self, u):
        arr = np.asarray(u, dtype=float)
        if np.any(arr < 0.0):
            raise DomainError("density must be nonnegative")
        out = self.k * self.r * self.M * arr / (self.M + (self.r - 1.0) * arr)
        return out if arr.ndim else float(out)

    def derivative(self, u):
        arr = np.asarray(u, dtype=float)
        out = self.k * self.r * self.M**2 / (self.M + (self.r - 1.0) * arr) ** 2
        return out if arr.ndim else float(out)


def beverton_holt(u, params: ModelParams):
    """Beverton-Holt recruitment evaluated with the given parameters."""
    return BevertonHolt.from_params(params)(u)


@dataclass(frozen=True)
class TabulatedFecundity:
    """Recruitment given by samples on [0, M], interpolated linearly.

    Piecewise-linear interpolation preserves monotonicity of the samples
    exactly.  Queries beyond the sampled range clamp to the end values.
    ``k``, ``r`` and ``M`` are the constants the curve is supposed to
    satisfy; conformance is checked by :func:`validate_fecundity`, not at
    construction.
    """

    u_samples: tuple
    f_samples: tuple
    k: float
    r: float
    M: float

    @classmethod
    def from_samples(cls, u, f, params: ModelParams) -> "TabulatedFecundity":
        u = np.asarray(u, dtype=float)
        f = np.asarray(f, dtype=float)
        if u.ndim != 1 or u.shape != f.shape or u.size < 2:
            raise ValueError("need matching 1-D sample arrays with >= 2 points")
        if not np.all(np.diff(u) > 0):
            raise ValueError("sample abscissae must be strictly increasing")
        if not (np.isfinite(u).all() and np.isfinite(f).all()):
            raise ValueError("samples must be finite")
        if abs(u[0]) > 1e-12 * params.M or abs(u[-1] - params.M) > 1e-12 * params.M:
            raise ValueError("samples must span [0, M]")
        return cls(tuple(u), tuple(f), k=params.k, r=params.r, M=params.M)

    def __call__(self, u):
        arr = np.asarray(u, dtype=float)
        if np.any(arr < 0.0):
            raise DomainError("density must be nonnegative")
        out = np.interp(arr, self.u_samples, self.f_samples)
        return out if arr.ndim else float(out)

    def segment_slopes(self) -> np.ndarray:
        us = np.asarray(self.u_samples)
        fs = np.asarray(self.f_samples)
        return np.diff(fs) / np.diff(us)


def _fd_derivative(F: Callable, u: float, h: float, hi: float) -> float:
    """Second-order finite-difference derivative on [0, hi]."""
    if u - h < 0.0:
        return (-3.0 * F(u) + 4.0 * F(u + h) - F(u + 2.0 * h)) / (2.0 * h)
    if u + h > hi:
        return (3.0 * F(u) - 4.0 * F(u - h) + F(u - 2.0 * h)) / (2.0 * h)
    return (F(u + h) - F(u - h)) / (2.0 * h)


def validate_fecundity(fecundity, params: ModelParams,
                       n_check: int = 201) -> ValidationReport:
    """Check the recruitment-curve conditions at equispaced points of [0, M].

    The conditions, for the constants k = 1 - s, r and M:

      * endpoints: F(0) = 0 and F(M) = k*M
      * strict low bound: F(u) > k*u on (0, M)
      * monotone: F nondecreasing, with low-density slope F'(0) = k*r
      * upper bound: F(u) <= k*r*u on [0, M]
      * concavity: F' non-increasing on [0, M]
      * smoothness surrogate: finite-difference derivatives at steps h and
        h/2 agree to relative tolerance 1e-6 (tabulated input cannot
        certify true smoothness; this is the best checkable stand-in)

    Derivatives are estimated with second-order finite differences at step
    1e-5*M.  Report-style: never raises for a failing curve.
    """
    if n_check < 2:
        raise ValueError("n_check must be >= 2")

    k, r, M = params.k, params.r, params.M
    kM = k * M
    krM = k * r * M
    report = ValidationReport()

    us = np.linspace(0.0, M, n_check)
    fs = np.asarray(fecundity(us), dtype=float)
    h = _FD_STEP_FRAC * M
    d_h = np.array([_fd_derivative(fecundity, u, h, M) for u in us])
    d_h2 = np.array([_fd_derivative(fecundity, u, h / 2.0, M) for u in us])

    report.metrics["F0"] = float(fs[0])
    report.metrics["FM"] = float(fs[-1])
    report.metrics["dF0"] = float(d_h[0])

    report.add("H2: F(0) = 0", abs(fs[0]) <= 1e-9 * kM,
               f"F(0) = {fs[0]:.6g}")
    report.add("H2: F(M) = k*M", abs(fs[-1] - kM) <= 1e-9 * kM,
               f"F(M) = {fs[-1]:.6g}, k*M = {kM:.6g}")

    interior = slice(1, n_check - 1)
    margin = fs[interior] - k * us[interior]
    worst = int(np.argmin(margin))
    report.add(
        "H3: F(u) > k*u on (0,M)",
        bool(np.all(margin > 1e-12 * kM)),
        f"worst margin {margin[worst]:.6g} at u = {us[interior][worst]:.6g}",
    )

    steps = np.diff(fs)
    report.add("H4: F nondecreasing", bool(np.all(steps >= -1e-9 * kM)),
               f"min step {steps.min():.6g}")
    kr = k * r
    report.add(
        "H4: F'(0) = k*r",
        abs(d_h[0] - kr) <= _DERIV_RTOL * kr,
        f"F'(0) = {d_h[0]:.8g}, k*r = {kr:.8g}",
    )

    excess = fs - kr * us
    report.add("H5: F(u) <= k*r*u", bool(np.all(excess <= 1e-9 * krM)),
               f"max excess {excess.max():.6g}")

    dsteps = np.diff(d_h)
    report.add("H6: F' non-increasing", bool(np.all(dsteps <= 1e-9 * kr)),
               f"max F' increase {dsteps.max():.6g}")

    mismatch = np.abs(d_h - d_h2) - _DERIV_RTOL * np.abs(d_h)
    report.add(
        "H1: smooth at finite-difference resolution",
        bool(np.all(mismatch <= _DERIV_RTOL * kr)),
        f"max derivative mismatch {np.abs(d_h - d_h2).max():.3e}",
    )
    return report


def growth_lipschitz_bound(params: ModelParams, fecundity=None) -> float:
    """Sup over [0, M] of g'(x) for g(x) = s*(1-p_A)*x + (1-p_J)*F(x).

    For Beverton-Holt recruitment the sup is attained at x = 0 and equals
    s*(1-p_A) + (1-p_J)*k*r in closed form.  For tabulated curves the
    segment slopes are exact; for other callables a fine secant scan is
    used.
    """
    base = params.s * (1.0 - params.p_A)
    if fecundity is None or isinstance(fecundity, BevertonHolt):
        return params.contraction_constant
    if isinstance(fecundity, TabulatedFecundity):
        slope = float(np.max(fecundity.segment_slopes()))
        return base + (1.0 - params.p_J) * slope
    us = np.linspace(0.0, params.M, 4097)
    fs = np.asarray(fecundity(us), dtype=float)
    slope = float(np.max(np.diff(fs) / np.diff(us)))
    return base + (1.0 - params.p_J) * slope
