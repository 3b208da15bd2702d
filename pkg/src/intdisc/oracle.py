"""Independent numerical verification of the closed forms.

Direct 2-D quadrature of exp(-S) for positive-definite binary quartics,
the alternative weight exp(-S^2), the one-dimensional slice representation
obtained by integrating out the overall scale, and least-squares fitting of
the real-plane contour constants against the closed-form branches.

Only the positive-definite quartic family admits a real-plane oracle; the
odd-degree and indefinite cases are covered by the Ward-residual and
operator-table evidence instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._quad import adaptive_1d, adaptive_2d
from .errors import DomainError, InputError
from .forms import SymmetricForm, is_positive_definite


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error: float
    cells: int


@dataclass(frozen=True)
class FitResult:
    c1: float
    c2: float
    rms_relative: float
    samples: int
    holdout_relative: float | None = None


def _require_posdef(f: SymmetricForm):
    if (f.shape.n, f.shape.r) != (2, 4):
        raise InputError("the real-plane oracle needs a binary quartic")
    if not is_positive_definite(f):
        raise DomainError("the real-plane integral needs a positive-definite quartic")


def _unit_circle_min(f: SymmetricForm, samples: int = 720) -> float:
    g = f.to_float()
    lo = math.inf
    for k in range(samples):
        th = math.pi * k / samples     # quartic: antipodal values coincide
        lo = min(lo, g.evaluate((math.cos(th), math.sin(th))))
    return lo * 0.98                   # sampling safety margin


def _box_half_width(f: SymmetricForm, tol: float) -> float:
    """Half-width L with tail bound pi*exp(-m L^4)/(2 m L^2) < tol/10."""
    m = _unit_circle_min(f)
    if m <= 0:
        raise DomainError("form is not positive on the unit circle")
    L = 2.0
    while math.pi * math.exp(-m * L ** 4) / (2 * m * L * L) > tol / 10.0:
        L *= 1.25
        if L > 60:
            raise DomainError("tail bound did not close; coefficients too small")
    return L


def integrate_exp_form(f: SymmetricForm, tol: float = 1e-8) -> QuadratureResult:
    """Plane integral of exp(-S) for a positive-definite quartic S."""
    return integrate_weight(f, "exp", tol)


def integrate_weight(f: SymmetricForm, weight: str = "exp", tol: float = 1e-8) -> QuadratureResult:
    """Plane integral of exp(-S) or exp(-S^2) over the tail-bounded box."""
    _require_posdef(f)
    g = f.to_float()
    if weight == "exp":
        fn = lambda x, y: math.exp(-g.evaluate((x, y)))
    elif weight == "exp2":
        fn = lambda x, y: math.exp(-g.evaluate((x, y)) ** 2)
    else:
        raise InputError(f"unknown weight {weight!r} (exp or exp2)")
    # exp(-S^2) decays faster than exp(-S) once S > 1, so the exp box works
    # for both weights
    L = _box_half_width(f, tol)
    value, err, cells = adaptive_2d(fn, ((-L, L), (-L, L)), tol)
    return QuadratureResult(value, err, cells)


def radial_oracle(f: SymmetricForm, tol: float = 1e-9) -> QuadratureResult:
    """The scale-integrated representation: integral of S(1,z)^(-1/2) dz.

    The tails decay like z^-2; substituting z -> 1/z maps them onto
    S(z,1)^(-1/2) on (-1,1), so the whole value is two smooth integrals.
    """
    _require_posdef(f)
    g = f.to_float()

    def inner(z):
        return g.evaluate((1.0, z)) ** -0.5

    def outer(w):  # z = 1/w with |z| >= 1: integrand becomes S(w,1)^(-1/2)
        return g.evaluate((w, 1.0)) ** -0.5

    v1, e1, c1 = adaptive_1d(inner, -1.0, 1.0, tol / 2)
    v2, e2, c2 = adaptive_1d(outer, -1.0, 1.0, tol / 2)
    return QuadratureResult(v1 + v2, e1 + e2, c1 + c2)


def fit_constants(samples, branch1, branch2) -> FitResult:
    """Least squares for oracle ~= c1*branch1 + c2*branch2.

    samples: list of (form, oracle_value).  With six or more samples the
    last third is held out and scored separately.
    """
    if len(samples) < 3:
        raise InputError("need at least 3 samples to fit two constants")
    forms = [s[0] for s in samples]
    ys = np.array([float(s[1]) for s in samples])
    A = np.array([[branch1(f), branch2(f)] for f in forms])
    if len(samples) >= 6:
        cut = len(samples) - len(samples) // 3
    else:
        cut = len(samples)
    sv = np.linalg.svd(A[:cut], compute_uv=False)
    if sv[-1] < 1e-10 * sv[0]:
        raise DomainError(
            "rank-deficient fit: the samples do not separate the branches "
            "(arguments too clustered)"
        )
    coef, *_ = np.linalg.lstsq(A[:cut], ys[:cut], rcond=None)
    pred = A @ coef
    rel = (pred - ys) / ys
    rms = float(np.sqrt(np.mean(rel[:cut] ** 2)))
    holdout = None
    if cut < len(samples):
        holdout = float(np.max(np.abs(rel[cut:])))
    return FitResult(float(coef[0]), float(coef[1]), rms, len(samples), holdout)
