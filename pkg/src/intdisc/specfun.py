"""Special-function kernel: Gamma, digamma, Pochhammer, the Gauss
hypergeometric function over all real-argument regimes, and the
two-variable quintic series with its 2-D integral representation.

Evaluation strategy for 2F1 is a pure function of the argument region:

 * |t| < 1/2          direct series;
 * 1/2 <= t < 1       connection at t = 1 (logarithmic variant when
                      c - a - b = 0, which covers every parameter set the
                      closed forms use);
 * -1 <= t < 0        Pfaff map t -> t/(t-1) into [0, 1/2) plus series;
 * t < -1             connection at infinity (needs b - a non-integer);
 * t = 1              the convergent Gauss value when c - a - b > 0, else
                      +inf (the log coefficient is available separately);
 * t > 1              real part of the principal value via the
                      connection at infinity.

Every routed value is deterministic; identical inputs give identical
floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ._quad import adaptive_1d, adaptive_2d
from .errors import DomainError, InputError

_SERIES_EPS = 1e-16
_MAX_TERMS = 4000
_INT_TOL = 1e-9


def gamma_fn(x: float) -> float:
    """Gamma function (double precision)."""
    x = float(x)
    if x <= 0 and x == int(x):
        raise DomainError(f"gamma pole at {x}")
    return math.gamma(x)


def pochhammer(a: float, k: int) -> float:
    """Rising factorial (a)_k for integer k >= 0."""
    if not isinstance(k, int) or k < 0:
        raise InputError("pochhammer index must be a non-negative integer")
    out = 1.0
    a = float(a)
    for i in range(k):
        out *= a + i
    return out


def digamma(x: float) -> float:
    """Digamma for x > 0, by upward recurrence into the asymptotic range."""
    if x <= 0:
        raise DomainError(f"digamma implemented for positive arguments, got {x}")
    acc = 0.0
    while x < 12.0:
        acc -= 1.0 / x
        x += 1.0
    inv = 1.0 / x
    inv2 = inv * inv
    # asymptotic series; error < 1e-16 for x >= 12
    tail = inv2 * (1.0 / 12 - inv2 * (1.0 / 120 - inv2 * (1.0 / 252 - inv2 * (1.0 / 240 - inv2 / 132 * 1.0))))
    return acc + math.log(x) - 0.5 * inv - tail


@dataclass(frozen=True)
class Hyp2F1Params:
    a: float
    b: float
    c: float
    t: float

    def value(self) -> float:
        return gauss_2f1(self.a, self.b, self.c, self.t)


def _near_int(x: float, tol: float = 1e-9):
    m = round(x)
    return m if abs(x - m) < tol else None


def _series_2f1(a, b, c, t) -> float:
    total = term = 1.0
    for k in range(_MAX_TERMS):
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * t
        total += term
        if abs(term) < _SERIES_EPS * (abs(total) + 1.0):
            return total
    raise DomainError(f"hypergeometric series did not converge at t={t}")


def _log_case_near_one(a, b, c, t) -> float:
    """c = a + b: the logarithmic expansion around t = 1 (0 < 1-t < 1)."""
    w = 1.0 - t
    L = math.log(w)
    pre = gamma_fn(a + b) / (gamma_fn(a) * gamma_fn(b))
    coef = 1.0
    psi_k, psi_a, psi_b = digamma(1.0), digamma(a), digamma(b)
    total = 0.0
    for k in range(_MAX_TERMS):
        bracket = 2.0 * psi_k - psi_a - psi_b - L
        term = coef * bracket
        total += term
        if k > 2 and abs(term) < _SERIES_EPS * (abs(total) + 1.0):
            return pre * total
        coef *= (a + k) * (b + k) * w / ((k + 1.0) ** 2)
        psi_k += 1.0 / (k + 1.0)
        psi_a += 1.0 / (a + k)
        psi_b += 1.0 / (b + k)
    raise DomainError("logarithmic expansion did not converge")


def _connection_at_one(a, b, c, t) -> float:
    w = 1.0 - t
    m = _near_int(c - a - b)
    if m is not None:
        if m == 0:
            return _log_case_near_one(a, b, c, t)
        raise InputError(
            f"integer c-a-b = {m} connection case not implemented (degenerate)"
        )
    f1 = gamma_fn(c) * gamma_fn(c - a - b) / (gamma_fn(c - a) * gamma_fn(c - b))
    f2 = gamma_fn(c) * gamma_fn(a + b - c) / (gamma_fn(a) * gamma_fn(b))
    return (
        f1 * _series_2f1(a, b, a + b - c + 1.0, w)
        + f2 * w ** (c - a - b) * _series_2f1(c - a, c - b, c - a - b + 1.0, w)
    )


def _connection_at_infinity(a, b, c, t, real_part: bool) -> float:
    if _near_int(b - a) is not None:
        raise InputError(
            f"integer b-a = {round(b - a)}: the connection at infinity degenerates"
        )
    inv = 1.0 / t
    fa = gamma_fn(c) * gamma_fn(b - a) / (gamma_fn(b) * gamma_fn(c - a))
    fb = gamma_fn(c) * gamma_fn(a - b) / (gamma_fn(a) * gamma_fn(c - b))
    ga = gauss_2f1(a, 1.0 - c + a, 1.0 - b + a, inv)
    gb = gauss_2f1(b, 1.0 - c + b, 1.0 - a + b, inv)
    mag = abs(t)
    if not real_part:  # t < -1, everything real
        return fa * mag ** (-a) * ga + fb * mag ** (-b) * gb
    # t > 1: cos(pi x) factors are the real part of (-t)^(-x)
    return (
        math.cos(math.pi * a) * fa * mag ** (-a) * ga
        + math.cos(math.pi * b) * fb * mag ** (-b) * gb
    )


def gauss_2f1(a: float, b: float, c: float, t: float) -> float:
    """Gauss hypergeometric function for real argument.

    For t >= 1 the function has a branch point: at t = 1 the value is the
    convergent Gauss sum when c - a - b > 0 and +inf otherwise; for t > 1
    the real part of the principal value is returned.
    """
    a, b, c, t = float(a), float(b), float(c), float(t)
    mc = _near_int(c)
    if mc is not None and mc <= 0:
        raise DomainError(f"2F1 parameter pole: c = {c}")
    if t == 0.0:
        return 1.0
    if abs(t) < 0.5:
        return _series_2f1(a, b, c, t)
    if 0.5 <= t < 1.0:
        return _connection_at_one(a, b, c, t)
    if t == 1.0:
        if c - a - b > 0:
            return gamma_fn(c) * gamma_fn(c - a - b) / (gamma_fn(c - a) * gamma_fn(c - b))
        return math.inf
    if -1.0 <= t < 0.0:
        # Pfaff: argument maps into [0, 1/2]
        return (1.0 - t) ** (-a) * gauss_2f1(a, c - b, c, t / (t - 1.0))
    if t < -1.0:
        if _near_int(b - a) is None:
            return _connection_at_infinity(a, b, c, t, real_part=False)
        # degenerate connection: the Pfaff map into [1/2, 1) stays exact
        return (1.0 - t) ** (-a) * gauss_2f1(a, c - b, c, t / (t - 1.0))
    return _connection_at_infinity(a, b, c, t, real_part=True)


def gauss_2f1_dt(a, b, c, t, order: int = 1) -> float:
    """Derivative of 2F1 in its argument via the contiguous shift."""
    pre = 1.0
    for k in range(order):
        pre *= (a + k) * (b + k) / (c + k)
    return pre * gauss_2f1(a + order, b + order, c + order, t)


def log_coefficient_near_one(a, b, c) -> float:
    """Coefficient of log(1-t) in 2F1 as t -> 1- (c = a + b case)."""
    if _near_int(c - a - b) != 0:
        raise InputError("the log coefficient applies to the c = a + b case")
    return -gamma_fn(c) / (gamma_fn(a) * gamma_fn(b))


def hyp2f1_integral(a: float, b: float, c: float, t: float, tol: float = _INT_TOL) -> float:
    """Independent 2F1 evaluation via the Euler integral representation.

    Requires b > 0 and c - b > 0 after the a <-> b symmetry, and t < 1.
    Endpoint singularities are removed by power substitutions.
    """
    a, b, c, t = float(a), float(b), float(c), float(t)
    if t >= 1.0:
        raise DomainError("integral representation needs t < 1")
    if not (b > 0 and c - b > 0):
        a, b = b, a
    if not (b > 0 and c - b > 0):
        raise DomainError("integral representation needs b > 0 and c - b > 0")
    d = c - b
    p = max(12, math.ceil(1.0 / b))
    q = max(12, math.ceil(1.0 / d))

    def left(sig):  # s = sig**p on [0, 1/2]
        s = sig ** p
        return p * sig ** (p * b - 1.0) * (1.0 - s) ** (d - 1.0) * (1.0 - s * t) ** (-a)

    def right(tau):  # 1 - s = tau**q on [1/2, 1]
        s = 1.0 - tau ** q
        return q * tau ** (q * d - 1.0) * s ** (b - 1.0) * (1.0 - s * t) ** (-a)

    v1, _, _ = adaptive_1d(left, 0.0, 0.5 ** (1.0 / p), tol / 2)
    v2, _, _ = adaptive_1d(right, 0.0, 0.5 ** (1.0 / q), tol / 2)
    return gamma_fn(c) / (gamma_fn(b) * gamma_fn(d)) * (v1 + v2)


# -- the two-variable quintic kernel ------------------------------------------------


@dataclass(frozen=True)
class G25Point:
    u: float
    v: float


def _g25_log_coeff(i: int, j: int) -> float:
    return (
        math.lgamma(0.3 + i + j)
        + math.lgamma(0.1 + 2 * i + 3 * j)
        + math.lgamma(0.1 + j)
        - math.lgamma(0.4 + i + 2 * j)
        - math.lgamma(0.6 + i + 2 * j)
        - math.lgamma(i + 1.0)
        - math.lgamma(j + 1.0)
    )


def series_g25_all(u: float, v: float, tol: float = 1e-12, max_diag: int = 400) -> dict:
    """Two-variable series and its partials up to second order.

    Summation runs over diagonals i + j = k in a fixed order.  Term growth
    over three consecutive diagonals raises DomainError (divergent region;
    use integral_g25).  The returned dict binds G, Gu, Gv, Guu, Guv, Gvv.
    """
    u, v = float(u), float(v)
    X, Y = 16.0 * u, 128.0 * v / 3.0
    acc = {k: 0.0 for k in ("G", "Gu", "Gv", "Guu", "Guv", "Gvv")}
    prev_max = None
    grow_streak = 0
    for k in range(max_diag):
        diag_max = 0.0
        for i in range(k + 1):
            j = k - i
            base = math.exp(_g25_log_coeff(i, j))
            # coefficient of u^i v^j
            cf = base * 16.0 ** i * (128.0 / 3.0) ** j
            ui = u ** i if i else 1.0
            vj = v ** j if j else 1.0
            term = cf * ui * vj
            diag_max = max(diag_max, abs(term))
            acc["G"] += term
            if i >= 1:
                acc["Gu"] += cf * i * u ** (i - 1) * vj
            if j >= 1:
                acc["Gv"] += cf * ui * j * v ** (j - 1)
            if i >= 2:
                acc["Guu"] += cf * i * (i - 1) * u ** (i - 2) * vj
            if i >= 1 and j >= 1:
                acc["Guv"] += cf * i * u ** (i - 1) * j * v ** (j - 1)
            if j >= 2:
                acc["Gvv"] += cf * ui * j * (j - 1) * v ** (j - 2)
        if prev_max is not None and diag_max > prev_max and k >= 8:
            grow_streak += 1
            if grow_streak >= 3:
                raise DomainError(
                    "two-variable series diverges at "
                    f"(u={u}, v={v}); evaluate via integral_g25"
                )
        else:
            grow_streak = 0
        if k >= 4 and diag_max < tol * (abs(acc["G"]) + 1.0) and (
            prev_max is None or prev_max < tol * (abs(acc["G"]) + 1.0)
        ):
            return acc
        prev_max = diag_max
    raise DomainError("two-variable series did not converge within the diagonal budget")


def series_g25(point: G25Point | None = None, tol: float = 1e-12,
               u: float | None = None, v: float | None = None) -> float:
    """The two-variable kernel G(u, v) by direct summation."""
    if point is not None:
        u, v = point.u, point.v
    return series_g25_all(u, v, tol)["G"]


# Fixed by matching the u = v = 0 value of the series against the raw double
# integral (both reduce to Beta-function products there).
_G25_INTEGRAL_NORM = math.sqrt(3.0 / math.pi)


def g25_kernel(u: float, v: float, s: float, t: float) -> float:
    return 3.0 - 3.0 * s + 48.0 * u * t * s * s + 128.0 * v * s ** 3 * t \
        - 128.0 * v * s ** 3 * t * t


def check_g25_kernel_positive(u: float, v: float, grid: int = 41) -> float:
    """Minimum of the kernel over a sample of the open unit square.

    The kernel is quadratic in t and cubic in s, so a moderately fine grid
    is a reliable positivity screen; the boundary s = 1 is excluded because
    its zero at u = v = 0 is the integrable endpoint of the representation,
    not a domain violation.
    """
    lo = math.inf
    for i in range(1, 2 * grid):
        s = i / (2.0 * grid)
        for j in range(1, 2 * grid):
            t = j / (2.0 * grid)
            lo = min(lo, g25_kernel(u, v, s, t))
    return lo


def integral_g25(u: float, v: float, tol: float = 1e-8):
    """G(u, v) via 2-D quadrature of the integral representation.

    Normalized to agree with series_g25 (constant _G25_INTEGRAL_NORM).
    Endpoint singularities are removed by the substitutions t = tau^10,
    1 - t = tau^10, s = sig^10, 1 - s = sig^2 on the four quadrants.
    """
    u, v = float(u), float(v)
    kmin = check_g25_kernel_positive(u, v)
    if kmin <= 0:
        raise DomainError(
            f"integral kernel is not positive (min {kmin:.3e}); the point lies "
            "at or beyond the singular locus (64 I8 = I4^2, i.e. u = 1/64)"
        )

    half_t = 0.5 ** 0.1
    half_s10 = 0.5 ** 0.1
    half_s2 = 0.5 ** 0.5

    def make_integrand(t_side: str, s_side: str):
        def f(x, y):
            if t_side == "left":      # t = x**10 on [0, 1/2]
                t = x ** 10
                wt = 10.0 * x * x * (1.0 - t) ** (-0.9)
            else:                     # 1 - t = x**10 on [1/2, 1]
                t = 1.0 - x ** 10
                wt = 10.0 * t ** (-0.7)
            if s_side == "left":      # s = y**10 on [0, 1/2]
                s = y ** 10
                ws = 10.0
            else:                     # 1 - s = y**2 on [1/2, 1]
                s = 1.0 - y * y
                ws = 2.0 * y * s ** (-0.9)
            return wt * ws / math.sqrt(g25_kernel(u, v, s, t))
        return f

    total = 0.0
    for t_side in ("left", "right"):
        for s_side, ymax in (("left", half_s10), ("right", half_s2)):
            val, _, _ = adaptive_2d(
                make_integrand(t_side, s_side), ((0.0, half_t), (0.0, ymax)), tol / 4
            )
            total += val
    return _G25_INTEGRAL_NORM * total
