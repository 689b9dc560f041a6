"""Analytic evaluations of the regulator pairing of two circle symbols.

Two independent routes are provided for a pair of nowhere-vanishing
symbols ``p, q`` on the circle:

* :func:`regulator_fourier` evaluates the closed form in the Fourier
  coefficients of the periodic logarithms ``alpha``, ``beta`` (with
  ``p = z^m e^alpha`` and ``q = z^n e^beta``);
* :func:`regulator_integral` evaluates the monodromy integral
  ``exp{(1/2 pi i)(int log p dlog q - log q(1) int dlog p)}`` by quadrature.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Dict, NamedTuple

import numpy as np

from .circle import (
    DEFAULT_GRID,
    VANISH_TOL,
    CircleFunction,
    LogDecomposition,
    continuous_log,
    modes,
    periodic_integral,
    sawtooth_integral,
    spectral_derivative,
    z_power,
)
from .errors import GridMismatch, RootOnContour
from .loops import Loop, compose
from .rational import RationalFunction

METHODS = ("closed_form", "contour_integral", "operator_determinant")


@dataclass(frozen=True)
class RegulatorValue:
    value: complex
    method: str
    diagnostics: Dict[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        v = complex(self.value)
        if not (math.isfinite(v.real) and math.isfinite(v.imag)):
            raise ArithmeticError(f"{self.method} produced a non-finite value {v}")
        if v == 0:
            raise ArithmeticError(f"{self.method} produced zero, which is not in C^*")
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")
        object.__setattr__(self, "value", v)

    def __complex__(self):
        return self.value


class SymbolDecomposition(NamedTuple):
    m: int
    n: int
    alpha: LogDecomposition
    beta: LogDecomposition


def check_symbol_pair(p: CircleFunction, q: CircleFunction, vanish_tol: float = VANISH_TOL) -> None:
    if p.G != q.G:
        raise GridMismatch(f"symbols live on different grids ({p.G} vs {q.G})")
    for s in (p, q):
        s.check_resolved()
        s.check_nonvanishing(vanish_tol)


def decompose_symbol(p: CircleFunction, q: CircleFunction,
                     alpha_branch: int = 0, beta_branch: int = 0) -> SymbolDecomposition:
    """Winding numbers and periodic logarithms of both entries of ``{p, q}``."""
    check_symbol_pair(p, q)
    a = continuous_log(p, alpha_branch)
    b = continuous_log(q, beta_branch)
    return SymbolDecomposition(a.m, b.m, a, b)


def helton_howe_exponent(alpha: CircleFunction, beta: CircleFunction) -> complex:
    """``sum_k k alpha_hat(-k) beta_hat(k)`` over the band ``|k| < G/2``."""
    if alpha.G != beta.G:
        raise GridMismatch("alpha and beta live on different grids")
    k = modes(alpha.G)
    keep = np.abs(k) < alpha.G // 2
    a_neg = alpha.coeffs[(-k) % alpha.G]
    return complex(np.sum((k * a_neg * beta.coeffs)[keep]))


def _tail_bound(alpha: CircleFunction, beta: CircleFunction) -> float:
    kmax = alpha.G // 2 - 1
    return float(kmax * (abs(alpha.coeff(kmax) * beta.coeff(-kmax))
                         + abs(alpha.coeff(-kmax) * beta.coeff(kmax))))


def regulator_fourier(p: CircleFunction, q: CircleFunction,
                      alpha_branch: int = 0, beta_branch: int = 0) -> RegulatorValue:
    """Closed-form value ``(-1)^{mn} exp(n a0 - m b0 + sum_k k a(-k) b(k))``."""
    m, n, a, b = decompose_symbol(p, q, alpha_branch, beta_branch)
    series = helton_howe_exponent(a.alpha, b.alpha)
    exponent = n * a.alpha0 - m * b.alpha0 + series
    value = (-1) ** (m * n) * np.exp(exponent)
    return RegulatorValue(
        complex(value),
        "closed_form",
        {"grid": p.G, "m": m, "n": n, "series": series,
         "tail_bound": _tail_bound(a.alpha, b.alpha)},
    )


def regulator_integral(p: CircleFunction, q: CircleFunction,
                       p_branch: int = 0, q_branch: int = 0) -> RegulatorValue:
    """Monodromy integral along the circle, starting at ``theta = 0``.

    ``log p`` is continued along the path as ``i m theta + alpha(theta)``;
    the ``i m theta`` part is integrated against ``dlog q`` exactly mode by
    mode, the periodic part by the trapezoid rule.  ``log q(1)`` is the value
    of the continuous logarithm of ``q`` at ``theta = 0``.
    """
    check_symbol_pair(p, q)
    lp = continuous_log(p, p_branch)
    lq = continuous_log(q, q_branch)
    dlog_q = spectral_derivative(q) / q
    dlog_p = spectral_derivative(p) / p
    path = periodic_integral(lp.alpha * dlog_q) + 1j * lp.m * sawtooth_integral(dlog_q)
    turns = periodic_integral(dlog_p)
    log_q0 = complex(lq.alpha.samples[0])
    exponent = (path - log_q0 * turns) / (2j * np.pi)
    return RegulatorValue(
        complex(np.exp(exponent)),
        "contour_integral",
        {"grid": p.G, "m": lp.m, "n": lq.m, "turns": turns / (2j * np.pi)},
    )


def beilinson_pairing(f: RationalFunction, g: RationalFunction, gamma: Loop,
                      G: int = DEFAULT_GRID) -> RegulatorValue:
    """Pairing of ``{f, g}`` with the loop ``gamma``, based at ``gamma(0)``."""
    p = compose(f, gamma, G)
    q = compose(g, gamma, G)
    r = regulator_integral(p, q)
    return RegulatorValue(r.value, r.method, {**r.diagnostics, "basepoint": gamma.basepoint})


def real_regulator(f: RationalFunction, g: RationalFunction, gamma: Loop,
                   G: int = DEFAULT_GRID) -> float:
    """``(1/2pi) int_gamma log|f| d(arg g) - log|g| d(arg f)``."""
    p = compose(f, gamma, G)
    q = compose(g, gamma, G)
    check_symbol_pair(p, q)
    darg_p = CircleFunction((spectral_derivative(p) / p).samples.imag)
    darg_q = CircleFunction((spectral_derivative(q) / q).samples.imag)
    log_abs_p = CircleFunction(np.log(np.abs(p.samples)))
    log_abs_q = CircleFunction(np.log(np.abs(q.samples)))
    total = periodic_integral(log_abs_p * darg_q) - periodic_integral(log_abs_q * darg_p)
    return float(total.real / (2 * np.pi))


def mahler_measure(poly: RationalFunction, G: int = DEFAULT_GRID,
                   vanish_tol: float = VANISH_TOL, consistency_tol: float = 1e-8) -> float:
    """Mahler measure ``(1/2pi) int log|P(e^{i theta})| d theta`` of a polynomial.

    As a guard the result is compared with ``log|R{P, z}|`` from the closed
    form; a disagreement beyond ``consistency_tol`` raises ``ArithmeticError``.
    """
    if not poly.is_polynomial:
        raise ValueError("Mahler measure is defined here for polynomials only")
    num = poly.num
    if num.size > 1:
        roots = np.roots(num[::-1])
        close = roots[np.abs(np.abs(roots) - 1.0) <= vanish_tol]
        if close.size:
            raise RootOnContour(f"root(s) on |z| = 1: {close}")
    p = compose(poly, Loop.circle(0j, 1.0), G)
    if p.min_abs() <= vanish_tol:
        raise RootOnContour(f"|P| drops to {p.min_abs():.3e} on the unit circle")
    measure = float(np.mean(np.log(np.abs(p.samples))))
    reg = regulator_fourier(p, z_power(1, G))
    if abs(math.log(abs(reg.value)) - measure) > consistency_tol:
        raise ArithmeticError(
            f"Mahler measure {measure!r} disagrees with log|R{{P,z}}| = {math.log(abs(reg.value))!r}"
        )
    return measure
