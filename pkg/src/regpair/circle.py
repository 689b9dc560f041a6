"""Smooth functions on the circle held as uniform samples.

A :class:`CircleFunction` stores values at ``theta_j = 2*pi*j/G`` together
with its discrete Fourier coefficients.  Coefficients are kept in numpy's
FFT ordering, so mode ``k`` lives at index ``k % G``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping

import numpy as np

from .errors import AliasedArgument, GridMismatch, NearZeroSymbol, UnderResolved

DEFAULT_GRID = 4096
VANISH_TOL = 1e-9
RESOLVE_TOL = 1e-10


def grid(G: int) -> np.ndarray:
    """Uniform angles ``2*pi*j/G`` for ``j = 0..G-1``."""
    return 2 * np.pi * np.arange(G) / G


def modes(G: int) -> np.ndarray:
    """Integer Fourier modes in FFT ordering (``0, 1, ..., G/2-1, -G/2, ..., -1``)."""
    return np.fft.fftfreq(G, 1.0 / G).astype(np.int64)


def _check_grid_size(G: int) -> None:
    if G < 16 or G & (G - 1):
        raise ValueError(f"grid size must be a power of two >= 16, got {G}")


class CircleFunction:
    """Complex samples of a smooth function on the unit circle.

    Instances are immutable: the sample array is copied and marked
    read-only, and the Fourier coefficients are computed once at
    construction so that concurrent readers never race on a cache.
    """

    __slots__ = ("_samples", "_coeffs")

    def __init__(self, samples):
        arr = np.array(samples, dtype=complex).ravel()
        _check_grid_size(arr.size)
        if not np.all(np.isfinite(arr)):
            raise ValueError("samples must be finite")
        arr.setflags(write=False)
        coeffs = np.fft.fft(arr) / arr.size
        coeffs.setflags(write=False)
        self._samples = arr
        self._coeffs = coeffs

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_callable(cls, func: Callable[[np.ndarray], np.ndarray], G: int = DEFAULT_GRID):
        """Sample ``func(theta)`` on the uniform grid of size ``G``."""
        _check_grid_size(G)
        values = np.asarray(func(grid(G)), dtype=complex)
        return cls(np.broadcast_to(values, (G,)))

    @classmethod
    def from_modes(cls, coefficients: Mapping[int, complex], G: int = DEFAULT_GRID):
        """Build ``sum_k c_k e^{ik theta}`` from a ``{k: c_k}`` mapping."""
        _check_grid_size(G)
        c = np.zeros(G, dtype=complex)
        for k, value in coefficients.items():
            if not -G // 2 < k < G // 2:
                raise ValueError(f"mode {k} does not fit on a grid of size {G}")
            c[k % G] += value
        return cls(np.fft.ifft(c) * G)

    @classmethod
    def from_coefficients(cls, coeffs: np.ndarray):
        """Inverse of :func:`fourier_coefficients` (FFT-ordered input)."""
        coeffs = np.asarray(coeffs, dtype=complex)
        return cls(np.fft.ifft(coeffs) * coeffs.size)

    @classmethod
    def constant(cls, value: complex, G: int = DEFAULT_GRID):
        _check_grid_size(G)
        return cls(np.full(G, value, dtype=complex))

    # -- accessors ----------------------------------------------------------

    @property
    def samples(self) -> np.ndarray:
        return self._samples

    @property
    def coeffs(self) -> np.ndarray:
        return self._coeffs

    @property
    def G(self) -> int:
        return self._samples.size

    @property
    def theta(self) -> np.ndarray:
        return grid(self.G)

    def coeff(self, k: int) -> complex:
        """Fourier coefficient of mode ``k``; zero outside the grid's band."""
        if not -self.G // 2 <= k < self.G // 2:
            return 0j
        return complex(self._coeffs[k % self.G])

    @property
    def nyquist(self) -> float:
        return float(abs(self._coeffs[self.G // 2]))

    def is_resolved(self, tol: float = RESOLVE_TOL) -> bool:
        scale = max(1.0, float(np.max(np.abs(self._coeffs))))
        return self.nyquist <= tol * scale

    def check_resolved(self, tol: float = RESOLVE_TOL) -> "CircleFunction":
        if not self.is_resolved(tol):
            raise UnderResolved(
                f"Nyquist coefficient {self.nyquist:.3e} exceeds {tol:g}; "
                f"refine the grid (G={self.G})"
            )
        return self

    def min_abs(self) -> float:
        return float(np.min(np.abs(self._samples)))

    def check_nonvanishing(self, tol: float = VANISH_TOL) -> "CircleFunction":
        if self.min_abs() <= tol:
            raise NearZeroSymbol(f"min |f| = {self.min_abs():.3e} <= {tol:g}")
        return self

    # -- arithmetic ---------------------------------------------------------

    def _other(self, other):
        if isinstance(other, CircleFunction):
            if other.G != self.G:
                raise GridMismatch(f"grid sizes differ: {self.G} vs {other.G}")
            return other._samples
        if np.isscalar(other):
            return complex(other)
        return NotImplemented

    def _binary(self, other, op):
        rhs = self._other(other)
        if rhs is NotImplemented:
            return NotImplemented
        return CircleFunction(op(self._samples, rhs))

    def __add__(self, other):
        return self._binary(other, np.add)

    def __radd__(self, other):
        return self._binary(other, lambda a, b: b + a)

    def __sub__(self, other):
        return self._binary(other, np.subtract)

    def __rsub__(self, other):
        return self._binary(other, lambda a, b: b - a)

    def __mul__(self, other):
        return self._binary(other, np.multiply)

    def __rmul__(self, other):
        return self._binary(other, lambda a, b: b * a)

    def __truediv__(self, other):
        return self._binary(other, np.divide)

    def __rtruediv__(self, other):
        return self._binary(other, lambda a, b: b / a)

    def __neg__(self):
        return CircleFunction(-self._samples)

    def __pow__(self, n: int):
        return CircleFunction(self._samples ** n)

    def conj(self) -> "CircleFunction":
        return CircleFunction(np.conj(self._samples))

    def exp(self) -> "CircleFunction":
        return CircleFunction(np.exp(self._samples))

    def __repr__(self):
        return f"CircleFunction(G={self.G}, c0={self.coeff(0):.6g})"


def z_power(n: int, G: int = DEFAULT_GRID) -> CircleFunction:
    """The monomial ``z**n`` restricted to the circle, i.e. ``e^{in theta}``."""
    return CircleFunction(np.exp(1j * n * grid(G)))


@dataclass(frozen=True)
class LogDecomposition:
    """Winding number ``m`` and periodic logarithm ``alpha`` with ``e^alpha = p / z^m``."""

    m: int
    alpha: CircleFunction
    alpha0: complex

    def coeff(self, k: int) -> complex:
        return self.alpha.coeff(k)

    def log_values(self) -> np.ndarray:
        """Continuous logarithm ``i m theta + alpha(theta)`` of the original symbol."""
        return 1j * self.m * self.alpha.theta + self.alpha.samples


def fourier_coefficients(f: CircleFunction) -> np.ndarray:
    """Discrete Fourier coefficients ``(1/G) sum_j f(theta_j) e^{-ik theta_j}``.

    The returned array is FFT-ordered; use :func:`modes` for the matching
    integer mode of each entry.
    """
    return f.coeffs


def _argument_increments(values: np.ndarray) -> np.ndarray:
    # principal-branch increments from sample j to sample j+1 (cyclically)
    inc = np.angle(np.roll(values, -1) / values)
    worst = float(np.max(np.abs(inc)))
    if worst >= np.pi / 2:
        raise AliasedArgument(
            f"argument jumps by {worst:.3f} rad between consecutive samples; refine the grid"
        )
    return inc


def winding_number(p: CircleFunction, vanish_tol: float = VANISH_TOL) -> int:
    """Degree of ``p`` as a map ``S^1 -> C^*``, from summed argument increments."""
    p.check_nonvanishing(vanish_tol)
    total = float(np.sum(_argument_increments(p.samples))) / (2 * np.pi)
    return int(round(total))


def continuous_log(p: CircleFunction, branch: int = 0, vanish_tol: float = VANISH_TOL) -> LogDecomposition:
    """Split ``p = z^m e^alpha`` with ``alpha`` periodic.

    ``alpha(0)`` is taken on the principal branch of ``log p(1)``, shifted by
    ``2*pi*i*branch``.  Only quantities of the form ``exp(n * alpha_hat(0))``
    are meant to be independent of that choice.
    """
    m = winding_number(p, vanish_tol)
    r = p.samples * np.exp(-1j * m * p.theta)
    inc = _argument_increments(r)
    arg = np.angle(r[0]) + np.concatenate(([0.0], np.cumsum(inc[:-1])))
    closure = arg[-1] + inc[-1] - arg[0]
    if abs(closure) > 1e-6:
        raise AliasedArgument(f"logarithm fails to close up by {closure:.3e}")
    alpha = CircleFunction(np.log(np.abs(r)) + 1j * (arg + 2 * np.pi * branch))
    return LogDecomposition(m=m, alpha=alpha, alpha0=alpha.coeff(0))


def spectral_derivative(f: CircleFunction) -> CircleFunction:
    """Derivative in ``theta`` by multiplying mode ``k`` by ``ik``."""
    k = modes(f.G).astype(float)
    k[f.G // 2] = 0.0  # the Nyquist mode has no unambiguous derivative
    return CircleFunction.from_coefficients(1j * k * f.coeffs)


def periodic_integral(f: CircleFunction) -> complex:
    """Trapezoid rule for ``int_0^{2pi} f(theta) dtheta``."""
    return complex(2 * np.pi * np.mean(f.samples))


def sawtooth_integral(f: CircleFunction) -> complex:
    """``int_0^{2pi} theta f(theta) dtheta`` for periodic ``f``.

    The weight ``theta`` is not periodic, so the trapezoid rule would only
    be second order.  Integrating each mode exactly keeps spectral accuracy:
    ``int theta e^{ik theta} = 2 pi / (ik)`` for ``k != 0``.
    """
    k = modes(f.G)
    c = f.coeffs
    nz = k != 0
    return complex(2 * np.pi**2 * c[0] + np.sum(c[nz] * 2 * np.pi / (1j * k[nz])))
