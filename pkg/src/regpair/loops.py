"""Closed parametrized curves in the plane and composition with rational functions."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Mapping, Optional, Tuple

import numpy as np

from .circle import DEFAULT_GRID, VANISH_TOL, CircleFunction, grid
from .errors import DivisorCollision, NotDiffeomorphism
from .rational import RationalFunction, divisor


def _trig_eval(samples: np.ndarray, theta: np.ndarray, chunk: int = 256) -> np.ndarray:
    """Band-limited interpolation of uniform samples at arbitrary angles."""
    G = samples.size
    c = np.fft.fft(samples) / G
    k = np.fft.fftfreq(G, 1.0 / G)
    # split the Nyquist mode symmetrically so real samples stay real
    c_ext = np.concatenate([c, [c[G // 2] / 2]])
    c_ext[G // 2] /= 2
    k_ext = np.concatenate([k, [G // 2]])
    out = np.empty(theta.shape, dtype=complex)
    flat = theta.ravel()
    res = out.ravel()
    for s in range(0, flat.size, chunk):
        block = flat[s : s + chunk]
        res[s : s + chunk] = np.exp(1j * np.outer(block, k_ext)) @ c_ext
    return res.reshape(theta.shape)


@dataclass(frozen=True)
class Loop:
    """A smooth closed curve ``gamma: S^1 -> C`` with basepoint ``gamma(0)``.

    ``kind`` is ``"circle"``, ``"fourier"`` or ``"samples"``.  Circles are
    stored by center and radius, Fourier curves by a finite mode table, and
    sampled curves by their uniform samples (evaluated elsewhere by
    band-limited interpolation).
    """

    kind: str
    center: complex = 0j
    radius: float = 1.0
    modes: Tuple[Tuple[int, complex], ...] = ()
    values: Optional[np.ndarray] = field(default=None, compare=False, repr=False)

    @classmethod
    def circle(cls, center: complex = 0j, radius: float = 1.0) -> "Loop":
        if radius <= 0:
            raise ValueError("radius must be positive")
        return cls("circle", center=complex(center), radius=float(radius))

    @classmethod
    def fourier_curve(cls, coefficients: Mapping[int, complex]) -> "Loop":
        terms = tuple(sorted((int(k), complex(v)) for k, v in coefficients.items() if v != 0))
        return cls("fourier", modes=terms)

    @classmethod
    def sampled(cls, values) -> "Loop":
        arr = np.array(values, dtype=complex)
        arr.setflags(write=False)
        return cls("samples", values=arr)

    def fourier_modes(self) -> Dict[int, complex]:
        if self.kind == "circle":
            return {0: self.center, 1: complex(self.radius)}
        if self.kind == "fourier":
            return dict(self.modes)
        raise ValueError("sampled loops have no finite mode table")

    def evaluate(self, theta) -> np.ndarray:
        theta = np.asarray(theta, dtype=float)
        if self.kind == "circle":
            return self.center + self.radius * np.exp(1j * theta)
        if self.kind == "fourier":
            out = np.zeros(theta.shape, dtype=complex)
            for k, c in self.modes:
                out += c * np.exp(1j * k * theta)
            return out
        G = self.values.size
        if theta.shape == (G,) and np.allclose(theta, grid(G), rtol=0, atol=1e-15):
            return np.array(self.values)
        return _trig_eval(self.values, theta)

    def sample(self, G: int = DEFAULT_GRID) -> np.ndarray:
        return self.evaluate(grid(G))

    @property
    def basepoint(self) -> complex:
        return complex(self.evaluate(np.zeros(1))[0])

    def __call__(self, theta):
        return self.evaluate(theta)


@dataclass(frozen=True)
class Diffeomorphism:
    """``phi(theta) = theta + shift + sum_k (a_k cos k theta + b_k sin k theta)``."""

    shift: float = 0.0
    cos: Tuple[Tuple[int, float], ...] = ()
    sin: Tuple[Tuple[int, float], ...] = ()

    def __call__(self, theta):
        theta = np.asarray(theta, dtype=float)
        out = theta + self.shift
        for k, a in self.cos:
            out = out + a * np.cos(k * theta)
        for k, b in self.sin:
            out = out + b * np.sin(k * theta)
        return out

    def derivative(self, theta):
        theta = np.asarray(theta, dtype=float)
        out = np.ones_like(theta)
        for k, a in self.cos:
            out = out - k * a * np.sin(k * theta)
        for k, b in self.sin:
            out = out + k * b * np.cos(k * theta)
        return out


def compose(f: RationalFunction, gamma: Loop, G: int = DEFAULT_GRID,
            vanish_tol: float = VANISH_TOL) -> CircleFunction:
    """Samples of ``f(gamma(theta_j))`` as a resolved :class:`CircleFunction`."""
    points = gamma.sample(G)
    support = divisor(f).support
    if support:
        dist = np.min(np.abs(points[:, None] - np.asarray(support)[None, :]), axis=0)
        bad = [x for x, d in zip(support, dist) if d <= vanish_tol]
        if bad:
            raise DivisorCollision(bad, float(np.min(dist)))
    return CircleFunction(f(points)).check_resolved()


def deform(gamma: Loop, direction: Loop, t: float, G: int = DEFAULT_GRID) -> Loop:
    """Additive homotopy ``gamma_t = gamma + t * direction``."""
    if t == 0:
        return gamma
    if gamma.kind != "samples" and direction.kind != "samples":
        modes = gamma.fourier_modes()
        for k, c in direction.fourier_modes().items():
            modes[k] = modes.get(k, 0j) + t * c
        return Loop.fourier_curve(modes)
    sizes = [lp.values.size for lp in (gamma, direction) if lp.kind == "samples"]
    n = max(sizes + [G])
    return Loop.sampled(gamma.sample(n) + t * direction.sample(n))


def reparameterize(gamma: Loop, phi: Diffeomorphism, G: int = DEFAULT_GRID) -> Loop:
    """The loop ``theta -> gamma(phi(theta))``, sampled on a grid of size ``G``."""
    theta = grid(G)
    if np.any(phi.derivative(theta) <= 0):
        raise NotDiffeomorphism("phi' must be strictly positive on the grid")
    return Loop.sampled(gamma.evaluate(phi(theta)))
