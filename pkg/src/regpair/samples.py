"""Seeded generators for test symbols used by the self-test and the test suite."""

from __future__ import annotations

from typing import List, Tuple

import numpy as np

from .circle import DEFAULT_GRID, CircleFunction, grid


def random_bandlimited_symbol(rng: np.random.Generator, winding: int, G: int = DEFAULT_GRID,
                              bandwidth: int = 6, spread: float = 0.6) -> CircleFunction:
    """``c z^m (1 + sum_{0<|k|<=bw} c_k z^k)`` with ``sum |c_k| <= spread < 1``.

    The bracket stays inside a disc around 1 that misses the origin, so the
    winding number is exactly ``m`` and the symbol is nowhere vanishing.
    """
    ks = [k for k in range(-bandwidth, bandwidth + 1) if k != 0]
    c = rng.normal(size=len(ks)) + 1j * rng.normal(size=len(ks))
    c *= spread * rng.uniform(0.2, 1.0) / np.sum(np.abs(c))
    scale = np.exp(rng.normal(scale=0.5) + 1j * rng.uniform(-np.pi, np.pi))
    th = grid(G)
    bracket = 1 + sum(ck * np.exp(1j * k * th) for ck, k in zip(c, ks))
    return CircleFunction(scale * np.exp(1j * winding * th) * bracket)


def random_trig_polynomial(rng: np.random.Generator, G: int = DEFAULT_GRID, bandwidth: int = 8,
                           size: float = 0.1) -> CircleFunction:
    """A random trigonometric polynomial of degree ``bandwidth`` with coefficients of order ``size``."""
    ks = np.arange(-bandwidth, bandwidth + 1)
    c = (rng.normal(size=ks.size) + 1j * rng.normal(size=ks.size)) * size
    return CircleFunction.from_modes(dict(zip(ks.tolist(), c)), G)


def _factor(a: complex, b: complex, th: np.ndarray) -> np.ndarray:
    z = np.exp(1j * th)
    return (1 - a * z) * (1 - b / z)


def operator_suite(G: int = DEFAULT_GRID, seed: int = 20240607,
                   count: int = 20) -> List[Tuple[str, CircleFunction, CircleFunction]]:
    """Symbol pairs whose analytic and anti-analytic parts both decay at rate 0.72-0.80.

    The leading-block error falls roughly like the product of the two rates
    to the power M: slow enough that the determinants still improve between
    M=16, 32 and 64, fast enough to fit the N=512 padding rule.  Winding
    numbers cycle through every pair in ``{-2..2}^2`` except ``(0, 0)``.
    """
    rng = np.random.default_rng(seed)
    th = grid(G)
    windings = [(m, n) for m in range(-2, 3) for n in range(-2, 3) if (m, n) != (0, 0)]
    cases = []
    for i in range(count):
        m, n = windings[i % len(windings)]
        a, b, c, d = rng.uniform(0.72, 0.80, size=4)
        ph = np.exp(2j * np.pi * rng.uniform(size=4))
        k1 = np.exp(rng.normal(scale=0.3) + 1j * rng.uniform(-np.pi, np.pi))
        k2 = np.exp(rng.normal(scale=0.3) + 1j * rng.uniform(-np.pi, np.pi))
        p = k1 * np.exp(1j * m * th) * _factor(a * ph[0], b * ph[1], th)
        q = k2 * np.exp(1j * n * th) / _factor(c * ph[2], d * ph[3], th)
        cases.append((f"op{i:02d}[m={m},n={n}]", CircleFunction(p), CircleFunction(q)))
    return cases
