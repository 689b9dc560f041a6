"""Rational functions on the Riemann sphere, their divisors and tame symbols."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple, Union

import numpy as np
from numpy.polynomial import polynomial as P

GCD_CUTOFF = 1e-10
ROOT_TOL = 1e-9
# multiple roots from np.roots split by roughly eps**(1/multiplicity)
CLUSTER_TOL = 1e-5

Point = Union[complex, float, str]


def is_infinity(x) -> bool:
    if isinstance(x, str):
        return x.strip().lower() in ("inf", "infinity", "oo")
    try:
        return math.isinf(abs(complex(x)))
    except (TypeError, ValueError):
        return False


def _trim(c, cutoff: float = GCD_CUTOFF) -> np.ndarray:
    c = np.atleast_1d(np.asarray(c, dtype=complex)).copy()
    scale = float(np.max(np.abs(c))) if c.size else 0.0
    if scale == 0.0:
        return np.zeros(1, dtype=complex)
    c[np.abs(c) <= cutoff * scale] = 0
    nz = np.nonzero(c)[0]
    return c[: nz[-1] + 1]


def _is_zero(c) -> bool:
    return not np.any(np.asarray(c) != 0)


def poly_gcd(a, b, cutoff: float = GCD_CUTOFF) -> np.ndarray:
    """Monic gcd by the Euclidean algorithm, dropping remainder terms below ``cutoff``."""
    a, b = _trim(a, cutoff), _trim(b, cutoff)
    while not _is_zero(b):
        b = b / b[-1]
        r = np.atleast_1d(P.polydiv(a, b)[1])
        r[np.abs(r) <= cutoff * max(1.0, float(np.max(np.abs(a))))] = 0
        a, b = b, _trim(r, 0.0)
    return a / a[-1]


def _deflate(c: np.ndarray, x: complex, tol: float = ROOT_TOL) -> Tuple[int, np.ndarray]:
    """Divide out ``(z - x)`` as often as ``x`` is (numerically) a root."""
    count = 0
    c = np.asarray(c, dtype=complex)
    while c.size > 1:
        scale = float(np.sum(np.abs(c) * np.abs(x) ** np.arange(c.size)))
        # synthetic division, highest degree first
        q = np.zeros(c.size - 1, dtype=complex)
        acc = 0j
        for i in range(c.size - 1, 0, -1):
            acc = acc * x + c[i]
            q[i - 1] = acc
        rem = acc * x + c[0]
        if abs(rem) > tol * scale:
            break
        c = q
        count += 1
    return count, c


@dataclass(frozen=True)
class RationalFunction:
    """Quotient ``numerator / denominator`` of complex polynomials.

    Coefficient tuples are in ascending degree.  Construction reduces the
    fraction and makes the denominator monic.
    """

    numerator: Tuple[complex, ...]
    denominator: Tuple[complex, ...] = (1 + 0j,)

    def __post_init__(self):
        num = _trim(self.numerator, 0.0)
        den = _trim(self.denominator, 0.0)
        if _is_zero(num):
            raise ZeroDivisionError("the zero function has no divisor")
        if _is_zero(den):
            raise ZeroDivisionError("denominator is the zero polynomial")
        g = poly_gcd(num, den)
        if g.size > 1:
            num = _trim(P.polydiv(num, g)[0], GCD_CUTOFF)
            den = _trim(P.polydiv(den, g)[0], GCD_CUTOFF)
        lead = den[-1]
        object.__setattr__(self, "numerator", tuple(complex(v) for v in num / lead))
        object.__setattr__(self, "denominator", tuple(complex(v) for v in den / lead))

    @classmethod
    def constant(cls, c: complex) -> "RationalFunction":
        return cls((complex(c),))

    @classmethod
    def identity(cls) -> "RationalFunction":
        return cls((0j, 1 + 0j))

    @property
    def num(self) -> np.ndarray:
        return np.array(self.numerator, dtype=complex)

    @property
    def den(self) -> np.ndarray:
        return np.array(self.denominator, dtype=complex)

    @property
    def is_polynomial(self) -> bool:
        return len(self.denominator) == 1

    def __call__(self, x):
        x = np.asarray(x, dtype=complex)
        return P.polyval(x, self.num) / P.polyval(x, self.den)

    evaluate = __call__

    # -- field operations ---------------------------------------------------

    @staticmethod
    def _coerce(other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        if np.isscalar(other):
            return RationalFunction.constant(complex(other))
        return NotImplemented

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return RationalFunction(P.polymul(self.num, o.num), P.polymul(self.den, o.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return RationalFunction(P.polymul(self.num, o.den), P.polymul(self.den, o.num))

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        num = P.polyadd(P.polymul(self.num, o.den), P.polymul(o.num, self.den))
        return RationalFunction(num, P.polymul(self.den, o.den))

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __pow__(self, n: int):
        if n < 0:
            return RationalFunction(P.polypow(self.den, -n), P.polypow(self.num, -n))
        return RationalFunction(P.polypow(self.num, n), P.polypow(self.den, n))

    def __str__(self):
        def fmt(c):
            return " + ".join(f"({v:.6g})z^{i}" for i, v in enumerate(c) if v != 0) or "0"
        if self.is_polynomial:
            return fmt(self.numerator)
        return f"[{fmt(self.numerator)}] / [{fmt(self.denominator)}]"

    def divisor(self) -> "Divisor":
        return divisor(self)


@dataclass(frozen=True)
class Divisor:
    points: Tuple[Tuple[complex, int], ...]
    order_at_infinity: int

    @property
    def degree(self) -> int:
        return sum(order for _, order in self.points) + self.order_at_infinity

    @property
    def support(self) -> Tuple[complex, ...]:
        return tuple(x for x, _ in self.points)


def _cluster(roots) -> list:
    groups: list = []
    for r in roots:
        for g in groups:
            if abs(g[0] - r) <= CLUSTER_TOL * max(1.0, abs(r)):
                g.append(r)
                break
        else:
            groups.append([r])
    return [complex(np.mean(g)) for g in groups]


def divisor(f: RationalFunction) -> Divisor:
    """Zeros (positive order) and poles (negative order), plus the order at infinity."""
    num, den = f.num, f.den
    candidates = []
    if num.size > 1:
        candidates.extend(np.roots(num[::-1]))
    if den.size > 1:
        candidates.extend(np.roots(den[::-1]))
    points = []
    for x in _cluster(candidates):
        k = order_at(f, x)
        if k:
            points.append((x, k))
    points.sort(key=lambda item: (item[0].real, item[0].imag))
    return Divisor(tuple(points), order_at(f, "inf"))


def order_at(f: RationalFunction, x: Point) -> int:
    """Zero (positive) or pole (negative) multiplicity of ``f`` at ``x``."""
    if is_infinity(x):
        return (len(f.denominator) - 1) - (len(f.numerator) - 1)
    x = complex(x)
    a, _ = _deflate(f.num, x)
    b, _ = _deflate(f.den, x)
    return a - b


def _leading_value(f: RationalFunction, x: Point) -> Tuple[int, complex]:
    """Order at ``x`` and the value at ``x`` of ``f / t^ord`` for the local parameter ``t``."""
    if is_infinity(x):
        return order_at(f, x), f.numerator[-1] / f.denominator[-1]
    x = complex(x)
    a, num = _deflate(f.num, x)
    b, den = _deflate(f.den, x)
    return a - b, complex(P.polyval(x, num) / P.polyval(x, den))


def tame_symbol(f: RationalFunction, g: RationalFunction, x: Point) -> complex:
    """``(-1)^{ab} (f^b / g^a)(x)`` with ``a = ord_x f`` and ``b = ord_x g``.

    The powers of the local parameter cancel exactly, so the evaluation is
    done on the deflated factors rather than as a limit.
    """
    a, f0 = _leading_value(f, x)
    b, g0 = _leading_value(g, x)
    return complex((-1) ** (a * b) * f0**b / g0**a)
