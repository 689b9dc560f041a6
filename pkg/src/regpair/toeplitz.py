"""Truncated Toeplitz operators and Fredholm determinants of their products.

Everything is formed at an internal dimension ``N`` and only afterwards cut
down to a leading ``M x M`` (or ``2M x 2M``) block.  Cutting first and
multiplying afterwards gives the wrong answer: the determinant of a
multiplicative commutator of finite matrices is identically 1.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

import numpy as np
import scipy.linalg

from .circle import CircleFunction, grid, spectral_derivative
from .errors import PaddingTooSmall, SingularTruncation, UnderResolved
from .regulator import check_symbol_pair, helton_howe_exponent

PIVOT_TOL = 1e-13
BAND_TOL = 1e-10


@dataclass(frozen=True)
class ToeplitzTruncation:
    symbol_coeffs: np.ndarray = field(repr=False)
    N: int
    matrix: np.ndarray = field(repr=False)


@dataclass(frozen=True)
class BlockOperator:
    """Square grid of ``N x N`` blocks acting on copies of ``H_+``."""

    blocks: Tuple[Tuple[np.ndarray, ...], ...]
    N: int

    @classmethod
    def from_dense(cls, dense: np.ndarray, N: int) -> "BlockOperator":
        k = dense.shape[0] // N
        return cls(tuple(tuple(dense[i * N:(i + 1) * N, j * N:(j + 1) * N] for j in range(k))
                         for i in range(k)), N)

    def dense(self) -> np.ndarray:
        return np.block([list(row) for row in self.blocks])

    def __matmul__(self, other: "BlockOperator") -> "BlockOperator":
        return BlockOperator.from_dense(self.dense() @ other.dense(), self.N)

    def leading(self, M: int) -> np.ndarray:
        """Compression onto the first ``M`` modes of every block component."""
        k = len(self.blocks)
        idx = np.concatenate([np.arange(M) + i * self.N for i in range(k)])
        d = self.dense()
        return d[np.ix_(idx, idx)]


@dataclass(frozen=True)
class DeterminantResult:
    value: complex
    M: int
    N: int
    convergence_history: List[Tuple[int, complex]]

    @property
    def last_increment(self) -> float:
        """``|value_M - value_{M/2}|`` from the history (nan if unavailable)."""
        if len(self.convergence_history) < 2:
            return float("nan")
        return float(abs(self.convergence_history[-1][1] - self.convergence_history[-2][1]))


def lu_logdet(A: np.ndarray) -> Tuple[float, complex]:
    """``(log|det A|, phase)`` from an LU factorization with partial pivoting."""
    with warnings.catch_warnings():
        # singularity is reported below through SingularTruncation
        warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
        lu, piv = scipy.linalg.lu_factor(A, check_finite=True)
    diag = np.diag(lu)
    smallest = float(np.min(np.abs(diag))) if diag.size else 1.0
    if smallest < PIVOT_TOL:
        raise SingularTruncation(f"LU pivot {smallest:.3e} below {PIVOT_TOL:g}")
    swaps = int(np.count_nonzero(piv != np.arange(piv.size)))
    phase = (-1.0) ** swaps * np.prod(diag / np.abs(diag))
    return float(np.sum(np.log(np.abs(diag)))), complex(phase)


def lu_det(A: np.ndarray) -> complex:
    logabs, phase = lu_logdet(A)
    return complex(np.exp(logabs) * phase)


def lu_inverse(A: np.ndarray) -> np.ndarray:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
        lu, piv = scipy.linalg.lu_factor(A)
    if float(np.min(np.abs(np.diag(lu)))) < PIVOT_TOL:
        raise SingularTruncation("matrix is numerically singular")
    return scipy.linalg.lu_solve((lu, piv), np.eye(A.shape[0], dtype=A.dtype))


def bandwidth(f: CircleFunction, tol: float = BAND_TOL) -> int:
    """Largest ``|k|`` with ``|f_hat(k)| > tol * max|f_hat|``."""
    c = np.abs(f.coeffs)
    k = np.abs(np.fft.fftfreq(f.G, 1.0 / f.G).astype(int))
    significant = k[c > tol * c.max()]
    return int(significant.max()) if significant.size else 0


def toeplitz_matrix(f: CircleFunction, N: int) -> ToeplitzTruncation:
    """``N x N`` compression of multiplication by ``f``: entry ``(j, k)`` is ``f_hat(j - k)``."""
    if 2 * N > f.G:
        raise UnderResolved(f"dimension {N} needs a grid of at least {2 * N} samples (have {f.G})")
    edge = max(abs(f.coeff(N)), abs(f.coeff(-N)), f.nyquist)
    if edge > BAND_TOL * max(1.0, float(np.max(np.abs(f.coeffs)))):
        raise UnderResolved(f"band-edge coefficient {edge:.3e} exceeds {BAND_TOL:g}")
    j = np.arange(N)
    mat = f.coeffs[(j[:, None] - j[None, :]) % f.G]
    return ToeplitzTruncation(f.coeffs, N, mat)


def _T(f: CircleFunction, N: int) -> np.ndarray:
    return toeplitz_matrix(f, N).matrix


def j_block(N: int) -> BlockOperator:
    I = np.eye(N, dtype=complex)
    Z = np.zeros((N, N), dtype=complex)
    return BlockOperator(((Z, I), (-I, Z)), N)


def h_block(p: CircleFunction, N: int) -> BlockOperator:
    """``H(p) = ((2 - T(p)T(1/p))T(p), -1 + T(p)T(1/p); 1 - T(1/p)T(p), T(1/p))``."""
    p.check_nonvanishing()
    Tp = _T(p, N)
    Ti = _T(1 / p, N)
    I = np.eye(N, dtype=complex)
    PI = Tp @ Ti
    return BlockOperator((((2 * I - PI) @ Tp, PI - I), (I - Ti @ Tp, Ti)), N)


def _history_sizes(M: int) -> List[int]:
    return [m for m in (M // 4, M // 2, M) if m >= 1]


def steinberg_operator_determinant(p: CircleFunction, q: CircleFunction, N: int = 512,
                                   M: int = 64, history: Sequence[int] = ()) -> DeterminantResult:
    """Leading ``2M x 2M`` determinant of ``J H(-pq) J H(p) H(q)``.

    The convergence history covers ``M/4, M/2, M`` unless explicit sizes
    (each at most ``M``) are given in ``history``.
    """
    check_symbol_pair(p, q)
    pq = p * q
    bw = max(bandwidth(s) for s in (p, q, pq, 1 / p, 1 / q, 1 / pq))
    if N < M + 4 * bw:
        raise PaddingTooSmall(f"N={N} < M + 4*bandwidth = {M} + 4*{bw}")
    # J X J = (-D, C; B, -A) for X = (A, B; C, D): a signed block swap, no product needed
    (a, b), (c, d) = h_block(-pq, N).blocks
    left = np.block([[-d, c], [b, -a]])
    idx = np.concatenate([np.arange(M), N + np.arange(M)])
    # only the leading rows and columns of the product enter the determinants
    rows = left[idx, :] @ h_block(p, N).dense() @ h_block(q, N).dense()[:, idx]
    sizes = sorted(set(history) | {M}) if history else _history_sizes(M)
    if sizes[0] < 1 or sizes[-1] > M:
        raise ValueError(f"history sizes must lie in [1, {M}]")
    dets = []
    for m in sizes:
        sub = np.concatenate([np.arange(m), M + np.arange(m)])
        dets.append((m, lu_det(rows[np.ix_(sub, sub)])))
    return DeterminantResult(dets[-1][1], M, N, dets)


def commutator_determinant(alpha: CircleFunction, beta: CircleFunction,
                           N: int = 512, M: int = 64) -> DeterminantResult:
    """Leading-block determinant of ``T(e^a) T(e^b) T(e^a)^{-1} T(e^b)^{-1}``."""
    A = _T(alpha.exp(), N)
    B = _T(beta.exp(), N)
    X = A @ B @ lu_inverse(A) @ lu_inverse(B)
    history = [(m, lu_det(X[:m, :m])) for m in _history_sizes(M)]
    return DeterminantResult(history[-1][1], M, N, history)


def helton_howe_value(alpha: CircleFunction, beta: CircleFunction) -> complex:
    """``exp(sum_k k alpha_hat(-k) beta_hat(k))``."""
    return complex(np.exp(helton_howe_exponent(alpha, beta)))


def grothendieck_det(K: np.ndarray, terms: int) -> complex:
    """Partial sum ``sum_{k <= terms} tr(wedge^k K)`` of ``det(1 + K)``.

    The exterior-power traces are the elementary symmetric functions of the
    eigenvalues, obtained from the power sums ``tr(K^i)`` by Newton's
    identities.  Powers beyond ``dim K`` vanish identically.
    """
    if terms < 1:
        raise ValueError("terms must be at least 1")
    K = np.asarray(K, dtype=complex)
    n = min(terms, K.shape[0])
    power_sums = []
    Kp = np.eye(K.shape[0], dtype=complex)
    for _ in range(n):
        Kp = Kp @ K
        power_sums.append(np.trace(Kp))
    e = [1.0 + 0j]
    for k in range(1, n + 1):
        s = sum((-1) ** (i - 1) * e[k - i] * power_sums[i - 1] for i in range(1, k + 1))
        e.append(s / k)
    return complex(sum(e))


def _hs_integral(f: CircleFunction, chunk: int = 256) -> float:
    x = f.samples
    th = grid(f.G)
    fill = 4 * np.abs(spectral_derivative(f).samples) ** 2
    total = 0.0
    for s in range(0, f.G, chunk):
        rows = slice(s, s + chunk)
        diff = np.abs(x[rows, None] - x[None, :]) ** 2
        sin2 = np.sin(0.5 * (th[rows, None] - th[None, :])) ** 2
        with np.errstate(divide="ignore", invalid="ignore"):
            kern = diff / sin2
        i = np.arange(rows.start, min(rows.stop, f.G))
        kern[i - s, i] = fill[i]
        total += float(np.sum(kern))
    # (1/4pi^2) * (2pi/G)^2 * sum  ==  mean over the torus grid
    return total / f.G**2


def _hs_matrix(f: CircleFunction, N: int) -> float:
    if 2 * N > f.G:
        raise UnderResolved(f"dimension {N} needs a grid of at least {2 * N} samples")
    j = np.arange(N)
    neg = -1 - np.arange(N)
    upper = f.coeffs[(j[:, None] - neg[None, :]) % f.G]   # H_- -> H_+
    lower = f.coeffs[(neg[:, None] - j[None, :]) % f.G]   # H_+ -> H_-
    return float(4 * (np.sum(np.abs(upper) ** 2) + np.sum(np.abs(lower) ** 2)))


def hs_commutator_norm_sq(f: CircleFunction, route: str = "matrix", N: int = 256) -> float:
    """Squared Hilbert-Schmidt norm of ``[M_f, F]`` with ``F = P_+ - P_-``.

    ``route="integral"`` integrates ``|f(t)-f(s)|^2 / sin^2((t-s)/2)`` over
    the torus; ``route="matrix"`` sums ``4|f_hat(j-k)|^2`` over both
    off-diagonal blocks of the grading.
    """
    if route == "integral":
        return _hs_integral(f)
    if route == "matrix":
        return _hs_matrix(f, N)
    raise ValueError(f"unknown route {route!r}")
