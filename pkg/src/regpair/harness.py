"""Cross-method evaluation, reports and the property self-test."""

from __future__ import annotations

import csv
import io
import math
import time
from dataclasses import asdict, dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import circle as cf
from .circle import CircleFunction, z_power
from .loops import Diffeomorphism, Loop, compose, deform, reparameterize
from .parser import parse_fourier, parse_loop, parse_rational
from .rational import RationalFunction, divisor, tame_symbol
from .regulator import (
    beilinson_pairing,
    mahler_measure,
    real_regulator,
    regulator_fourier,
    regulator_integral,
)
from .samples import operator_suite, random_bandlimited_symbol, random_trig_polynomial
from .toeplitz import (
    commutator_determinant,
    grothendieck_det,
    helton_howe_value,
    hs_commutator_norm_sq,
    lu_det,
    steinberg_operator_determinant,
    toeplitz_matrix,
)

SCHEMA = "v1"
METHOD_NAMES = {"closed": "closed_form", "integral": "contour_integral", "operator": "operator_determinant"}

EXIT_OK = 0
EXIT_TOLERANCE = 1
EXIT_INPUT = 2


def cjson(z: complex) -> Dict[str, float]:
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def deviation(v1: complex, v2: complex) -> float:
    """Multiplicative deviation ``|v1/v2 - 1|``; values live in ``C^*``."""
    return float(abs(complex(v1) / complex(v2) - 1))


@dataclass(frozen=True)
class RunConfig:
    grid: int = 4096
    dim_n: int = 512
    trunc_m: int = 64
    tol_analytic: float = 1e-9
    tol_operator: float = 1e-4
    methods: Tuple[str, ...] = ("closed", "integral", "operator")
    fmt: str = "json"
    seed: int = 0

    def __post_init__(self):
        if self.grid < 16 or self.grid & (self.grid - 1):
            raise ValueError(f"grid must be a power of two >= 16, got {self.grid}")
        if self.trunc_m < 1 or self.trunc_m > self.dim_n - 32:
            raise ValueError(f"need 1 <= M <= N - 32, got M={self.trunc_m}, N={self.dim_n}")
        if 2 * self.dim_n > self.grid:
            raise ValueError(f"N={self.dim_n} needs a grid of at least {2 * self.dim_n}")
        unknown = set(self.methods) - set(METHOD_NAMES)
        if unknown or not self.methods:
            raise ValueError(f"unknown methods {sorted(unknown)}; choose from {sorted(METHOD_NAMES)}")
        if self.fmt not in ("json", "csv"):
            raise ValueError(f"unknown format {self.fmt!r}")

    def flags(self) -> List[str]:
        return [
            "--grid", str(self.grid), "--dim-n", str(self.dim_n), "--trunc-m", str(self.trunc_m),
            "--methods", ",".join(self.methods), "--format", self.fmt, "--seed", str(self.seed),
            "--tol-analytic", repr(self.tol_analytic), "--tol-operator", repr(self.tol_operator),
        ]


@dataclass
class PairingReport:
    command: str
    inputs: Dict[str, str]
    config: RunConfig
    values: Dict[str, complex] = field(default_factory=dict)
    diagnostics: Dict[str, dict] = field(default_factory=dict)
    seconds: Dict[str, float] = field(default_factory=dict)
    deviations: Dict[str, float] = field(default_factory=dict)
    checks: Dict[str, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def argv(self) -> List[str]:
        return [self.command, *self.inputs.values(), *self.config.flags()]

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "command": self.command,
            "argv": self.argv(),
            "inputs": dict(self.inputs),
            "config": {k: (list(v) if isinstance(v, tuple) else v) for k, v in asdict(self.config).items()},
            "methods": {
                name: {
                    "value": cjson(self.values[name]),
                    "diagnostics": _jsonable(self.diagnostics.get(name, {})),
                    "seconds": self.seconds.get(name),
                }
                for name in self.values
            },
            "deviations": dict(self.deviations),
            "checks": dict(self.checks),
            "passed": self.passed,
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["method", "re", "im", "seconds"])
        for name, v in self.values.items():
            w.writerow([name, repr(v.real), repr(v.imag), f"{self.seconds.get(name, 0.0):.6f}"])
        for name, d in self.deviations.items():
            w.writerow([f"deviation:{name}", repr(d), "", ""])
        return buf.getvalue()


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (complex, np.complexfloating)):
        return cjson(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    return obj


def evaluate_symbol(p: CircleFunction, q: CircleFunction, config: RunConfig,
                    report: PairingReport) -> PairingReport:
    """Run every configured method on ``{p, q}`` and fill in deviations and checks."""
    runners = {
        "closed": lambda: regulator_fourier(p, q),
        "integral": lambda: regulator_integral(p, q),
        "operator": lambda: steinberg_operator_determinant(p, q, config.dim_n, config.trunc_m),
    }
    for key in config.methods:
        t0 = time.perf_counter()
        result = runners[key]()
        report.seconds[key] = time.perf_counter() - t0
        report.values[key] = complex(result.value)
        if key == "operator":
            report.diagnostics[key] = {
                "N": result.N, "M": result.M,
                "history": [[m, cjson(v)] for m, v in result.convergence_history],
                "last_increment": result.last_increment,
            }
        else:
            report.diagnostics[key] = dict(result.diagnostics)
    ref = "closed" if "closed" in report.values else "integral" if "integral" in report.values else None
    if ref and "integral" in report.values and ref != "integral":
        d = deviation(report.values["integral"], report.values[ref])
        report.deviations["integral_vs_closed"] = d
        report.checks["integral_vs_closed"] = d <= config.tol_analytic
    if ref and "operator" in report.values:
        d = deviation(report.values["operator"], report.values[ref])
        report.deviations[f"operator_vs_{ref}"] = d
        report.checks[f"operator_vs_{ref}"] = d <= config.tol_operator
    return report


def pair(f_text: str, g_text: str, loop_text: str, config: RunConfig = RunConfig()) -> PairingReport:
    f, g, gamma = parse_rational(f_text), parse_rational(g_text), parse_loop(loop_text)
    p = compose(f, gamma, config.grid)
    q = compose(g, gamma, config.grid)
    report = PairingReport("pair", {"f": f_text, "g": g_text, "loop": loop_text}, config)
    return evaluate_symbol(p, q, config, report)


def symbol(p_text: str, q_text: str, config: RunConfig = RunConfig()) -> PairingReport:
    p = CircleFunction.from_modes(parse_fourier(p_text), config.grid).check_resolved()
    q = CircleFunction.from_modes(parse_fourier(q_text), config.grid).check_resolved()
    report = PairingReport("symbol", {"p": p_text, "q": q_text}, config)
    return evaluate_symbol(p, q, config, report)


def converge(f_text: str, g_text: str, loop_text: str, m_list: Sequence[int],
             config: RunConfig = RunConfig()) -> List[dict]:
    """Leading-block determinants for each ``M`` in ``m_list`` against the closed form."""
    f, g, gamma = parse_rational(f_text), parse_rational(g_text), parse_loop(loop_text)
    p = compose(f, gamma, config.grid)
    q = compose(g, gamma, config.grid)
    ref = regulator_fourier(p, q).value
    res = steinberg_operator_determinant(p, q, config.dim_n, max(m_list), history=m_list)
    return [
        {"M": m, "re": v.real, "im": v.imag, "deviation": deviation(v, ref)}
        for m, v in res.convergence_history
    ]


# -- self-test ---------------------------------------------------------------


@dataclass
class SuiteResult:
    name: str
    passed: bool
    worst: float
    tolerance: float
    detail: str = ""

    def line(self) -> str:
        flag = "PASS" if self.passed else "FAIL"
        extra = f"  {self.detail}" if self.detail else ""
        return f"{flag}  {self.name:<32} worst={self.worst:.3e}  tol={self.tolerance:.1e}{extra}"


def _worst(name: str, values: Sequence[float], tol: float, detail: str = "") -> SuiteResult:
    worst = float(max(values)) if len(values) else 0.0
    return SuiteResult(name, bool(worst <= tol), worst, tol, detail)


def _suite_circle(cfg: RunConfig, rng: np.random.Generator) -> List[SuiteResult]:
    G = cfg.grid
    rt, wind, branch, dint = [], [], [], []
    for _ in range(20):
        f = random_trig_polynomial(rng, G, bandwidth=int(rng.integers(1, 40)), size=1.0)
        back = np.fft.ifft(cf.fourier_coefficients(f)) * G
        rt.append(float(np.max(np.abs(back - f.samples)) / np.max(np.abs(f.samples))))
        dint.append(abs(cf.periodic_integral(cf.spectral_derivative(f))))
        m1, m2 = (int(x) for x in rng.integers(-3, 4, 2))
        p = random_bandlimited_symbol(rng, m1, G)
        q = random_bandlimited_symbol(rng, m2, G)
        wind.append(float(cf.winding_number(p * q) != cf.winding_number(p) + cf.winding_number(q)))
        n = int(rng.integers(-3, 4))
        a0 = cf.continuous_log(p).alpha0
        a1 = cf.continuous_log(p, branch=1).alpha0
        branch.append(abs(np.exp(n * a1) - np.exp(n * a0)) / abs(np.exp(n * a0)))
    return [
        _worst("circle.roundtrip", rt, 1e-12),
        _worst("circle.winding_additive", wind, 0.0),
        _worst("circle.branch_invariance", branch, 1e-12),
        _worst("circle.derivative_integral", dint, 1e-12),
    ]


def _random_rational(rng: np.random.Generator) -> RationalFunction:
    def roots(k):
        return [complex(*rng.integers(-3, 4, 2)) / 2 for _ in range(k)]
    num = np.atleast_1d(np.poly(roots(int(rng.integers(0, 3)))))[::-1] * complex(*rng.uniform(0.5, 2, 2))
    den = np.atleast_1d(np.poly(roots(int(rng.integers(0, 3)))))[::-1]
    return RationalFunction(tuple(num), tuple(den))


def _suite_symbols(cfg: RunConfig, rng: np.random.Generator) -> List[SuiteResult]:
    deg, bimult, skew = [], [], []
    for _ in range(30):
        f1, f2, g = (_random_rational(rng) for _ in range(3))
        deg.append(abs(divisor(f1).degree))
        support = divisor(f1).support + divisor(f2).support + divisor(g).support + ("inf",)
        x = support[int(rng.integers(len(support)))]
        lhs = tame_symbol(f1 * f2, g, x)
        rhs = tame_symbol(f1, g, x) * tame_symbol(f2, g, x)
        bimult.append(abs(lhs / rhs - 1))
        skew.append(abs(tame_symbol(f1, g, x) * tame_symbol(g, f1, x) - 1))
    f = parse_rational("(z-0.5)*(z+3)/(z-2)")
    g = parse_rational("(z+0.25)^2/(z-4)")
    gamma = Loop.fourier_curve({0: 0.1, 1: 1.0, -2: 0.1})
    hom = np.abs(compose(f * g, gamma, cfg.grid).samples
                 - compose(f, gamma, cfg.grid).samples * compose(g, gamma, cfg.grid).samples)
    return [
        _worst("symbols.divisor_degree", deg, 0.0),
        _worst("symbols.tame_bimultiplicative", bimult, 1e-9),
        _worst("symbols.tame_skew", skew, 1e-9),
        _worst("symbols.compose_homomorphism", [float(np.max(hom))], 1e-12),
    ]


def _suite_regulator(cfg: RunConfig, rng: np.random.Generator) -> List[SuiteResult]:
    G = cfg.grid
    oracle, skew, bimult, branch = [], [], [], []
    for i in range(100):
        p = random_bandlimited_symbol(rng, int(rng.integers(-2, 3)), G)
        q = random_bandlimited_symbol(rng, int(rng.integers(-2, 3)), G)
        rf = regulator_fourier(p, q).value
        oracle.append(deviation(regulator_integral(p, q).value, rf))
        if i < 20:
            skew.append(abs(rf * regulator_fourier(q, p).value - 1))
            p2 = random_bandlimited_symbol(rng, int(rng.integers(-2, 3)), G)
            lhs = regulator_fourier(p * p2, q).value
            bimult.append(deviation(lhs, rf * regulator_fourier(p2, q).value))
            branch.append(deviation(regulator_fourier(p, q, alpha_branch=1, beta_branch=-2).value, rf))
            branch.append(deviation(regulator_integral(p, q, p_branch=-1, q_branch=3).value,
                                    regulator_integral(p, q).value))
    steinberg = []
    for c0, c1 in [(0.5, 0.25), (0.3, 0.2j), (-0.4 + 0.3j, 0.15), (2.0, 0.5)]:
        p = c0 + c1 * z_power(1, G)
        steinberg.append(abs(regulator_fourier(p, 1 - p).value - 1))

    f = parse_rational("(z-0.5)*(z-3)")
    g = parse_rational("(z+0.4)/(z-2.5)")
    base = Loop.circle(0j, 1.0)
    v0 = beilinson_pairing(f, g, base, G).value
    homotopy = []
    for direction in (Loop.fourier_curve({2: 1.0}), Loop.fourier_curve({-1: 0.5j, 3: 0.5}),
                      Loop.fourier_curve({0: 1.0})):
        for t in (-0.2, -0.1, 0.1, 0.2):
            homotopy.append(abs(beilinson_pairing(f, g, deform(base, direction, t, G), G).value - v0))
    phi = Diffeomorphism(sin=((1, 0.3),))
    reparam = [abs(beilinson_pairing(f, g, reparameterize(base, phi, G), G).value - v0)]

    residue = []
    for x in (0.5, -0.4):
        tau = tame_symbol(f, g, x)
        for eps in (0.1, 0.05, 0.025):
            v = beilinson_pairing(f, g, Loop.circle(x, eps), G).value
            residue.append(abs(v - tau) / eps)

    p = compose(f, base, G)
    q = compose(g * parse_rational("z"), base, G)
    bump = random_trig_polynomial(rng, G, bandwidth=4, size=1.0)
    bump = bump * (1 / float(np.max(np.abs(bump.samples))))
    r0 = regulator_integral(p, q).value
    deltas = [abs(regulator_integral(p + eps * bump, q).value - r0) for eps in (1e-3, 1e-4, 1e-5)]
    monotone = all(a > b for a, b in zip(deltas, deltas[1:]))
    return [
        _worst("regulator.oracle_agreement", oracle, cfg.tol_analytic, f"n={len(oracle)}"),
        _worst("regulator.skew_symmetry", skew, 1e-9),
        _worst("regulator.bimultiplicativity", bimult, 1e-9),
        _worst("regulator.steinberg_relation", steinberg, 1e-9),
        _worst("regulator.branch_invariance", branch, 1e-12),
        _worst("regulator.homotopy_invariance", homotopy, 1e-7),
        _worst("regulator.reparameterization", reparam, 1e-9),
        _worst("regulator.residue_tame", residue, 1.0, "|err|/eps"),
        SuiteResult("regulator.continuity", monotone, max(deltas), 0.0,
                    "deltas=" + ",".join(f"{d:.1e}" for d in deltas)),
    ]


def _suite_toeplitz(cfg: RunConfig, rng: np.random.Generator) -> List[SuiteResult]:
    G, N, M = cfg.grid, cfg.dim_n, cfg.trunc_m
    n_small = 64
    S = toeplitz_matrix(z_power(1, G), n_small).matrix
    Sa = toeplitz_matrix(z_power(-1, G), n_small).matrix
    I = np.eye(n_small)
    P0 = np.zeros((n_small, n_small)); P0[0, 0] = 1
    P1 = np.zeros((n_small, n_small)); P1[1, 1] = 1
    keep = slice(0, n_small - 2)
    alg = [
        np.max(np.abs((Sa @ S - I)[keep, keep])),
        np.max(np.abs((S @ Sa - I + P0)[keep, keep])),
        np.max(np.abs((S @ S @ Sa @ Sa - I + P0 + P1)[keep, keep])),
    ]
    a = CircleFunction.from_modes({1: 0.3}, G)
    b = CircleFunction.from_modes({-1: 0.2}, G)
    one_term = commutator_determinant(a, b, N, M).value
    pitfall = SuiteResult("toeplitz.pitfall_guard", abs(one_term - 1) > 0.05, abs(one_term - 1), 0.05,
                          "must exceed tolerance")
    hh = [deviation(one_term, math.exp(-0.06))]
    for _ in range(4):
        al = random_trig_polynomial(rng, G, bandwidth=8, size=0.1)
        be = random_trig_polynomial(rng, G, bandwidth=8, size=0.1)
        hh.append(deviation(commutator_determinant(al, be, N, M).value, helton_howe_value(al, be)))

    op_dev, non_monotone = [], []
    for name, p, q in operator_suite(G, seed=20240607 + cfg.seed):
        ref = regulator_fourier(p, q).value
        res = steinberg_operator_determinant(p, q, N, M)
        errs = [deviation(v, ref) for _, v in res.convergence_history]
        op_dev.append(errs[-1])
        if not all(x > y for x, y in zip(errs, errs[1:])):
            non_monotone.append(name)
    op_ok = max(op_dev) <= cfg.tol_operator and not non_monotone
    op_detail = "history strictly improving" if not non_monotone else "non-monotone: " + ",".join(non_monotone)

    groth = []
    for n in range(1, 13):
        K = (rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))) / math.sqrt(2 * n)
        groth.append(deviation(grothendieck_det(K, n), lu_det(np.eye(n) + K)))
    u, v = rng.normal(size=6) + 0j, rng.normal(size=6) + 0j
    K1 = np.outer(u, v)
    groth.append(abs(grothendieck_det(K1, 1) - (1 + np.trace(K1))))

    hs = []
    for func in (lambda t: np.exp(1j * t), lambda t: np.exp(2j * t), lambda t: np.exp(np.cos(t))):
        f = CircleFunction.from_callable(func, 1024)
        hs.append(abs(hs_commutator_norm_sq(f, "integral") / hs_commutator_norm_sq(f, "matrix", 256) - 1))
    return [
        _worst("toeplitz.algebra_identities", alg, 1e-12),
        pitfall,
        _worst("toeplitz.helton_howe", hh, 1e-6),
        SuiteResult("toeplitz.operator_convergence", op_ok, max(op_dev), cfg.tol_operator,
                    f"N={N} M={M}; {op_detail}"),
        _worst("toeplitz.grothendieck", groth, 1e-10),
        _worst("toeplitz.hs_two_routes", hs, 0.01),
    ]


SUITES: Dict[str, Callable[[RunConfig, np.random.Generator], List[SuiteResult]]] = {
    "circle": _suite_circle,
    "symbols": _suite_symbols,
    "regulator": _suite_regulator,
    "toeplitz": _suite_toeplitz,
}


def selftest(config: RunConfig = RunConfig(), suites: Optional[Sequence[str]] = None) -> List[SuiteResult]:
    """Run every module's property suite; deterministic for a given seed."""
    results: List[SuiteResult] = []
    for name in suites or SUITES:
        rng = np.random.default_rng([config.seed, list(SUITES).index(name)])
        results.extend(SUITES[name](config, rng))
    return sorted(results, key=lambda r: r.name)


def mahler(poly_text: str, grid: int = 4096) -> float:
    return mahler_measure(parse_rational(poly_text), grid)


def tame(f_text: str, g_text: str, point: str) -> complex:
    from .rational import is_infinity

    x = "inf" if is_infinity(point) else complex(point.replace(" ", "").replace("i", "j"))
    return tame_symbol(parse_rational(f_text), parse_rational(g_text), x)


def real_pairing(f_text: str, g_text: str, loop_text: str, grid: int = 4096) -> float:
    return real_regulator(parse_rational(f_text), parse_rational(g_text), parse_loop(loop_text), grid)
