"""
One pairing, three computations
===============================

The pairing of two nowhere-vanishing symbols is evaluated from Fourier
coefficients of their logarithms, by integrating along the circle, and as
the determinant of a product of Toeplitz block operators.
"""

import time

import numpy as np

from regpair import regulator_fourier, regulator_integral, steinberg_operator_determinant, z_power
from regpair.samples import operator_suite

G = 4096

z = z_power(1, G)
for name, p, q in [("{z, z}", z, z), ("{2, z}", 2 + 0 * z, z), ("{z, 2}", z, 2 + 0 * z)]:
    vals = [regulator_fourier(p, q).value, regulator_integral(p, q).value,
            steinberg_operator_determinant(p, q).value]
    print(name, " ".join(f"{v.real:+.12f}{v.imag:+.1e}j" for v in vals))

# a harder case: analytic and anti-analytic factors decaying like 0.75^k
name, p, q = operator_suite(G)[13]
ref = regulator_fourier(p, q).value
t0 = time.perf_counter()
res = steinberg_operator_determinant(p, q, N=512, M=64, history=[8, 16, 32])
print(f"\n{name}: closed form {ref:.10f}  ({time.perf_counter() - t0:.2f}s for the operator)")
for m, v in res.convergence_history:
    print(f"  M={m:3d}  |det/closed - 1| = {abs(v / ref - 1):.2e}")
