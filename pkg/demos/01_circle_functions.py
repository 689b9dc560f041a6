"""
Functions on the circle
=======================

Sampled periodic functions, their Fourier coefficients, winding numbers
and the periodic logarithm that strips the winding out.
"""

import numpy as np

from regpair import CircleFunction, continuous_log, winding_number, z_power

G = 256

# e^{cos t} has the modified Bessel numbers I_k(1) as Fourier coefficients
f = CircleFunction.from_callable(lambda t: np.exp(np.cos(t)), G)
print("first coefficients of e^{cos t}:", np.round([f.coeff(k).real for k in range(4)], 10))

# a symbol that winds twice: z^2 times something close to 1
p = z_power(2, G) * (1 + 0.3 * z_power(-1, G)) * 1.5j
print("winding number:", winding_number(p))

# p = z^m e^alpha with alpha periodic; alpha(0) sits on the principal branch
dec = continuous_log(p)
print("m =", dec.m, " alpha_hat(0) =", np.round(dec.alpha0, 6))
print("reconstruction error:", np.max(np.abs(np.exp(dec.log_values()) - p.samples)))

# a coarse grid cannot follow a fast winding; the argument check refuses it
try:
    winding_number(z_power(7, 16))
except Exception as exc:
    print("refused:", exc)
