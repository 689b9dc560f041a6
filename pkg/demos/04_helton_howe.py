"""
Determinants of multiplicative commutators
==========================================

det T(e^a) T(e^b) T(e^a)^-1 T(e^b)^-1 is exp(sum_k k a_hat(-k) b_hat(k)),
but only when the product is formed before truncating.
"""

import math

from regpair import CircleFunction, commutator_determinant, helton_howe_value

G = 1024
a = CircleFunction.from_modes({1: 0.3}, G)
b = CircleFunction.from_modes({-1: 0.2}, G)

print("exp(-0.06)          ", math.exp(-0.06))
print("trace formula       ", helton_howe_value(a, b).real)

# product at N=256, leading 64x64 block
print("padded then cut     ", commutator_determinant(a, b, N=256, M=64).value.real)

# cutting first: four 64x64 matrices, their commutator has determinant exactly 1
print("cut then multiplied ", commutator_determinant(a, b, N=64, M=64).value.real)
