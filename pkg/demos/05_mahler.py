"""
Mahler measures
===============

The mean of log|P| on the unit circle, checked against Jensen's formula
and against the absolute value of the pairing of P with z.
"""

import math

import numpy as np

from regpair import mahler_measure, parse_rational

for text in ["z-2", "z", "(z-2)*(z-3)", "z^3 - z - 1", "2*z^2 + z + 5"]:
    P = parse_rational(text)
    roots = np.roots(P.num[::-1]) if P.num.size > 1 else []
    jensen = math.log(abs(P.num[-1])) + sum(math.log(abs(r)) for r in roots if abs(r) > 1)
    print(f"{text:>14}:  {mahler_measure(P):.15f}   Jensen {jensen:.15f}")
