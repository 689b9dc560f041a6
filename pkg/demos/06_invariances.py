"""
Moving the loop
===============

The pairing of two rational functions along a loop only sees the homotopy
class of the loop in the complement of their zeros and poles.  Shrinking
the loop around one such point leaves the tame symbol there.
"""

import numpy as np

from regpair import Diffeomorphism, Loop, beilinson_pairing, deform, parse_rational, reparameterize, tame_symbol

f = parse_rational("(z-0.5)*(z-3)")
g = parse_rational("(z+0.4)/(z-2.5)")
base = Loop.circle(0j, 1.0)
v0 = beilinson_pairing(f, g, base).value
print("unit circle:", v0)
print("product of enclosed tame symbols:", tame_symbol(f, g, 0.5) * tame_symbol(f, g, -0.4))

for t in (0.1, 0.2):
    bent = deform(base, Loop.fourier_curve({2: 1.0, -1: 0.3j}), t)
    print(f"deformed by t={t}: change {abs(beilinson_pairing(f, g, bent).value - v0):.1e}")

slow_fast = reparameterize(base, Diffeomorphism(sin=((1, 0.3),)))
print(f"reparameterized: change {abs(beilinson_pairing(f, g, slow_fast).value - v0):.1e}")

for x in (0.5, -0.4):
    for eps in (0.1, 0.05, 0.025):
        v = beilinson_pairing(f, g, Loop.circle(x, eps)).value
        print(f"circle of radius {eps} around {x}: {np.round(v, 12)}  tame {tame_symbol(f, g, x):.12g}")
