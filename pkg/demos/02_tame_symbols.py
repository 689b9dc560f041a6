"""
Divisors and tame symbols
=========================

Rational functions are parsed from text, reduced, and asked for their
zeros, poles and the local invariant (-1)^{ab} f^b / g^a at a point.
"""

from regpair import divisor, parse_rational, tame_symbol

f = parse_rational("(z-0.5)^2*(z+3)/(z-2)")
d = divisor(f)
for x, k in d.points:
    print(f"  order {k:+d} at {x:.4g}")
print("  order at infinity:", d.order_at_infinity, " total degree:", d.degree)

pairs = [("z", "z", 0), ("z", "1-z", 0), ("z-2", "z", 0), ("z", "z", "inf")]
for a, b, x in pairs:
    print(f"tame {{{a}, {b}}} at {x}: {tame_symbol(parse_rational(a), parse_rational(b), x):.6g}")

# the product of all local symbols over the sphere is 1
f = parse_rational("(z-1)*(z+2)/(z-3)")
g = parse_rational("(z-0.5)/(z+1)")
points = set(divisor(f).support) | set(divisor(g).support)
total = tame_symbol(f, g, "inf")
for x in points:
    total *= tame_symbol(f, g, x)
print("product over all points:", total)
