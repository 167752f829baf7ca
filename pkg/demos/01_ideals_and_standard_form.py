"""Tour of monomial ideal arithmetic and the Artinian standard form.

Run:  python demos/01_ideals_and_standard_form.py
"""

from liccilab import Monomial, MonomialIdeal

V = ["x1", "x2", "x3"]

# An Artinian ideal: pure powers of every variable plus two mixed products.
I = MonomialIdeal(V, [(2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (0, 1, 1)])
print("I =", I)
print("artinian:", I.is_artinian(), " height:", I.height(), " alpha:", I.alpha())

# Standard form: pure powers plus x^B * K, with B the coordinatewise gcd
# of the non-pure-power generators.
sf = I.standard_form()
print("a =", sf.a)
print("sharp part:", sf.sharp)
print("x^B =", sf.b.to_text(V), "  K =", sf.k_ideal)
assert sf.recompose() == I

# Colon quotients, sums, powers, radical.
J = MonomialIdeal(V, [(1, 1, 0)])
print("I : (x1 x2) =", I.colon(J))
m = MonomialIdeal(V, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
print("m^2 =", m.power(2))
print("radical of (x1^2 x2^3) =", MonomialIdeal(V, [(2, 3, 0)]).radical())

# Socle of an Artinian quotient: killed by every variable, not inside.
print("socle monomials:", [s.to_text(V) for s in I.socle_monomials()])
