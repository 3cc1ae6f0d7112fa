"""Characteristic p: bracket powers, the colon-ideal splitting test for
Frobenius purity, and semigroup membership witnesses that explain failures.

Run:  python3 demos/06_characteristic_p.py
"""
from __future__ import annotations

from veronese import (
    AffineSemigroup, GF, Ideal, PolyRing, fedder_fpure, frobenius_power,
    monomial_ideal_member, semigroup_member, toric_ideal_lattice,
    veronese_map, monomial_algebra_map,
)

# Bracket powers raise each generator's exponents p-fold.
R = PolyRing(("x", "y"), GF(3))
I = Ideal(R, (R.parse("x^2 + 2*y^2"),))
print("I^[3]:                ",
      [str(g) for g in frobenius_power(I, 3).generators])

# The splitting test: R/I is F-pure iff (I^[p] : I) has a generator with a
# term whose exponents all stay below p.
rep = fedder_fpure(Ideal(R, (R.parse("x*y"),)), 3)
print("x*y at p=3 is F-pure: ", rep.f_pure, "certificate:", rep.certificate)

ver = toric_ideal_lattice(veronese_map(2, 3), GF(2))
print("Veronese (2,3), p=2:  ", fedder_fpure(ver, 2).f_pure)

targets = ((4, 0), (3, 1), (1, 3), (0, 4))
for p in (2, 3, 5):
    curve = toric_ideal_lattice(monomial_algebra_map(targets), GF(p))
    print(f"curve algebra, p={p}:   F-pure = {fedder_fpure(curve, p).f_pure}")

# The failure has a combinatorial explanation inside the exponent
# semigroup: x^(6,2) lies in the ring, x^(4,0) generates a monomial ideal,
# and membership of the quotient requires the residual (2,2) -- a hole.
sg = AffineSemigroup(targets)
print("\n(2,2) reachable:      ", semigroup_member(sg, (2, 2))[0])
print("(4,4) reachable via:  ", semigroup_member(sg, (4, 4))[1])
print("x^(6,2) in (x^(4,0)): ", monomial_ideal_member(sg, (6, 2), (4, 0)))
for p in (2, 3, 5):
    print(f"p-fold version, p={p}:  ",
          monomial_ideal_member(sg, (6 * p, 2 * p), (4 * p, 0)))
