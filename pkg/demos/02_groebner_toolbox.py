"""The Groebner toolbox: canonical reduced bases, membership, elimination,
colon and saturation, and radical membership with a least-exponent witness.

Run:  python3 demos/02_groebner_toolbox.py
"""
from __future__ import annotations

from veronese import (
    Ideal, Lex, PolyRing, QQ, buchberger, colon, eliminate, ideal_member,
    normal_form, radical_member, saturate,
)

R = PolyRing(("x", "y"), QQ)
I = Ideal(R, (R.parse("x*y - 1"), R.parse("y^2 - 1")))

# The reduced basis is canonical: same ideal, same order => same elements.
gb = buchberger(I, Lex())
print("lex basis:            ", [str(g) for g in gb.elements])

# Normal forms give decidable membership.
print("x - y is a member:    ", ideal_member(R.parse("x - y"), gb))
print("x + 1 reduces to:     ", normal_form(R.parse("x + 1"), gb))

# Elimination projects onto a subring: here the parametrization
# t1 = s^2, t2 = s^3 yields the cusp relation.
S = PolyRing(("s", "t1", "t2"), QQ)
P = Ideal(S, (S.parse("t1 - s^2"), S.parse("t2 - s^3")))
E = eliminate(P, {0})
print("cusp relation:        ", [str(g) for g in E.generators],
      "in", E.ring.names)

# Colon and saturation strip a chosen component.
A = Ideal(R, (R.parse("x^2*y"),))
print("colon by x:           ",
      [str(g) for g in colon(A, R.parse("x")).generators])
print("saturation by x:      ",
      [str(g) for g in saturate(A, R.parse("x")).generators])

# Radical membership comes with the least power that lands inside.
T = PolyRing(("t1", "t2", "t3", "t4"), QQ)
quartic = Ideal(T, tuple(T.parse(t) for t in (
    "t2*t3 - t1*t4", "t2^3 - t1^2*t3", "t3^3 - t2*t4^2",
    "t1*t3^2 - t2^2*t4", "t1", "t4")))
for name in ("t2", "t3"):
    member, e = radical_member(T.parse(name), quartic)
    print(f"{name} in the radical:    {member} (least exponent {e})")
