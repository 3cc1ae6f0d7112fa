"""Krull dimension through initial ideals, and the closed-form graded pieces
of top local cohomology of polynomial rings and their Veronese subrings.

Run:  python3 demos/05_dimension_and_graded_pieces.py
"""
from __future__ import annotations

from veronese import (
    Ideal, PolyRing, QQ, hilbert_piece, krull_dim, lc_top_piece,
    toric_ideal_lattice, veronese_lc_piece, veronese_map,
)

# Dimension of a quotient ring = dimension of the initial monomial ideal,
# computed from coordinate subspaces.
I = toric_ideal_lattice(veronese_map(2, 4))
res = krull_dim(I)
print("degree-4 Veronese of a plane:")
print("  ambient variables:  ", len(I.ring.names))
print("  dimension:          ", res.dimension)
print("  height:             ", res.height)

R = PolyRing(("u", "v", "w", "x", "y", "z"), QQ)
minors = Ideal(R, tuple(R.parse(t) for t in
                        ("v*z - w*y", "w*x - u*z", "u*y - v*x")))
print("generic 2x3 minors:    height", krull_dim(minors).height)

# For a polynomial ring in k variables the top local cohomology at the
# graded maximal ideal is dual to the ring itself, degree by degree:
#   dim H^k_j = dim R_{-j-k}.
print("\nduality table for k = 3:")
print("  j     dim H^3_j   dim R_(-j-3)")
for j in range(-6, 0):
    print(f"  {j:3}   {lc_top_piece(3, j).dimension:9}   "
          f"{hilbert_piece(3, -j - 3):12}")

# A Veronese subring keeps only every n-th graded piece; in particular the
# degree-0 piece of the top module vanishes, which is the mechanical half
# of the vanishing arguments assembled in the certificates.
print("\nVeronese pieces (k=2, n=4):")
for j in (-2, -1, 0, 1):
    piece = veronese_lc_piece(2, 4, 2, j)
    print(f"  H^2 piece at j={j:2}:  dimension {piece.dimension}")
