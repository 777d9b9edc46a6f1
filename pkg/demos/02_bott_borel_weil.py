"""Bott-Borel-Weil in action.

Checks the cohomology of line bundles on projective space against the
closed-form binomial answer, then computes the sections of the contact line
bundle on a few adjoint varieties, which recover the ambient Lie algebras.
"""

from math import comb

from adjvar.bbw import cohomology
from adjvar.parabolic import MarkedDatum
from adjvar.rootsystem import build_datum, dim_g, highest_root

print("=" * 70)
print("Line bundles on P^3 = A3/P(alpha_1): BBW vs the binomial formula")
print("=" * 70)
md = MarkedDatum(ambient=build_datum("A", 3), marked_node=1)
for d in range(-6, 5):
    res = cohomology(md, (d, 0, 0))
    if res.is_zero:
        left = "H^* = 0"
    else:
        left = f"h^{res.degree} = {res.dim}"
    if d >= 0:
        right = f"binom({3+d},3) = {comb(3+d, 3)}"
    elif d <= -4:
        right = f"binom({-d-1},3) = {comb(-d-1, 3)}"
    else:
        right = "0"
    print(f"  O({d:>3}): {left:<12}  oracle: {right}")

print()
print("=" * 70)
print("Sections of the contact line bundle = the Lie algebra itself")
print("=" * 70)
for letter, rank, node in [("G", 2, 2), ("F", 4, 1), ("E", 6, 2), ("E", 8, 8)]:
    datum = build_datum(letter, rank)
    md = MarkedDatum(ambient=datum, marked_node=node)
    res = cohomology(md, highest_root(datum))
    print(
        f"  {letter}{rank}: h^0(O_X(1)) = {res.dim}   (dim g = {dim_g(datum)})"
    )

print()
print("=" * 70)
print("A bundle with cohomology in the middle: Omega^1 pieces on P^2")
print("=" * 70)
md = MarkedDatum(ambient=build_datum("A", 2), marked_node=1)
# E_{-2 lambda1 + lambda2} is Omega^1_{P^2}; its twists sweep the column
for t in range(-2, 5):
    lam = (-2 + t, 1)
    res = cohomology(md, lam)
    label = f"Omega^1({t})"
    if res.is_zero:
        print(f"  {label:<12} -> zero")
    else:
        print(f"  {label:<12} -> h^{res.degree} = {res.dim}")
