"""Root systems and the shifted Weyl action.

Builds the combinatorial data of a few simple types, prints their positive
roots in both coordinate systems, and walks a weight through the chamber
reduction that underlies every cohomology computation in this package.
"""

from adjvar.rootsystem import build_datum, dim_g, highest_root, weyl_vector
from adjvar.weylgroup import dot_classify, simple_reflection

print("=" * 70)
print("Positive roots of G2 (simple-root coords -> fundamental coords)")
print("=" * 70)
g2 = build_datum("G", 2)
for coords in g2.positive_roots:
    print(f"  {coords}  ->  {g2.root_weight(coords)}")
print(f"highest root: {highest_root(g2)}   dim g2 = {dim_g(g2)}")
print(f"Weyl vector delta = {weyl_vector(g2)}")

print()
print("=" * 70)
print("Root counts across the types used in the adjoint-variety table")
print("=" * 70)
for letter, rank in [("B", 3), ("D", 4), ("E", 6), ("E", 7), ("E", 8), ("F", 4)]:
    d = build_datum(letter, rank)
    print(
        f"  {letter}{rank}: {len(d.positive_roots):>4} positive roots, "
        f"dim g = {dim_g(d)}"
    )

print()
print("=" * 70)
print("Chamber reduction (the dot action) on P^3 line bundles")
print("=" * 70)
a3 = build_datum("A", 3)
for deg in range(-6, 3):
    res = dot_classify(a3, (deg, 0, 0))
    if res.is_regular:
        print(
            f"  O({deg:>3}): regular of index {res.index_p}, "
            f"dominant weight {res.dominant_weight}"
        )
    else:
        print(f"  O({deg:>3}): singular (all cohomology vanishes)")

print()
print("A2 sanity: s1 reflects lambda1 to -lambda1 + lambda2:",
      simple_reflection(build_datum("A", 2), 1, (1, 0)))
