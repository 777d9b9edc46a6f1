"""Bott-Borel-Weil cohomology of irreducible homogeneous bundles on G/P.

For an irreducible bundle E_lam the cohomology is either zero in all degrees
(lam + delta singular) or concentrated in a single degree p (lam + delta
regular of index p), where it is the irreducible g-representation with highest
weight w(lam + delta) - delta.  Sums of bundles produce per-degree dimension
tables by additivity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .parabolic import MarkedDatum, is_bundle_weight, nilradical_size
from .repcalc import Decomposition, weyl_dim
from .rootsystem import Weight, highest_root
from .weylgroup import dot_classify

ALL_ZERO = "zero"
CONCENTRATED = "concentrated"


@dataclass(frozen=True)
class CohomologyResult:
    kind: str
    degree: int = 0
    top_weight: Weight | None = None
    dim: int = 0

    @property
    def is_zero(self) -> bool:
        return self.kind == ALL_ZERO

    def h(self, i: int) -> int:
        """Dimension of H^i."""
        if self.is_zero or i != self.degree:
            return 0
        return self.dim

    def to_json(self) -> dict:
        if self.is_zero:
            return {"kind": ALL_ZERO}
        return {
            "kind": CONCENTRATED,
            "degree": self.degree,
            "top_weight": list(self.top_weight),
            "dim": self.dim,
        }


def cohomology(md: MarkedDatum, lam: Weight) -> CohomologyResult:
    """All sheaf cohomology of E_lam on G/P(alpha_marked)."""
    if not is_bundle_weight(md, lam):
        raise ValueError(
            f"{lam} is not a bundle weight for the parabolic at node {md.marked_node}"
        )
    res = dot_classify(md.ambient, lam)
    if not res.is_regular:
        return CohomologyResult(kind=ALL_ZERO)
    degree = res.index_p
    if degree > nilradical_size(md):
        raise ArithmeticError(
            f"BBW degree {degree} exceeds dim G/P = {nilradical_size(md)}"
        )
    top = res.dominant_weight
    return CohomologyResult(
        kind=CONCENTRATED,
        degree=degree,
        top_weight=top,
        dim=weyl_dim(md.ambient, top),
    )


def cohomology_of_decomposition(
    md: MarkedDatum, dec: Decomposition, contact_weight: Weight | None = None
) -> dict[int, int]:
    """Per-degree dimension table for a formal sum of twisted pieces."""
    lambda0 = contact_weight if contact_weight is not None else highest_root(md.ambient)
    table: dict[int, int] = {}
    for piece in dec.pieces:
        full = piece.full_weight(lambda0)
        res = cohomology(md, full)
        if not res.is_zero:
            table[res.degree] = table.get(res.degree, 0) + piece.mult * res.dim
    return dict(sorted(table.items()))


def table_to_json(table: dict[int, int]) -> dict:
    return {"h": [{"i": i, "dim": d} for i, d in sorted(table.items())]}
