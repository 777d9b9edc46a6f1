"""Finite-dimensional representation arithmetic over exact integers.

Provides the Weyl dimension formula, full weight systems with Freudenthal
multiplicities, and decomposition of exterior/symmetric squares of irreducible
parabolic representations by iterated highest-weight stripping.

For squares of bundle weights the whole computation is done in the *ambient*
weight lattice: the weights of an irreducible P-representation are obtained by
subtracting unmarked simple roots from its highest weight, so the marked-node
coordinate of every constituent (and hence its twist) falls out of the
bookkeeping with no separate first-Chern-class matching step.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .parabolic import (
    MarkedDatum,
    branch_to_levi,
    is_bundle_weight,
    levi_diagram,
)
from .rootsystem import RootDatum, Weight, highest_root

DEFAULT_DIM_CEILING = 5000

EXTERIOR = "exterior"
SYMMETRIC = "symmetric"


class DimensionCeilingError(RuntimeError):
    """A requested representation exceeds the configured dimension ceiling."""


class InternalConsistencyError(ArithmeticError):
    """Weight arithmetic produced an impossible state (negative multiplicity)."""


@dataclass(frozen=True)
class WeightSystem:
    """Finite weight multiset of an irreducible representation.

    ``entries`` maps each weight (fundamental coordinates) to its positive
    multiplicity; ``offsets`` records lambda - mu in simple-root coordinates.
    """

    highest: Weight
    entries: dict
    offsets: dict
    total_dim: int


@dataclass(frozen=True)
class Piece:
    """One summand E_{weight}(twist), i.e. E_{weight + twist*lambda0}."""

    weight: Weight
    twist: int
    mult: int
    dim: int

    def full_weight(self, lambda0: Weight) -> Weight:
        return tuple(w + self.twist * l for w, l in zip(self.weight, lambda0))

    def to_json(self) -> dict:
        return {
            "weight": list(self.weight),
            "twist": self.twist,
            "mult": self.mult,
            "dim": self.dim,
        }


@dataclass(frozen=True)
class Decomposition:
    pieces: tuple

    @property
    def total_dim(self) -> int:
        return sum(p.mult * p.dim for p in self.pieces)

    def to_json(self) -> dict:
        return {"pieces": [p.to_json() for p in self.pieces]}


def weyl_dim(datum: RootDatum, lam: Weight) -> int:
    """Exact dimension of the irreducible with dominant highest weight lam."""
    if any(a < 0 for a in lam):
        raise ValueError(f"{lam} is not dominant")
    dd = datum.root_half_norms
    num = 1
    den = 1
    for alpha in datum.positive_roots:
        num *= sum(c * dd[j] * (lam[j] + 1) for j, c in enumerate(alpha))
        den *= sum(c * dd[j] for j, c in enumerate(alpha))
    if num % den:
        raise ArithmeticError("Weyl dimension formula gave a non-integer")
    return num // den


def weight_system(
    datum: RootDatum, lam: Weight, ceiling: int = DEFAULT_DIM_CEILING
) -> WeightSystem:
    """Full weight multiset of V_lam with Freudenthal multiplicities.

    The weight set is generated level by level (level = height of lam - mu):
    mu - alpha_i is a weight iff p + <mu, alpha_i^vee> >= 1 where p is the
    length of the upward alpha_i-string through mu.  Multiplicities then come
    from Freudenthal's recursion, evaluated with exact integer arithmetic:

        ((lam+delta, lam+delta) - (mu+delta, mu+delta)) m_mu
            = 2 sum_{alpha>0} sum_{k>=1} m_{mu+k alpha} (mu + k alpha, alpha)
    """
    dim = weyl_dim(datum, lam)
    if dim > ceiling:
        raise DimensionCeilingError(
            f"dim V_{lam} = {dim} exceeds the ceiling {ceiling}"
        )
    rank = datum.rank
    alpha_w = [datum.simple_root_weight(i + 1) for i in range(rank)]

    info: dict[Weight, tuple[int, tuple[int, ...]]] = {lam: (0, (0,) * rank)}
    current = [lam]
    while current:
        nxt = []
        for w in current:
            lev, off = info[w]
            for i in range(rank):
                p = 0
                up = w
                while True:
                    up = tuple(up[j] + alpha_w[i][j] for j in range(rank))
                    if up in info:
                        p += 1
                    else:
                        break
                if p + w[i] >= 1:
                    down = tuple(w[j] - alpha_w[i][j] for j in range(rank))
                    if down not in info:
                        noff = list(off)
                        noff[i] += 1
                        info[down] = (lev + 1, tuple(noff))
                        nxt.append(down)
        current = nxt

    dd = datum.root_half_norms
    pos = [
        (alpha, datum.root_weight(alpha), 2 * datum.root_norm(alpha))
        for alpha in datum.positive_roots
    ]
    mult: dict[Weight, int] = {}
    for w, (lev, off) in sorted(info.items(), key=lambda kv: kv[1][0]):
        if lev == 0:
            mult[w] = 1
            continue
        num = 0
        for alpha, aw, aa in pos:
            base = datum.form(w, alpha)
            k = 1
            up = tuple(w[j] + aw[j] for j in range(rank))
            while up in mult:
                num += mult[up] * (base + k * aa)
                k += 1
                up = tuple(up[j] + aw[j] for j in range(rank))
        den = sum(
            off[j] * dd[j] * (lam[j] + w[j] + 2) for j in range(rank)
        )
        if den <= 0 or (2 * num) % den:
            raise InternalConsistencyError(
                f"Freudenthal recursion failed at weight {w}"
            )
        mult[w] = (2 * num) // den

    total = sum(mult.values())
    if total != dim:
        raise InternalConsistencyError(
            f"weight multiplicities sum to {total}, Weyl dimension is {dim}"
        )
    offsets = {w: off for w, (lev, off) in info.items()}
    return WeightSystem(highest=lam, entries=mult, offsets=offsets, total_dim=dim)


def _square_multiset(items, kind):
    """Weight multiset of the exterior or symmetric square of a multiset."""
    if kind not in (EXTERIOR, SYMMETRIC):
        raise ValueError(f"kind must be {EXTERIOR!r} or {SYMMETRIC!r}")
    items = sorted(items)
    out: dict = {}
    for a in range(len(items)):
        wa, ma = items[a]
        diag = ma * (ma - 1) // 2 if kind == EXTERIOR else ma * (ma + 1) // 2
        if diag:
            key = tuple(2 * x for x in wa)
            out[key] = out.get(key, 0) + diag
        for b in range(a + 1, len(items)):
            wb, mb = items[b]
            key = tuple(x + y for x, y in zip(wa, wb))
            out[key] = out.get(key, 0) + ma * mb
    return out


@lru_cache(maxsize=None)
def _height_vector(datum: RootDatum):
    """Vector h with h . w = total height of w (sum of simple-root coords).

    Solves C h = (1,...,1) exactly; total_height(w) = sum_i c_i where
    C^T c = w.  Every simple root has height one, so this is the monotone
    level function used to order constituent stripping.
    """
    n = datum.rank
    a = [[Fraction(datum.cartan[i][j]) for j in range(n)] + [Fraction(1)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(a[i][n] for i in range(n))


def total_height(datum: RootDatum, w: Weight) -> Fraction:
    h = _height_vector(datum)
    return sum(hi * wi for hi, wi in zip(h, w))


def square_decompose_simple(
    datum: RootDatum, lam: Weight, kind: str, ceiling: int = DEFAULT_DIM_CEILING
):
    """Decompose the exterior/symmetric square of V_lam for a single simple
    type; returns a list of Piece with twist = 0.

    Stripping loop: among weights still present, the one of maximal total
    height (ties broken lexicographically) is a highest weight of a
    constituent; subtract its full weight system and repeat.
    """
    ws = weight_system(datum, lam, ceiling)
    remaining = _square_multiset(list(ws.entries.items()), kind)
    pieces = []
    while remaining:
        best = max(
            remaining, key=lambda w: (total_height(datum, w), w)
        )
        mult = remaining[best]
        if mult < 0 or any(x < 0 for x in best):
            raise InternalConsistencyError(
                f"stripping selected an invalid highest weight {best}"
            )
        bws = weight_system(datum, best, ceiling)
        for w2, m2 in bws.entries.items():
            val = remaining.get(w2, 0) - mult * m2
            if val < 0:
                raise InternalConsistencyError(
                    f"negative multiplicity at {w2} while stripping {best}"
                )
            if val == 0:
                remaining.pop(w2, None)
            else:
                remaining[w2] = val
        pieces.append(Piece(weight=best, twist=0, mult=mult, dim=bws.total_dim))
    pieces.sort(key=lambda p: (-total_height(datum, p.weight), p.weight))
    return pieces


def bundle_rank(md: MarkedDatum, w: Weight) -> int:
    """Rank of the irreducible bundle E_w: product of Levi factor dimensions."""
    comp_weights, _ = branch_to_levi(md, w)
    levi = levi_diagram(md)
    rank = 1
    for comp, cw in zip(levi.components, comp_weights):
        rank *= weyl_dim(comp.datum, cw)
    return rank


def ambient_weight_system(
    md: MarkedDatum, lam: Weight, ceiling: int = DEFAULT_DIM_CEILING
) -> dict:
    """Weights of the irreducible P-representation E_lam in ambient
    fundamental coordinates (full Cartan of g), with multiplicities.

    These are lam minus non-negative combinations of *unmarked* simple roots;
    multiplicities come from the product of the Levi factor weight systems.
    """
    comp_weights, _center = branch_to_levi(md, lam)
    levi = levi_diagram(md)
    ambient = md.ambient
    n = ambient.rank

    total = 1
    systems = []
    for comp, cw in zip(levi.components, comp_weights):
        ws = weight_system(comp.datum, cw, ceiling)
        total *= ws.total_dim
        if total > ceiling:
            raise DimensionCeilingError(
                f"product dimension exceeds the ceiling {ceiling}"
            )
        systems.append((comp, ws))

    out = {lam: 1}
    for comp, ws in systems:
        nxt: dict = {}
        for w, m in out.items():
            for off, m2 in (
                (ws.offsets[u], ws.entries[u]) for u in ws.entries
            ):
                shifted = list(w)
                for local, k in enumerate(off):
                    if k:
                        node = comp.ambient_nodes[local]
                        aw = ambient.simple_root_weight(node)
                        for j in range(n):
                            shifted[j] -= k * aw[j]
                key = tuple(shifted)
                nxt[key] = nxt.get(key, 0) + m * m2
        out = nxt
    if sum(out.values()) != total:
        raise InternalConsistencyError("ambient weight lift lost multiplicity")
    return out


def _fold_twist(md: MarkedDatum, w: Weight, lambda0: Weight):
    """Canonical (weight, twist) with the marked coordinate moved into the
    twist when the weight is an exact multiple of lambda0 along that node."""
    k = md.marked_node - 1
    if w[k] % lambda0[k] == 0:
        t = w[k] // lambda0[k]
        reduced = tuple(a - t * b for a, b in zip(w, lambda0))
        return reduced, t
    return w, 0


def square_decompose(
    md: MarkedDatum, lam: Weight, kind: str, ceiling: int = DEFAULT_DIM_CEILING
) -> Decomposition:
    """Decompose the exterior/symmetric square of the bundle E_lam into
    irreducible pieces E_{w}(t), twists read off the marked-node bookkeeping.
    """
    ambient = md.ambient
    lambda0 = highest_root(ambient)
    aws = ambient_weight_system(md, lam, ceiling)
    d = sum(aws.values())
    expected = d * (d - 1) // 2 if kind == EXTERIOR else d * (d + 1) // 2
    remaining = _square_multiset(list(aws.items()), kind)
    pieces = []
    while remaining:
        best = max(
            remaining, key=lambda w: (total_height(ambient, w), w)
        )
        mult = remaining[best]
        if mult < 0 or not is_bundle_weight(md, best):
            raise InternalConsistencyError(
                f"stripping selected an invalid bundle weight {best}"
            )
        bws = ambient_weight_system(md, best, max(ceiling, expected))
        for w2, m2 in bws.items():
            val = remaining.get(w2, 0) - mult * m2
            if val < 0:
                raise InternalConsistencyError(
                    f"negative multiplicity at {w2} while stripping {best}"
                )
            if val == 0:
                remaining.pop(w2, None)
            else:
                remaining[w2] = val
        weight, twist = _fold_twist(md, best, lambda0)
        pieces.append(
            Piece(weight=weight, twist=twist, mult=mult, dim=bundle_rank(md, best))
        )
    dec = Decomposition(pieces=tuple(pieces))
    if dec.total_dim != expected:
        raise InternalConsistencyError(
            f"square decomposition dims sum to {dec.total_dim}, expected {expected}"
        )
    return dec
