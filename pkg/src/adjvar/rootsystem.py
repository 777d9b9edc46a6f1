"""Static root-system data for the simple Lie types A-G in Bourbaki numbering.

Node numbering (Bourbaki).  Simple roots are numbered as follows, with a
double/triple edge drawn as an arrow pointing toward the shorter root::

    A_n   1 - 2 - ... - n
    B_n   1 - 2 - ... - (n-1) => n          (alpha_n is short)
    C_n   1 - 2 - ... - (n-1) <= n          (alpha_n is long)
    D_n   1 - 2 - ... - (n-2) - (n-1)
                          |
                          n
    E_n   1 - 3 - 4 - 5 - 6 [- 7 [- 8]]
                  |
                  2
    F_4   1 - 2 => 3 - 4                    (alpha_3, alpha_4 are short)
    G_2   1 <= 2                            (triple edge; alpha_1 is short)

Conventions.  The Cartan matrix is stored with rows indexed by simple roots:
``cartan[i][j] = <alpha_i, alpha_j^vee>``, so the fundamental-weight
coordinates of the simple root ``alpha_i`` are the i-th *row* of the matrix.
This matches the printed Bourbaki tables (e.g. G2 is ``[[2,-1],[-3,2]]``).
Weights are integer vectors in the fundamental-weight basis; roots are kept in
simple-root coordinates with explicit conversion through the Cartan matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

Weight = tuple[int, ...]
RootCoords = tuple[int, ...]

#: ranks accepted for the classical families unless the caller raises the bound
DEFAULT_MAX_CLASSICAL_RANK = 10

_VALID_RANKS = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 4,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}

#: dim(g) per type, used as an internal consistency check on root generation
_DIM_FORMULA = {
    "A": lambda n: (n + 1) ** 2 - 1,
    "B": lambda n: n * (2 * n + 1),
    "C": lambda n: n * (2 * n + 1),
    "D": lambda n: n * (2 * n - 1),
    "E": lambda n: {6: 78, 7: 133, 8: 248}[n],
    "F": lambda n: 52,
    "G": lambda n: 14,
}


class InvalidTypeError(ValueError):
    """Raised for a (letter, rank) pair that is not a supported simple type."""


@dataclass(frozen=True)
class RootDatum:
    """Immutable combinatorial data of a simple Lie type.

    ``cartan[i][j] = <alpha_i, alpha_j^vee>`` (0-indexed internally, nodes are
    1-indexed in the public API).  ``symmetrizers`` are the positive integers
    d_i, proportional to the coroot half-norms, making diag(d) * cartan
    symmetric positive definite.  ``positive_roots`` are simple-root
    coordinate vectors, sorted by height then lexicographically.
    """

    letter: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    symmetrizers: tuple[int, ...]
    positive_roots: tuple[RootCoords, ...]

    @property
    def root_half_norms(self) -> tuple[int, ...]:
        """(alpha_i, alpha_i)/2 scaled to coprime integers (short roots = 1)."""
        big = lcm(*self.symmetrizers)
        return tuple(big // d for d in self.symmetrizers)

    def simple_root_weight(self, i: int) -> Weight:
        """Fundamental-weight coordinates of alpha_i (1-indexed node)."""
        return self.cartan[i - 1]

    def root_weight(self, coords: RootCoords) -> Weight:
        """Convert simple-root coordinates to fundamental-weight coordinates."""
        return tuple(
            sum(c * self.cartan[i][j] for i, c in enumerate(coords))
            for j in range(self.rank)
        )

    @property
    def positive_root_weights(self) -> tuple[Weight, ...]:
        return tuple(self.root_weight(c) for c in self.positive_roots)

    def form(self, w: Weight, root: RootCoords):
        """Symmetric bilinear form (w, alpha) for w in fundamental coordinates
        and alpha in simple-root coordinates (integer-scaled, short norm 2)."""
        dd = self.root_half_norms
        return sum(c * dd[j] * w[j] for j, c in enumerate(root))

    def root_norm(self, root: RootCoords) -> int:
        """(alpha, alpha)/2 in the same integer scaling as root_half_norms."""
        m = self.root_weight(root)
        dd = self.root_half_norms
        half = sum(c * dd[j] * m[j] for j, c in enumerate(root))
        if half % 2:
            raise ArithmeticError(f"odd root norm for {root}")
        return half // 2

    def to_json(self) -> dict:
        return {"type": self.letter, "rank": self.rank}


def _cartan_matrix(letter: str, rank: int) -> list[list[int]]:
    """Bourbaki Cartan matrix with rows = simple roots."""
    c = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def edge(i, j, cij=-1, cji=-1):
        c[i - 1][j - 1] = cij
        c[j - 1][i - 1] = cji

    if letter in "ABC":
        for i in range(1, rank):
            edge(i, i + 1)
        if letter == "B" and rank >= 2:
            edge(rank - 1, rank, -2, -1)  # alpha_n short
        if letter == "C" and rank >= 2:
            edge(rank - 1, rank, -1, -2)  # alpha_n long
    elif letter == "D":
        for i in range(1, rank - 1):
            edge(i, i + 1)
        edge(rank - 2, rank)
    elif letter == "E":
        for i, j in [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)]:
            edge(i, j)
        for i in range(6, rank):
            edge(i, i + 1)
    elif letter == "F":
        edge(1, 2)
        edge(2, 3, -2, -1)  # alpha_3 short
        edge(3, 4)
    elif letter == "G":
        edge(1, 2, -1, -3)  # alpha_1 short
    return c


def _symmetrizers(cartan: list[list[int]]) -> tuple[int, ...]:
    """Positive integers d_i with diag(d)*C symmetric, spread over the diagram."""
    rank = len(cartan)
    d = [Fraction(0)] * rank
    d[0] = Fraction(1)
    pending = [0]
    while pending:
        i = pending.pop()
        for j in range(rank):
            if i != j and cartan[i][j] != 0 and d[j] == 0:
                # d_i * C[i][j] = d_j * C[j][i]
                d[j] = d[i] * cartan[i][j] / cartan[j][i]
                pending.append(j)
    if any(x == 0 for x in d):
        raise InvalidTypeError("disconnected Dynkin diagram")
    big = lcm(*(x.denominator for x in d))
    ints = [int(x * big) for x in d]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints)


def _generate_positive_roots(cartan) -> list[RootCoords]:
    """Close the simple roots under root strings, level by level.

    A root alpha at height h satisfies: alpha + alpha_i is a root iff
    p - <alpha, alpha_i^vee> >= 1, where p is the number of times alpha_i can
    be subtracted from alpha while staying a root.
    """
    rank = len(cartan)
    simple = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    known: set[RootCoords] = set(simple)
    level = list(simple)
    out: list[RootCoords] = list(simple)
    guard = 0
    while level:
        guard += 1
        if guard > 4 * len(out) + rank:
            raise ArithmeticError("root generation failed to terminate")
        nxt: list[RootCoords] = []
        for alpha in level:
            m = [sum(c * cartan[i][j] for i, c in enumerate(alpha)) for j in range(rank)]
            for i in range(rank):
                p = 0
                down = list(alpha)
                while True:
                    down[i] -= 1
                    if tuple(down) in known:
                        p += 1
                    else:
                        break
                if p - m[i] >= 1:
                    up = list(alpha)
                    up[i] += 1
                    t = tuple(up)
                    if t not in known:
                        known.add(t)
                        nxt.append(t)
                        out.append(t)
        level = nxt
    out.sort(key=lambda r: (sum(r), r))
    return out


@lru_cache(maxsize=None)
def _build_datum_cached(letter: str, rank: int) -> RootDatum:
    cartan = _cartan_matrix(letter, rank)
    datum = RootDatum(
        letter=letter,
        rank=rank,
        cartan=tuple(tuple(row) for row in cartan),
        symmetrizers=_symmetrizers(cartan),
        positive_roots=tuple(_generate_positive_roots(cartan)),
    )
    _check_datum(datum)
    return datum


def _check_datum(datum: RootDatum) -> None:
    n = datum.rank
    c = datum.cartan
    for i in range(n):
        if c[i][i] != 2:
            raise ArithmeticError("diagonal of Cartan matrix must be 2")
        for j in range(n):
            if i != j and (c[i][j] > 0 or c[i][j] < -3 or (c[i][j] == 0) != (c[j][i] == 0)):
                raise ArithmeticError("invalid off-diagonal Cartan entry")
    expected = (_DIM_FORMULA[datum.letter](n) - n) // 2
    if len(datum.positive_roots) != expected:
        raise ArithmeticError(
            f"{datum.letter}{n}: generated {len(datum.positive_roots)} positive "
            f"roots, expected {expected}"
        )
    # sum of all positive roots must be 2*delta
    total = [0] * n
    for w in datum.positive_root_weights:
        for j in range(n):
            total[j] += w[j]
    if tuple(total) != tuple(2 for _ in range(n)):
        raise ArithmeticError("sum of positive roots is not 2*delta")


def build_datum(letter: str, rank: int, max_classical_rank: int = DEFAULT_MAX_CLASSICAL_RANK) -> RootDatum:
    """Build the root datum of a simple type, validating (letter, rank).

    Classical families accept ranks up to ``max_classical_rank``;
    exceptional types have fixed rank.
    """
    letter = letter.upper()
    if letter not in _VALID_RANKS:
        raise InvalidTypeError(f"unknown type letter {letter!r}; expected one of A-G")
    if not isinstance(rank, int) or not _VALID_RANKS[letter](rank):
        raise InvalidTypeError(
            f"rank {rank} is invalid for type {letter} "
            "(A: rank>=1, B: >=2, C: >=2, D: >=4, E: 6-8, F: 4, G: 2)"
        )
    if letter in "ABCD" and rank > max_classical_rank:
        raise InvalidTypeError(
            f"classical rank {rank} exceeds the configured ceiling {max_classical_rank}"
        )
    return _build_datum_cached(letter, rank)


def weyl_vector(datum: RootDatum) -> Weight:
    """delta = sum of all fundamental weights: the all-ones vector."""
    return tuple(1 for _ in range(datum.rank))


def highest_root(datum: RootDatum) -> Weight:
    """The unique root maximal in the root order, in fundamental coordinates."""
    best = max(datum.positive_roots, key=sum)
    top = sum(best)
    if sum(1 for r in datum.positive_roots if sum(r) == top) != 1:
        raise ArithmeticError("highest root is not unique")
    return datum.root_weight(best)


def highest_root_coords(datum: RootDatum) -> RootCoords:
    """Simple-root coordinates of the highest root."""
    return max(datum.positive_roots, key=sum)


def pairing(datum: RootDatum, w: Weight, coroot_index: int) -> int:
    """<w, alpha^vee> for the coroot of the positive root with this index.

    The coroot is expanded in simple coroots: <w, alpha^vee> =
    2 (w, alpha) / (alpha, alpha), evaluated exactly.
    """
    if not 0 <= coroot_index < len(datum.positive_roots):
        raise IndexError(
            f"coroot index {coroot_index} out of range 0..{len(datum.positive_roots)-1}"
        )
    alpha = datum.positive_roots[coroot_index]
    num = datum.form(w, alpha)
    den = datum.root_norm(alpha)
    if num % den:
        raise ArithmeticError("non-integral pairing")
    return num // den


def dim_g(datum: RootDatum) -> int:
    """Dimension of the Lie algebra: rank + 2 * number of positive roots."""
    return datum.rank + 2 * len(datum.positive_roots)
