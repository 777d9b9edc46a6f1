import random

import pytest

from adjvar.parabolic import MarkedDatum
from adjvar.repcalc import (
    EXTERIOR,
    SYMMETRIC,
    DimensionCeilingError,
    ambient_weight_system,
    bundle_rank,
    square_decompose,
    square_decompose_simple,
    weight_system,
    weyl_dim,
)
from adjvar.rootsystem import build_datum
from adjvar.weylgroup import simple_reflection


def test_weyl_dim_a1():
    d = build_datum("A", 1)
    for m in range(6):
        assert weyl_dim(d, (m,)) == m + 1


def test_weyl_dim_g2_adjoint_is_dim_g():
    assert weyl_dim(build_datum("G", 2), (0, 1)) == 14


def test_weyl_dim_e8_adjoint():
    assert weyl_dim(build_datum("E", 8), (0,) * 7 + (1,)) == 248


def test_weyl_dim_rejects_non_dominant():
    with pytest.raises(ValueError):
        weyl_dim(build_datum("A", 2), (-1, 0))


def test_weight_system_a1_adjoint():
    ws = weight_system(build_datum("A", 1), (2,))
    assert ws.entries == {(2,): 1, (0,): 1, (-2,): 1}
    assert ws.total_dim == 3


def test_weight_system_a2_adjoint():
    ws = weight_system(build_datum("A", 2), (1, 1))
    assert ws.total_dim == 8
    assert ws.entries[(0, 0)] == 2
    assert sum(1 for m in ws.entries.values() if m == 1) == 6


def test_weight_system_a5_wedge_rep():
    ws = weight_system(build_datum("A", 5), (0, 0, 1, 0, 0))
    assert ws.total_dim == 20
    assert len(ws.entries) == 20
    assert all(m == 1 for m in ws.entries.values())


def test_weight_system_ceiling():
    with pytest.raises(DimensionCeilingError):
        weight_system(build_datum("A", 3), (3, 3, 3), ceiling=100)


@pytest.mark.parametrize("letter,rank,lam", [("B", 3, (1, 0, 1)), ("G", 2, (1, 1))])
def test_weight_system_weyl_invariant(letter, rank, lam):
    d = build_datum(letter, rank)
    ws = weight_system(d, lam)
    for i in range(1, rank + 1):
        reflected = {}
        for w, m in ws.entries.items():
            reflected[simple_reflection(d, i, w)] = m
        assert reflected == ws.entries


def test_weyl_dim_matches_freudenthal_sum_random():
    rng = random.Random(42)
    data = [
        build_datum(l, r)
        for l, r in [("A", 2), ("A", 4), ("B", 3), ("C", 3), ("D", 4), ("G", 2), ("A", 6)]
    ]
    checked = 0
    while checked < 25:
        d = rng.choice(data)
        lam = tuple(rng.randint(0, 2) for _ in range(d.rank))
        if weyl_dim(d, lam) > 3000:
            continue
        ws = weight_system(d, lam)
        assert ws.total_dim == weyl_dim(d, lam)
        checked += 1


def test_wedge_square_of_a5_wedge_rep():
    pieces = square_decompose_simple(build_datum("A", 5), (0, 0, 1, 0, 0), EXTERIOR)
    got = {(p.weight, p.mult, p.dim) for p in pieces}
    assert got == {((0, 1, 0, 1, 0), 1, 189), ((0, 0, 0, 0, 0), 1, 1)}


def test_wedge_square_of_two_dim_space_is_trivial():
    pieces = square_decompose_simple(build_datum("A", 1), (1,), EXTERIOR)
    assert [(p.weight, p.mult, p.dim) for p in pieces] == [((0,), 1, 1)]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_wedge_square_of_standard_rep(n):
    lam = (1,) + (0,) * (n - 1)
    pieces = square_decompose_simple(build_datum("A", n), lam, EXTERIOR)
    mu2 = tuple(1 if i == 1 else 0 for i in range(n))
    assert [(p.weight, p.mult) for p in pieces] == [(mu2, 1)]


def test_exterior_plus_symmetric_reconstruct_tensor_square():
    rng = random.Random(3)
    data = [build_datum(l, r) for l, r in [("A", 2), ("B", 2), ("C", 3), ("G", 2)]]
    for _ in range(10):
        d = rng.choice(data)
        lam = tuple(rng.randint(0, 1) for _ in range(d.rank))
        if weyl_dim(d, lam) > 60:
            continue
        ws = weight_system(d, lam)
        ext = square_decompose_simple(d, lam, EXTERIOR)
        sym = square_decompose_simple(d, lam, SYMMETRIC)
        # tensor-square character: all pairwise sums with multiplicity
        tensor = {}
        items = list(ws.entries.items())
        for wa, ma in items:
            for wb, mb in items:
                key = tuple(a + b for a, b in zip(wa, wb))
                tensor[key] = tensor.get(key, 0) + ma * mb
        rebuilt = {}
        for piece in ext + sym:
            sub = weight_system(d, piece.weight)
            for w, m in sub.entries.items():
                rebuilt[w] = rebuilt.get(w, 0) + piece.mult * m
        assert rebuilt == tensor


def test_square_dimension_identities():
    d = build_datum("C", 3)
    lam = (1, 0, 0)
    dim = weyl_dim(d, lam)
    ext = square_decompose_simple(d, lam, EXTERIOR)
    sym = square_decompose_simple(d, lam, SYMMETRIC)
    assert sum(p.mult * p.dim for p in ext) == dim * (dim - 1) // 2
    assert sum(p.mult * p.dim for p in sym) == dim * (dim + 1) // 2


def test_bundle_square_bn_ddual():
    # wedge^2 of the contact conormal on the B4 adjoint variety: three pieces
    # whose ranks sum to (2m choose 2) with rank D = 2m = 10
    md = MarkedDatum(ambient=build_datum("B", 4), marked_node=2)
    ddual = (1, -2, 1, 0)
    dec = square_decompose(md, ddual, EXTERIOR)
    assert dec.total_dim == 45
    assert len(dec.pieces) == 3
    full = sorted(p.full_weight((0, 1, 0, 0)) for p in dec.pieces)
    assert full == [(0, -3, 2, 0), (0, -1, 0, 0), (2, -3, 0, 2)]


def test_bundle_rank_and_ambient_weights():
    md = MarkedDatum(ambient=build_datum("E", 6), marked_node=2)
    lam4 = (0, 0, 0, 1, 0, 0)
    assert bundle_rank(md, lam4) == 20
    aws = ambient_weight_system(md, lam4)
    assert sum(aws.values()) == 20
    # every weight differs from lam4 by unmarked simple roots: the marked
    # root coordinate is constant across the system
    from adjvar.repcalc import total_height

    assert max(aws, key=lambda w: total_height(md.ambient, w)) == lam4
