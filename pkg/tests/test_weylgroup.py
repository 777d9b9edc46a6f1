import random

import pytest

from adjvar.rootsystem import build_datum
from adjvar.weylgroup import (
    dot_classify,
    regular_index_oracle,
    simple_reflection,
)


def test_a2_reflection_of_fundamental_weight():
    d = build_datum("A", 2)
    assert simple_reflection(d, 1, (1, 0)) == (-1, 1)


def test_dn_reflection_matches_contact_weight():
    # s_2(lambda_2) = lambda_1 - lambda_2 + lambda_3 away from the D4 fork
    for n in (5, 6, 7):
        d = build_datum("D", n)
        lam2 = tuple(1 if i == 1 else 0 for i in range(n))
        expected = tuple({0: 1, 1: -1, 2: 1}.get(i, 0) for i in range(n))
        assert simple_reflection(d, 2, lam2) == expected
    # the fork of D4 adds the fourth node
    d4 = build_datum("D", 4)
    assert simple_reflection(d4, 2, (0, 1, 0, 0)) == (1, -1, 1, 1)


def test_reflection_fixes_zero_coordinate():
    d = build_datum("F", 4)
    w = (3, 0, -1, 2)
    assert simple_reflection(d, 2, w) == w


def test_reflection_involution_randomized():
    rng = random.Random(101)
    data = [build_datum(l, r) for l, r in [("A", 3), ("B", 4), ("G", 2), ("E", 6)]]
    for _ in range(1000):
        d = rng.choice(data)
        w = tuple(rng.randint(-6, 6) for _ in range(d.rank))
        i = rng.randint(1, d.rank)
        assert simple_reflection(d, i, simple_reflection(d, i, w)) == w


def test_reflection_index_out_of_range():
    d = build_datum("A", 2)
    with pytest.raises(IndexError):
        simple_reflection(d, 3, (0, 0))


def test_dominant_weight_is_regular_index_zero():
    d = build_datum("E", 6)
    lam = (1, 0, 2, 0, 0, 3)
    res = dot_classify(d, lam)
    assert res.is_regular and res.index_p == 0 and res.dominant_weight == lam


def test_minus_delta_is_singular():
    d = build_datum("B", 3)
    res = dot_classify(d, (-1, -1, -1))
    assert not res.is_regular


def test_p1_degree_minus_two():
    d = build_datum("A", 1)
    res = dot_classify(d, (-2,))
    assert res.is_regular and res.index_p == 1 and res.dominant_weight == (0,)


def test_order_independence_and_oracle():
    rng = random.Random(7)
    data = [build_datum(l, r) for l, r in [("A", 4), ("C", 3), ("D", 5), ("G", 2)]]
    for _ in range(200):
        d = rng.choice(data)
        w = tuple(rng.randint(-8, 8) for _ in range(d.rank))
        ref = dot_classify(d, w)
        alt = dot_classify(d, w, rng=random.Random(rng.randint(0, 10**9)))
        assert ref.status == alt.status
        oracle = regular_index_oracle(d, w)
        if ref.is_regular:
            assert ref.index_p == alt.index_p == oracle
            assert ref.dominant_weight == alt.dominant_weight
            assert all(a >= 0 for a in ref.dominant_weight)
        else:
            assert oracle is None


def test_serre_duality_on_projective_space():
    # indices of O(d) and O(-n-1-d) sum to n = dim P^n whenever both have
    # cohomology
    for n in (1, 2, 3, 4):
        d = build_datum("A", n)
        for deg in range(-(n + 4), n + 5):
            lam = (deg,) + (0,) * (n - 1)
            dual = (-(n + 1) - deg,) + (0,) * (n - 1)
            r1, r2 = dot_classify(d, lam), dot_classify(d, dual)
            assert r1.is_regular == r2.is_regular
            if r1.is_regular:
                assert r1.index_p + r2.index_p == n


def test_serialization():
    d = build_datum("A", 2)
    assert dot_classify(d, (-1, -1)).to_json() == {"status": "singular"}
    out = dot_classify(d, (1, 1)).to_json()
    assert out == {"status": "regular", "p": 0, "dominant": [1, 1]}


def test_delta_helper():
    from adjvar.weylgroup import delta

    assert delta(build_datum("G", 2)) == (1, 1)
