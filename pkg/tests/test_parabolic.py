import pytest

from adjvar.parabolic import (
    MarkedDatum,
    branch_to_levi,
    is_bundle_weight,
    levi_diagram,
    levi_positive_roots,
    lift_to_ambient,
    nilradical_size,
)
from adjvar.rootsystem import build_datum, highest_root


def md(letter, rank, node):
    return MarkedDatum(ambient=build_datum(letter, rank), marked_node=node)


def test_e6_node2_levi_is_a5_with_expected_node_map():
    ld = levi_diagram(md("E", 6, 2))
    assert len(ld.components) == 1
    comp = ld.components[0]
    assert (comp.datum.letter, comp.datum.rank) == ("A", 5)
    assert comp.ambient_nodes == (1, 3, 4, 5, 6)
    assert ld.node_map() == {1: (0, 1), 3: (0, 2), 4: (0, 3), 5: (0, 4), 6: (0, 5)}


def test_an_node1_levi():
    ld = levi_diagram(md("A", 5, 1))
    assert [(c.datum.letter, c.datum.rank) for c in ld.components] == [("A", 4)]


@pytest.mark.parametrize("n", [4, 5, 6])
def test_bn_node2_levi(n):
    ld = levi_diagram(md("B", n, 2))
    kinds = [(c.datum.letter, c.datum.rank) for c in ld.components]
    assert kinds == [("A", 1), ("B", n - 2)]


def test_d4_node2_levi_is_three_a1():
    ld = levi_diagram(md("D", 4, 2))
    assert [(c.datum.letter, c.datum.rank) for c in ld.components] == [
        ("A", 1),
        ("A", 1),
        ("A", 1),
    ]


def test_exceptional_adjoint_levis():
    assert [(c.datum.letter, c.datum.rank) for c in levi_diagram(md("E", 7, 1)).components] == [("D", 6)]
    assert [(c.datum.letter, c.datum.rank) for c in levi_diagram(md("E", 8, 8)).components] == [("E", 7)]
    assert [(c.datum.letter, c.datum.rank) for c in levi_diagram(md("F", 4, 1)).components] == [("C", 3)]
    assert [(c.datum.letter, c.datum.rank) for c in levi_diagram(md("G", 2, 2)).components] == [("A", 1)]


@pytest.mark.parametrize(
    "letter,rank",
    [("A", 4), ("B", 4), ("C", 4), ("D", 5), ("E", 6), ("E", 7), ("F", 4), ("G", 2)],
)
def test_node_map_preserves_edges_everywhere(letter, rank):
    ambient = build_datum(letter, rank)
    for node in range(1, rank + 1):
        ld = levi_diagram(MarkedDatum(ambient=ambient, marked_node=node))
        ranks = sum(c.datum.rank for c in ld.components)
        assert ranks == rank - 1
        for comp in ld.components:
            r = comp.datum.rank
            for a in range(r):
                for b in range(r):
                    assert (
                        ambient.cartan[comp.ambient_nodes[a] - 1][comp.ambient_nodes[b] - 1]
                        == comp.datum.cartan[a][b]
                    )


def test_is_bundle_weight():
    m = md("D", 5, 2)
    theta = highest_root(build_datum("D", 5))
    assert is_bundle_weight(m, theta)
    assert is_bundle_weight(m, (1, -2, 1, 0, 0))
    assert not is_bundle_weight(m, (-1, 0, 0, 0, 0))


def test_branch_examples():
    m = md("E", 6, 2)
    comp_weights, center = branch_to_levi(m, (0, 0, 0, 1, 0, 0))
    assert comp_weights == ((0, 0, 1, 0, 0),) and center == 0

    comp_weights, center = branch_to_levi(m, (0, 5, 0, 0, 0, 0))
    assert comp_weights == ((0, 0, 0, 0, 0),) and center == 5

    m = md("B", 5, 2)
    comp_weights, center = branch_to_levi(m, (1, 0, 1, 0, 0))
    assert comp_weights == ((1,), (1, 0, 0)) and center == 0


def test_branch_rejects_non_bundle_weight():
    with pytest.raises(ValueError):
        branch_to_levi(md("A", 3, 1), (0, -1, 0))


def test_lift_roundtrip():
    m = md("E", 7, 1)
    w = (-2, 0, 1, 0, 2, 0, 0)
    comp_weights, center = branch_to_levi(m, w)
    assert lift_to_ambient(m, comp_weights, center) == w


def test_nilradical_sizes():
    assert nilradical_size(md("A", 1, 1)) == 1
    assert nilradical_size(md("G", 2, 2)) == 5
    # the type-A adjoint variety is a hyperplane section of P^n x P^n of
    # dimension 2n-1: roots with nonzero coefficient at node 1 or node n
    for n in (2, 3, 4):
        d = build_datum("A", n)
        count = sum(
            1 for alpha in d.positive_roots if alpha[0] != 0 or alpha[n - 1] != 0
        )
        assert count == 2 * n - 1


@pytest.mark.parametrize(
    "letter,rank,node",
    [("B", 3, 2), ("B", 5, 2), ("D", 4, 2), ("D", 6, 2), ("E", 6, 2),
     ("E", 7, 1), ("E", 8, 8), ("F", 4, 1), ("G", 2, 2), ("C", 3, 1)],
)
def test_nilradical_partition_and_parity(letter, rank, node):
    m = md(letter, rank, node)
    total = len(m.ambient.positive_roots)
    assert nilradical_size(m) + len(levi_positive_roots(m)) == total
    assert nilradical_size(m) % 2 == 1  # adjoint marked nodes only in this list


def test_marked_node_validation():
    with pytest.raises(IndexError):
        MarkedDatum(ambient=build_datum("A", 2), marked_node=3)
