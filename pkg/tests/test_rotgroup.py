import itertools

import pytest

from vtpoly.rotgroup import (
    GroupElement,
    build_normalizer,
    build_tetrahedral_group,
    conjugate,
)

# Transcribed by hand from the reference matrix table.
TABLE = {
    "I1": ((1, 0, 0), (0, -1, 0), (0, 0, -1)),
    "I2": ((-1, 0, 0), (0, 1, 0), (0, 0, -1)),
    "I3": ((-1, 0, 0), (0, -1, 0), (0, 0, 1)),
    "Y1": ((0, 1, 0), (0, 0, 1), (1, 0, 0)),
    "Y2": ((0, 0, -1), (1, 0, 0), (0, -1, 0)),
    "Y3": ((0, 0, -1), (-1, 0, 0), (0, 1, 0)),
    "Y4": ((0, 0, 1), (-1, 0, 0), (0, -1, 0)),
}


def transpose(m):
    return tuple(zip(*m))


@pytest.fixture(scope="module")
def T():
    return build_tetrahedral_group()


def test_matrices_match_table(T):
    for name, m in TABLE.items():
        assert T[name].matrix == m
        if name.startswith("Y"):
            assert T[name + "i"].matrix == transpose(m)


def test_order_and_names(T):
    assert T.order == 12
    assert T.identity.is_identity
    assert T.elements[0].name == "1"
    names = [g.name for g in T.elements]
    assert names == ["1", "I1", "I2", "I3", "Y1", "Y2", "Y3", "Y4", "Y1i", "Y2i", "Y3i", "Y4i"]


def test_y4_y2_is_y3_inverse(T):
    assert T["Y4"] * T["Y2"] == T["Y3i"]
    assert T["I1"] * T["I2"] == T["I3"]


def test_group_axioms(T):
    els = T.elements
    for a, b in itertools.product(els, repeat=2):
        assert a * b in T
    for a, b, c in itertools.product(els, repeat=3):
        assert (a * b) * c == a * (b * c)
    for a in els:
        assert a * a.inverse() == T.identity
        assert a.det == 1


def test_element_orders(T):
    orders = sorted(g.order for g in T.elements)
    assert orders == [1, 2, 2, 2] + [3] * 8


def test_act_is_row_vector(T):
    # v * M with v = e1 picks out the first row
    assert T["Y1"].act((1, 0, 0)) == (0, 1, 0)
    v = (1, 2, 6)
    assert T["Y4"].act(T["Y2"].act(v)) == (T["Y2"] * T["Y4"]).act(v)


def test_unknown_name(T):
    with pytest.raises(KeyError):
        T["Y5"]


def test_normalizer_sizes(T):
    N = build_normalizer(T)
    assert len(N.elements) == 48
    assert len(N.orientation_preserving) == 24
    assert {g.matrix for g in N.centralizer} == {
        tuple(tuple(s if i == j else 0 for j in range(3)) for i in range(3)) for s in (1, -1)
    }
    assert N.elements[0].is_identity


def test_normalizer_normalizes(T):
    N = build_normalizer(T)
    for a in N.elements:
        images = {conjugate(g, a) for g in T.elements}
        assert images == set(T.elements)


def test_normalizer_is_signed_permutations(T):
    N = build_normalizer(T)
    brute = set()
    for perm in itertools.permutations(range(3)):
        for signs in itertools.product((1, -1), repeat=3):
            brute.add(tuple(tuple(signs[i] if perm[i] == j else 0 for j in range(3)) for i in range(3)))
    assert {a.matrix for a in N.elements} == brute


def test_conjugation_by_quarter_turn(T):
    a = GroupElement(((0, 1, 0), (-1, 0, 0), (0, 0, 1)))
    assert conjugate(T["I1"], a) == T["I2"]
    assert conjugate(T["I2"], a) == T["I1"]
    assert conjugate(T["I3"], a) == T["I3"]


def test_conjugation_is_action(T):
    N = build_normalizer(T)
    g = T["Y2"]
    for a, b in itertools.product(N.elements[:12], repeat=2):
        assert conjugate(conjugate(g, a), b) == conjugate(g, a * b)


def test_axes_are_fixed(T):
    for g in T.core_rotations:
        axis = T.axis_of(g.name)
        assert any(axis)
        assert g.act(axis) == tuple(axis)


def test_generated_subgroup(T):
    assert len(T.generated_subgroup(["Y1"])) == 3
    assert len(T.generated_subgroup(["I1", "I2"])) == 4
    assert len(T.generated_subgroup(["Y1", "Y2"])) == 12
