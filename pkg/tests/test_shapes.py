from __future__ import annotations

import pytest
from hypothesis import given

from schubert_quiver.errors import UserInputError
from schubert_quiver.shapes import (
    Box,
    Partition,
    SkewShape,
    contains,
    partitions_of,
    rl_boxes,
    rl_filling,
    row_rule_filling,
    vertical_strips_above,
    vertical_strips_below,
)
from strategies import partitions, skew_shapes


def P(*parts):
    return Partition(parts)


def test_partition_normalises_and_validates():
    assert Partition([3, 2, 0, 0]) == P(3, 2)
    assert Partition([]).size == 0 and str(Partition()) == "∅"
    with pytest.raises(UserInputError):
        Partition([1, 2])
    with pytest.raises(UserInputError):
        Partition([2, -1])


def test_partition_statistics():
    p = P(4, 2, 2, 1)
    assert (p.size, p.length, p.width) == (9, 4, 4)
    assert p.part(5) == 0
    assert p.conjugate() == P(4, 3, 1, 1)


@pytest.mark.parametrize("outer, inner, expected", [((3, 2), (2,), True), ((3, 2), (3, 3), False), ((), (), True)])
def test_contains(outer, inner, expected):
    assert contains(Partition(outer), Partition(inner)) is expected


def test_skew_shape_rejects_non_containment():
    with pytest.raises(UserInputError):
        SkewShape(P(2), P(1, 1))


def test_rl_filling_of_small_shapes():
    assert rl_filling(SkewShape(P(3, 2), P(2))).labels == {Box(1, 3): 1, Box(2, 2): 2, Box(2, 1): 3}
    assert rl_filling(SkewShape(P(2, 1))).labels == {Box(1, 2): 1, Box(1, 1): 2, Box(2, 1): 3}
    assert rl_filling(SkewShape(Partition())).labels == {}


def test_row_rule_fillings():
    assert row_rule_filling(5, SkewShape(P(3, 3, 2))).rows() == [[5, 4, 3], [6, 5, 4], [7, 6]]
    assert row_rule_filling(2, SkewShape(P(1, 1))).rows() == [[2], [3]]
    assert row_rule_filling(1, SkewShape(P(2))).rows() == [[1, 0]]


@given(skew_shapes(8))
def test_rl_filling_is_a_bijection(shape):
    filling = rl_filling(shape)
    assert sorted(filling.labels.values()) == list(range(1, shape.size + 1))
    assert set(filling.labels) == set(shape.boxes)
    for label in range(1, shape.size + 1):
        assert filling.labels[filling.box_of(label)] == label
        assert rl_boxes(shape)[label - 1] == filling.box_of(label)


@given(skew_shapes(7))
def test_row_rule_filling_steps(shape):
    values = row_rule_filling(3, shape).labels
    for (row, col), value in values.items():
        if (row, col + 1) in values:
            assert value - values[Box(row, col + 1)] == 1
        if (row + 1, col) in values:
            assert values[Box(row + 1, col)] - value == 1


def test_vertical_strips_examples():
    assert vertical_strips_above(P(1), 1) == {P(2), P(1, 1)}
    assert vertical_strips_above(P(2, 2), 2) == {P(3, 3), P(3, 2, 1), P(2, 2, 1, 1)}
    assert vertical_strips_above(P(3, 1), 0) == {P(3, 1)}
    assert vertical_strips_above(P(1), 2, max_rows=2) == {P(2, 1)}
    assert vertical_strips_below(P(2, 1), 1) == {P(2), P(1, 1)}
    assert vertical_strips_below(P(1, 1), 2) == {Partition()}
    assert vertical_strips_below(P(2), 2) == set()


def _brute_strips(beta, k):
    return {
        lam for lam in partitions_of(beta.size + k)
        if contains(lam, beta) and all(lam.part(r) - beta.part(r) <= 1 for r in range(1, lam.length + 1))
    }


@given(partitions(6))
def test_vertical_strips_duality(beta):
    for k in range(4):
        above = vertical_strips_above(beta, k)
        assert above == _brute_strips(beta, k)
        for lam in above:
            assert beta in vertical_strips_below(lam, k)
            assert SkewShape(lam, beta).is_vertical_strip()


def test_skew_shape_json_and_render():
    shape = SkewShape(P(3, 2), P(1))
    assert SkewShape.from_json(shape.to_json()) == shape
    assert shape.to_json() == {"outer": [3, 2], "inner": [1]}
    assert shape.render().splitlines()[0].startswith(".")
