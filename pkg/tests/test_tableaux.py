from __future__ import annotations

import itertools
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schubert_quiver.errors import SizeLimitError, UserInputError
from schubert_quiver.shapes import Box, Partition, SkewShape, partitions_of
from schubert_quiver.tableaux import (
    StandardSkewTableau,
    enumerate_standard,
    inner_corners,
    jdt_slide_inner,
    jdt_slide_outer,
    outer_corners,
    reading_word,
    rectify,
    split_at,
    stack,
    union,
    vertical_strip_tableau,
)
from strategies import skew_shapes, standard_tableaux

T = StandardSkewTableau.from_rows
SLIDE_EXAMPLE = T([[None, None, 1, 4], [None, 2, 3], [5]])


def test_slide_into_top_corner():
    slid, path = jdt_slide_inner(SLIDE_EXAMPLE, (1, 2))
    assert slid == T([[None, 1, 3, 4], [None, 2], [5]])
    assert path == (Box(1, 2), Box(1, 3), Box(2, 3))


def test_slide_into_lower_corner():
    slid, path = jdt_slide_inner(SLIDE_EXAMPLE, (2, 1))
    assert path == (Box(2, 1), Box(2, 2), Box(2, 3))
    assert slid == T([[None, None, 1, 4], [2, 3], [5]])


def test_rectification_example():
    straight = rectify(SLIDE_EXAMPLE)
    assert straight == T([[1, 3, 4], [2], [5]])
    assert reading_word(SLIDE_EXAMPLE) == (4, 1, 3, 2, 5)


def test_standardness_is_checked():
    with pytest.raises(UserInputError):
        T([[2, 1]])
    with pytest.raises(UserInputError):
        T([[1, 2], [3, 1]])
    with pytest.raises(UserInputError):
        jdt_slide_inner(SLIDE_EXAMPLE, (1, 1))


def _hook_count(p: Partition) -> int:
    conj = p.conjugate()
    hooks = 1
    for r in range(1, p.length + 1):
        for c in range(1, p.part(r) + 1):
            hooks *= (p.part(r) - c) + (conj.part(c) - r) + 1
    return math.factorial(p.size) // hooks


def _brute_standard(shape: SkewShape) -> set:
    found = set()
    for perm in itertools.permutations(range(1, shape.size + 1)):
        try:
            found.add(StandardSkewTableau(shape, dict(zip(shape.boxes, perm))))
        except UserInputError:
            pass
    return found


@pytest.mark.parametrize("n", range(0, 8))
def test_straight_counts_match_hook_lengths(n):
    for p in partitions_of(n):
        assert len(enumerate_standard(SkewShape(p))) == _hook_count(p)


@given(skew_shapes(6))
@settings(max_examples=60, deadline=None)
def test_skew_enumeration_matches_brute_force(shape):
    listed = enumerate_standard(shape)
    assert len(set(listed)) == len(listed)
    assert set(listed) == _brute_standard(shape)


def test_enumeration_cap():
    with pytest.raises(SizeLimitError):
        enumerate_standard(SkewShape(Partition([5, 4, 3, 2, 1])), cap=10)


@given(standard_tableaux(7), st.randoms(use_true_random=False))
@settings(max_examples=120, deadline=None)
def test_rectification_does_not_depend_on_corner_order(t, rnd):
    assert rectify(t, choose=rnd.choice) == rectify(t)
    assert rectify(t).shape.is_straight


@given(standard_tableaux(7))
@settings(max_examples=120, deadline=None)
def test_outer_slide_undoes_inner_slide(t):
    for corner in inner_corners(t):
        slid, path = jdt_slide_inner(t, corner)
        back, back_path = jdt_slide_outer(slid, path[-1])
        assert back == t
        assert back_path == tuple(reversed(path))


@given(standard_tableaux(7))
@settings(max_examples=100, deadline=None)
def test_outer_corners_are_addable(t):
    for corner in outer_corners(t):
        slid, _ = jdt_slide_outer(t, corner)
        assert len(slid) == len(t)


@given(standard_tableaux(8), st.data())
@settings(max_examples=150, deadline=None)
def test_split_then_union_round_trip(t, data):
    k = data.draw(st.integers(0, len(t)))
    low, high = split_at(t, k)
    assert len(low) == k and len(high) == len(t) - k
    assert low.shape.inner == t.shape.inner and high.shape.outer == t.shape.outer
    assert stack(low, high) == t


@given(standard_tableaux(7), st.data())
@settings(max_examples=150, deadline=None)
def test_union_keeps_outer_labels_and_shifts_inner_ones(t, data):
    k = data.draw(st.integers(0, len(t)))
    low, high = split_at(t, k)
    try:
        glued = union(high, low)
    except UserInputError:
        return
    assert glued.shape == t.shape
    for box, label in high.items():
        assert glued[box] == label
    for box, label in low.items():
        assert glued[box] == label + len(high)


def test_union_examples():
    outer = T([[None, 1], [None]])
    inner = T([[None], [1]])
    assert union(outer, inner) == T([[None, 1], [2]])
    assert union(outer, StandardSkewTableau.empty(Partition([1, 1]))) == outer
    assert union(StandardSkewTableau.empty(Partition([1, 1])), inner) == inner
    with pytest.raises(UserInputError):
        union(T([[None, 1]]), T([[1]]))
    with pytest.raises(UserInputError):
        union(outer, T([[1]]))


def test_json_round_trip_and_render():
    assert StandardSkewTableau.from_json(SLIDE_EXAMPLE.to_json()) == SLIDE_EXAMPLE
    assert SLIDE_EXAMPLE.render().splitlines()[0].split() == [".", ".", "1", "4"]


def test_vertical_strip_tableau_labels_top_down():
    t = vertical_strip_tableau(SkewShape(Partition([2, 1, 1]), Partition([1, 1])))
    assert t.position(1) == Box(1, 2) and t.position(2) == Box(3, 1)
    with pytest.raises(UserInputError):
        vertical_strip_tableau(SkewShape(Partition([3])))


def test_random_cross_check_of_reading_word_standardness():
    rnd = random.Random(7)
    for _ in range(50):
        shape = rnd.choice([SkewShape(Partition([4, 3, 1]), Partition([2, 1])), SkewShape(Partition([3, 3]), Partition([1]))])
        t = rnd.choice(enumerate_standard(shape))
        assert sorted(reading_word(t)) == list(range(1, len(t) + 1))


def _small_tableaux(max_boxes):
    for outer_size in range(max_boxes + 1):
        for outer in partitions_of(outer_size):
            from schubert_quiver.shapes import subpartitions

            for inner in subpartitions(outer):
                if outer.size - inner.size <= max_boxes:
                    yield from enumerate_standard(SkewShape(outer, inner))


def test_rectification_commutes_with_splitting():
    checked = 0
    for t in _small_tableaux(6):
        if t.shape.outer.size > 7:
            continue
        straight = rectify(t)
        for k in range(len(t) + 1):
            low, high = split_at(t, k)
            rect_low, rect_high = split_at(straight, k)
            assert rectify(low) == rect_low
            assert rectify(high) == rectify(rect_high)
            checked += 1
    assert checked > 1000


def _strip_slides(t, boxes):
    paths = []
    for box in boxes:
        t, path = jdt_slide_inner(t, box)
        paths.append(path)
    return paths


def _ahead_in_shared_lines(later, earlier, line, depth):
    """In every row (or column) both paths visit, ``later`` stops strictly before ``earlier``."""
    for key in {line(b) for b in later} & {line(b) for b in earlier}:
        if max(depth(b) for b in later if line(b) == key) >= max(depth(b) for b in earlier if line(b) == key):
            return False
    return True


@given(standard_tableaux(7, min_boxes=1))
@settings(max_examples=200, deadline=None)
def test_sliding_paths_along_strips_do_not_cross(t):
    inner = t.shape.inner
    # bottom box of every column: a horizontal strip, slid right to left
    horizontal = [Box(inner.conjugate().part(c), c) for c in range(inner.width, 0, -1)]
    paths = _strip_slides(t, horizontal)
    for earlier, later in zip(paths, paths[1:]):
        assert _ahead_in_shared_lines(later, earlier, line=lambda b: b.row, depth=lambda b: b.col)
    # last box of every row: a vertical strip, slid bottom to top
    vertical = [Box(r, inner.part(r)) for r in range(inner.length, 0, -1)]
    paths = _strip_slides(t, vertical)
    for earlier, later in zip(paths, paths[1:]):
        assert _ahead_in_shared_lines(later, earlier, line=lambda b: b.col, depth=lambda b: b.row)


def _vertical_strip_rectify_rows(t):
    """Slide into the last inner box of each row, bottom to top, once."""
    inner = t.shape.inner
    for r in range(inner.length, 0, -1):
        t, _ = jdt_slide_inner(t, Box(r, inner.part(r)))
    return t


@given(standard_tableaux(7, min_boxes=2))
@settings(max_examples=200, deadline=None)
def test_smaller_neighbour_stays_low_after_vertical_strip_slides(t):
    slid = _vertical_strip_rectify_rows(t)
    for a in range(1, len(t)):
        pa, pb = t.position(a), t.position(a + 1)
        if pa.col < pb.col and pa.row > pb.row:
            assert slid.row_of(a) >= pb.row
