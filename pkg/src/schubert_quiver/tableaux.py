"""Standard skew tableaux, jeu-de-taquin and label-range surgery."""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterable, Mapping, Optional, Sequence

from .errors import SizeLimitError, UserInputError
from .shapes import Box, Partition, SkewShape, add_box, remove_box, removable_boxes

DEFAULT_SIZE_CAP = 12

SlidingPath = tuple[Box, ...]


class StandardSkewTableau:
    """A bijective filling of a skew shape by ``1..n``, increasing along rows and columns.

    Instances are immutable and hashable.  ``positions[i - 1]`` is the box
    holding label ``i``.
    """

    __slots__ = ("shape", "positions", "_entries", "_hash")

    def __init__(self, shape: SkewShape, entries: Mapping[Box, int] | Iterable[tuple[Box, int]], check: bool = True):
        pairs = entries.items() if isinstance(entries, Mapping) else entries
        table = {Box(*box): int(label) for box, label in pairs}
        positions: list[Optional[Box]] = [None] * len(table)
        for box, label in table.items():
            if not 1 <= label <= len(table) or positions[label - 1] is not None:
                raise UserInputError(f"labels must be a permutation of 1..{len(table)}")
            positions[label - 1] = box
        self.shape = shape
        self.positions: tuple[Box, ...] = tuple(positions)
        self._entries = table
        self._hash = None
        if check:
            self._validate()

    @classmethod
    def from_positions(cls, shape: SkewShape, positions: Sequence[Box], check: bool = False) -> "StandardSkewTableau":
        return cls(shape, {box: i for i, box in enumerate(positions, 1)}, check=check)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Optional[int]]]) -> "StandardSkewTableau":
        """Build from rows where leading ``None`` entries mark inner boxes."""
        outer, inner, entries = [], [], {}
        for r, row in enumerate(rows, 1):
            skipped = 0
            while skipped < len(row) and row[skipped] is None:
                skipped += 1
            inner.append(skipped)
            outer.append(len(row))
            for c in range(skipped, len(row)):
                if row[c] is None:
                    raise UserInputError("inner boxes must come first in each row")
                entries[Box(r, c + 1)] = row[c]
        return cls(SkewShape(Partition(outer), Partition(inner)), entries)

    @classmethod
    def empty(cls, base: Partition = Partition()) -> "StandardSkewTableau":
        return cls(SkewShape(base, base), {})

    def _validate(self) -> None:
        if set(self._entries) != self.shape.box_set:
            raise UserInputError("tableau entries do not cover the shape exactly")
        for (r, c), label in self._entries.items():
            right = self._entries.get(Box(r, c + 1))
            below = self._entries.get(Box(r + 1, c))
            if (right is not None and right < label) or (below is not None and below < label):
                raise UserInputError(f"labels must increase along rows and columns (at box {(r, c)})")

    def __len__(self) -> int:
        return len(self.positions)

    def __getitem__(self, box) -> int:
        return self._entries[Box(*box)]

    def get(self, box, default=None):
        return self._entries.get(Box(*box), default)

    def __contains__(self, box) -> bool:
        return Box(*box) in self._entries

    def label_at(self, box) -> int:
        return self._entries[Box(*box)]

    def position(self, label: int) -> Box:
        return self.positions[label - 1]

    def row_of(self, label: int) -> int:
        return self.positions[label - 1].row

    def items(self) -> list[tuple[Box, int]]:
        """(box, label) pairs in row-major order."""
        return [(box, self._entries[box]) for box in self.shape.boxes]

    @property
    def entries(self) -> dict[Box, int]:
        return dict(self._entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, StandardSkewTableau):
            return NotImplemented
        return self.shape == other.shape and self.positions == other.positions

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.shape, self.positions))
        return self._hash

    def sort_key(self) -> tuple:
        return (tuple(self.shape.outer), tuple(self.shape.inner), tuple(label for _, label in self.items()))

    def rows(self) -> list[list[Optional[int]]]:
        out = []
        for r in range(1, self.shape.outer.length + 1):
            lo, hi = self.shape.inner.part(r), self.shape.outer.part(r)
            out.append([None] * lo + [self._entries[Box(r, c)] for c in range(lo + 1, hi + 1)])
        return out

    def render(self) -> str:
        return self.shape.render(self._entries) if len(self) else self.shape.render()

    def __repr__(self) -> str:
        return f"StandardSkewTableau.from_rows({self.rows()!r})"

    def to_json(self) -> dict:
        return {"shape": self.shape.to_json(), "entries": [[b.row, b.col, label] for b, label in self.items()]}

    @classmethod
    def from_json(cls, data: Mapping) -> "StandardSkewTableau":
        shape = SkewShape.from_json(data["shape"])
        return cls(shape, {Box(r, c): label for r, c, label in data["entries"]})

    def shifted(self, offset: int) -> dict[Box, int]:
        return {box: label + offset for box, label in self._entries.items()}


@lru_cache(maxsize=4096)
def _standard_positions(shape: SkewShape) -> tuple[tuple[Box, ...], ...]:
    if shape.size == 0:
        return ((),)
    found = []
    # the largest label sits on a removable box of the outer shape
    for box in removable_boxes(shape.outer):
        if box.col <= shape.inner.part(box.row):
            continue
        smaller = SkewShape(remove_box(shape.outer, box.row), shape.inner)
        for positions in _standard_positions(smaller):
            found.append(positions + (box,))
    found.sort(key=lambda pos: _row_major_labels(shape, pos))
    return tuple(found)


def _row_major_labels(shape: SkewShape, positions: Sequence[Box]) -> tuple[int, ...]:
    index = {box: i for i, box in enumerate(positions, 1)}
    return tuple(index[box] for box in shape.boxes)


def enumerate_standard(shape: SkewShape, cap: Optional[int] = None) -> tuple[StandardSkewTableau, ...]:
    """Every standard tableau of ``shape``, ordered by row-major label sequence."""
    cap = DEFAULT_SIZE_CAP if cap is None else cap
    if shape.size > cap:
        raise SizeLimitError(f"shape {shape} has {shape.size} boxes; the enumeration cap is {cap}")
    return _enumerate_cached(shape)


@lru_cache(maxsize=4096)
def _enumerate_cached(shape: SkewShape) -> tuple[StandardSkewTableau, ...]:
    return tuple(StandardSkewTableau.from_positions(shape, pos) for pos in _standard_positions(shape))


def reading_word(t: StandardSkewTableau) -> tuple[int, ...]:
    """Labels read row by row from the top, right to left inside a row."""
    word = []
    for r in range(1, t.shape.outer.length + 1):
        for c in range(t.shape.outer.part(r), t.shape.inner.part(r), -1):
            word.append(t[(r, c)])
    return tuple(word)


def inner_corners(t: StandardSkewTableau) -> list[Box]:
    """Removable boxes of the inner shape, listed bottom-most first."""
    return sorted(removable_boxes(t.shape.inner), key=lambda b: (-b.row, b.col))


def outer_corners(t: StandardSkewTableau) -> list[Box]:
    """Boxes that can be added to the outer shape, listed top-most first."""
    outer = t.shape.outer
    return [Box(r, outer.part(r) + 1) for r in range(1, outer.length + 2) if r == 1 or outer.part(r - 1) > outer.part(r)]


def jdt_slide_inner(t: StandardSkewTableau, corner) -> tuple[StandardSkewTableau, SlidingPath]:
    """Slide the tableau into the inner corner ``corner``.

    The gap repeatedly swaps with the smaller of its right and lower
    neighbours; the returned path lists the gap's positions.
    """
    corner = Box(*corner)
    if corner not in removable_boxes(t.shape.inner):
        raise UserInputError(f"{tuple(corner)} is not an inner corner of the tableau")
    table = t.entries
    gap = corner
    path = [gap]
    while True:
        right = table.get(Box(gap.row, gap.col + 1))
        below = table.get(Box(gap.row + 1, gap.col))
        if right is None and below is None:
            break
        if below is None or (right is not None and right < below):
            nxt = Box(gap.row, gap.col + 1)
        else:
            nxt = Box(gap.row + 1, gap.col)
        table[gap] = table.pop(nxt)
        gap = nxt
        path.append(gap)
    shape = SkewShape(remove_box(t.shape.outer, gap.row), remove_box(t.shape.inner, corner.row))
    return StandardSkewTableau(shape, table, check=__debug__), tuple(path)


def jdt_slide_outer(t: StandardSkewTableau, corner) -> tuple[StandardSkewTableau, SlidingPath]:
    """Reverse slide from a box addable to the outer shape.

    The gap swaps with the larger of its left and upper neighbours.
    """
    corner = Box(*corner)
    if corner not in outer_corners(t):
        raise UserInputError(f"{tuple(corner)} is not an outer corner of the tableau")
    table = t.entries
    gap = corner
    path = [gap]
    while True:
        left = table.get(Box(gap.row, gap.col - 1))
        above = table.get(Box(gap.row - 1, gap.col))
        if left is None and above is None:
            break
        if above is None or (left is not None and left > above):
            nxt = Box(gap.row, gap.col - 1)
        else:
            nxt = Box(gap.row - 1, gap.col)
        table[gap] = table.pop(nxt)
        gap = nxt
        path.append(gap)
    shape = SkewShape(add_box(t.shape.outer, corner.row), add_box(t.shape.inner, gap.row))
    return StandardSkewTableau(shape, table, check=__debug__), tuple(path)


CornerChooser = Callable[[list[Box]], Box]


def rectify(t: StandardSkewTableau, choose: Optional[CornerChooser] = None) -> StandardSkewTableau:
    """Slide into inner corners until the shape is straight.

    By default the bottom-most inner corner is used first; ``choose`` may
    pick any corner from the list offered to it.
    """
    while t.shape.inner:
        corners = inner_corners(t)
        corner = corners[0] if choose is None else choose(corners)
        t, _ = jdt_slide_inner(t, corner)
    return t


def restrict(t: StandardSkewTableau, low: int, high: int) -> StandardSkewTableau:
    """Sub-tableau on labels ``low < label <= high``, relabelled from 1."""
    def grow(base: Partition, limit: int) -> Partition:
        parts = list(base) + [0] * (t.shape.outer.length - base.length)
        for label in range(1, limit + 1):
            parts[t.positions[label - 1].row - 1] += 1
        return Partition(parts)

    inner = grow(t.shape.inner, low)
    outer = grow(t.shape.inner, high)
    entries = {t.positions[label - 1]: label - low for label in range(low + 1, high + 1)}
    return StandardSkewTableau(SkewShape(outer, inner), entries, check=False)


def split_at(t: StandardSkewTableau, k: int) -> tuple[StandardSkewTableau, StandardSkewTableau]:
    """``(T^{<=k}, T^{>k})``; the second part is relabelled down by ``k``."""
    if not 0 <= k <= len(t):
        raise UserInputError(f"split point {k} outside 0..{len(t)}")
    return restrict(t, 0, k), restrict(t, k, len(t))


def union(t1: StandardSkewTableau, t2: StandardSkewTableau) -> StandardSkewTableau:
    """Glue ``t1`` (shape α/β) onto ``t2`` (shape β/γ); ``t2``'s labels move up by ``|t1|``."""
    if t1.shape.inner != t2.shape.outer:
        raise UserInputError(f"cannot glue shapes {t1.shape} and {t2.shape}: inner of the first must be outer of the second")
    entries = t1.entries
    entries.update(t2.shifted(len(t1)))
    return StandardSkewTableau(SkewShape(t1.shape.outer, t2.shape.inner), entries)


def stack(low: StandardSkewTableau, high: StandardSkewTableau) -> StandardSkewTableau:
    """Inverse of :func:`split_at`: ``high`` sits outside ``low`` with labels above it."""
    if low.shape.outer != high.shape.inner:
        raise UserInputError(f"cannot stack {high.shape} outside {low.shape}")
    entries = low.entries
    entries.update(high.shifted(len(low)))
    return StandardSkewTableau(SkewShape(high.shape.outer, low.shape.inner), entries)


def vertical_strip_tableau(shape: SkewShape) -> StandardSkewTableau:
    """The filling of a vertical strip labelled from top to bottom."""
    if not shape.is_vertical_strip():
        raise UserInputError(f"{shape} is not a vertical strip")
    return StandardSkewTableau(shape, {box: i for i, box in enumerate(shape.boxes, 1)})


def row_superstandard(p: Partition) -> StandardSkewTableau:
    """Rows of ``p`` filled left to right with consecutive labels."""
    return StandardSkewTableau(SkewShape(p), {box: i for i, box in enumerate(SkewShape(p).boxes, 1)})
