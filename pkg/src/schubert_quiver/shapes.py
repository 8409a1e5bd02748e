"""Partitions, skew shapes and the integer fillings attached to them.

Boxes use 1-indexed ``(row, col)`` coordinates in English convention: row 1
is on top, column 1 on the left.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product
from typing import Iterable, Iterator, Mapping, NamedTuple, Optional, Sequence

from .errors import UserInputError


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction, so ``Partition((2, 1, 0))``
    and ``Partition((2, 1))`` are the same value (and hash the same).
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        if isinstance(parts, Partition):
            return parts
        values = [int(p) for p in parts]
        while values and values[-1] == 0:
            values.pop()
        for i, p in enumerate(values):
            if p < 0:
                raise UserInputError(f"partition parts must be nonnegative: {values}")
            if p == 0:
                raise UserInputError(f"zero part in the middle of a partition: {values}")
            if i and p > values[i - 1]:
                raise UserInputError(f"partition is not weakly decreasing: {values}")
        return super().__new__(cls, values)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def width(self) -> int:
        return self[0] if self else 0

    def part(self, row: int) -> int:
        """Length of ``row`` (1-indexed), zero beyond the last row."""
        return self[row - 1] if 1 <= row <= len(self) else 0

    def conjugate(self) -> "Partition":
        return Partition(sum(1 for p in self if p > c) for c in range(self.width))

    def boxes(self) -> tuple["Box", ...]:
        return tuple(Box(r, c) for r, p in enumerate(self, 1) for c in range(1, p + 1))

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")" if self else "∅"


EMPTY = Partition()


class Box(NamedTuple):
    row: int
    col: int


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    """True iff the diagram of ``inner`` sits inside the diagram of ``outer``."""
    if len(inner) > len(outer):
        # trailing zeros in a raw sequence are harmless
        if any(inner[len(outer):]):
            return False
    return all(i <= o for i, o in zip(inner, outer))


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = EMPTY

    def __post_init__(self):
        object.__setattr__(self, "outer", Partition(self.outer))
        object.__setattr__(self, "inner", Partition(self.inner))
        if not contains(self.outer, self.inner):
            raise UserInputError(f"{self.inner} is not contained in {self.outer}")

    @classmethod
    def of(cls, shape: "SkewShape | Sequence[int]") -> "SkewShape":
        return shape if isinstance(shape, SkewShape) else cls(Partition(shape))

    @cached_property
    def boxes(self) -> tuple[Box, ...]:
        """Boxes in row-major order."""
        return tuple(
            Box(r, c)
            for r in range(1, self.outer.length + 1)
            for c in range(self.inner.part(r) + 1, self.outer.part(r) + 1)
        )

    @cached_property
    def box_set(self) -> frozenset[Box]:
        return frozenset(self.boxes)

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def __len__(self) -> int:
        return self.size

    def __contains__(self, box) -> bool:
        r, c = box
        return self.inner.part(r) < c <= self.outer.part(r)

    @property
    def is_straight(self) -> bool:
        return not self.inner

    def is_vertical_strip(self) -> bool:
        return all(self.outer.part(r) - self.inner.part(r) <= 1 for r in range(1, self.outer.length + 1))

    def is_horizontal_strip(self) -> bool:
        return all(self.outer.part(r) <= self.inner.part(r - 1) for r in range(2, self.outer.length + 1))

    def render(self, labels: Optional[Mapping[Box, object]] = None) -> str:
        """One line per row; ``.`` marks inner boxes, ``#`` unlabeled boxes."""
        lines = []
        for r in range(1, self.outer.length + 1):
            cells = ["." for _ in range(self.inner.part(r))]
            for c in range(self.inner.part(r) + 1, self.outer.part(r) + 1):
                cells.append("#" if labels is None else str(labels[Box(r, c)]))
            lines.append(" ".join(cells))
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {"outer": list(self.outer), "inner": list(self.inner)}

    @classmethod
    def from_json(cls, data: Mapping) -> "SkewShape":
        return cls(Partition(data["outer"]), Partition(data.get("inner", ())))

    def __str__(self) -> str:
        return f"{self.outer}/{self.inner}" if self.inner else str(self.outer)


@dataclass(frozen=True)
class IntFilling:
    """An integer label on every box of a skew shape."""

    shape: SkewShape
    labels: Mapping[Box, int]

    def __post_init__(self):
        if set(self.labels) != self.shape.box_set:
            raise ValueError("filling domain differs from the box set of the shape")

    def __getitem__(self, box) -> int:
        return self.labels[Box(*box)]

    def rows(self) -> list[list[int]]:
        return [
            [self.labels[Box(r, c)] for c in range(self.shape.inner.part(r) + 1, self.shape.outer.part(r) + 1)]
            for r in range(1, self.shape.outer.length + 1)
        ]

    def box_of(self, label: int) -> Box:
        for box, value in self.labels.items():
            if value == label:
                return box
        raise KeyError(label)


@lru_cache(maxsize=None)
def rl_boxes(shape: SkewShape) -> tuple[Box, ...]:
    """Boxes listed in reverse-lexicographic order: entry ``i-1`` carries label ``i``."""
    return tuple(
        Box(r, c)
        for r in range(1, shape.outer.length + 1)
        for c in range(shape.outer.part(r), shape.inner.part(r), -1)
    )


def rl_filling(shape: SkewShape) -> IntFilling:
    """Label boxes 1..n right to left along each row, rows taken top to bottom."""
    return IntFilling(shape, {box: i for i, box in enumerate(rl_boxes(shape), 1)})


def row_rule_value(r: int, box: Sequence[int]) -> int:
    row, col = box
    return r + (row - 1) - (col - 1)


def row_rule_filling(r: int, shape: SkewShape) -> IntFilling:
    """``r`` in the corner box, +1 per step down, -1 per step right."""
    if r < 1:
        raise UserInputError(f"row rule parameter must be positive, got {r}")
    return IntFilling(shape, {box: row_rule_value(r, box) for box in shape.boxes})


def addable_boxes(p: Partition) -> list[Box]:
    return [Box(r, p.part(r) + 1) for r in range(1, p.length + 2) if r == 1 or p.part(r - 1) > p.part(r)]


def removable_boxes(p: Partition) -> list[Box]:
    return [Box(r, p.part(r)) for r in range(1, p.length + 1) if p.part(r) > p.part(r + 1)]


def add_box(p: Partition, row: int) -> Partition:
    parts = list(p) + [0]
    parts[row - 1] += 1
    return Partition(parts)


def remove_box(p: Partition, row: int) -> Partition:
    parts = list(p)
    parts[row - 1] -= 1
    return Partition(parts)


@lru_cache(maxsize=None)
def partitions_of(n: int, max_part: Optional[int] = None, max_length: Optional[int] = None) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse lexicographic order, optionally bounded."""
    if max_part is None:
        max_part = n
    if max_length is None:
        max_length = n

    def build(remaining: int, cap: int, slots: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in build(remaining - first, first, slots - 1):
                yield (first,) + rest

    return tuple(Partition(p) for p in build(n, max_part, max_length))


def partitions_up_to(n: int) -> Iterator[Partition]:
    for k in range(n + 1):
        yield from partitions_of(k)


def partitions_in_box(rows: int, cols: int) -> list[Partition]:
    """Every partition whose diagram fits in a ``rows`` x ``cols`` rectangle."""
    return [p for k in range(rows * cols + 1) for p in partitions_of(k, cols, rows)]


@lru_cache(maxsize=None)
def subpartitions(p: Partition) -> tuple[Partition, ...]:
    """All partitions contained in ``p`` (including ∅ and ``p``)."""
    ranges = []
    for i, part in enumerate(p):
        ranges.append(range(part + 1))
    result = []
    for choice in product(*ranges):
        if all(choice[i] >= choice[i + 1] for i in range(len(choice) - 1)):
            result.append(Partition(choice))
    return tuple(sorted(set(result), key=lambda q: (q.size, tuple(q))))


@lru_cache(maxsize=None)
def partitions_above(p: Partition, k: int) -> tuple[Partition, ...]:
    """All ``λ ⊇ p`` with ``|λ| = |p| + k``."""
    level = {p}
    for _ in range(k):
        level = {add_box(q, b.row) for q in level for b in addable_boxes(q)}
    return tuple(sorted(level, reverse=True))


@lru_cache(maxsize=None)
def partitions_below(p: Partition, k: int) -> tuple[Partition, ...]:
    """All ``λ ⊆ p`` with ``|λ| = |p| - k``."""
    if k > p.size:
        return ()
    level = {p}
    for _ in range(k):
        level = {remove_box(q, b.row) for q in level for b in removable_boxes(q)}
    return tuple(sorted(level, reverse=True))


def vertical_strips_above(beta: Partition, k: int, max_rows: Optional[int] = None) -> set[Partition]:
    """All ``β' ⊇ β`` such that ``β'/β`` is a vertical strip of ``k`` boxes."""
    beta = Partition(beta)
    found = {lam for lam in partitions_above(beta, k) if SkewShape(lam, beta).is_vertical_strip()}
    if max_rows is not None:
        found = {lam for lam in found if lam.length <= max_rows}
    return found


def vertical_strips_below(beta: Partition, k: int) -> set[Partition]:
    """All ``β' ⊆ β`` such that ``β/β'`` is a vertical strip of ``k`` boxes."""
    beta = Partition(beta)
    return {lam for lam in partitions_below(beta, k) if SkewShape(beta, lam).is_vertical_strip()}


def column(p: int) -> Partition:
    """The single-column partition ``1^p``."""
    return Partition([1] * p)
