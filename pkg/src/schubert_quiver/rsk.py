"""Column insertion, the RS correspondence and the bijections built from it."""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .errors import InconsistentInputError, UserInputError
from .shapes import Box, SkewShape
from .tableaux import StandardSkewTableau, reading_word

Word = tuple[int, ...]
Columns = tuple[tuple[int, ...], ...]


class TableauPair(NamedTuple):
    insertion: StandardSkewTableau
    recording: StandardSkewTableau


def _columns_of(t: StandardSkewTableau) -> list[list[int]]:
    conj = t.shape.outer.conjugate()
    return [[t[(r, c)] for r in range(1, conj.part(c) + 1)] for c in range(1, conj.length + 1)]


def _insert_into_columns(columns: list[list[int]], value: int) -> int:
    """Column-insert ``value`` in place; returns the column index that grew."""
    carry = value
    for index, col in enumerate(columns):
        bigger = [x for x in col if x > carry]
        if not bigger:
            col.append(carry)
            return index
        bumped = min(bigger)
        col[col.index(bumped)] = carry
        carry = bumped
    columns.append([carry])
    return len(columns) - 1


def insert_columns(columns: Sequence[Sequence[int]], value: int) -> Columns:
    """Column insertion on a straight tableau given column by column.

    Labels need only be distinct; this is the general form used while a word
    is being inserted and the labels are not yet ``1..n``.
    """
    cols = [list(c) for c in columns]
    if any(value in c for c in cols):
        raise UserInputError(f"label {value} already present")
    _insert_into_columns(cols, value)
    return tuple(tuple(c) for c in cols)


def column_insert(t: StandardSkewTableau, value: int) -> Columns:
    """Insert ``value`` into the straight tableau ``t``; the result is returned column by column."""
    if not t.shape.is_straight:
        raise UserInputError("column insertion needs a straight-shape tableau")
    return insert_columns(_columns_of(t), value)


def columns_to_rows(columns: Sequence[Sequence[int]]) -> list[list[int]]:
    height = max((len(c) for c in columns), default=0)
    return [[c[r] for c in columns if len(c) > r] for r in range(height)]


def _tableau_from_columns(columns: Sequence[Sequence[int]]) -> StandardSkewTableau:
    return StandardSkewTableau.from_rows(columns_to_rows(columns))


def rs(word: Sequence[int]) -> TableauPair:
    """Column-insert ``word`` letter by letter and record where boxes appear."""
    word = tuple(int(x) for x in word)
    if sorted(word) != list(range(1, len(word) + 1)):
        raise UserInputError(f"word must be a permutation of 1..{len(word)}: {word}")
    columns: list[list[int]] = []
    record: list[list[int]] = []
    for step, value in enumerate(word, 1):
        index = _insert_into_columns(columns, value)
        if index == len(record):
            record.append([])
        record[index].append(step)
    return TableauPair(_tableau_from_columns(columns), _tableau_from_columns(record))


def rs_inverse(pair: TableauPair) -> Word:
    """Undo :func:`rs` by reverse column insertion, largest recording label first."""
    insertion, recording = pair
    if insertion.shape != recording.shape or not insertion.shape.is_straight:
        raise UserInputError("RS pairs must be straight tableaux of the same shape")
    columns = _columns_of(insertion)
    out = []
    for step in range(len(recording), 0, -1):
        row, col = recording.position(step)
        carry = columns[col - 1].pop(row - 1)
        for c in range(col - 2, -1, -1):
            target = columns[c]
            smaller = max(x for x in target if x < carry)
            target[target.index(smaller)] = carry
            carry = smaller
        if not columns[col - 1]:
            columns.pop(col - 1)
        out.append(carry)
    return tuple(reversed(out))


def inverse_word(word: Sequence[int]) -> Word:
    inv = [0] * len(word)
    for position, value in enumerate(word, 1):
        inv[value - 1] = position
    return tuple(inv)


def theta(t: StandardSkewTableau) -> TableauPair:
    """RS applied to the reading word; the insertion tableau is the rectification."""
    if len(t) == 0:
        empty = StandardSkewTableau.empty()
        return TableauPair(empty, empty)
    return rs(reading_word(t))


def fill_from_reading_word(shape: SkewShape, word: Sequence[int]) -> StandardSkewTableau:
    """The filling of ``shape`` whose reading word is ``word``."""
    if len(word) != shape.size:
        raise InconsistentInputError(f"word of length {len(word)} cannot fill {shape} ({shape.size} boxes)")
    order = [Box(r, c) for r in range(1, shape.outer.length + 1) for c in range(shape.outer.part(r), shape.inner.part(r), -1)]
    try:
        return StandardSkewTableau(shape, dict(zip(order, word)))
    except UserInputError as exc:
        raise InconsistentInputError(f"the word {tuple(word)} does not give a standard filling of {shape}") from exc


def theta_inverse(target: SkewShape, pair: TableauPair) -> StandardSkewTableau:
    """The tableau of shape ``target`` whose image under :func:`theta` is ``pair``."""
    if target.size != len(pair.insertion):
        raise InconsistentInputError("target shape and pair have different sizes")
    if target.size == 0:
        return StandardSkewTableau(target, {})
    return fill_from_reading_word(target, rs_inverse(pair))


def psi(t: StandardSkewTableau, source: SkewShape, pattern: SkewShape) -> StandardSkewTableau:
    """Swap the roles of shape and pattern: RW_{source}(pattern) -> RW_{pattern}(source)."""
    from .rw import rw_member

    if t.shape != source:
        raise UserInputError(f"tableau has shape {t.shape}, expected {source}")
    if not rw_member(t, pattern):
        raise UserInputError(f"tableau is not in the Remmel-Whitney set of pattern {pattern}")
    if len(t) == 0:
        return StandardSkewTableau(pattern, {})
    image = theta(t)
    return theta_inverse(pattern, TableauPair(image.recording, image.insertion))
