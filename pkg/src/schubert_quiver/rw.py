"""Remmel-Whitney sets, Littlewood-Richardson numbers, star shapes, infusion and diffusion."""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from .cache import persistent
from .errors import InvariantError, UserInputError
from .shapes import Box, Partition, SkewShape, contains, partitions_above, rl_boxes
from .rsk import TableauPair, psi, theta, theta_inverse
from .tableaux import (
    StandardSkewTableau,
    enumerate_standard,
    jdt_slide_inner,
    restrict,
    split_at,
    stack,
)


class RWQuery(NamedTuple):
    target: SkewShape
    pattern: SkewShape


class _Rules(NamedTuple):
    row_pairs: tuple[tuple[int, int], ...]
    column_pairs: tuple[tuple[int, int], ...]


@lru_cache(maxsize=None)
def _rules(pattern: SkewShape) -> _Rules:
    order = rl_boxes(pattern)
    label = {box: i for i, box in enumerate(order, 1)}
    row_pairs = []
    column_pairs = []
    for i, box in enumerate(order, 1):
        if i < len(order) and order[i].row == box.row:
            row_pairs.append((i, i + 1))
        below = Box(box.row + 1, box.col)
        if below in label:
            column_pairs.append((i, label[below]))
    return _Rules(tuple(row_pairs), tuple(column_pairs))


def rw_member(t: StandardSkewTableau, pattern: SkewShape) -> bool:
    """Check both adjacency rules of ``rl(pattern)`` against ``t``.

    Row rule: ``i, i+1`` in one row of the pattern means ``i+1`` lies strictly
    right of and weakly above ``i`` in ``t``.  Column rule: ``i`` directly above
    ``j`` in the pattern means ``j`` lies strictly below and weakly left of
    ``i``.
    """
    if len(t) != pattern.size:
        raise UserInputError(f"tableau has {len(t)} boxes but the pattern {pattern} has {pattern.size}")
    rules = _rules(pattern)
    pos = t.positions
    for i, j in rules.row_pairs:
        a, b = pos[i - 1], pos[j - 1]
        if not (b.col > a.col and b.row <= a.row):
            return False
    for i, j in rules.column_pairs:
        a, b = pos[i - 1], pos[j - 1]
        if not (b.row > a.row and b.col <= a.col):
            return False
    return True


def _encode_set(tableaux):
    return [t.to_json() for t in tableaux]


def _decode_set(data):
    return tuple(StandardSkewTableau.from_json(item) for item in data)


@persistent("rw_set", _encode_set, _decode_set)
def _rw_set(target: SkewShape, pattern: SkewShape) -> tuple[StandardSkewTableau, ...]:
    if target.size != pattern.size:
        return ()
    return tuple(t for t in enumerate_standard(target) if rw_member(t, pattern))


def rw_set(target: SkewShape | RWQuery, pattern: SkewShape | None = None) -> tuple[StandardSkewTableau, ...]:
    """All standard tableaux of shape ``target`` satisfying the rules of ``pattern``."""
    if pattern is None:
        target, pattern = target
    return _rw_set(SkewShape.of(target), SkewShape.of(pattern))


def lr_coefficient(alpha: Partition, beta: Partition, gamma: Partition) -> int:
    """``c^α_{β,γ}``, counted as ``|RW_γ(α/β)|``."""
    alpha, beta, gamma = Partition(alpha), Partition(beta), Partition(gamma)
    if not contains(alpha, beta) or alpha.size != beta.size + gamma.size:
        return 0
    return len(rw_set(SkewShape(gamma), SkewShape(alpha, beta)))


@lru_cache(maxsize=None)
def lr_product(alpha: Partition, beta: Partition) -> dict[Partition, int]:
    """``s_α s_β`` as ``{γ: c^γ_{α,β}}``."""
    alpha, beta = Partition(alpha), Partition(beta)
    if alpha.size < beta.size:
        alpha, beta = beta, alpha
    out = {}
    for gamma in partitions_above(alpha, beta.size):
        c = lr_coefficient(gamma, alpha, beta)
        if c:
            out[gamma] = c
    return out


def lr_oracle(alpha: Partition, beta: Partition, gamma: Partition) -> int:
    """Count semistandard fillings of ``α/β`` with content ``γ`` and lattice reverse reading word.

    Deliberately shares nothing with the Remmel-Whitney route.
    """
    alpha, beta, gamma = Partition(alpha), Partition(beta), Partition(gamma)
    if not contains(alpha, beta) or alpha.size != beta.size + gamma.size:
        return 0
    cells = []
    for r in range(len(alpha)):
        lo = beta[r] if r < len(beta) else 0
        for c in range(alpha[r] - 1, lo - 1, -1):
            cells.append((r, c))
    inner = {(r, c) for r in range(len(beta)) for c in range(beta[r])}
    value: dict[tuple[int, int], int] = {}
    counts = [0] * len(gamma)

    def place(i: int) -> int:
        if i == len(cells):
            return 1
        r, c = cells[i]
        total = 0
        for v in range(len(gamma)):
            right = value.get((r, c + 1))
            if right is not None and v > right:
                continue
            if r > 0 and (r - 1, c) not in inner and value.get((r - 1, c), -1) >= v:
                continue
            if counts[v] >= gamma[v] or (v > 0 and counts[v] >= counts[v - 1]):
                continue
            counts[v] += 1
            value[(r, c)] = v
            total += place(i + 1)
            del value[(r, c)]
            counts[v] -= 1
        return total

    return place(0)


def _as_shape(x) -> SkewShape:
    return x if isinstance(x, SkewShape) else SkewShape(Partition(x))


def star(alpha, beta) -> SkewShape:
    """``α`` in the lower-left block, ``β`` in the upper-right block, no shared rows or columns."""
    a, b = _as_shape(alpha), _as_shape(beta)
    shift = a.outer.width
    outer = [shift + b.outer.part(r) for r in range(1, b.outer.length + 1)] + list(a.outer)
    inner = [shift + b.inner.part(r) for r in range(1, b.outer.length + 1)] + list(a.inner)
    inner += [0] * (len(outer) - len(inner))
    return SkewShape(Partition(outer), Partition(inner))


def star_split(t: StandardSkewTableau, alpha, beta, pattern: SkewShape) -> tuple[StandardSkewTableau, StandardSkewTableau]:
    """Bijection ``RW_{α*β}(λ/μ) -> ⋃_γ RW_α(λ/γ) × RW_β(γ/μ)``.

    Swap shape and pattern with Ψ, split off the labels coming from the
    ``β`` block (they are the smallest in reverse-lexicographic order), then
    swap each half back.
    """
    a, b = _as_shape(alpha), _as_shape(beta)
    shape = star(a, b)
    if t.shape != shape:
        raise UserInputError(f"tableau shape {t.shape} is not {shape}")
    swapped = psi(t, shape, pattern)
    low, high = split_at(swapped, b.size)
    return psi(high, high.shape, a), psi(low, low.shape, b)


def star_join(first: StandardSkewTableau, first_pattern: SkewShape, second: StandardSkewTableau,
               second_pattern: SkewShape, alpha, beta) -> StandardSkewTableau:
    """Inverse of :func:`star_split` given the patterns ``λ/γ`` and ``γ/μ`` of the halves."""
    a, b = _as_shape(alpha), _as_shape(beta)
    high = psi(first, a, first_pattern)
    low = psi(second, b, second_pattern)
    whole = stack(low, high)
    return psi(whole, whole.shape, star(a, b))


def infusion(t1: StandardSkewTableau, t2: StandardSkewTableau) -> tuple[StandardSkewTableau, StandardSkewTableau]:
    """Slide ``t2`` (outside) past ``t1`` (inside).

    ``t2`` is slid into the boxes of ``t1`` from the largest label down; each
    vacated outer box receives the label of ``t1`` that caused it.  Returns
    ``(Slide_{t1}(t2), Slide^{t2}(t1))``.
    """
    if t1.shape.outer != t2.shape.inner:
        raise UserInputError(f"infusion needs outer({t1.shape}) = inner({t2.shape})")
    current = t2
    vacated = {}
    for label in range(len(t1), 0, -1):
        current, path = jdt_slide_inner(current, t1.position(label))
        vacated[path[-1]] = label
    moved = StandardSkewTableau(SkewShape(t2.shape.outer, current.shape.outer), vacated)
    return current, moved


@lru_cache(maxsize=None)
def unique_rw_element(delta: Partition) -> StandardSkewTableau:
    """The single element of ``RW_δ(δ)``, computed rather than assumed."""
    delta = Partition(delta)
    found = rw_set(SkewShape(delta), SkewShape(delta))
    if len(found) != 1:
        raise InvariantError(f"RW({delta}) has {len(found)} elements, expected 1")
    return found[0]


def extend_by_unique(u: StandardSkewTableau) -> StandardSkewTableau:
    """Fill the inner shape of ``u`` with the unique element of its RW set, below ``u``'s labels."""
    return stack(unique_rw_element(u.shape.inner), u)


def diffuse(u: StandardSkewTableau, v: StandardSkewTableau, star_shape: SkewShape) -> tuple[StandardSkewTableau, StandardSkewTableau]:
    """Spread ``u`` (shape ``μ/δ1``) over the star shape carried by ``v`` (shape ``μ``).

    ``v`` must be a recording tableau for ``star_shape``, that is an element of
    ``RW_μ(star_shape)``.  Returns the split at ``|δ1|`` of the tableau of
    shape ``star_shape`` whose RS pair is ``(ũ, v)``.
    """
    if not v.shape.is_straight or v.shape.outer != u.shape.outer:
        raise UserInputError(f"shapes {u.shape} and {v.shape} do not fit together")
    if not rw_member(v, star_shape):
        raise UserInputError(f"second tableau is not in RW_{v.shape}({star_shape})")
    full = extend_by_unique(u)
    t = theta_inverse(star_shape, TableauPair(full, v))
    return split_at(t, u.shape.inner.size)


def diffuse_inverse(t: StandardSkewTableau, k: int) -> tuple[StandardSkewTableau, StandardSkewTableau]:
    """Recover ``(u, v)`` from ``t = T_low ∪ T_high`` with ``|T_low| = k``."""
    w, v = theta(t)
    low = restrict(w, 0, k)
    if low != unique_rw_element(low.shape.outer):
        raise UserInputError("the low part does not rectify to the unique element of its RW set")
    return restrict(w, k, len(w)), v


def skew_lr_expansion(shape: SkewShape) -> dict[Partition, int]:
    """``s_{λ/μ} = Σ_ν c^λ_{μ,ν} s_ν``, via RW counts."""
    out = {}
    for nu in partitions_above(Partition(), shape.size):
        c = lr_coefficient(shape.outer, shape.inner, nu)
        if c:
            out[nu] = c
    return out
