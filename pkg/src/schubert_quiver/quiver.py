"""The Remmel-Whitney quiver on pairs of partitions and the bases it defines.

A vertex ``(α1, α2)`` stands for ``s_{α1} ⊗ s_{α2}``.  Arrows are generated
lazily per source vertex; the quiver itself is never materialised.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Mapping, NamedTuple, Optional

from .errors import InvariantError, UserInputError
from .rsk import psi
from .rw import lr_product, rw_member, rw_set
from .shapes import Box, Partition, SkewShape, partitions_above, partitions_of, rl_boxes, row_rule_value, subpartitions
from .tableaux import StandardSkewTableau

INT64_LIMIT = 2**63


class VertexLabel(NamedTuple):
    first: Partition
    second: Partition

    @classmethod
    def of(cls, first=(), second=()) -> "VertexLabel":
        return cls(Partition(first), Partition(second))

    @property
    def degree(self) -> int:
        return self.first.size + self.second.size

    @property
    def grading(self) -> tuple[int, int]:
        return (self.first.size, self.second.size)

    def to_json(self) -> list[list[int]]:
        return [list(self.first), list(self.second)]

    @classmethod
    def from_json(cls, data) -> "VertexLabel":
        return cls.of(data[0], data[1])

    def __str__(self) -> str:
        return f"({self.first},{self.second})"


def vertices_of_degree(d: int) -> list[VertexLabel]:
    """All pairs of total size ``d``, ordered by the size of the first entry."""
    return [VertexLabel(a, b) for k in range(d + 1) for a in partitions_of(k) for b in partitions_of(d - k)]


class Indexing(Enum):
    STANDARD = "standard"
    PSI = "psi"


class Status(Enum):
    SATISFIES = "satisfies"
    REVERSE_SATISFIES = "reverse"
    MIXED = "mixed"


class Kind(Enum):
    RW = "rw"
    ROW_RULE = "row-rule"
    REVERSE_ROW_RULE = "reverse-row-rule"


@dataclass(frozen=True)
class Arrow:
    """An arrow ``source -> target`` together with the tableau that witnesses it.

    Standard arrows carry a witness in ``RW_{β1/α1}(α2/β2)``; Ψ-indexed arrows
    carry one in ``RW_{α2/β2}(β1/α1)``.
    """

    source: VertexLabel
    target: VertexLabel
    witness: StandardSkewTableau
    indexing: Indexing = Indexing.STANDARD

    @property
    def first_skew(self) -> SkewShape:
        return SkewShape(self.target.first, self.source.first)

    @property
    def second_skew(self) -> SkewShape:
        return SkewShape(self.source.second, self.target.second)

    @property
    def shape(self) -> SkewShape:
        return self.first_skew if self.indexing is Indexing.STANDARD else self.second_skew

    @property
    def pattern(self) -> SkewShape:
        return self.second_skew if self.indexing is Indexing.STANDARD else self.first_skew

    @property
    def is_trivial(self) -> bool:
        return self.source == self.target

    def is_valid(self) -> bool:
        """Homogeneous, graded, and the witness is in the right RW set."""
        try:
            shape, pattern = self.shape, self.pattern
        except UserInputError:
            return False
        return (
            self.source.degree == self.target.degree
            and self.source.first.size < self.target.first.size
            and self.witness.shape == shape
            and rw_member(self.witness, pattern)
        )

    def sort_key(self) -> tuple:
        return (tuple(self.target.first), tuple(self.target.second), self.witness.sort_key())

    def to_json(self) -> dict:
        return {
            "source": self.source.to_json(),
            "target": self.target.to_json(),
            "indexing": self.indexing.value,
            "witness": self.witness.to_json(),
        }

    def __str__(self) -> str:
        return f"{self.source} -> {self.target}"


@lru_cache(maxsize=None)
def all_arrows(v: VertexLabel, indexing: Indexing = Indexing.STANDARD) -> tuple[Arrow, ...]:
    v = VertexLabel.of(*v)
    found = []
    for beta2 in subpartitions(v.second):
        k = v.second.size - beta2.size
        if k == 0:
            continue
        second = SkewShape(v.second, beta2)
        for beta1 in partitions_above(v.first, k):
            first = SkewShape(beta1, v.first)
            target = VertexLabel(beta1, beta2)
            if indexing is Indexing.STANDARD:
                witnesses = rw_set(first, second)
            else:
                witnesses = rw_set(second, first)
            found.extend(Arrow(v, target, w, indexing) for w in witnesses)
    found.sort(key=Arrow.sort_key)
    return tuple(found)


def row_rule_status(a: Arrow, r: int) -> Status:
    """Compare row-rule values with rows, for either indexing.

    A trivial arrow (empty witness) is classed as reverse-satisfying.
    """
    if r < 1:
        raise UserInputError(f"row rule parameter must be positive, got {r}")
    if len(a.witness) == 0:
        return Status.REVERSE_SATISFIES
    pattern_boxes = rl_boxes(a.pattern)
    low = high = True
    for label in range(1, len(a.witness) + 1):
        if a.indexing is Indexing.STANDARD:
            value = row_rule_value(r, pattern_boxes[label - 1])
            row = a.witness.row_of(label)
        else:
            value = row_rule_value(r, a.witness.position(label))
            row = pattern_boxes[label - 1].row
        if value <= row:
            high = False
        else:
            low = False
    if low:
        return Status.SATISFIES
    if high:
        return Status.REVERSE_SATISFIES
    return Status.MIXED


def arrows_from(v, kind: Kind | str = Kind.RW, r: Optional[int] = None,
                indexing: Indexing = Indexing.STANDARD) -> list[Arrow]:
    """Arrows rooted at ``v`` in the RW quiver or in one of its row-rule parts."""
    kind = Kind(kind)
    arrows = all_arrows(VertexLabel.of(*v), indexing)
    if kind is Kind.RW:
        return list(arrows)
    if r is None or r < 1:
        raise UserInputError("row-rule kinds need a positive r")
    wanted = Status.SATISFIES if kind is Kind.ROW_RULE else Status.REVERSE_SATISFIES
    return [a for a in arrows if row_rule_status(a, r) is wanted]


# composition and splitting ----------------------------------------------------


def _renumber(boxes_by_label: dict[Box, int], old: SkewShape, new: SkewShape) -> dict[Box, int]:
    """Re-express labels that index ``rl(old)`` as labels of ``rl(new)``; ``old ⊆ new`` as box sets."""
    old_boxes = rl_boxes(old)
    new_index = {box: i for i, box in enumerate(rl_boxes(new), 1)}
    return {box: new_index[old_boxes[label - 1]] for box, label in boxes_by_label.items()}


def _build(source: VertexLabel, target: VertexLabel, entries: dict[Box, int], indexing: Indexing) -> Optional[Arrow]:
    shape = SkewShape(target.first, source.first) if indexing is Indexing.STANDARD else SkewShape(source.second, target.second)
    try:
        witness = StandardSkewTableau(shape, entries)
    except UserInputError:
        return None
    arrow = Arrow(source, target, witness, indexing)
    return arrow if rw_member(witness, arrow.pattern) else None


def compose_arrows(a1: Arrow, a2: Arrow) -> Optional[Arrow]:
    """The composition of ``a1`` then ``a2``, or ``None`` when they are not composable.

    Each label of a factor names a box of that factor's pattern; the
    composite labels it by the box's position in the combined pattern.
    """
    if a1.target != a2.source:
        raise UserInputError(f"arrows do not meet: {a1.target} vs {a2.source}")
    if a1.indexing is not a2.indexing:
        raise UserInputError("cannot compose arrows with different indexing")
    if a1.is_trivial or a2.is_trivial:
        raise UserInputError("arrows join distinct vertices; trivial arrows do not compose")
    source, target = a1.source, a2.target
    if a1.indexing is Indexing.STANDARD:
        combined = SkewShape(source.second, target.second)
    else:
        combined = SkewShape(target.first, source.first)
    entries = _renumber(a1.witness.entries, a1.pattern, combined)
    entries.update(_renumber(a2.witness.entries, a2.pattern, combined))
    return _build(source, target, entries, a1.indexing)


def _grow(base: Partition, boxes: Iterable[Box]) -> Partition:
    parts = list(base)
    for box in boxes:
        while len(parts) < box.row:
            parts.append(0)
        parts[box.row - 1] += 1
    try:
        return Partition(parts)
    except UserInputError as exc:
        raise InvariantError(f"split produced a non-partition {parts}") from exc


def split_arrow(a: Arrow, r: int) -> tuple[Arrow, Arrow]:
    """Factor a mixed arrow into a row-rule arrow followed by a reverse one.

    The labels violating the row rule (row below the row-rule value, or the
    Ψ-indexed analogue) form the second factor.
    """
    if row_rule_status(a, r) is not Status.MIXED:
        raise UserInputError("only arrows that mix row-rule and reverse labels can be split")
    pattern_boxes = rl_boxes(a.pattern)
    n = len(a.witness)
    if a.indexing is Indexing.STANDARD:
        late = {i for i in range(1, n + 1) if a.witness.row_of(i) < row_rule_value(r, pattern_boxes[i - 1])}
        mid_first = _grow(a.source.first, (a.witness.position(i) for i in range(1, n + 1) if i not in late))
        mid_second = _grow(a.target.second, (pattern_boxes[i - 1] for i in late))
    else:
        late = {l for l in range(1, n + 1) if row_rule_value(r, a.witness.position(l)) > pattern_boxes[l - 1].row}
        mid_first = _grow(a.source.first, (pattern_boxes[l - 1] for l in range(1, n + 1) if l not in late))
        mid_second = _grow(a.target.second, (a.witness.position(l) for l in late))
    middle = VertexLabel(mid_first, mid_second)
    first_entries = {box: lab for box, lab in a.witness.items() if lab not in late}
    second_entries = {box: lab for box, lab in a.witness.items() if lab in late}
    if a.indexing is Indexing.STANDARD:
        p1, p2 = SkewShape(a.source.second, middle.second), SkewShape(middle.second, a.target.second)
    else:
        p1, p2 = SkewShape(middle.first, a.source.first), SkewShape(a.target.first, middle.first)
    # labels of the whole index rl(pattern); re-express them against each factor's pattern
    first = _build(a.source, middle, _inverse_renumber(first_entries, a.pattern, p1), a.indexing)
    second = _build(middle, a.target, _inverse_renumber(second_entries, a.pattern, p2), a.indexing)
    if first is None or second is None:
        raise InvariantError(f"splitting {a} did not produce two arrows")
    return first, second


def _inverse_renumber(entries: dict[Box, int], whole: SkewShape, part: SkewShape) -> dict[Box, int]:
    whole_boxes = rl_boxes(whole)
    part_index = {box: i for i, box in enumerate(rl_boxes(part), 1)}
    return {box: part_index[whole_boxes[label - 1]] for box, label in entries.items()}


def psi_arrow(a: Arrow) -> Arrow:
    """Swap the witness between the two indexings with Ψ."""
    other = Indexing.PSI if a.indexing is Indexing.STANDARD else Indexing.STANDARD
    return Arrow(a.source, a.target, psi(a.witness, a.shape, a.pattern), other)


# linear combinations ------------------------------------------------------------


class Basis(Enum):
    S = "s"
    W = "w"
    TAU = "tau"
    SIGMA = "sigma"


def vertex_key(v: VertexLabel) -> tuple:
    return (v.degree, tuple(v.first), tuple(v.second))


@dataclass(frozen=True)
class LinComb:
    """An integer combination of basis elements indexed by pairs of partitions."""

    basis: Basis
    terms: Mapping[VertexLabel, int]
    r: Optional[int] = None

    @classmethod
    def build(cls, basis: Basis, items: Iterable[tuple[VertexLabel, int]] | Mapping, r: Optional[int] = None) -> "LinComb":
        acc: dict[VertexLabel, int] = defaultdict(int)
        pairs = items.items() if isinstance(items, Mapping) else items
        for v, c in pairs:
            acc[VertexLabel.of(*v)] += c
        clean = {}
        for v in sorted(acc, key=vertex_key):
            c = acc[v]
            if abs(c) >= INT64_LIMIT:
                raise InvariantError(f"coefficient of {v} overflows 64 bits")
            if c:
                clean[v] = c
        return cls(basis, clean, r if basis in (Basis.TAU, Basis.SIGMA) else None)

    @classmethod
    def single(cls, basis: Basis, v, r: Optional[int] = None) -> "LinComb":
        return cls.build(basis, [(VertexLabel.of(*v), 1)], r)

    def _check(self, other: "LinComb") -> None:
        if self.basis is not other.basis or self.r != other.r:
            raise UserInputError("linear combinations live in different bases")

    def __add__(self, other: "LinComb") -> "LinComb":
        self._check(other)
        return LinComb.build(self.basis, list(self.terms.items()) + list(other.terms.items()), self.r)

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + other.scale(-1)

    def scale(self, k: int) -> "LinComb":
        return LinComb.build(self.basis, [(v, k * c) for v, c in self.terms.items()], self.r)

    def coefficient(self, v) -> int:
        return self.terms.get(VertexLabel.of(*v), 0)

    def items(self):
        return self.terms.items()

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[VertexLabel]:
        return iter(self.terms)

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def to_json(self) -> dict:
        data = {"basis": self.basis.value}
        if self.r is not None:
            data["r"] = self.r
        data["terms"] = [{"v": v.to_json(), "c": c} for v, c in self.terms.items()]
        return data

    @classmethod
    def from_json(cls, data: Mapping) -> "LinComb":
        return cls.build(Basis(data["basis"]), [(VertexLabel.from_json(t["v"]), t["c"]) for t in data["terms"]], data.get("r"))

    def render(self) -> str:
        if not self.terms:
            return "0"
        name = self.basis.value
        pieces = []
        for v, c in self.terms.items():
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else f"{abs(c)} "
            pieces.append(f"{sign} {mag}{name}{v}")
        text = " ".join(pieces)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


# bases ----------------------------------------------------------------------------


def _outgoing(v: VertexLabel, basis: Basis, r: Optional[int]) -> list[Arrow]:
    if basis is Basis.W:
        return arrows_from(v, Kind.RW)
    if basis is Basis.TAU:
        return arrows_from(v, Kind.ROW_RULE, r)
    raise UserInputError(f"no quiver recursion for basis {basis.value}")


@lru_cache(maxsize=None)
def _expand(v: VertexLabel, basis: Basis, r: Optional[int]) -> LinComb:
    result = LinComb.single(Basis.S, v)
    for a in _outgoing(v, basis, r):
        result = result - _expand(a.target, basis, r)
    return result


def expand_basis_element(v, basis: Basis | str, r: Optional[int] = None) -> LinComb:
    """``b_v = s_v - Σ_{arrows a out of v} b_{t(a)}`` written in the s basis."""
    basis = Basis(basis)
    if basis is Basis.S:
        return LinComb.single(Basis.S, v)
    return _expand(VertexLabel.of(*v), basis, r if basis is Basis.TAU else None)


def tau_in_w(v, r: int) -> LinComb:
    """``τ^r_v = w_v + Σ_{reverse row-rule arrows out of v} w_{t(a)}``."""
    v = VertexLabel.of(*v)
    items = [(v, 1)] + [(a.target, 1) for a in arrows_from(v, Kind.REVERSE_ROW_RULE, r)]
    return LinComb.build(Basis.W, items)


@lru_cache(maxsize=None)
def _w_in_tau(v: VertexLabel, r: int) -> LinComb:
    result = LinComb.single(Basis.TAU, v, r)
    for a in arrows_from(v, Kind.REVERSE_ROW_RULE, r):
        result = result - _w_in_tau(a.target, r)
    return result


def w_in_tau(v, r: int) -> LinComb:
    """Invert :func:`tau_in_w` by back-substitution (targets have higher first grading)."""
    return _w_in_tau(VertexLabel.of(*v), r)


def s_in_basis(v, basis: Basis | str, r: Optional[int] = None) -> LinComb:
    """``s_v = b_v + Σ_a b_{t(a)}``, read straight off the defining recursion."""
    basis = Basis(basis)
    v = VertexLabel.of(*v)
    if basis is Basis.S:
        return LinComb.single(Basis.S, v)
    items = [(v, 1)] + [(a.target, 1) for a in _outgoing(v, basis, r)]
    return LinComb.build(basis, items, r)


def convert(x: LinComb, basis: Basis | str, r: Optional[int] = None) -> LinComb:
    """Re-express ``x`` in another basis (``r`` is needed whenever τ is involved)."""
    basis = Basis(basis)
    if basis is Basis.TAU and r is None:
        r = x.r
    if x.basis is basis and (basis is not Basis.TAU or x.r == r):
        return x
    if x.basis is Basis.W and basis is Basis.TAU:
        return _linear(x, lambda v: w_in_tau(v, r), Basis.TAU, r)
    if x.basis is Basis.TAU and basis is Basis.W:
        return _linear(x, lambda v: tau_in_w(v, x.r), Basis.W, None)
    in_s = x if x.basis is Basis.S else _linear(x, lambda v: expand_basis_element(v, x.basis, x.r), Basis.S, None)
    if basis is Basis.S:
        return in_s
    return solve_triangular(in_s, basis, r)


def solve_triangular(x: LinComb, basis: Basis | str, r: Optional[int] = None) -> LinComb:
    """Rewrite an s-basis combination in ``basis`` by peeling off leading terms.

    ``b_v = s_v + (terms of strictly larger first grading)``, so clearing the
    smallest first grading at each step terminates.
    """
    basis = Basis(basis)
    if x.basis is not Basis.S:
        raise UserInputError("solve_triangular expects an s-basis input")
    remaining = dict(x.terms)
    solved: list[tuple[VertexLabel, int]] = []
    while remaining:
        lead = min(remaining, key=lambda v: (v.first.size, vertex_key(v)))
        c = remaining[lead]
        solved.append((lead, c))
        for u, d in expand_basis_element(lead, basis, r).items():
            left = remaining.get(u, 0) - c * d
            if left:
                remaining[u] = left
            else:
                remaining.pop(u, None)
    return LinComb.build(basis, solved, r)


def _linear(x: LinComb, image: Callable[[VertexLabel], LinComb], basis: Basis, r: Optional[int]) -> LinComb:
    items = []
    for v, c in x.items():
        items.extend((u, c * d) for u, d in image(v).items())
    return LinComb.build(basis, items, r)


LRProduct = Callable[[Partition, Partition], Mapping[Partition, int]]


def componentwise_product(u, v, lr: LRProduct = lr_product) -> dict[VertexLabel, int]:
    """``c^{γ1}_{u1,v1} c^{γ2}_{u2,v2}`` for every ``(γ1, γ2)``."""
    u, v = VertexLabel.of(*u), VertexLabel.of(*v)
    out = {}
    for g1, c1 in lr(u.first, v.first).items():
        for g2, c2 in lr(u.second, v.second).items():
            out[VertexLabel(g1, g2)] = c1 * c2
    return out


def s_product(u, v) -> LinComb:
    return LinComb.build(Basis.S, componentwise_product(u, v))


def w_product(u, v) -> LinComb:
    """The w basis multiplies with the same constants as the s basis."""
    return LinComb.build(Basis.W, componentwise_product(u, v))


def multiply_in_s(x: LinComb, y: LinComb, lr: LRProduct = lr_product) -> LinComb:
    if x.basis is not Basis.S or y.basis is not Basis.S:
        raise UserInputError("multiply_in_s expects s-basis inputs")
    items = []
    for u, a in x.items():
        for v, b in y.items():
            items.extend((g, a * b * c) for g, c in componentwise_product(u, v, lr).items())
    return LinComb.build(Basis.S, items)


def multiply_in_w(x: LinComb, y: LinComb) -> LinComb:
    if x.basis is not Basis.W or y.basis is not Basis.W:
        raise UserInputError("multiply_in_w expects w-basis inputs")
    items = []
    for u, a in x.items():
        for v, b in y.items():
            items.extend((g, a * b * c) for g, c in w_product(u, v).items())
    return LinComb.build(Basis.W, items)


def skew_w(first: SkewShape, second: SkewShape) -> LinComb:
    """``w_{λ1/μ1, λ2/μ2} = Σ c^{λ1}_{μ1,γ1} c^{λ2}_{μ2,γ2} w_{γ1,γ2}``."""
    from .rw import skew_lr_expansion

    items = []
    for g1, c1 in skew_lr_expansion(first).items():
        for g2, c2 in skew_lr_expansion(second).items():
            items.append((VertexLabel(g1, g2), c1 * c2))
    return LinComb.build(Basis.W, items)


# export -----------------------------------------------------------------------------


def _node(v: VertexLabel) -> str:
    return f'"{v.first}|{v.second}"'


def quiver_edges(degree: int, kind: Kind | str = Kind.RW, r: Optional[int] = None,
                 indexing: Indexing = Indexing.STANDARD) -> tuple[list[VertexLabel], list[Arrow]]:
    vertices = vertices_of_degree(degree)
    edges = [a for v in vertices for a in arrows_from(v, kind, r, indexing)]
    return vertices, edges


def to_dot(degree: int, kind: Kind | str = Kind.RW, r: Optional[int] = None,
           indexing: Indexing = Indexing.STANDARD) -> str:
    """DOT text for the quiver restricted to vertices of one total degree."""
    kind = Kind(kind)
    vertices, edges = quiver_edges(degree, kind, r, indexing)
    name = kind.value.replace("-", "_") + (f"_r{r}" if r is not None and kind is not Kind.RW else "")
    lines = [f"digraph {name}_degree{degree} {{", "  rankdir=TB;"]
    for v in vertices:
        lines.append(f"  {_node(v)} [rank={v.first.size}];")
    for a in edges:
        labels = " ".join(str(lab) for _, lab in a.witness.items())
        lines.append(f'  {_node(a.source)} -> {_node(a.target)} [label="{labels}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
