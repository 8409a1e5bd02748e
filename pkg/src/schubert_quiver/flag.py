"""Schubert classes of two-step flag varieties ``Fl(n; r1, r2)``.

Classes are indexed three ways: pairs of partitions, permutations with
descents only at ``r2`` and ``r1``, and 012-strings.  The column Pieri rule on
012-strings gives an oracle that shares no code with the tableau rules.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from .errors import UserInputError
from .products import mult_tau_x, mult_tau_y
from .quiver import Basis, LinComb, VertexLabel, vertex_key
from .shapes import Partition, column, partitions_in_box

Permutation = tuple[int, ...]


@dataclass(frozen=True)
class FlagShape:
    n: int
    r1: int
    r2: int

    def __post_init__(self):
        if not (isinstance(self.n, int) and isinstance(self.r1, int) and isinstance(self.r2, int)):
            raise UserInputError("flag dimensions must be integers")
        if not self.n > self.r1 > self.r2 >= 1:
            raise UserInputError(f"need n > r1 > r2 >= 1, got n={self.n}, r1={self.r1}, r2={self.r2}")

    @property
    def r(self) -> int:
        return self.r1 - self.r2 + 1

    def classes(self) -> list[VertexLabel]:
        """Every pair in ``P(n; r1, r2)``, in canonical order."""
        pairs = [
            VertexLabel(b1, b2)
            for b1 in partitions_in_box(self.r1, self.n - self.r1)
            for b2 in partitions_in_box(self.r2, self.r1 - self.r2)
        ]
        return sorted(pairs, key=vertex_key)

    def __str__(self) -> str:
        return f"Fl({self.n};{self.r1},{self.r2})"


def in_P(flag: FlagShape, pair) -> bool:
    b1, b2 = VertexLabel.of(*pair)
    return (
        b1.length <= flag.r1
        and b1.width <= flag.n - flag.r1
        and b2.length <= flag.r2
        and b2.width <= flag.r1 - flag.r2
    )


def _require_P(flag: FlagShape, pair) -> VertexLabel:
    pair = VertexLabel.of(*pair)
    if not in_P(flag, pair):
        raise UserInputError(f"{pair} does not index a Schubert class of {flag}")
    return pair


class String012(tuple):
    """A word over {0, 1, 2}; the counts of each letter determine the flag."""

    def __new__(cls, entries):
        if isinstance(entries, str):
            entries = [int(ch) for ch in entries.strip()]
        values = tuple(int(x) for x in entries)
        if any(x not in (0, 1, 2) for x in values):
            raise UserInputError(f"012-strings use only the letters 0, 1, 2: {values}")
        return super().__new__(cls, values)

    def flag(self) -> FlagShape:
        counts = Counter(self)
        return FlagShape(len(self), counts[0] + counts[1], counts[0])

    def fits(self, flag: FlagShape) -> bool:
        counts = Counter(self)
        return len(self) == flag.n and counts[0] == flag.r2 and counts[1] == flag.r1 - flag.r2

    def __str__(self) -> str:
        return "".join(str(x) for x in self)

    def __repr__(self) -> str:
        return f"String012('{self}')"


def _grassmannian(part: Partition, k: int, n: int) -> list[int]:
    """The permutation with descent at most at ``k`` whose first ``k`` values are ``part[k+1-i] + i``."""
    top = [part.part(k + 1 - i) + i for i in range(1, k + 1)]
    rest = sorted(set(range(1, n + 1)) - set(top))
    return top + rest


def pair_to_permutation(flag: FlagShape, pair) -> Permutation:
    """``w = w1 w2`` with ``w1`` Grassmannian at ``r1`` and ``w2`` Grassmannian at ``r2``."""
    b1, b2 = _require_P(flag, pair)
    w1 = _grassmannian(b1, flag.r1, flag.n)
    w2 = _grassmannian(b2, flag.r2, flag.n)
    return tuple(w1[w2[i] - 1] for i in range(flag.n))


def _check_permutation(flag: FlagShape, w: Sequence[int]) -> Permutation:
    w = tuple(int(x) for x in w)
    if sorted(w) != list(range(1, flag.n + 1)):
        raise UserInputError(f"{w} is not a permutation of 1..{flag.n}")
    for i in range(1, flag.n):
        if i not in (flag.r1, flag.r2) and w[i - 1] > w[i]:
            raise UserInputError(f"{w} has a descent at {i}, outside {{{flag.r2},{flag.r1}}}")
    return w


def permutation_to_pair(flag: FlagShape, w: Sequence[int]) -> VertexLabel:
    w = _check_permutation(flag, w)
    w1 = sorted(w[: flag.r1]) + sorted(w[flag.r1:])
    b1 = Partition(w1[flag.r1 - i] - (flag.r1 + 1 - i) for i in range(1, flag.r1 + 1))
    position = {value: i for i, value in enumerate(w1, 1)}
    w2 = [position[value] for value in w]
    b2 = Partition(w2[flag.r2 - i] - (flag.r2 + 1 - i) for i in range(1, flag.r2 + 1))
    return VertexLabel(b1, b2)


def permutation_to_string(flag: FlagShape, w: Sequence[int]) -> String012:
    w = _check_permutation(flag, w)
    u = [0] * flag.n
    for i, value in enumerate(w, 1):
        u[value - 1] = 0 if i <= flag.r2 else (1 if i <= flag.r1 else 2)
    return String012(u)


def string_to_permutation(flag: FlagShape, u) -> Permutation:
    u = _require_string(flag, u)
    return tuple(i for letter in (0, 1, 2) for i, x in enumerate(u, 1) if x == letter)


def pair_to_string(flag: FlagShape, pair) -> String012:
    return permutation_to_string(flag, pair_to_permutation(flag, pair))


def _require_string(flag: FlagShape, u) -> String012:
    u = String012(u)
    if not u.fits(flag):
        raise UserInputError(f"{u} is not a 012-string for {flag}")
    return u


def _trace(word: Sequence[int], up: int, rows: int) -> Partition:
    """Lattice path from the lower-left corner: ``up`` letters climb, others step right."""
    parts = []
    across = 0
    for letter in word:
        if letter == up:
            parts.append(across)
        else:
            across += 1
    if len(parts) != rows:
        raise UserInputError("path does not fit its rectangle")
    return Partition(reversed(parts))


def string_to_pair(flag: FlagShape, u) -> VertexLabel:
    """Read the two partitions straight off lattice paths, without permutations."""
    u = _require_string(flag, u)
    first = _trace([0 if x == 1 else x for x in u], 0, flag.r1)
    second = _trace([x for x in u if x != 2], 0, flag.r2)
    return VertexLabel(first, second)


# Schubert expansions --------------------------------------------------------------


@dataclass(frozen=True)
class SchubertSum:
    """An integer combination of Schubert classes of one flag variety."""

    flag: FlagShape
    terms: Mapping[VertexLabel, int]

    @classmethod
    def build(cls, flag: FlagShape, items) -> "SchubertSum":
        acc: Counter = Counter()
        pairs = items.items() if isinstance(items, Mapping) else items
        for pair, c in pairs:
            acc[_require_P(flag, pair)] += c
        return cls(flag, {v: acc[v] for v in sorted(acc, key=vertex_key) if acc[v]})

    def __len__(self) -> int:
        return len(self.terms)

    def items(self):
        return self.terms.items()

    def to_json(self) -> dict:
        return {
            "flag": [self.flag.n, self.flag.r1, self.flag.r2],
            "terms": [
                {"class": str(pair_to_string(self.flag, v)), "pair": v.to_json(), "c": c}
                for v, c in self.terms.items()
            ],
        }

    def render(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for v, c in self.terms.items():
            mag = "" if abs(c) == 1 else f"{abs(c)} "
            pieces.append(f"{'-' if c < 0 else '+'} {mag}sigma[{pair_to_string(self.flag, v)}]")
        text = " ".join(pieces)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def sch_fl(flag: FlagShape, x: LinComb) -> SchubertSum:
    """Send ``τ^r_v`` to ``σ_v`` when ``v`` fits the flag and to zero otherwise."""
    if x.basis is not Basis.TAU:
        raise UserInputError("sch_fl expects a τ-basis combination")
    if x.r != flag.r:
        raise UserInputError(f"τ^{x.r} does not match {flag}, which needs r = {flag.r}")
    return SchubertSum.build(flag, [(v, c) for v, c in x.items() if in_P(flag, v)])


def schubert_mult_x(flag: FlagShape, alpha, pair) -> SchubertSum:
    """``σ_{α,∅} · σ_{β1,β2}`` through the τ-basis rule."""
    alpha = Partition(alpha)
    _require_P(flag, (alpha, ()))
    pair = _require_P(flag, pair)
    return sch_fl(flag, mult_tau_x(alpha, pair, flag.r).result)


def schubert_mult_y(flag: FlagShape, pair, beta) -> SchubertSum:
    """``σ_{α1,α2} · σ_{∅,β}``; fitting the flag already forces ``β1 < r``."""
    beta = Partition(beta)
    _require_P(flag, ((), beta))
    pair = _require_P(flag, pair)
    assert beta.width < flag.r
    return sch_fl(flag, mult_tau_y(pair, beta, flag.r).result)


# the 012-string Pieri rule ----------------------------------------------------------


def u_of_p(flag: FlagShape, p: int) -> String012:
    """The string of the class ``σ_{1^p,∅}``."""
    if not 1 <= p <= flag.r1:
        raise UserInputError(f"p must lie in 1..{flag.r1}, got {p}")
    return pair_to_string(flag, (column(p), ()))


def covering_steps(u: Sequence[int], bound: int) -> Iterator[tuple[int, int]]:
    """Swaps ``(i, j)``, 1-indexed with ``j <= bound``, where ``u_i`` is 0 or 1, ``u_j = 2`` and everything between is smaller than ``u_i``."""
    n = len(u)
    for i in range(1, n + 1):
        if u[i - 1] == 2:
            continue
        for j in range(i + 1, min(n, bound) + 1):
            if u[j - 1] == 2:
                yield i, j
                break
            if u[j - 1] >= u[i - 1]:
                break


def pieri_chains(u: String012, p: int) -> Iterator[tuple[String012, tuple[tuple[int, int], ...]]]:
    """Depth-first over chains whose swaps interleave as ``i_p < j_p <= i_(p-1) < ... < j_2 <= i_1 < j_1``."""

    def walk(word: list[int], bound: int, steps: tuple):
        if len(steps) == p:
            yield String012(word), steps
            return
        for i, j in covering_steps(word, bound):
            word[i - 1], word[j - 1] = word[j - 1], word[i - 1]
            yield from walk(word, i, steps + ((i, j),))
            word[i - 1], word[j - 1] = word[j - 1], word[i - 1]

    yield from walk(list(u), len(u), ())


def string_pieri(flag: FlagShape, p: int, u) -> SchubertSum:
    """``σ_{u(p)} · σ_u`` as the sum over Pieri chains out of ``u``."""
    if not 1 <= p <= flag.r1:
        raise UserInputError(f"p must lie in 1..{flag.r1}, got {p}")
    u = _require_string(flag, u)
    counts = Counter(string_to_pair(flag, end) for end, _ in pieri_chains(u, p))
    return SchubertSum.build(flag, counts)
