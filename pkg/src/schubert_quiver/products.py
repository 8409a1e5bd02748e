"""Combinatorial multiplication rules in the τ basis, with an independent oracle.

Every rule returns a :class:`Product`: the τ-expansion plus one certificate
entry per term, so that each contribution can be re-checked on its own.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

from .errors import InvariantError, UserInputError
from .quiver import (
    Arrow,
    Basis,
    Indexing,
    Kind,
    LinComb,
    Status,
    VertexLabel,
    arrows_from,
    convert,
    multiply_in_w,
    row_rule_status,
    tau_in_w,
)
from .rsk import TableauPair, theta_inverse
from .rw import extend_by_unique, infusion, rw_member, rw_set, star
from .shapes import Box, Partition, SkewShape, column, partitions_above, rl_boxes, vertical_strips_above, vertical_strips_below
from .tableaux import StandardSkewTableau, restrict, vertical_strip_tableau


@dataclass(frozen=True)
class CertificateEntry:
    """Why ``target`` appears: an LR witness and, for correction terms, the two arrows involved."""

    target: VertexLabel
    lr_witness: StandardSkewTableau
    arrow: Optional[Arrow] = None
    moved: Optional[Arrow] = None

    def to_json(self) -> dict:
        data = {"target": self.target.to_json(), "lr_witness": self.lr_witness.to_json()}
        if self.arrow is not None:
            data["arrow"] = self.arrow.to_json()
        if self.moved is not None:
            data["moved"] = self.moved.to_json()
        return data


@dataclass
class Product:
    result: LinComb
    certificate: list[CertificateEntry] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"result": self.result.to_json(), "certificate": [e.to_json() for e in self.certificate]}


def _finish(entries: list[CertificateEntry], r: int) -> Product:
    counts = Counter(e.target for e in entries)
    return Product(LinComb.build(Basis.TAU, counts, r), entries)


def _require_r(r: int) -> None:
    if not isinstance(r, int) or r < 1:
        raise UserInputError(f"r must be a positive integer, got {r!r}")


def mult_tau_x(alpha, v, r: int) -> Product:
    """``τ_{α,∅} · τ_{β1,β2}`` through infusion of LR witnesses along row-rule arrows."""
    _require_r(r)
    alpha = Partition(alpha)
    v = VertexLabel.of(*v)
    beta1, beta2 = v
    entries = []
    for lam in partitions_above(beta1, alpha.size):
        for t1 in rw_set(SkewShape(lam, beta1), SkewShape(alpha)):
            entries.append(CertificateEntry(VertexLabel(lam, beta2), t1))
            for a in arrows_from(VertexLabel(lam, beta2), Kind.ROW_RULE, r):
                slid, _ = infusion(t1, a.witness)
                moved = Arrow(v, VertexLabel(slid.shape.outer, a.target.second), slid)
                if not rw_member(slid, moved.pattern):
                    raise InvariantError(f"infusion of {a} did not give an arrow")
                if row_rule_status(moved, r) is Status.REVERSE_SATISFIES:
                    entries.append(CertificateEntry(a.target, t1, a, moved))
    return _finish(entries, r)


def diffused_arrow(t: StandardSkewTableau, a: Arrow, alpha2: Partition, beta: Partition) -> Arrow:
    """The Ψ-indexed arrow out of ``(α1, α2)`` obtained by diffusing ``a`` over ``β * α2``.

    ``a`` is a Ψ-indexed arrow out of ``(α1, γ)`` and ``t`` lies in
    ``RW_γ(β * α2)``.  Labels of ``a`` that land in the ``α2`` block pick out
    boxes of the pattern of ``a``; those boxes and the vacated part of ``α2``
    make the new arrow.
    """
    if a.indexing is not Indexing.PSI:
        raise UserInputError("diffusion acts on Ψ-indexed arrows")
    alpha1 = a.source.first
    alpha2, beta = Partition(alpha2), Partition(beta)
    spread = theta_inverse(star(beta, alpha2), TableauPair(extend_by_unique(a.witness), t))
    offset = beta.width
    upper = {
        Box(box.row, box.col - offset): label
        for box, label in restrict(spread, a.target.second.size, len(spread)).items()
        if box.row <= alpha2.length
    }
    pattern_boxes = rl_boxes(a.pattern)
    chosen = {label: pattern_boxes[label - 1] for label in upper.values()}
    nu1 = _add_boxes(alpha1, chosen.values())
    nu2 = _remove_boxes(alpha2, upper)
    index = {box: i for i, box in enumerate(rl_boxes(SkewShape(nu1, alpha1)), 1)}
    witness = StandardSkewTableau(SkewShape(alpha2, nu2), {box: index[chosen[label]] for box, label in upper.items()})
    out = Arrow(VertexLabel(alpha1, alpha2), VertexLabel(nu1, nu2), witness, Indexing.PSI)
    if not (out.is_trivial or out.is_valid()):
        raise InvariantError(f"diffusing {a} produced an invalid arrow {out}")
    return out


def _add_boxes(base: Partition, boxes) -> Partition:
    parts = list(base)
    for box in boxes:
        parts += [0] * (box.row - len(parts))
        parts[box.row - 1] += 1
    try:
        return Partition(parts)
    except UserInputError as exc:
        raise InvariantError(f"diffusion produced a non-partition {parts}") from exc


def _remove_boxes(base: Partition, boxes) -> Partition:
    parts = list(base)
    for box in boxes:
        parts[box.row - 1] -= 1
    try:
        return Partition(parts)
    except UserInputError as exc:
        raise InvariantError(f"diffusion removed a non-corner set {parts}") from exc


def mult_tau_y(v, beta, r: int) -> Product:
    """``τ_{α1,α2} · τ_{∅,β}`` for ``β1 < r``, by diffusing Ψ-indexed row-rule arrows."""
    _require_r(r)
    v = VertexLabel.of(*v)
    beta = Partition(beta)
    if beta.width >= r:
        raise UserInputError(f"the first row of {beta} must be shorter than r={r}")
    alpha1, alpha2 = v
    shape = star(beta, alpha2)
    entries = []
    for gamma in partitions_above(alpha2, beta.size):
        for t in rw_set(SkewShape(gamma), shape):
            entries.append(CertificateEntry(VertexLabel(alpha1, gamma), t))
            for a in arrows_from(VertexLabel(alpha1, gamma), Kind.ROW_RULE, r, Indexing.PSI):
                moved = diffused_arrow(t, a, alpha2, beta)
                if row_rule_status(moved, r) is Status.REVERSE_SATISFIES:
                    entries.append(CertificateEntry(a.target, t, a, moved))
    return _finish(entries, r)


def pieri_column_x(p: int, v, r: int) -> Product:
    """``τ_{1^p,∅} · τ_v``, with every witness a canonical vertical strip."""
    _require_r(r)
    if p < 0:
        raise UserInputError("column length must be non-negative")
    v = VertexLabel.of(*v)
    beta1, beta2 = v
    entries = []
    for lam in sorted(vertical_strips_above(beta1, p)):
        strip = vertical_strip_tableau(SkewShape(lam, beta1))
        entries.append(CertificateEntry(VertexLabel(lam, beta2), strip))
        for q in range(1, beta2.size + 1):
            for gamma2 in sorted(vertical_strips_below(beta2, q)):
                for gamma1 in sorted(vertical_strips_above(lam, q)):
                    w = vertical_strip_tableau(SkewShape(gamma1, lam))
                    a = Arrow(VertexLabel(lam, beta2), VertexLabel(gamma1, gamma2), w)
                    if not rw_member(w, a.pattern) or row_rule_status(a, r) is not Status.SATISFIES:
                        continue
                    slid, _ = infusion(strip, w)
                    moved = Arrow(v, VertexLabel(slid.shape.outer, gamma2), slid)
                    if row_rule_status(moved, r) is Status.REVERSE_SATISFIES:
                        entries.append(CertificateEntry(a.target, strip, a, moved))
    return _finish(entries, r)


def pieri_column_y(v, p: int, r: int) -> Product:
    """``τ_v · τ_{∅,1^p}`` (needs ``r ≥ 2``), with vertical-strip witnesses."""
    _require_r(r)
    if r < 2:
        raise UserInputError("the column rule in the second factor needs r >= 2")
    v = VertexLabel.of(*v)
    alpha1, alpha2 = v
    shape = star(column(p), alpha2)
    entries = []
    for gamma in sorted(vertical_strips_above(alpha2, p)):
        found = rw_set(SkewShape(gamma), shape)
        if len(found) != 1:
            raise InvariantError(f"expected a unique element of RW_{gamma}({shape}), found {len(found)}")
        t = found[0]
        entries.append(CertificateEntry(VertexLabel(alpha1, gamma), t))
        for q in range(1, gamma.size + 1):
            for lam2 in sorted(vertical_strips_below(gamma, q)):
                u = vertical_strip_tableau(SkewShape(gamma, lam2))
                for lam1 in sorted(vertical_strips_above(alpha1, q)):
                    a = Arrow(VertexLabel(alpha1, gamma), VertexLabel(lam1, lam2), u, Indexing.PSI)
                    if not rw_member(u, a.pattern) or row_rule_status(a, r) is not Status.SATISFIES:
                        continue
                    moved = diffused_arrow(t, a, alpha2, column(p))
                    if row_rule_status(moved, r) is Status.REVERSE_SATISFIES:
                        entries.append(CertificateEntry(a.target, t, a, moved))
    return _finish(entries, r)


def oracle_product(u, v, r: int) -> LinComb:
    """``τ_u τ_v`` by converting to the w basis, multiplying there and converting back."""
    _require_r(r)
    product = multiply_in_w(tau_in_w(u, r), tau_in_w(v, r))
    return convert(product, Basis.TAU, r)


def multiply(u, v, r: int, force_oracle: bool = False) -> Product:
    """Pick the positive rule that covers ``τ_u τ_v``; without one, refuse unless the oracle is forced."""
    u, v = VertexLabel.of(*u), VertexLabel.of(*v)
    if force_oracle:
        return Product(oracle_product(u, v, r))
    if not u.second:
        return mult_tau_x(u.first, v, r)
    if not v.second:
        return mult_tau_x(v.first, u, r)
    if not v.first and v.second.width < r:
        return mult_tau_y(u, v.second, r)
    if not u.first and u.second.width < r:
        return mult_tau_y(v, u.second, r)
    raise UserInputError(
        f"no positive rule covers {u} * {v} at r={r}: one factor must be (α,∅), or (∅,β) with β narrower than r; "
        "use the oracle to compute it anyway"
    )


def _replay_total(product: Product, r: int) -> bool:
    return _finish(list(product.certificate), r).result == product.result


def _admitted(entry: CertificateEntry, r: int, moved: Arrow) -> bool:
    a = entry.arrow
    return (
        a.is_valid()
        and a.target == entry.target
        and row_rule_status(a, r) is Status.SATISFIES
        and moved == entry.moved
        and row_rule_status(moved, r) is Status.REVERSE_SATISFIES
    )


def replay_x(alpha, v, r: int, product: Product) -> bool:
    """Recompute every entry of a :func:`mult_tau_x` certificate from its stored tableaux."""
    alpha, v = Partition(alpha), VertexLabel.of(*v)
    for entry in product.certificate:
        t1 = entry.lr_witness
        if t1.shape.inner != v.first or not rw_member(t1, SkewShape(alpha)):
            return False
        if entry.arrow is None:
            if entry.target != VertexLabel(t1.shape.outer, v.second) or entry.moved is not None:
                return False
            continue
        if entry.arrow.source != VertexLabel(t1.shape.outer, v.second):
            return False
        slid, _ = infusion(t1, entry.arrow.witness)
        if not _admitted(entry, r, Arrow(v, VertexLabel(slid.shape.outer, entry.target.second), slid)):
            return False
    return _replay_total(product, r)


def replay_y(v, beta, r: int, product: Product) -> bool:
    """Recompute every entry of a :func:`mult_tau_y` certificate, re-running each diffusion."""
    v, beta = VertexLabel.of(*v), Partition(beta)
    shape = star(beta, v.second)
    for entry in product.certificate:
        t = entry.lr_witness
        if not t.shape.is_straight or not rw_member(t, shape):
            return False
        if entry.arrow is None:
            if entry.target != VertexLabel(v.first, t.shape.outer) or entry.moved is not None:
                return False
            continue
        if entry.arrow.source != VertexLabel(v.first, t.shape.outer):
            return False
        if not _admitted(entry, r, diffused_arrow(t, entry.arrow, v.second, beta)):
            return False
    return _replay_total(product, r)
