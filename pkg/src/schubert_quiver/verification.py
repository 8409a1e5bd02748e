"""The acceptance sweeps, shared by the ``verify`` command and the test suite.

Each check returns a :class:`CheckResult`; a check passes only when its
mathematical comparison holds and it finished inside its time budget.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .flag import FlagShape, pair_to_string, schubert_mult_x, string_pieri
from .products import mult_tau_x, mult_tau_y, oracle_product, pieri_column_x, pieri_column_y
from .quiver import (
    Basis,
    Indexing,
    Kind,
    LinComb,
    Status,
    VertexLabel,
    arrows_from,
    compose_arrows,
    expand_basis_element,
    multiply_in_s,
    row_rule_status,
    solve_triangular,
    split_arrow,
    vertices_of_degree,
    w_product,
)
from .rw import diffuse, diffuse_inverse, infusion, lr_coefficient, lr_oracle, rw_set, star, unique_rw_element
from .shapes import Partition, SkewShape, column, partitions_above, partitions_of, subpartitions
from .tableaux import enumerate_standard, rectify, split_at, stack


@dataclass(frozen=True)
class CheckResult:
    number: int
    name: str
    passed: bool
    seconds: float
    budget: float
    cases: int
    detail: str

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number:>2} {self.name}: {self.cases} cases in {self.seconds:.2f}s (budget {self.budget:.0f}s) {self.detail}".rstrip()


def V(first=(), second=()) -> VertexLabel:
    return VertexLabel.of(first, second)


def _tau(pairs, r):
    return LinComb.build(Basis.TAU, [(V(*p), c) for p, c in pairs], r)


S1MULT_EXPECTED = [
    (((4, 3), (2,)), 1), (((4, 4), (1,)), 1), (((4, 2, 1), (2,)), 1), (((4, 3, 1), (1,)), 1),
    (((3, 3, 1), (2,)), 1), (((3, 2, 2), (2,)), 1), (((3, 3, 2), (1,)), 1), (((3, 2, 1, 1), (2,)), 1),
    (((3, 3, 1, 1), (1,)), 1), (((2, 2, 2, 1), (2,)), 1),
]

THM2EG_EXPECTED = [
    ((2,), (4, 2)), ((3,), (3, 2)), ((4,), (2, 2)),
    ((2,), (4, 1, 1)), ((3,), (3, 1, 1)), ((4,), (2, 1, 1)),
    ((2,), (3, 3)), ((2, 1), (3, 2)), ((3, 1), (2, 2)),
    ((2,), (3, 2, 1)), ((3,), (2, 2, 1)), ((2, 1), (2, 2, 1)),
    ((2,), (3, 2, 1)), ((3,), (2, 2, 1)),
    ((2,), (3, 1, 1, 1)), ((3,), (2, 1, 1, 1)),
    ((2,), (2, 2, 2)), ((2,), (2, 2, 1, 1)),
]


def check_s1mult() -> tuple[bool, int, str]:
    got = mult_tau_x((2, 1), V((2, 2), (2,)), 3).result
    return got == _tau(S1MULT_EXPECTED, 3), 1, f"{len(got)} terms"


def check_thm2eg() -> tuple[bool, int, str]:
    got = mult_tau_y(V((2,), (2, 1)), (2, 1), 3).result
    want = _tau([(p, 1) for p in THM2EG_EXPECTED], 3)
    return got == want, 1, f"{sum(got.terms.values())} terms with multiplicity"


def check_neg() -> tuple[bool, int, str]:
    got = oracle_product(V((1,), (1,)), V((), (2,)), 2)
    want = _tau([(((1,), (3,)), 1), (((1,), (2, 1)), 1), (((1, 1), (2,)), -1)], 2)
    return got == want, 1, got.render()


def check_w12() -> tuple[bool, int, str]:
    got = expand_basis_element(V((1,), (2,)), Basis.W)
    want = LinComb.build(Basis.S, [
        (V((1,), (2,)), 1), (V((2,), (1,)), -1), (V((1, 1), (1,)), -1), (V((2, 1), ()), 1), (V((1, 1, 1), ()), 1),
    ])
    return got == want, 1, got.render()


def check_lr_equivalence(max_size: int = 8) -> tuple[bool, int, str]:
    cases = bad = 0
    for n in range(max_size + 1):
        for alpha in partitions_of(n):
            for beta in subpartitions(alpha):
                for gamma in partitions_of(n - beta.size):
                    cases += 1
                    if lr_coefficient(alpha, beta, gamma) != lr_oracle(alpha, beta, gamma):
                        bad += 1
    return bad == 0, cases, f"{bad} mismatches"


def skew_shapes_up_to(boxes: int) -> list[SkewShape]:
    """Every skew shape ``λ/μ`` with ``|λ| <= boxes``."""
    found = []
    for n in range(boxes + 1):
        for outer in partitions_of(n):
            for inner in subpartitions(outer):
                found.append(SkewShape(outer, inner))
    return found


def check_lrrw(boxes: int = 5) -> tuple[bool, int, str]:
    shapes = skew_shapes_up_to(boxes)
    cases = bad = 0
    for first in shapes:
        for second in shapes:
            if first.size != second.size:
                continue
            cases += 1
            count = len(rw_set(first, second))
            expected = sum(
                lr_oracle(first.outer, first.inner, gamma) * lr_oracle(second.outer, second.inner, gamma)
                for gamma in partitions_of(first.size)
            )
            if count != expected:
                bad += 1
    return bad == 0, cases, f"{bad} mismatches"


def check_infusion_and_diffusion(infusion_size: int = 7, diffusion_size: int = 6) -> tuple[bool, int, str]:
    cases = bad = 0
    for n in range(infusion_size + 1):
        for gamma in partitions_of(n):
            for beta in subpartitions(gamma):
                for alpha in subpartitions(beta):
                    for t1 in enumerate_standard(SkewShape(beta, alpha), cap=infusion_size):
                        for t2 in enumerate_standard(SkewShape(gamma, beta), cap=infusion_size):
                            cases += 1
                            slid2, slid1 = infusion(t1, t2)
                            if infusion(slid2, slid1) != (t1, t2):
                                bad += 1
    diff_cases, diff_bad = _diffusion_sweep(diffusion_size)
    return bad == 0 and diff_bad == 0, cases + diff_cases, f"infusion {bad} failures, diffusion {diff_bad} failures"


def _diffusion_sweep(max_size: int) -> tuple[int, int]:
    """Forward round trips over all ``(U, V)`` and backward round trips over all admissible ``T``."""
    cases = bad = 0
    for n in range(1, max_size + 1):
        for a_size in range(n + 1):
            for alpha in partitions_of(a_size):
                for beta in partitions_of(n - a_size):
                    shape = star(alpha, beta)
                    images = set()
                    forward = 0
                    for mu in partitions_of(n):
                        carriers = rw_set(SkewShape(mu), shape)
                        if not carriers:
                            continue
                        for delta1 in subpartitions(mu):
                            for delta2 in partitions_of(n - delta1.size):
                                for u in rw_set(SkewShape(mu, delta1), SkewShape(delta2)):
                                    for v in carriers:
                                        cases += 1
                                        forward += 1
                                        low, high = diffuse(u, v, shape)
                                        images.add((low, high))
                                        back = diffuse_inverse(stack(low, high), delta1.size)
                                        if back != (u, v):
                                            bad += 1
                    if len(images) != forward:
                        bad += 1
                    backward = 0
                    for t in enumerate_standard(shape):
                        for k in range(n + 1):
                            low, high = split_at(t, k)
                            if not (_rectifies_to_unique(low) and _rectifies_to_unique(high)):
                                continue
                            backward += 1
                            cases += 1
                            u, v = diffuse_inverse(t, k)
                            if diffuse(u, v, shape) != (low, high):
                                bad += 1
                    if backward != forward:
                        bad += 1
    return cases, bad


def _rectifies_to_unique(t) -> bool:
    straight = rectify(t)
    return straight == unique_rw_element(straight.shape.outer)


@lru_cache(maxsize=None)
def oracle_lr_product(alpha: Partition, beta: Partition) -> dict[Partition, int]:
    out = {}
    for gamma in partitions_above(alpha, beta.size):
        c = lr_oracle(gamma, alpha, beta)
        if c:
            out[gamma] = c
    return out


def check_two_path(max_degree: int = 6) -> tuple[bool, int, str]:
    cases = bad = 0
    for du in range(max_degree + 1):
        for u in vertices_of_degree(du):
            for dv in range(max_degree - du + 1):
                for v in vertices_of_degree(dv):
                    cases += 1
                    in_s = multiply_in_s(expand_basis_element(u, Basis.W), expand_basis_element(v, Basis.W), oracle_lr_product)
                    if solve_triangular(in_s, Basis.W) != w_product(u, v):
                        bad += 1
    return bad == 0, cases, f"{bad} mismatches"


def check_rules_vs_oracle(max_degree: int = 6, r_values=(1, 2, 3, 4)) -> tuple[bool, int, str]:
    cases = bad = 0
    for r in r_values:
        for dv in range(max_degree + 1):
            for v in vertices_of_degree(dv):
                for k in range(max_degree - dv + 1):
                    for part in partitions_of(k):
                        cases += 1
                        if mult_tau_x(part, v, r).result != oracle_product(V(part, ()), v, r):
                            bad += 1
                        if part.width < r:
                            cases += 1
                            if mult_tau_y(v, part, r).result != oracle_product(v, V((), part), r):
                                bad += 1
    return bad == 0, cases, f"{bad} mismatches"


def check_pieri(max_degree: int = 5, max_p: int = 3) -> tuple[bool, int, str]:
    cases = bad = 0
    for d in range(max_degree + 1):
        for v in vertices_of_degree(d):
            for p in range(1, max_p + 1):
                for r in (1, 2, 3):
                    cases += 1
                    if pieri_column_x(p, v, r).result != mult_tau_x(column(p), v, r).result:
                        bad += 1
                    if r >= 2:
                        cases += 1
                        if pieri_column_y(v, p, r).result != mult_tau_y(v, column(p), r).result:
                            bad += 1
    return bad == 0, cases, f"{bad} mismatches"


APPENDIX_FLAGS = (FlagShape(5, 3, 1), FlagShape(6, 4, 2), FlagShape(7, 4, 2))


def check_appendix() -> tuple[bool, int, str]:
    cases = bad = 0
    for flag in APPENDIX_FLAGS:
        for pair in flag.classes():
            u = pair_to_string(flag, pair)
            for p in range(1, flag.r1 + 1):
                cases += 1
                if schubert_mult_x(flag, column(p), pair) != string_pieri(flag, p, u):
                    bad += 1
    return bad == 0, cases, f"{bad} mismatches"


def check_splitting(max_degree: int = 5, r_values=(1, 2, 3)) -> tuple[bool, int, str]:
    cases = bad = 0
    for indexing in Indexing:
        for r in r_values:
            for d in range(1, max_degree + 1):
                for v in vertices_of_degree(d):
                    for a in arrows_from(v, Kind.RW, indexing=indexing):
                        if row_rule_status(a, r) is Status.MIXED:
                            cases += 1
                            first, second = split_arrow(a, r)
                            if compose_arrows(first, second) != a:
                                bad += 1
                    for first in arrows_from(v, Kind.ROW_RULE, r, indexing):
                        for second in arrows_from(first.target, Kind.REVERSE_ROW_RULE, r, indexing):
                            cases += 1
                            whole = compose_arrows(first, second)
                            if whole is None or row_rule_status(whole, r) is not Status.MIXED:
                                bad += 1
                            elif split_arrow(whole, r) != (first, second):
                                bad += 1
    return bad == 0, cases, f"{bad} failures"


@dataclass(frozen=True)
class Criterion:
    number: int
    name: str
    budget: float
    run: Callable[[], tuple[bool, int, str]]


CRITERIA: tuple[Criterion, ...] = (
    Criterion(1, "tau(2,1|0) * tau(2,2|2) at r=3 gives the 10-term expansion", 5, check_s1mult),
    Criterion(2, "tau(0|2,1) * tau(2|2,1) at r=3 gives the 18-term expansion", 30, check_thm2eg),
    Criterion(3, "oracle product with a negative coefficient at r=2", 60, check_neg),
    Criterion(4, "w((1),(2)) in the s basis", 60, check_w12),
    Criterion(5, "RW counts equal lattice-word LR counts, |gamma| <= 8", 120, check_lr_equivalence),
    Criterion(6, "RW set sizes equal double LR sums, <= 5 boxes", 300, check_lrrw),
    Criterion(7, "infusion is an involution and diffusion is a bijection", 300, check_infusion_and_diffusion),
    Criterion(8, "w products: closed form equals the s-basis route, degree <= 6", 300, check_two_path),
    Criterion(9, "tau product rules equal the oracle, degree <= 6, r <= 4", 600, check_rules_vs_oracle),
    Criterion(10, "column Pieri rules equal the general rules", 300, check_pieri),
    Criterion(11, "Schubert column Pieri equals the 012-string rule", 180, check_appendix),
    Criterion(12, "split and compose are mutually inverse, both indexings", 300, check_splitting),
)


def run_criterion(c: Criterion) -> CheckResult:
    start = time.perf_counter()
    try:
        ok, cases, detail = c.run()
    except Exception as exc:  # reported as a failure, never swallowed silently
        ok, cases, detail = False, 0, f"raised {type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - start
    if ok and elapsed > c.budget:
        ok, detail = False, f"{detail}; over time budget"
    return CheckResult(c.number, c.name, ok, elapsed, c.budget, cases, detail)


def run_all(selected=None) -> list[CheckResult]:
    chosen = [c for c in CRITERIA if selected is None or c.number in selected]
    return [run_criterion(c) for c in chosen]
