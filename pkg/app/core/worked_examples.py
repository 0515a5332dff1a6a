"""
대표 예제 회귀 모듈

네 개의 예제 블록을 처음부터 계산하고 기대값과 비교합니다.
  - z-extension: ℤ 값 부분 원소의 확장과 덧셈
  - r-alpha: X = {a, b} 위 R_α 관계 (부분 원소 대 확장)
  - union-gap: 상승 패밀리 합집합의 δ = 1/2 간극
  - intersection-gap: 하강 패밀리 엄격 교집합의 δ = 1/2 간극
"""
import logging
import operator
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, List

from app.core.elements import GradualElement, PartialGradualElement, extend, pointwise_op, r_alpha_equal
from app.core.fuzzy import HALF, descending_family, intersection_gap_report, nu_tilde, union_gap_report
from app.core.levels import ONE, IntervalPiece
from app.core.subsets import interior_d

logger = logging.getLogger(__name__)

TRUNCATION = 8


@dataclass
class ExampleRow:
    label: str
    expected: Any
    computed: Any
    render: Callable[[Any], str] = str

    @property
    def ok(self) -> bool:
        return self.expected == self.computed


@dataclass
class ExampleBlock:
    name: str
    rows: List[ExampleRow] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(row.ok for row in self.rows)

    def add(self, label: str, expected: Any, computed: Any, render: Callable[[Any], str] = str) -> None:
        self.rows.append(ExampleRow(label, expected, computed, render))

    def lines(self) -> List[str]:
        out = [f"[{self.name}] {'ok' if self.ok else 'MISMATCH'}"]
        for row in self.rows:
            mark = "ok" if row.ok else "MISMATCH"
            out.append(
                f"  {row.label}: expected {row.render(row.expected)} | computed {row.render(row.computed)} [{mark}]"
            )
        return out


def _closed(lo: str, hi: str) -> IntervalPiece:
    return IntervalPiece(Fraction(lo), Fraction(hi))


def _open_closed(lo: str, hi: str) -> IntervalPiece:
    return IntervalPiece(Fraction(lo), Fraction(hi), lo_closed=False)


def _describe(element) -> str:
    if isinstance(element, GradualElement):
        return element.map.describe()
    return element.values.describe(lambda v: "undefined" if v is None else str(v))


def z_extension_block() -> ExampleBlock:
    block = ExampleBlock("z-extension")
    eps1 = PartialGradualElement.from_pieces(
        [(_closed("1/2", "1"), 2), (_closed("1/10", "1/3"), 1)]
    )
    eps2 = PartialGradualElement.from_pieces([(_closed("2/3", "1"), 2)])
    block.add(
        "extend(e1)",
        GradualElement.from_pieces([(_open_closed("0", "1/3"), 1), (_open_closed("1/3", "1"), 2)]),
        extend(eps1),
        _describe,
    )
    block.add("extend(e2)", GradualElement.constant(2), extend(eps2), _describe)
    block.add(
        "e1 + e2",
        PartialGradualElement.from_pieces([(_closed("2/3", "1"), 4)]),
        pointwise_op(eps1, eps2, operator.add),
        _describe,
    )
    block.add(
        "extend(e1 + e2)",
        GradualElement.constant(4),
        extend(pointwise_op(eps1, eps2, operator.add)),
        _describe,
    )
    block.add(
        "extend(e1) + extend(e2)",
        GradualElement.from_pieces([(_open_closed("0", "1/3"), 3), (_open_closed("1/3", "1"), 4)]),
        pointwise_op(extend(eps1), extend(eps2), operator.add),
        _describe,
    )
    return block


R_ALPHA_LEVELS = (Fraction(1, 4), HALF, Fraction(3, 4), ONE)


def r_alpha_block() -> ExampleBlock:
    block = ExampleBlock("r-alpha")
    eps1 = PartialGradualElement.from_pieces(
        [(IntervalPiece(HALF, ONE, hi_closed=False), "a"), (IntervalPiece.point(ONE), "b")]
    )
    eps2 = PartialGradualElement.from_pieces(
        [(_open_closed("0", "1/2"), "a"), (IntervalPiece.point(ONE), "b")]
    )
    bar1, bar2 = extend(eps1), extend(eps2)
    block.add(
        "extend(e1)",
        GradualElement.from_pieces(
            [(IntervalPiece(0, ONE, False, False), "a"), (IntervalPiece.point(ONE), "b")]
        ),
        bar1,
        _describe,
    )
    block.add(
        "extend(e2)",
        GradualElement.from_pieces([(_open_closed("0", "1/2"), "a"), (_open_closed("1/2", "1"), "b")]),
        bar2,
        _describe,
    )
    for alpha in R_ALPHA_LEVELS:
        block.add(f"R_{alpha} as partial elements", True, r_alpha_equal(eps1, eps2, alpha))
        block.add(f"R_{alpha} after extension", alpha == ONE, r_alpha_equal(bar1, bar2, alpha))
    return block


def union_gap_block() -> ExampleBlock:
    block = ExampleBlock("union-gap")
    report = union_gap_report(TRUNCATION)
    ground = report.family.ground
    block.add("nu(limit)(1/2)", ground.mask_of(["a", "b"]), report.limit_at_witness, ground.render)
    block.add("union of nu(mu_n)(1/2)", ground.mask_of(["a"]), report.truncated_at_witness, ground.render)
    for name, ok in report.checks.items():
        block.add(name, True, ok)
    return block


def intersection_gap_block() -> ExampleBlock:
    block = ExampleBlock("intersection-gap")
    report = intersection_gap_report(TRUNCATION)
    ground = report.family.ground
    block.add("nu~(limit)(1/2)", ground.mask_of(["a"]), report.limit_at_witness, ground.render)
    block.add(
        "intersection of nu~(mu_n)(1/2)", ground.mask_of(["a", "b"]), report.truncated_at_witness, ground.render
    )
    family = descending_family()
    completed = interior_d(family.symbolic_intersection(strict=True))
    block.add("(infinite strict intersection)^d (1/2)", ground.mask_of(["a"]), completed(HALF), ground.render)
    block.add("(infinite strict intersection)^d = nu~(limit)", True, completed == nu_tilde(family.limit()))
    for name, ok in report.checks.items():
        block.add(name, True, ok)
    return block


BLOCKS = (z_extension_block, r_alpha_block, union_gap_block, intersection_gap_block)


def run_worked_examples() -> List[ExampleBlock]:
    blocks = [build() for build in BLOCKS]
    failed = [b.name for b in blocks if not b.ok]
    if failed:
        logger.warning(f"예제 불일치 블록: {failed}")
    else:
        logger.info(f"예제 {len(blocks)}개 블록 모두 일치")
    return blocks
