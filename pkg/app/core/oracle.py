"""
오라클 모듈

최적화된 코어 연산을 검증하기 위한 단순 구현입니다.
계단 함수는 공개 조각 목록(pieces)만 사용해 표본 레벨마다 직접 다시 계산합니다.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterable, List, Sequence, Tuple

from app.core.fuzzy import FuzzySubset
from app.core.groups import FiniteGroup
from app.core.levels import ONE, ZERO, IntervalPiece, StepMap, step_eval
from app.core.subsets import GradualSubset

Table = List[Tuple[Fraction, Any]]


@dataclass(frozen=True)
class SampleSet:
    """모든 경계점, 인접 경계점의 중점, 0과 첫 경계점의 중점, 1"""
    levels: Tuple[Fraction, ...]

    @classmethod
    def covering(cls, maps: Iterable[StepMap]) -> "SampleSet":
        cuts = {ONE}
        for s in maps:
            for piece, _ in s.pieces:
                if piece.lo > ZERO:
                    cuts.add(piece.lo)
                cuts.add(piece.hi)
        ordered = sorted(cuts)
        mids = [(a + b) / 2 for a, b in zip([ZERO] + ordered, ordered)]
        return cls(tuple(sorted(set(ordered) | set(mids))))


def naive_eval(s: StepMap, alpha: Fraction) -> Any:
    hits = [value for piece, value in s.pieces if piece.contains(alpha)]
    assert len(hits) == 1, f"조각 분할 오류: {alpha}"
    return hits[0]


def _meets_from(piece: IntervalPiece, alpha: Fraction, strict: bool) -> bool:
    if piece.hi > alpha:
        return True
    return not strict and piece.hi == alpha and piece.hi_closed


def naive_closure(sigma: GradualSubset, samples: SampleSet) -> Table:
    """σ^c(α): [α,1]과 만나는 모든 조각 값의 합집합"""
    table = []
    for alpha in samples.levels:
        mask = 0
        for piece, value in sigma.map.pieces:
            if _meets_from(piece, alpha, strict=False):
                mask |= value
        table.append((alpha, mask))
    return table


def naive_interior(sigma: GradualSubset, samples: SampleSet) -> Table:
    """σ^d(α): (α,1]과 만나는 조각 값의 합집합, σ^d(1) = σ(1)"""
    table = []
    for alpha in samples.levels:
        if alpha == ONE:
            table.append((alpha, naive_eval(sigma.map, ONE)))
            continue
        mask = 0
        for piece, value in sigma.map.pieces:
            if _meets_from(piece, alpha, strict=True):
                mask |= value
        table.append((alpha, mask))
    return table


def naive_zip(
    first: StepMap, second: StepMap, f: Callable[[Any, Any], Any], samples: SampleSet
) -> Table:
    return [(a, f(naive_eval(first, a), naive_eval(second, a))) for a in samples.levels]


def evaluate(s: StepMap, samples: SampleSet) -> Table:
    """최적화된 조회로 만든 비교용 표"""
    return [(a, step_eval(s, a)) for a in samples.levels]


def naive_convolution(first: FuzzySubset, second: FuzzySubset, group: FiniteGroup) -> FuzzySubset:
    """(μ1μ2)(x) = Max{μ1(y) ∧ μ2(z) | yz = x} (|G|² 전수 조사)"""
    grades = []
    for x in range(group.order):
        values = [
            min(first.grades[y], second.grades[z])
            for y in range(group.order)
            for z in range(group.order)
            if group.multiply(y, z) == x
        ]
        grades.append(max(values))
    return FuzzySubset(first.ground, tuple(grades))


def naive_subgroup_closure(group: FiniteGroup, subset: Sequence[int]) -> frozenset:
    """S ∪ {e} 를 곱과 역원으로 닫힐 때까지 반복"""
    current = set(subset) | {group.identity}
    while True:
        grown = set(current)
        grown |= {group.inverse(a) for a in current}
        grown |= {group.multiply(a, b) for a in current for b in current}
        if grown == current:
            return frozenset(current)
        current = grown
