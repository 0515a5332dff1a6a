"""
레벨 코어 모듈

(0,1] 위의 정확한 유리수 레벨, 구간 조각, inf-compact 레벨 집합과
모든 점진적 객체의 공통 운반체인 계단 함수 StepMap을 제공합니다.

StepMap은 경계점 b_0 < ... < b_{k-1} = 1 로 (0,1]을
(0,b_0), {b_0}, (b_0,b_1), {b_1}, ..., (b_{k-2},1), {1}
의 원자(atom)로 나누고 원자마다 값을 하나씩 저장합니다.
표준형에서는 (a,b), {b}, (b,c) 세 원자의 값이 모두 같은 경계점 b가 남지 않으므로
구조적 동등성이 곧 (0,1] 위 함수로서의 동등성입니다.
"""
from __future__ import annotations

import bisect
import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import (
    Any,
    Callable,
    Generic,
    Iterable,
    Iterator,
    List,
    Optional,
    Sequence,
    Tuple,
    TypeVar,
    Union,
)

from app.core.errors import (
    GradeOutOfRange,
    MissingOne,
    NotAPartition,
    NotInfCompact,
    Overlap,
)

logger = logging.getLogger(__name__)

V = TypeVar("V")
W = TypeVar("W")
U = TypeVar("U")

ZERO = Fraction(0)
ONE = Fraction(1)

RationalLike = Union[Fraction, int, str]

_RATIONAL_PATTERN = re.compile(r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$")
_MISSING: Any = object()


def parse_rational(value: RationalLike) -> Fraction:
    """유리수 파싱 ("p/q" 문자열, 정수, Fraction)"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise GradeOutOfRange(f"정확한 유리수가 아닙니다: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str) and _RATIONAL_PATTERN.match(value):
        try:
            return Fraction(value.replace(" ", ""))
        except ZeroDivisionError as e:
            raise GradeOutOfRange(f"분모가 0입니다: {value!r}") from e
    raise GradeOutOfRange(f"유리수 파싱 실패: {value!r}")


def as_grade(value: RationalLike) -> Fraction:
    """[0,1] 범위의 등급"""
    q = parse_rational(value)
    if not ZERO <= q <= ONE:
        raise GradeOutOfRange(f"등급은 [0,1] 범위여야 합니다: {format_rational(q)}")
    return q


def as_level(value: RationalLike) -> Fraction:
    """(0,1] 범위의 레벨"""
    q = parse_rational(value)
    if not ZERO < q <= ONE:
        raise GradeOutOfRange(f"레벨은 (0,1] 범위여야 합니다: {format_rational(q)}")
    return q


def format_rational(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class IntervalPiece:
    """(0,1] 안의 구간 조각 (끝점 개폐 명시)"""
    lo: Fraction
    hi: Fraction
    lo_closed: bool = True
    hi_closed: bool = True

    def __post_init__(self):
        lo = parse_rational(self.lo)
        hi = parse_rational(self.hi)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        if lo < ZERO or hi > ONE:
            raise GradeOutOfRange(f"구간 {self}이 (0,1]을 벗어납니다")
        if lo == ZERO and self.lo_closed:
            raise GradeOutOfRange("0은 (0,1]에 속하지 않습니다")
        if lo > hi or (lo == hi and not (self.lo_closed and self.hi_closed)):
            raise GradeOutOfRange(f"빈 구간입니다: {self}")

    @classmethod
    def point(cls, value: RationalLike) -> "IntervalPiece":
        return cls(value, value, True, True)

    @property
    def is_singleton(self) -> bool:
        return self.lo == self.hi

    def contains(self, alpha: Fraction) -> bool:
        above = alpha > self.lo or (self.lo_closed and alpha == self.lo)
        below = alpha < self.hi or (self.hi_closed and alpha == self.hi)
        return above and below

    def __str__(self) -> str:
        if self.is_singleton:
            return f"{{{format_rational(self.lo)}}}"
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        return f"{left}{format_rational(self.lo)}, {format_rational(self.hi)}{right}"


def _normalize_points(points: Iterable[RationalLike]) -> Tuple[Fraction, ...]:
    cuts = {as_level(p) for p in points}
    cuts.add(ONE)
    return tuple(sorted(cuts))


def representatives(points: Sequence[Fraction]) -> Iterator[Fraction]:
    """각 원자의 대표 레벨 (열린 원자는 중점, 점 원자는 그 점)"""
    previous = ZERO
    for p in points:
        yield (previous + p) / 2
        yield p
        previous = p


def _merge(points: Tuple[Fraction, ...], values: Tuple[Any, ...]):
    kept_points: List[Fraction] = []
    kept_values: List[Any] = [values[0]]
    last = len(points) - 1
    for i, p in enumerate(points):
        point_value = values[2 * i + 1]
        if i < last:
            above = values[2 * i + 2]
            if kept_values[-1] == point_value == above:
                continue
        kept_points.append(p)
        kept_values.append(point_value)
        if i < last:
            kept_values.append(values[2 * i + 2])
    return tuple(kept_points), tuple(kept_values)


@dataclass(frozen=True)
class StepMap(Generic[V]):
    """(0,1] 위의 구간별 상수 전함수 (항상 표준형)"""
    points: Tuple[Fraction, ...]
    values: Tuple[V, ...]

    def __post_init__(self):
        points = tuple(parse_rational(p) for p in self.points)
        values = tuple(self.values)
        if not points or points[-1] != ONE:
            raise NotAPartition("마지막 경계점은 1이어야 합니다")
        if points[0] <= ZERO or any(a >= b for a, b in zip(points, points[1:])):
            raise NotAPartition("경계점은 (0,1] 안에서 엄격히 증가해야 합니다")
        if len(values) != 2 * len(points):
            raise NotAPartition(
                f"원자 수와 값의 수가 다릅니다: {2 * len(points)} != {len(values)}"
            )
        points, values = _merge(points, values)
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "values", values)

    # 생성
    @classmethod
    def constant(cls, value: V) -> "StepMap[V]":
        return cls((ONE,), (value, value))

    @classmethod
    def tabulate(
        cls, points: Iterable[RationalLike], f: Callable[[Fraction], V]
    ) -> "StepMap[V]":
        """경계점 집합 위 각 원자의 대표 레벨에서 f를 평가"""
        pts = _normalize_points(points)
        return cls(pts, tuple(f(rep) for rep in representatives(pts)))

    @classmethod
    def from_pieces(
        cls, pieces: Iterable[Tuple[IntervalPiece, V]], default: Any = _MISSING
    ) -> "StepMap[V]":
        """(조각, 값) 목록으로부터 생성. default가 없으면 조각이 (0,1]을 분할해야 함"""
        pieces = list(pieces)
        cuts = [p.hi for p, _ in pieces] + [p.lo for p, _ in pieces if p.lo > ZERO]
        pts = _normalize_points(cuts)
        values = []
        for rep in representatives(pts):
            hits = [v for piece, v in pieces if piece.contains(rep)]
            if len(hits) > 1:
                raise Overlap(f"레벨 {format_rational(rep)}에서 조각이 겹칩니다")
            if hits:
                values.append(hits[0])
            elif default is _MISSING:
                raise NotAPartition(f"레벨 {format_rational(rep)}을 덮는 조각이 없습니다")
            else:
                values.append(default)
        return cls(pts, tuple(values))

    # 조회
    def atom_index(self, alpha: RationalLike) -> int:
        alpha = as_level(alpha)
        i = bisect.bisect_left(self.points, alpha)
        return 2 * i + 1 if self.points[i] == alpha else 2 * i

    def __call__(self, alpha: RationalLike) -> V:
        return self.values[self.atom_index(alpha)]

    @property
    def breakpoints(self) -> Tuple[Fraction, ...]:
        return self.points

    def atoms(self) -> Iterator[Tuple[IntervalPiece, V]]:
        previous = ZERO
        for i, p in enumerate(self.points):
            yield IntervalPiece(previous, p, False, False), self.values[2 * i]
            yield IntervalPiece.point(p), self.values[2 * i + 1]
            previous = p

    @property
    def pieces(self) -> List[Tuple[IntervalPiece, V]]:
        """값이 같은 연속 원자를 합친 조각 목록"""
        result: List[Tuple[IntervalPiece, V]] = []
        run_start: Optional[IntervalPiece] = None
        run_end: Optional[IntervalPiece] = None
        run_value: Any = _MISSING
        for atom, value in self.atoms():
            if run_value is not _MISSING and value == run_value:
                run_end = atom
                continue
            if run_start is not None:
                result.append((_span(run_start, run_end), run_value))
            run_start, run_end, run_value = atom, atom, value
        result.append((_span(run_start, run_end), run_value))
        return result

    def values_on(self, points: Sequence[Fraction]) -> Tuple[V, ...]:
        """더 세밀한 경계점 위 원자별 값 (표준형 아님)"""
        return tuple(self(rep) for rep in representatives(points))

    def refine(self, points: Iterable[RationalLike]) -> List[Tuple[IntervalPiece, V]]:
        pts = _normalize_points(list(self.points) + list(points))
        previous = ZERO
        result = []
        values = self.values_on(pts)
        for i, p in enumerate(pts):
            result.append((IntervalPiece(previous, p, False, False), values[2 * i]))
            result.append((IntervalPiece.point(p), values[2 * i + 1]))
            previous = p
        return result

    # 변환
    def map(self, f: Callable[[V], U]) -> "StepMap[U]":
        return StepMap(self.points, tuple(f(v) for v in self.values))

    def zip_with(self, other: "StepMap[W]", f: Callable[[V, W], U]) -> "StepMap[U]":
        pts = tuple(sorted(set(self.points) | set(other.points)))
        left = self.values_on(pts)
        right = other.values_on(pts)
        return StepMap(pts, tuple(f(a, b) for a, b in zip(left, right)))

    def describe(self, render: Callable[[V], str] = str) -> str:
        return "; ".join(f"{piece} -> {render(value)}" for piece, value in self.pieces)


def _span(first: IntervalPiece, last: IntervalPiece) -> IntervalPiece:
    return IntervalPiece(first.lo, last.hi, first.lo_closed, last.hi_closed)


def step_eval(s: StepMap[V], alpha: RationalLike) -> V:
    return s(alpha)


def step_zip(s1: StepMap[V], s2: StepMap[W], f: Callable[[V, W], U]) -> StepMap[U]:
    return s1.zip_with(s2, f)


def canonicalize(pieces: Iterable[Tuple[IntervalPiece, V]]) -> StepMap[V]:
    """세분된 조각 목록 (refine 결과 등) 을 표준형으로"""
    return StepMap.from_pieces(pieces)


def accumulate_suffix(
    s: StepMap[V], join: Callable[[V, V], V], strict: bool = False
) -> StepMap[V]:
    """레벨 1에서 아래로 누적 합

    strict=False: 값(α) = join{s(β) | β ≥ α}
    strict=True:  값(α) = join{s(β) | β > α}, 단 값(1) = s(1)
    """
    values = s.values
    n = len(values)
    inclusive: List[V] = [values[-1]] * n
    for j in range(n - 2, -1, -1):
        inclusive[j] = join(values[j], inclusive[j + 1])
    if not strict:
        return StepMap(s.points, tuple(inclusive))
    shifted = [
        inclusive[j + 1] if (j % 2 == 1 and j < n - 1) else inclusive[j]
        for j in range(n)
    ]
    return StepMap(s.points, tuple(shifted))


def mask_below(s: StepMap[V], alpha: RationalLike, filler: Any) -> StepMap[Any]:
    """α 미만의 레벨 값을 filler로 바꾼 계단 함수"""
    alpha = as_level(alpha)
    pts = tuple(sorted(set(s.points) | {alpha}))
    values = list(s.values_on(pts))
    cut = 2 * pts.index(alpha) + 1
    for j in range(cut):
        values[j] = filler
    return StepMap(pts, tuple(values))


def all_from(s: StepMap[bool], alpha: RationalLike) -> bool:
    """[α,1] 전체에서 참인지 (α = 0이면 (0,1] 전체)"""
    alpha = as_grade(alpha)
    if alpha == ZERO:
        return all(s.values)
    return all(s.values[s.atom_index(alpha):])


def supremum(indicator: StepMap[bool]) -> Optional[Tuple[Fraction, bool]]:
    """참 집합의 상한과 도달 여부. 참 집합이 비면 None"""
    values = indicator.values
    for j in range(len(values) - 1, -1, -1):
        if values[j]:
            return indicator.points[j // 2], j % 2 == 1
    return None


def infimum_of_false(indicator: StepMap[bool]) -> Fraction:
    """거짓 집합의 하한 (거짓 집합이 비면 1)"""
    for j, value in enumerate(indicator.values):
        if not value:
            if j % 2 == 1:
                return indicator.points[j // 2]
            return indicator.points[j // 2 - 1] if j > 0 else ZERO
    return ONE


def _first_unattained(indicator: StepMap[bool]) -> Optional[Fraction]:
    values = indicator.values
    for i, p in enumerate(indicator.points[:-1]):
        if not values[2 * i + 1] and values[2 * i + 2]:
            return p
    return None


@dataclass(frozen=True)
class LevelSet:
    """1을 포함하는 inf-compact 레벨 집합 (표준형)"""
    indicator: StepMap[bool]

    def __post_init__(self):
        if not self.indicator(ONE):
            raise MissingOne("레벨 집합은 1을 포함해야 합니다")
        gap = _first_unattained(self.indicator)
        if gap is not None:
            raise NotInfCompact(
                f"{format_rational(gap)} 바로 위에서 최솟값이 도달되지 않습니다"
            )

    @classmethod
    def full(cls) -> "LevelSet":
        return cls(StepMap.constant(True))

    @classmethod
    def top(cls) -> "LevelSet":
        return cls(StepMap((ONE,), (False, True)))

    @property
    def pieces(self) -> List[IntervalPiece]:
        return [piece for piece, inside in self.indicator.pieces if inside]

    def __contains__(self, alpha: RationalLike) -> bool:
        return bool(self.indicator(alpha))

    def __str__(self) -> str:
        return " ∪ ".join(str(p) for p in self.pieces)


def make_level_set(pieces: Iterable[IntervalPiece]) -> LevelSet:
    indicator = StepMap.from_pieces([(p, True) for p in pieces], default=False)
    return LevelSet(indicator)


def min_at_or_above(level_set: LevelSet, alpha: RationalLike) -> Fraction:
    """Min([α,1] ∩ L)"""
    s = level_set.indicator
    j = s.atom_index(alpha)
    if s.values[j]:
        return as_level(alpha)
    for k in range(j + 1, len(s.values)):
        if s.values[k]:
            # inf-compact이므로 처음 만나는 참 원자는 점 원자
            return s.points[k // 2]
    return ONE


def intersect_level_sets(first: LevelSet, second: LevelSet) -> LevelSet:
    return LevelSet(first.indicator.zip_with(second.indicator, lambda a, b: a and b))
