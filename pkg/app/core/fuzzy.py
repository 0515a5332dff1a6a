"""
퍼지 부분집합 연결 모듈

유한 기저 집합 위 퍼지 부분집합 μ: X -> [0,1], α-레벨과 강 α-레벨,
ν/υ 및 ν̃/υ̃ 대응, 격자 연산, 그리고 무한 패밀리의 두 반례
(상승 패밀리의 합집합 간극, 하강 패밀리의 교집합 간극)를 다룹니다.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Sequence, Tuple

from app.core.elements import GroundSet
from app.core.errors import (
    EmptyFamily,
    GradualError,
    GroundSetMismatch,
    NotDecreasing,
    NotStrictDecreasing,
    PropertyFViolated,
    PropertyInfFViolated,
)
from app.core.levels import (
    ONE,
    ZERO,
    IntervalPiece,
    RationalLike,
    StepMap,
    as_grade,
    as_level,
    format_rational,
)
from app.core.subsets import (
    GradualSubset,
    inf_non_membership,
    interior_d,
    intersection,
    is_decreasing,
    is_strict_decreasing,
    max_membership,
    modified_intersection,
    property_F_violation,
    property_infF_violation,
    union,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FuzzySubset:
    """퍼지 부분집합 μ: X -> [0,1] (기저 집합 순서대로 등급 저장)"""
    ground: GroundSet
    grades: Tuple[Fraction, ...]

    def __post_init__(self):
        grades = tuple(as_grade(g) for g in self.grades)
        if len(grades) != len(self.ground):
            raise GroundSetMismatch("등급 수가 기저 집합 크기와 다릅니다")
        object.__setattr__(self, "grades", grades)

    @classmethod
    def from_mapping(cls, ground: GroundSet, grades: Mapping[str, RationalLike]) -> "FuzzySubset":
        unknown = set(grades) - set(ground.elements)
        if unknown:
            raise GroundSetMismatch(f"기저 집합에 없는 원소: {sorted(unknown)}")
        return cls(ground, tuple(grades.get(x, ZERO) for x in ground))

    def grade(self, label: str) -> Fraction:
        return self.grades[self.ground.index(label)]

    def as_mapping(self) -> Dict[str, Fraction]:
        return dict(zip(self.ground.elements, self.grades))

    @property
    def positive_grades(self) -> List[Fraction]:
        return sorted({g for g in self.grades if g > ZERO})


def _same_ground(family: Sequence[FuzzySubset]) -> GroundSet:
    ground = family[0].ground
    if any(mu.ground != ground for mu in family[1:]):
        raise GroundSetMismatch("기저 집합이 다른 퍼지 부분집합입니다")
    return ground


def alpha_level(mu: FuzzySubset, alpha: RationalLike) -> int:
    """μ_α = {x | μ(x) ≥ α}"""
    alpha = as_level(alpha)
    mask = 0
    for x, g in enumerate(mu.grades):
        if g >= alpha:
            mask |= 1 << x
    return mask


def strong_alpha_level(mu: FuzzySubset, alpha: RationalLike) -> int:
    """μ̃_α = {x | μ(x) > α}, 단 α = 1이면 μ_1"""
    alpha = as_level(alpha)
    if alpha == ONE:
        return alpha_level(mu, ONE)
    mask = 0
    for x, g in enumerate(mu.grades):
        if g > alpha:
            mask |= 1 << x
    return mask


def nu(mu: FuzzySubset) -> GradualSubset:
    """σ(μ)(α) = μ_α"""
    return GradualSubset(mu.ground, StepMap.tabulate(mu.positive_grades, lambda a: alpha_level(mu, a)))


def nu_tilde(mu: FuzzySubset) -> GradualSubset:
    """σ̃(μ)(α) = μ̃_α"""
    return GradualSubset(
        mu.ground, StepMap.tabulate(mu.positive_grades, lambda a: strong_alpha_level(mu, a))
    )


def upsilon(sigma: GradualSubset) -> FuzzySubset:
    """μ(σ)(x) = Max{α | x ∈ σ(α)}"""
    if not is_decreasing(sigma):
        raise NotDecreasing("υ는 감소 점진적 부분집합에서만 정의됩니다")
    bad = property_F_violation(sigma)
    if bad is not None:
        label = sigma.ground.label(bad)
        logger.info(f"성질 (F) 위반 원소: {label}")
        raise PropertyFViolated(f"성질 (F) 위반: 원소 {label}의 멤버십 최댓값이 없습니다", element=label)
    return FuzzySubset(sigma.ground, tuple(max_membership(sigma, x) for x in range(len(sigma.ground))))


def upsilon_tilde(sigma: GradualSubset) -> FuzzySubset:
    """μ̃(σ)(x) = Inf{α | x ∉ σ(α)}"""
    if not is_strict_decreasing(sigma):
        raise NotStrictDecreasing("υ̃는 엄격 감소 점진적 부분집합에서만 정의됩니다")
    bad = property_infF_violation(sigma)
    if bad is not None:
        label = sigma.ground.label(bad)
        logger.info(f"성질 (inf-F) 위반 원소: {label}")
        raise PropertyInfFViolated(
            f"성질 (inf-F) 위반: 원소 {label}은 1 미만 모든 레벨에 속하지만 σ(1)에는 없습니다",
            element=label,
        )
    return FuzzySubset(
        sigma.ground, tuple(inf_non_membership(sigma, x) for x in range(len(sigma.ground)))
    )


def fuzzy_union(family: Sequence[FuzzySubset]) -> FuzzySubset:
    """(∨ μ_i)(x) = Max μ_i(x)"""
    if not family:
        raise EmptyFamily("빈 패밀리의 퍼지 합집합")
    ground = _same_ground(family)
    return FuzzySubset(ground, tuple(max(gs) for gs in zip(*(mu.grades for mu in family))))


def fuzzy_intersection(family: Sequence[FuzzySubset]) -> FuzzySubset:
    """(∧ μ_i)(x) = Min μ_i(x)"""
    if not family:
        raise EmptyFamily("빈 패밀리의 퍼지 교집합")
    ground = _same_ground(family)
    return FuzzySubset(ground, tuple(min(gs) for gs in zip(*(mu.grades for mu in family))))


def is_le(first: FuzzySubset, second: FuzzySubset) -> bool:
    """점별 μ1 ≤ μ2"""
    _same_ground([first, second])
    return all(a <= b for a, b in zip(first.grades, second.grades))


# 무한 패밀리 (기호적 표현)


@dataclass(frozen=True)
class SymbolicFamily:
    """μ_n(x) = limit(x) + sign(x) · base^(-n) 꼴의 무한 패밀리

    ascending: 등급이 극한으로 증가 (sign ≤ 0)
    descending: 등급이 극한으로 감소 (sign ≥ 0)
    """
    ground: GroundSet
    kind: str
    limits: Tuple[Fraction, ...]
    signs: Tuple[int, ...]
    base: int = 2
    first_index: int = 1

    def __post_init__(self):
        if self.kind not in ("ascending", "descending"):
            raise GradualError(f"알 수 없는 패밀리 종류: {self.kind}")
        limits = tuple(as_grade(g) for g in self.limits)
        object.__setattr__(self, "limits", limits)
        if len(limits) != len(self.ground) or len(self.signs) != len(self.ground):
            raise GroundSetMismatch("패밀리 파라미터 수가 기저 집합 크기와 다릅니다")
        wrong = -1 if self.kind == "descending" else 1
        if any(s == wrong for s in self.signs) or any(s not in (-1, 0, 1) for s in self.signs):
            raise GradualError("부호가 패밀리 방향과 맞지 않습니다")
        self.member(self.first_index)

    def member(self, n: int) -> FuzzySubset:
        step = Fraction(1, self.base ** n)
        return FuzzySubset(
            self.ground, tuple(limit + sign * step for limit, sign in zip(self.limits, self.signs))
        )

    def truncation(self, last: int) -> List[FuzzySubset]:
        return [self.member(n) for n in range(self.first_index, last + 1)]

    def limit(self) -> FuzzySubset:
        """∨_n μ_n (ascending) 또는 ∧_n μ_n (descending)"""
        return FuzzySubset(self.ground, self.limits)

    def _profile(self, limit: Fraction, closed: bool) -> StepMap[bool]:
        if limit == ZERO:
            return StepMap.constant(False)
        if limit == ONE and closed:
            return StepMap.constant(True)
        return StepMap.from_pieces([(IntervalPiece(ZERO, limit, False, closed), True)], default=False)

    def symbolic_union(self, strict: bool = False) -> GradualSubset:
        """무한 합집합 ∪_n σ(μ_n) 또는 ∪_n σ̃(μ_n) (ascending)"""
        if self.kind != "ascending":
            raise GradualError("합집합 극한은 상승 패밀리에서만 계산합니다")
        profiles = []
        for limit, sign in zip(self.limits, self.signs):
            if strict:
                closed = sign == 0 and limit == ONE
            else:
                closed = sign == 0
            profiles.append(self._profile(limit, closed))
        return self._assemble(profiles)

    def symbolic_intersection(self, strict: bool = True) -> GradualSubset:
        """무한 교집합 ∩_n σ̃(μ_n) 또는 ∩_n σ(μ_n) (descending)"""
        if self.kind != "descending":
            raise GradualError("교집합 극한은 하강 패밀리에서만 계산합니다")
        profiles = []
        for limit, sign in zip(self.limits, self.signs):
            if strict:
                closed = sign > 0 or limit == ONE
            else:
                closed = True
            profiles.append(self._profile(limit, closed))
        return self._assemble(profiles)

    def _assemble(self, profiles: List[StepMap[bool]]) -> GradualSubset:
        combined = StepMap.constant(0)
        for x, profile in enumerate(profiles):
            combined = combined.zip_with(profile, lambda m, inside, bit=1 << x: m | bit if inside else m)
        return GradualSubset(self.ground, combined)


@dataclass
class GapReport:
    """무한 패밀리 간극 보고"""
    family: SymbolicFamily
    truncation_size: int
    witness: Fraction
    limit_map: GradualSubset
    truncated_map: GradualSubset
    limit_at_witness: int
    truncated_at_witness: int
    checks: Dict[str, bool] = field(default_factory=dict)

    @property
    def has_gap(self) -> bool:
        return self.limit_at_witness != self.truncated_at_witness

    def lines(self) -> List[str]:
        ground = self.family.ground
        out = [
            f"N = {self.truncation_size}, δ = {format_rational(self.witness)}",
            f"  극한 사상 (δ): {ground.render(self.limit_at_witness)}",
            f"  유한 절단 (δ): {ground.render(self.truncated_at_witness)}",
        ]
        out.extend(f"  {name}: {'OK' if ok else 'FAIL'}" for name, ok in self.checks.items())
        return out


HALF = Fraction(1, 2)
_AB = GroundSet(("a", "b"))


def ascending_family() -> SymbolicFamily:
    """μ_n(a) = 1, μ_n(b) = 1/2 − 1/2^n"""
    return SymbolicFamily(_AB, "ascending", (ONE, HALF), (0, -1), base=2, first_index=2)


def descending_family() -> SymbolicFamily:
    """μ_n(a) = 1, μ_n(b) = 1/2 + 1/2^n"""
    return SymbolicFamily(_AB, "descending", (ONE, HALF), (0, 1), base=2, first_index=2)


def union_gap_report(n: int) -> GapReport:
    """σ(∨_n μ_n) ⊋ ∪_n σ(μ_n): δ = 1/2에서 X 대 {a}"""
    if n < 2:
        raise GradualError("절단 크기 N은 2 이상이어야 합니다")
    family = ascending_family()
    members = family.truncation(n)
    limit_map = nu(family.limit())
    truncated = union([nu(mu) for mu in members])
    strict_union = family.symbolic_union(strict=True)
    strict_limit = nu_tilde(family.limit())
    report = GapReport(
        family=family,
        truncation_size=n,
        witness=HALF,
        limit_map=limit_map,
        truncated_map=truncated,
        limit_at_witness=limit_map(HALF),
        truncated_at_witness=truncated(HALF),
    )
    report.checks = {
        "비엄격 무한 합집합도 δ에서 {a}": family.symbolic_union()(HALF) == truncated(HALF),
        "엄격 유한 합집합 (δ) = σ̃(극한) (δ)": union([nu_tilde(mu) for mu in members])(HALF)
        == strict_limit(HALF),
        "엄격 무한 합집합 = σ̃(극한)": strict_union == strict_limit,
    }
    logger.debug(f"합집합 간극 보고 생성: N={n}")
    return report


def intersection_gap_report(n: int) -> GapReport:
    """σ̃(∧_n μ_n) ⊊ ∩_n σ̃(μ_n): δ = 1/2에서 {a} 대 X"""
    if n < 2:
        raise GradualError("절단 크기 N은 2 이상이어야 합니다")
    family = descending_family()
    members = family.truncation(n)
    limit_map = nu_tilde(family.limit())
    strict_members = [nu_tilde(mu) for mu in members]
    truncated = intersection(strict_members)
    completed = interior_d(family.symbolic_intersection(strict=True))
    report = GapReport(
        family=family,
        truncation_size=n,
        witness=HALF,
        limit_map=limit_map,
        truncated_map=truncated,
        limit_at_witness=limit_map(HALF),
        truncated_at_witness=truncated(HALF),
    )
    report.checks = {
        "유한 수정 교집합 = σ̃(유한 ∧)": modified_intersection(strict_members)
        == nu_tilde(fuzzy_intersection(members)),
        "기호적 완성 (∩ σ̃(μ_n))^d = σ̃(∧ μ_n)": completed == limit_map,
        "비엄격 무한 교집합 = σ(∧ μ_n)": family.symbolic_intersection(strict=False)
        == nu(family.limit()),
    }
    logger.debug(f"교집합 간극 보고 생성: N={n}")
    return report
