"""
점진적 부분집합 모듈

유한 기저 집합 X의 점진적 부분집합 σ: (0,1] -> 𝒫(X).
부분집합은 X 인덱스에 대한 비트마스크(int)로 저장합니다.
멤버십/포함, 폐포 연산자 c, 내부 연산자 d, 합집합/교집합, 수정 교집합,
성질 (F)와 (inf-F), 직접상/역상을 제공합니다.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, List, Optional, Sequence, Tuple

from app.core.elements import AnyElement, GroundMap, GroundSet, optional_map
from app.core.errors import (
    EmptyFamily,
    GradualError,
    GroundSetMismatch,
    NotDecreasing,
    NotStrictDecreasing,
    PropertyFViolated,
)
from app.core.levels import (
    ONE,
    ZERO,
    IntervalPiece,
    RationalLike,
    StepMap,
    accumulate_suffix,
    format_rational,
    infimum_of_false,
    supremum,
)

logger = logging.getLogger(__name__)


def _or(a: int, b: int) -> int:
    return a | b


def _and(a: int, b: int) -> int:
    return a & b


@dataclass(frozen=True)
class GradualSubset:
    """점진적 부분집합 (빈 값 허용)"""
    ground: GroundSet
    map: StepMap[int]

    def __post_init__(self):
        full = self.ground.full_mask
        if any(m < 0 or m & ~full for m in self.map.values):
            raise GroundSetMismatch("값이 기저 집합의 부분집합이 아닙니다")

    @classmethod
    def constant(cls, ground: GroundSet, labels: Iterable[str]) -> "GradualSubset":
        return cls(ground, StepMap.constant(ground.mask_of(labels)))

    @classmethod
    def from_pieces(
        cls, ground: GroundSet, pieces: Iterable[Tuple[IntervalPiece, Iterable[str]]]
    ) -> "GradualSubset":
        return cls(ground, StepMap.from_pieces([(p, ground.mask_of(v)) for p, v in pieces]))

    def __call__(self, alpha: RationalLike) -> int:
        return self.map(alpha)

    def members(self, alpha: RationalLike) -> List[str]:
        return self.ground.labels_of(self.map(alpha))

    @property
    def support(self) -> int:
        """∪_α σ(α)"""
        return reduce(_or, self.map.values, 0)

    def describe(self) -> str:
        return self.map.describe(self.ground.render)


@dataclass(frozen=True)
class PartialGradualSubset:
    """정의역이 임의인 부분 점진적 부분집합 (1은 정의역에 포함)"""
    ground: GroundSet
    map: StepMap[Optional[int]]

    def __post_init__(self):
        if self.map(ONE) is None:
            raise GradualError("부분 점진적 부분집합은 레벨 1에서 정의되어야 합니다")

    @classmethod
    def from_pieces(
        cls, ground: GroundSet, pieces: Iterable[Tuple[IntervalPiece, Iterable[str]]]
    ) -> "PartialGradualSubset":
        return cls(
            ground,
            StepMap.from_pieces([(p, ground.mask_of(v)) for p, v in pieces], default=None),
        )


@dataclass(frozen=True)
class MembershipProfile:
    """원소 x의 멤버십 프로파일 {α | x ∈ σ(α)}"""
    element: int
    levels: StepMap[bool]

    @property
    def pieces(self) -> List[IntervalPiece]:
        return [piece for piece, inside in self.levels.pieces if inside]

    @property
    def supremum(self) -> Optional[Tuple[Fraction, bool]]:
        return supremum(self.levels)

    @property
    def inf_non_membership(self) -> Fraction:
        return infimum_of_false(self.levels)


def _same_ground(*subsets: GradualSubset) -> GroundSet:
    ground = subsets[0].ground
    for other in subsets[1:]:
        if other.ground != ground:
            raise GroundSetMismatch("기저 집합이 다른 점진적 부분집합입니다")
    return ground


def membership_profile(sigma: GradualSubset, x: int) -> MembershipProfile:
    return MembershipProfile(x, sigma.map.map(lambda m: bool(m >> x & 1)))


def unitary(element: AnyElement, ground: GroundSet):
    """단위 점진적 부분집합 σ(ε)(α) = {ε(α)}"""
    values = optional_map(element)
    if all(v is not None for v in values.values):
        return GradualSubset(ground, values.map(lambda x: 1 << x))
    return PartialGradualSubset(ground, values.map(lambda x: None if x is None else 1 << x))


def element_belongs(element: AnyElement, sigma: GradualSubset) -> bool:
    """공통 정의역의 모든 α에서 ε(α) ∈ σ(α)"""
    inside = optional_map(element).zip_with(
        sigma.map, lambda x, m: x is None or bool(m >> x & 1)
    )
    return all(inside.values)


def is_subset(first: GradualSubset, second: GradualSubset) -> bool:
    _same_ground(first, second)
    return all(first.map.zip_with(second.map, lambda a, b: a & ~b == 0).values)


def closure_c(sigma: GradualSubset) -> GradualSubset:
    """σ^c(α) = ∪{σ(β) | α ≤ β}"""
    return GradualSubset(sigma.ground, accumulate_suffix(sigma.map, _or))


def interior_d(sigma: GradualSubset) -> GradualSubset:
    """σ^d(1) = σ(1), σ^d(α) = ∪{σ(β) | α < β}"""
    return GradualSubset(sigma.ground, accumulate_suffix(sigma.map, _or, strict=True))


def is_decreasing(sigma: GradualSubset) -> bool:
    return closure_c(sigma) == sigma


def is_strict_decreasing(sigma: GradualSubset) -> bool:
    return interior_d(sigma) == sigma


def union(family: Sequence[GradualSubset]) -> GradualSubset:
    if not family:
        raise EmptyFamily("빈 패밀리의 합집합")
    ground = _same_ground(*family)
    return GradualSubset(ground, reduce(lambda s, t: s.zip_with(t, _or), (s.map for s in family)))


def intersection(family: Sequence[GradualSubset]) -> GradualSubset:
    if not family:
        raise EmptyFamily("빈 패밀리의 교집합")
    ground = _same_ground(*family)
    return GradualSubset(ground, reduce(lambda s, t: s.zip_with(t, _and), (s.map for s in family)))


def modified_intersection(family: Sequence[GradualSubset]) -> GradualSubset:
    """⊼ σ_i = (∩ σ_i)^d (엄격 감소 입력)"""
    if not family:
        raise EmptyFamily("빈 패밀리의 수정 교집합")
    for i, sigma in enumerate(family):
        if not is_strict_decreasing(sigma):
            raise NotStrictDecreasing(f"{i}번째 입력이 엄격 감소가 아닙니다")
    return interior_d(intersection(family))


def members_of(mask: int) -> Iterable[int]:
    x = 0
    while mask:
        if mask & 1:
            yield x
        mask >>= 1
        x += 1


def max_membership(sigma: GradualSubset, x: int) -> Fraction:
    """Max{α | x ∈ σ(α)} (한 번도 속하지 않으면 0)"""
    sup = membership_profile(sigma, x).supremum
    if sup is None:
        return ZERO
    level, attained = sup
    if not attained:
        label = sigma.ground.label(x)
        raise PropertyFViolated(
            f"원소 {label}의 멤버십 상한 {format_rational(level)}이 도달되지 않습니다",
            element=label,
        )
    return level


def inf_non_membership(sigma: GradualSubset, x: int) -> Fraction:
    """Inf{α | x ∉ σ(α)} (빈 집합이면 1, (0,1] 전체면 0)"""
    return membership_profile(sigma, x).inf_non_membership


def property_F_violation(sigma: GradualSubset) -> Optional[int]:
    """성질 (F)를 위반하는 첫 원소"""
    if not is_decreasing(sigma):
        raise NotDecreasing("성질 (F)는 감소 점진적 부분집합에서만 정의됩니다")
    for x in members_of(sigma.support):
        sup = membership_profile(sigma, x).supremum
        if sup is not None and not sup[1]:
            return x
    return None


def has_property_F(sigma: GradualSubset) -> bool:
    return property_F_violation(sigma) is None


def property_infF_violation(
    sigma: GradualSubset, closure: Optional[GradualSubset] = None
) -> Optional[int]:
    """성질 (inf-F)를 위반하는 첫 원소

    β = Inf{α | x ∉ σ(α)}. closure τ(τ^d = σ인 감소 부분집합)가 주어지면 x ∈ τ(β)를,
    없으면 β = 1일 때 x ∈ σ(1)을 요구합니다.
    """
    if not is_strict_decreasing(sigma):
        raise NotStrictDecreasing("성질 (inf-F)는 엄격 감소 점진적 부분집합에서만 정의됩니다")
    if closure is not None:
        _same_ground(sigma, closure)
        if not is_decreasing(closure):
            raise NotDecreasing("closure 인자가 감소 점진적 부분집합이 아닙니다")
        if interior_d(closure) != sigma:
            raise NotStrictDecreasing("closure의 내부가 주어진 부분집합과 다릅니다")
    for x in members_of(sigma.support):
        beta = inf_non_membership(sigma, x)
        if beta == ZERO:
            continue
        if closure is not None:
            if not closure(beta) >> x & 1:
                return x
        elif beta == ONE and not sigma(ONE) >> x & 1:
            return x
    return None


def has_property_infF(sigma: GradualSubset, closure: Optional[GradualSubset] = None) -> bool:
    return property_infF_violation(sigma, closure) is None


def difference_star(sigma: GradualSubset, alpha: RationalLike) -> int:
    """σ*(α) = σ^c(α) ∖ σ^d(α)"""
    return closure_c(sigma)(alpha) & ~interior_d(sigma)(alpha)


def disjoint_union_identity(sigma: GradualSubset) -> bool:
    """∪_α σ(α) ∖ σ(1) 이 σ*(α)들의 서로소 합집합인지 (감소 σ)"""
    if not is_decreasing(sigma):
        raise NotDecreasing("서로소 합집합 항등식은 감소 점진적 부분집합에서만 정의됩니다")
    seen = 0
    for level in sigma.map.points:
        piece = difference_star(sigma, level)
        if piece & seen:
            return False
        seen |= piece
    return seen == sigma.support & ~sigma(ONE)


def direct_image(f: GroundMap, sigma: GradualSubset) -> GradualSubset:
    if f.source != sigma.ground:
        raise GroundSetMismatch("사상의 정의역과 기저 집합이 다릅니다")
    return GradualSubset(f.target, sigma.map.map(f.image_mask))


def inverse_image(f: GroundMap, tau: GradualSubset) -> GradualSubset:
    if f.target != tau.ground:
        raise GroundSetMismatch("사상의 공역과 기저 집합이 다릅니다")
    return GradualSubset(f.source, tau.map.map(f.preimage_mask))


def extend_partial_subset(sigma: PartialGradualSubset) -> GradualSubset:
    """정의되지 않은 레벨을 ∅로 채움"""
    return GradualSubset(sigma.ground, sigma.map.map(lambda m: 0 if m is None else m))
