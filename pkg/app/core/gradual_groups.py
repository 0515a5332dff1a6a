"""
점진적 부분군 모듈

유한군 G의 점진적 부분군 σ: (0,1] -> 𝒮(G), 정규성과 점진적 몫군,
부분군 값 폐포/내부 연산자, 퍼지 부분군과 μ¹ 정규화 동치류,
동치류 곱(max-min 합성곱), ν/υ 및 ν̃/υ̃ 대응을 제공합니다.
군의 점진적 부분집합은 𝒫(G)∖{∅} 값을 가지므로 빈 레벨 값은 거부합니다.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Optional, Sequence, Tuple, Union

from app.core.elements import GradualElement
from app.core.errors import (
    EmptyLevelValue,
    GradualError,
    LawViolated,
    NotASubgroup,
    NotFuzzySubgroup,
    NotIncluded,
    NotNormal,
)
from app.core.fuzzy import FuzzySubset, nu, nu_tilde, upsilon, upsilon_tilde
from app.core.groups import (
    FiniteGroup,
    GroupHom,
    conjugate,
    is_normal,
    is_subgroup,
    min_generators,
    quotient,
    setwise_inverse,
    setwise_product,
    subgroup_generated,
)
from app.core.levels import ONE, ZERO, RationalLike, StepMap, accumulate_suffix
from app.core.subsets import GradualSubset

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GradualSubgroup:
    """모든 레벨 값이 부분군인 점진적 부분집합"""
    group: FiniteGroup
    map: StepMap[int]

    def __post_init__(self):
        for piece, mask in self.map.pieces:
            if mask == 0:
                raise EmptyLevelValue(f"레벨 {piece}의 값이 비어 있습니다")
            if not is_subgroup(self.group, mask):
                raise NotASubgroup(
                    f"레벨 {piece}의 값 {self.group.render(mask)}은 부분군이 아닙니다"
                )

    @classmethod
    def constant(cls, group: FiniteGroup, mask: int) -> "GradualSubgroup":
        return cls(group, StepMap.constant(mask))

    @classmethod
    def from_subset(cls, group: FiniteGroup, sigma: GradualSubset) -> "GradualSubgroup":
        if sigma.ground != group.ground:
            raise GradualError("기저 집합이 군의 원소 집합과 다릅니다")
        return cls(group, sigma.map)

    def as_subset(self) -> GradualSubset:
        return GradualSubset(self.group.ground, self.map)

    def __call__(self, alpha: RationalLike) -> int:
        return self.map(alpha)

    def describe(self) -> str:
        return self.map.describe(self.group.render)


def _check_nonempty(sigma: GradualSubset) -> None:
    for piece, mask in sigma.map.pieces:
        if mask == 0:
            raise EmptyLevelValue(f"레벨 {piece}의 값이 비어 있습니다")


def is_gradual_subgroup(group: FiniteGroup, sigma: GradualSubset) -> bool:
    """σ∗σ ⊆ σ 이고 σ⁻¹ ⊆ σ 인지 (레벨 값은 비어 있지 않아야 함)"""
    _check_nonempty(sigma)
    for mask in sigma.map.values:
        if setwise_product(group, mask, mask) & ~mask:
            return False
        if setwise_inverse(group, mask) & ~mask:
            return False
    return True


def generated_by(group: FiniteGroup, elements: Sequence[GradualElement[int]]) -> GradualSubgroup:
    """σ(α) = ⟨ε1(α), …, εt(α)⟩"""
    if not elements:
        raise GradualError("생성 원소 목록이 비어 있습니다")
    masks = elements[0].map.map(lambda g: 1 << g)
    for element in elements[1:]:
        masks = masks.zip_with(element.map, lambda m, g: m | 1 << g)
    return GradualSubgroup(group, masks.map(lambda m: subgroup_generated(group, m)))


def is_t_generated(sigma: GradualSubgroup, t: int) -> bool:
    """모든 레벨 값이 t개 이하의 원소로 생성되는지"""
    return all(min_generators(sigma.group, mask) <= t for mask in set(sigma.map.values))


def _same_group(first: GradualSubgroup, second: GradualSubgroup) -> FiniteGroup:
    if first.group != second.group:
        raise GradualError("서로 다른 군의 점진적 부분군입니다")
    return first.group


def setwise_product_gradual(first: GradualSubgroup, second: GradualSubgroup) -> GradualSubset:
    """(σ1∗σ2)(α) = σ1(α)∗σ2(α)"""
    group = _same_group(first, second)
    product = first.map.zip_with(second.map, lambda a, b: setwise_product(group, a, b))
    return GradualSubset(group.ground, product)


def product_gradual(
    first: GradualSubgroup, second: GradualSubgroup
) -> Union[GradualSubgroup, GradualSubset]:
    """σ1σ2. 모든 레벨이 부분군이면(한 인수가 정규이면 항상) GradualSubgroup"""
    product = setwise_product_gradual(first, second)
    group = first.group
    if all(is_subgroup(group, mask) for mask in product.map.values):
        return GradualSubgroup(group, product.map)
    return product


def generated_product(first: GradualSubgroup, second: GradualSubgroup) -> GradualSubgroup:
    """⟨σ1σ2⟩"""
    group = _same_group(first, second)
    return GradualSubgroup(
        group, first.map.zip_with(second.map, lambda a, b: subgroup_generated(group, a | b))
    )


def closure_c_group(sigma: GradualSubgroup) -> GradualSubgroup:
    """σ^c(α) = ⟨∪{σ(β) | β ≥ α}⟩"""
    group = sigma.group
    join = lambda a, b: subgroup_generated(group, a | b)
    return GradualSubgroup(group, accumulate_suffix(sigma.map, join))


def interior_d_group(sigma: GradualSubgroup) -> GradualSubgroup:
    """σ^d(1) = σ(1), σ^d(α) = ⟨∪{σ(β) | β > α}⟩"""
    group = sigma.group
    join = lambda a, b: subgroup_generated(group, a | b)
    return GradualSubgroup(group, accumulate_suffix(sigma.map, join, strict=True))


def is_normal_gradual(sigma: GradualSubgroup) -> bool:
    return all(is_normal(sigma.group, mask) for mask in set(sigma.map.values))


def _exchange(
    first: GradualSubgroup, second: GradualSubgroup, operator, name: str
) -> GradualSubgroup:
    lhs = operator(generated_product(first, second))
    rhs = generated_product(operator(first), operator(second))
    if lhs != rhs:
        raise LawViolated(f"⟨σ1σ2⟩^{name} != ⟨σ1^{name}σ2^{name}⟩")
    if is_normal_gradual(first) or is_normal_gradual(second):
        product = product_gradual(first, second)
        strong = product_gradual(operator(first), operator(second))
        if not isinstance(product, GradualSubgroup) or operator(product) != strong:
            raise LawViolated(f"정규 인수가 있는데 (σ1σ2)^{name} != σ1^{name}σ2^{name}")
    return lhs


def langle_product_c(first: GradualSubgroup, second: GradualSubgroup) -> GradualSubgroup:
    """⟨σ1σ2⟩^c = ⟨σ1^cσ2^c⟩ (정규 인수가 있으면 (σ1σ2)^c = σ1^cσ2^c 도 확인)"""
    return _exchange(first, second, closure_c_group, "c")


def langle_product_d(first: GradualSubgroup, second: GradualSubgroup) -> GradualSubgroup:
    """⟨σ1σ2⟩^d = ⟨σ1^dσ2^d⟩ (정규 인수가 있으면 (σ1σ2)^d = σ1^dσ2^d 도 확인)"""
    return _exchange(first, second, interior_d_group, "d")


def conjugate_gradual(sigma: GradualSubgroup, g: int) -> GradualSubgroup:
    """(gσg⁻¹)(α) = gσ(α)g⁻¹"""
    return GradualSubgroup(sigma.group, sigma.map.map(lambda m: conjugate(sigma.group, g, m)))


# 점진적 몫군


@dataclass(frozen=True)
class QuotientLevel:
    """G/σ(α) 와 사영 p(α)"""
    factor: FiniteGroup
    projection: GroupHom


@lru_cache(maxsize=1024)
def _quotient_level(group: FiniteGroup, normal: int) -> QuotientLevel:
    factor, projection = quotient(group, normal)
    return QuotientLevel(factor, projection)


@dataclass(frozen=True)
class GradualQuotientGroup:
    """η(α) = G/σ(α)"""
    group: FiniteGroup
    levels: StepMap[QuotientLevel]

    def at(self, alpha: RationalLike) -> QuotientLevel:
        return self.levels(alpha)

    def orders(self) -> StepMap[int]:
        return self.levels.map(lambda q: q.factor.order)


def quotient_gradual(sigma: GradualSubgroup) -> GradualQuotientGroup:
    if not is_normal_gradual(sigma):
        raise NotNormal("정규 점진적 부분군이 아닙니다")
    group = sigma.group
    return GradualQuotientGroup(group, sigma.map.map(lambda m: _quotient_level(group, m)))


def kernel_of(eta: GradualQuotientGroup) -> GradualSubgroup:
    """κ(α) = Ker(G -> η(α))"""
    return GradualSubgroup(eta.group, eta.levels.map(lambda q: q.projection.kernel()))


def comparison_homs(first: GradualSubgroup, second: GradualSubgroup) -> StepMap[GroupHom]:
    """σ1 ⊆ σ2 (모두 정규)일 때 p2(α) = h_α ∘ p1(α) 를 만족하는 h_α: G/σ1(α) -> G/σ2(α)"""
    group = _same_group(first, second)
    if not (is_normal_gradual(first) and is_normal_gradual(second)):
        raise NotNormal("비교 준동형은 정규 점진적 부분군 사이에서만 정의됩니다")

    def induced(small: int, large: int) -> GroupHom:
        if small & ~large:
            raise NotIncluded(f"{group.render(small)} ⊄ {group.render(large)}")
        lower = _quotient_level(group, small)
        upper = _quotient_level(group, large)
        images = [0] * lower.factor.order
        for g in range(group.order):
            images[lower.projection(g)] = upper.projection(g)
        hom = GroupHom(lower.factor, upper.factor, tuple(images))
        if hom.compose(lower.projection) != upper.projection:
            raise LawViolated("비교 준동형 사각형이 가환하지 않습니다")
        return hom

    return first.map.zip_with(second.map, induced)


@dataclass(frozen=True)
class FractionLevel:
    """(σ1(α)σ2(α))/σ1(α) ⊆ G/σ1(α)"""
    quotient: QuotientLevel
    subgroup: int


@dataclass(frozen=True)
class GradualFraction:
    group: FiniteGroup
    levels: StepMap[FractionLevel]

    def at(self, alpha: RationalLike) -> FractionLevel:
        return self.levels(alpha)


def fraction(normal: GradualSubgroup, sigma: GradualSubgroup) -> GradualFraction:
    """σ1σ2/σ1 (σ1 정규)"""
    group = _same_group(normal, sigma)
    if not is_normal_gradual(normal):
        raise NotNormal("분모 점진적 부분군이 정규가 아닙니다")

    def level(n: int, s: int) -> FractionLevel:
        q = _quotient_level(group, n)
        image = q.projection.image(setwise_product(group, n, s))
        if not is_subgroup(q.factor, image):
            raise NotASubgroup("몫군 안의 상이 부분군이 아닙니다")
        return FractionLevel(q, image)

    return GradualFraction(group, normal.map.zip_with(sigma.map, level))


def image_subgroup(f: GroupHom, sigma: GradualSubgroup) -> GradualSubgroup:
    """f_*σ(α) = f(σ(α))"""
    if f.source != sigma.group:
        raise GradualError("준동형의 정의역과 점진적 부분군의 군이 다릅니다")
    return GradualSubgroup(f.target, sigma.map.map(f.image))


def preimage_subgroup(f: GroupHom, tau: GradualSubgroup) -> GradualSubgroup:
    """f*τ(α) = f⁻¹(τ(α))"""
    if f.target != tau.group:
        raise GradualError("준동형의 공역과 점진적 부분군의 군이 다릅니다")
    return GradualSubgroup(f.source, tau.map.map(f.preimage))


# 퍼지 부분군


def subgroup_violation(group: FiniteGroup, mu: FuzzySubset) -> Optional[Tuple[int, int]]:
    """μ(xy⁻¹) ≥ μ(x) ∧ μ(y) 를 위반하는 첫 쌍 (x, y)"""
    grades = mu.grades
    for x in range(group.order):
        for y in range(group.order):
            if grades[group.multiply(x, group.inverse(y))] < min(grades[x], grades[y]):
                return x, y
    return None


def _require_group_ground(group: FiniteGroup, mu: FuzzySubset) -> None:
    if mu.ground != group.ground:
        raise GradualError("퍼지 부분집합의 기저 집합이 군의 원소 집합과 다릅니다")


def is_fuzzy_subgroup(group: FiniteGroup, mu: FuzzySubset) -> bool:
    _require_group_ground(group, mu)
    if all(g == ZERO for g in mu.grades):
        return False
    return subgroup_violation(group, mu) is None


@dataclass(frozen=True)
class FuzzySubgroup:
    """퍼지 부분군 μ (생성 시 검증)"""
    group: FiniteGroup
    fuzzy: FuzzySubset

    def __post_init__(self):
        _require_group_ground(self.group, self.fuzzy)
        if all(g == ZERO for g in self.fuzzy.grades):
            raise NotFuzzySubgroup("상수 0 함수는 퍼지 부분군이 아닙니다")
        pair = subgroup_violation(self.group, self.fuzzy)
        if pair is not None:
            x, y = (self.group.label(i) for i in pair)
            logger.info(f"퍼지 부분군 부등식 위반 쌍: ({x}, {y})")
            raise NotFuzzySubgroup(
                f"μ({x}·{y}⁻¹) < μ({x}) ∧ μ({y})", pair=(x, y)
            )

    @property
    def grades(self) -> Tuple[Fraction, ...]:
        return self.fuzzy.grades


def as_fuzzy_subgroup(group: FiniteGroup, mu: FuzzySubset) -> FuzzySubgroup:
    return FuzzySubgroup(group, mu)


@dataclass(frozen=True)
class FuzzySubgroupClass:
    """동치류 [μ] 의 표준 대표 μ¹ (μ¹(e) = 1)"""
    canonical: FuzzySubgroup

    def __post_init__(self):
        group = self.canonical.group
        if self.canonical.grades[group.identity] != ONE:
            raise GradualError("표준 대표는 항등원에서 등급 1이어야 합니다")

    @property
    def group(self) -> FiniteGroup:
        return self.canonical.group

    @property
    def fuzzy(self) -> FuzzySubset:
        return self.canonical.fuzzy


def normalize_mu1(mu: FuzzySubgroup) -> FuzzySubgroupClass:
    """μ¹(e) = 1, μ¹(x) = μ(x) (x ≠ e)"""
    group = mu.group
    grades = list(mu.grades)
    grades[group.identity] = ONE
    return FuzzySubgroupClass(FuzzySubgroup(group, FuzzySubset(mu.fuzzy.ground, tuple(grades))))


def classes_equal(first: FuzzySubgroupClass, second: FuzzySubgroupClass) -> bool:
    """μ1 ∼ μ2 ⟺ x ≠ e 에서 μ1(x) = μ2(x)"""
    if first.group != second.group:
        return False
    e = first.group.identity
    return all(
        a == b
        for x, (a, b) in enumerate(zip(first.fuzzy.grades, second.fuzzy.grades))
        if x != e
    )


def convolution(group: FiniteGroup, first: FuzzySubset, second: FuzzySubset) -> FuzzySubset:
    """(μ1μ2)(x) = Max{μ1(y) ∧ μ2(z) | yz = x}"""
    best = [ZERO] * group.order
    for y, a in enumerate(first.grades):
        if a == ZERO:
            continue
        row = group.table[y]
        for z, b in enumerate(second.grades):
            value = min(a, b)
            x = row[z]
            if value > best[x]:
                best[x] = value
    return FuzzySubset(first.ground, tuple(best))


def class_product(
    first: FuzzySubgroupClass, second: FuzzySubgroupClass
) -> Union[FuzzySubgroupClass, FuzzySubset]:
    """[μ1][μ2] = [μ1μ2]. 합성곱이 퍼지 부분군이 아니면 FuzzySubset 반환"""
    if first.group != second.group:
        raise GradualError("서로 다른 군의 동치류입니다")
    group = first.group
    product = convolution(group, first.fuzzy, second.fuzzy)
    if is_fuzzy_subgroup(group, product):
        return normalize_mu1(FuzzySubgroup(group, product))
    return product


# ν/υ, ν̃/υ̃ 대응


def nu_group(cls: FuzzySubgroupClass) -> GradualSubgroup:
    """σ(μ)(α) = {x | μ¹(x) ≥ α}"""
    return GradualSubgroup(cls.group, nu(cls.fuzzy).map)


def nu_tilde_group(cls: FuzzySubgroupClass) -> GradualSubgroup:
    """σ̃(μ)(α) = {x | μ¹(x) > α} (α = 1이면 {x | μ¹(x) = 1})"""
    return GradualSubgroup(cls.group, nu_tilde(cls.fuzzy).map)


def upsilon_group(sigma: GradualSubgroup) -> FuzzySubgroupClass:
    """감소하고 성질 (F)를 만족하는 σ 의 동치류"""
    mu = upsilon(sigma.as_subset())
    return normalize_mu1(FuzzySubgroup(sigma.group, mu))


def upsilon_tilde_group(sigma: GradualSubgroup) -> FuzzySubgroupClass:
    """엄격 감소하고 성질 (inf-F)를 만족하는 σ 의 동치류"""
    mu = upsilon_tilde(sigma.as_subset())
    return normalize_mu1(FuzzySubgroup(sigma.group, mu))


def is_normal_fuzzy(mu: Union[FuzzySubgroup, FuzzySubgroupClass]) -> bool:
    """μ(xy) = μ(yx) (모든 x, y)"""
    if isinstance(mu, FuzzySubgroupClass):
        mu = mu.canonical
    group = mu.group
    grades = mu.grades
    return all(
        grades[group.multiply(x, y)] == grades[group.multiply(y, x)]
        for x in range(group.order)
        for y in range(x + 1, group.order)
    )


def characteristic(group: FiniteGroup, subgroup: int) -> FuzzySubgroup:
    """부분군의 특성 함수"""
    grades = tuple(ONE if subgroup >> x & 1 else ZERO for x in range(group.order))
    return FuzzySubgroup(group, FuzzySubset(group.ground, grades))


def product_report(first: FuzzySubgroupClass, second: FuzzySubgroupClass) -> Dict[str, object]:
    """ν̃([μ1][μ2]) 와 ν̃([μ1])ν̃([μ2]) 비교"""
    product = class_product(first, second)
    rhs = setwise_product_gradual(nu_tilde_group(first), nu_tilde_group(second))
    if isinstance(product, FuzzySubgroupClass):
        lhs = nu_tilde(product.fuzzy)
    else:
        lhs = nu_tilde(product)
    equal = lhs == rhs
    logger.info(f"ν̃ 곱 준동형 비교: {'equal' if equal else 'different'}")
    return {"lhs": lhs, "rhs": rhs, "equal": equal}

