"""
점진적 원소 모듈

기저 집합 X에 대한 전(total)/부분(partial) 점진적 원소, 확장 ε̄,
R_α 관계, 점별 이항 연산과 점진적 원소 군의 필터레이션을 다룹니다.
원소 값은 기저 집합의 인덱스(int) 또는 연산이 정의된 임의의 해시 가능한 값입니다.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import (
    TYPE_CHECKING,
    Any,
    Callable,
    Generic,
    Iterable,
    Iterator,
    List,
    Optional,
    Tuple,
    TypeVar,
    Union,
)

from app.core.errors import GradualError, GroundSetMismatch
from app.core.levels import (
    IntervalPiece,
    LevelSet,
    RationalLike,
    StepMap,
    all_from,
    mask_below,
)

if TYPE_CHECKING:
    from app.core.groups import FiniteGroup

logger = logging.getLogger(__name__)

T = TypeVar("T")


@dataclass(frozen=True)
class GroundSet:
    """유한 기저 집합 X (레이블 순서가 곧 인덱스)"""
    elements: Tuple[str, ...]

    def __post_init__(self):
        elements = tuple(str(e) for e in self.elements)
        if not elements:
            raise GradualError("기저 집합이 비어 있습니다")
        if len(set(elements)) != len(elements):
            raise GradualError(f"중복된 원소 레이블: {elements}")
        object.__setattr__(self, "elements", elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.elements)) - 1

    def index(self, label: str) -> int:
        try:
            return self.elements.index(label)
        except ValueError as e:
            raise GroundSetMismatch(f"기저 집합에 없는 원소: {label}") from e

    def label(self, i: int) -> str:
        return self.elements[i]

    def mask_of(self, labels: Iterable[str]) -> int:
        mask = 0
        for label in labels:
            mask |= 1 << self.index(label)
        return mask

    def labels_of(self, mask: int) -> List[str]:
        return [e for i, e in enumerate(self.elements) if mask >> i & 1]

    def render(self, mask: int) -> str:
        return "{" + ", ".join(self.labels_of(mask)) + "}"


@dataclass(frozen=True)
class GroundMap:
    """기저 집합 사이의 사상 f: X -> Y"""
    source: GroundSet
    target: GroundSet
    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        if len(images) != len(self.source):
            raise GroundSetMismatch("사상이 정의역 전체에서 정의되어야 합니다")
        if any(not 0 <= y < len(self.target) for y in images):
            raise GroundSetMismatch("사상의 값이 공역을 벗어납니다")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, ground: GroundSet) -> "GroundMap":
        return cls(ground, ground, tuple(range(len(ground))))

    @classmethod
    def from_labels(cls, source: GroundSet, target: GroundSet, mapping: dict) -> "GroundMap":
        return cls(source, target, tuple(target.index(mapping[x]) for x in source))

    def __call__(self, x: int) -> int:
        return self.images[x]

    def image_mask(self, mask: int) -> int:
        out = 0
        for x, y in enumerate(self.images):
            if mask >> x & 1:
                out |= 1 << y
        return out

    def preimage_mask(self, mask: int) -> int:
        out = 0
        for x, y in enumerate(self.images):
            if mask >> y & 1:
                out |= 1 << x
        return out

    @property
    def is_injective(self) -> bool:
        return len(set(self.images)) == len(self.images)

    @property
    def is_surjective(self) -> bool:
        return set(self.images) == set(range(len(self.target)))


@dataclass(frozen=True)
class PartialGradualElement(Generic[T]):
    """부분 점진적 원소 ε: dom(ε) ⊆ (0,1] -> X (정의되지 않은 레벨은 None)"""
    values: StepMap[Optional[T]]

    def __post_init__(self):
        # 정의역 검증 (1 포함, inf-compact)
        self.domain

    @classmethod
    def from_pieces(cls, pieces: Iterable[Tuple[IntervalPiece, T]]) -> "PartialGradualElement[T]":
        return cls(StepMap.from_pieces(pieces, default=None))

    @property
    def domain(self) -> LevelSet:
        return LevelSet(self.values.map(lambda v: v is not None))

    def __call__(self, alpha: RationalLike) -> Optional[T]:
        return self.values(alpha)


@dataclass(frozen=True)
class GradualElement(Generic[T]):
    """전 점진적 원소 ε: (0,1] -> X"""
    map: StepMap[T]

    def __post_init__(self):
        if any(v is None for v in self.map.values):
            raise GradualError("전 점진적 원소는 모든 레벨에서 정의되어야 합니다")

    @classmethod
    def constant(cls, value: T) -> "GradualElement[T]":
        return cls(StepMap.constant(value))

    @classmethod
    def from_pieces(cls, pieces: Iterable[Tuple[IntervalPiece, T]]) -> "GradualElement[T]":
        return cls(StepMap.from_pieces(pieces))

    def as_partial(self) -> PartialGradualElement[T]:
        return PartialGradualElement(self.map)

    def __call__(self, alpha: RationalLike) -> T:
        return self.map(alpha)


AnyElement = Union[GradualElement, PartialGradualElement]

# 부분 원소 R 관계는 항상 참이 되므로 연산으로 제공하지 않는다.


def optional_map(element: AnyElement) -> StepMap:
    if isinstance(element, GradualElement):
        return element.map
    return element.values


def extend(element: PartialGradualElement[T]) -> GradualElement[T]:
    """ε̄(α) = ε(Min([α,1] ∩ dom(ε)))"""
    values = list(element.values.values)
    above = values[-1]
    for j in range(len(values) - 1, -1, -1):
        if values[j] is None:
            values[j] = above
        else:
            above = values[j]
    return GradualElement(StepMap(element.values.points, tuple(values)))


def r_alpha_equal(first: AnyElement, second: AnyElement, alpha: RationalLike) -> bool:
    """ε1 R_α ε2: [α,1] ∩ dom(ε1) ∩ dom(ε2)에서 일치"""
    agree = optional_map(first).zip_with(
        optional_map(second), lambda a, b: a is None or b is None or a == b
    )
    return all_from(agree, alpha)


def pointwise_op(first: AnyElement, second: AnyElement, op: Callable[[Any, Any], Any]) -> AnyElement:
    """(ε1 * ε2)(α) = ε1(α) * ε2(α). 부분 원소가 있으면 정의역은 교집합"""
    if isinstance(first, GradualElement) and isinstance(second, GradualElement):
        return GradualElement(first.map.zip_with(second.map, op))
    combined = optional_map(first).zip_with(
        optional_map(second), lambda a, b: None if a is None or b is None else op(a, b)
    )
    return PartialGradualElement(combined)


def extension_homomorphism_gap(
    first: PartialGradualElement, second: PartialGradualElement, op: Callable[[Any, Any], Any]
) -> bool:
    """extend(ε1 * ε2) != extend(ε1) * extend(ε2) 인지"""
    return extend(pointwise_op(first, second, op)) != pointwise_op(extend(first), extend(second), op)


def restrict_to(element: GradualElement[T], alpha: RationalLike) -> PartialGradualElement[T]:
    """[α,1]로의 제한 (R_α 동치류의 표준 대표)"""
    return PartialGradualElement(mask_below(element.map, alpha, None))


# 유한군 위의 점진적 원소 군 𝒢


def group_product(first: GradualElement[int], second: GradualElement[int], group: "FiniteGroup") -> GradualElement[int]:
    return pointwise_op(first, second, group.multiply)


def group_inverse(element: GradualElement[int], group: "FiniteGroup") -> GradualElement[int]:
    return GradualElement(element.map.map(group.inverse))


def group_identity(group: "FiniteGroup") -> GradualElement[int]:
    return GradualElement.constant(group.identity)


def in_filtration_subgroup(element: GradualElement[int], alpha: RationalLike, group: "FiniteGroup") -> bool:
    """ε ∈ 𝒢_α ⟺ [α,1]에서 ε = e"""
    return all_from(element.map.map(lambda g: g == group.identity), alpha)
