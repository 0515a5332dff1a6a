"""
함자 모듈

점진적 집합/군을 유한 레벨 그리드 위의 반변 함자(방향 시스템)로 다룹니다.
그리드 경계점 b_0 < ... < b_{k-1} = 1 은 StepMap과 같은 2k개의 원자 노드
(0,b_0), {b_0}, (b_0,b_1), ..., {1} 로 펼쳐지고, 노드 n+1 -> n 의 전이 사상을 저장합니다.
열린 원자 노드는 엄격 부분집합의 값을 담기 위해 필요합니다.
"""
from __future__ import annotations

import bisect
import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from app.core.elements import GroundSet
from app.core.errors import (
    GradualError,
    GridTooCoarse,
    NotACocone,
    NotDecreasing,
    NotFunctorial,
    NotRepresentable,
)
from app.core.gradual_groups import GradualSubgroup
from app.core.groups import FiniteGroup, GroupHom, subgroup_as_group
from app.core.levels import (
    ONE,
    ZERO,
    IntervalPiece,
    RationalLike,
    StepMap,
    as_level,
    format_rational,
    representatives,
)
from app.core.subsets import GradualSubset, has_property_infF

logger = logging.getLogger(__name__)

Transition = Tuple[int, ...]


@dataclass(frozen=True)
class LevelGrid:
    """1로 끝나는 엄격 증가 레벨 목록"""
    levels: Tuple[Fraction, ...]

    def __post_init__(self):
        levels = tuple(as_level(a) for a in self.levels)
        if not levels or levels[-1] != ONE:
            raise GradualError("그리드의 마지막 레벨은 1이어야 합니다")
        if any(a >= b for a, b in zip(levels, levels[1:])):
            raise GradualError("그리드 레벨은 엄격히 증가해야 합니다")
        object.__setattr__(self, "levels", levels)

    @classmethod
    def of(cls, levels: Iterable[RationalLike]) -> "LevelGrid":
        return cls(tuple(sorted({as_level(a) for a in levels} | {ONE})))

    @property
    def size(self) -> int:
        """노드 수 (2k)"""
        return 2 * len(self.levels)

    @property
    def top(self) -> int:
        return self.size - 1

    def nodes(self) -> List[IntervalPiece]:
        out = []
        previous = ZERO
        for p in self.levels:
            out.extend([IntervalPiece(previous, p, False, False), IntervalPiece.point(p)])
            previous = p
        return out

    def representatives(self) -> List[Fraction]:
        return list(representatives(self.levels))

    def node_of(self, alpha: RationalLike) -> int:
        alpha = as_level(alpha)
        i = bisect.bisect_left(self.levels, alpha)
        return 2 * i + 1 if self.levels[i] == alpha else 2 * i

    def is_point(self, node: int) -> bool:
        return node % 2 == 1

    def covers(self, breakpoints: Iterable[Fraction]) -> bool:
        return set(breakpoints) <= set(self.levels)

    def describe(self, node: int) -> str:
        return str(self.nodes()[node])


def interior_shift(grid: LevelGrid, node: int) -> int:
    """F^d(node) = F(shift(node)): 1 미만 점 노드는 바로 위 열린 노드"""
    return node + 1 if grid.is_point(node) and node < grid.top else node


@dataclass(frozen=True)
class DirectedSetSystem:
    """노드별 유한 집합과 전이 사상 F(n+1) -> F(n)

    shortcuts는 임의의 i < j 에 대해 저장된 합성 사상 F(j) -> F(i) 로,
    validate_system이 체인 합성과 비교합니다.
    """
    grid: LevelGrid
    objects: Tuple[Tuple[str, ...], ...]
    transitions: Tuple[Transition, ...]
    shortcuts: Tuple[Tuple[int, int, Transition], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(tuple(str(x) for x in o) for o in self.objects))
        object.__setattr__(self, "transitions", tuple(tuple(t) for t in self.transitions))
        object.__setattr__(
            self, "shortcuts", tuple((i, j, tuple(t)) for i, j, t in self.shortcuts)
        )

    @classmethod
    def from_levels(
        cls,
        grid: LevelGrid,
        objects: Sequence[Sequence[str]],
        transitions: Sequence[Sequence[int]],
    ) -> "DirectedSetSystem":
        """경계점마다 객체 하나, 인접 경계점 사이 전이 하나로 주어진 시스템

        열린 원자 (b_{i-1}, b_i) 는 F(b_i) 와 같고 항등 전이를 가집니다.
        """
        if len(objects) != len(grid.levels) or len(transitions) != len(grid.levels) - 1:
            raise NotFunctorial("경계점 수와 객체/전이 수가 맞지 않습니다")
        node_objects = []
        node_transitions = []
        for i, obj in enumerate(objects):
            node_objects.extend([tuple(obj), tuple(obj)])
            if i > 0:
                node_transitions.append(tuple(transitions[i - 1]))
            node_transitions.append(tuple(range(len(obj))))
        return cls(grid, tuple(node_objects), tuple(node_transitions))

    @property
    def size(self) -> int:
        return len(self.objects)


@dataclass(frozen=True)
class SystemCheck:
    valid: bool
    message: str = ""


def _compose(outer: Transition, inner: Transition) -> Transition:
    """outer ∘ inner"""
    return tuple(outer[y] for y in inner)


def transition(system: DirectedSetSystem, low: int, high: int) -> Transition:
    """F(f): F(high) -> F(low) (low ≤ high), 체인 합성"""
    current = tuple(range(len(system.objects[high])))
    for n in range(high - 1, low - 1, -1):
        current = _compose(system.transitions[n], current)
    return current


def validate_system(system: DirectedSetSystem) -> SystemCheck:
    """노드/전이 수, 전이 값 범위, 저장된 합성 사상의 일치 여부"""
    if len(system.objects) != system.grid.size:
        return SystemCheck(False, f"노드 수 {system.grid.size}와 객체 수 {len(system.objects)}가 다릅니다")
    if len(system.transitions) != system.grid.size - 1:
        return SystemCheck(False, "전이 사상 수가 노드 수 - 1이 아닙니다")
    for n, t in enumerate(system.transitions):
        upper, lower = system.objects[n + 1], system.objects[n]
        if len(t) != len(upper) or any(not 0 <= y < len(lower) for y in t):
            return SystemCheck(False, f"전이 {n + 1} -> {n}가 잘못된 사상입니다")
    for low, high, stored in system.shortcuts:
        if not 0 <= low <= high < system.size:
            return SystemCheck(False, f"합성 사상 {high} -> {low}의 노드가 범위를 벗어납니다")
        if transition(system, low, high) != stored:
            return SystemCheck(
                False,
                f"사각형 위반: {system.grid.describe(high)} -> {system.grid.describe(low)} "
                "저장된 합성 사상이 체인 합성과 다릅니다",
            )
    return SystemCheck(True)


def require_valid(system: DirectedSetSystem) -> None:
    check = validate_system(system)
    if not check.valid:
        raise NotFunctorial(check.message)


class UnionFind:
    """경로 압축 + 크기 합병"""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]


@dataclass(frozen=True)
class ColimitResult:
    """D = dlim F 와 표준 사상 q_n: F(n) -> D"""
    carrier: Tuple[str, ...]
    canonical_maps: Tuple[Transition, ...]
    group: Optional[FiniteGroup] = None

    def image(self, node: int) -> int:
        mask = 0
        for c in self.canonical_maps[node]:
            mask |= 1 << c
        return mask


def _check_cocone(system: DirectedSetSystem, maps: Sequence[Transition], target_size: int) -> None:
    for n, m in enumerate(maps):
        if len(m) != len(system.objects[n]):
            raise NotACocone(f"노드 {n}의 사상 크기가 다릅니다")
        if any(not 0 <= c < target_size for c in m):
            raise NotACocone("공원뿔 사상이 대상 밖으로 나갑니다")
    for n, t in enumerate(system.transitions):
        if _compose(maps[n], t) != tuple(maps[n + 1]):
            raise NotACocone(
                f"q({system.grid.describe(n + 1)}) != q({system.grid.describe(n)}) ∘ F(f)"
            )


def colimit_set(system: DirectedSetSystem) -> ColimitResult:
    """서로소 합집합을 전이로 생성된 동치 관계로 나눈 몫"""
    require_valid(system)
    offsets = []
    total = 0
    for obj in system.objects:
        offsets.append(total)
        total += len(obj)
    uf = UnionFind(total)
    for n, t in enumerate(system.transitions):
        for a, b in enumerate(t):
            uf.union(offsets[n + 1] + a, offsets[n] + b)
    carrier_of: Dict[int, int] = {}
    labels: List[str] = []
    # 전순서 그리드에서는 모든 동치류가 가장 아래 노드의 원소를 가짐
    for n, obj in enumerate(system.objects):
        for a, label in enumerate(obj):
            root = uf.find(offsets[n] + a)
            if root not in carrier_of:
                carrier_of[root] = len(labels)
                labels.append(label if n == 0 else f"{label}@{n}")
    maps = tuple(
        tuple(carrier_of[uf.find(offsets[n] + a)] for a in range(len(obj)))
        for n, obj in enumerate(system.objects)
    )
    _check_cocone(system, maps, len(labels))
    logger.debug(f"집합 극한 계산: 노드 {system.size}개, 원소 {len(labels)}개")
    return ColimitResult(tuple(labels), maps)


def mediate(
    system: DirectedSetSystem,
    colimit: ColimitResult,
    target: Sequence[str],
    cocone: Sequence[Transition],
) -> Transition:
    """공원뿔 (T, h_n) 에 대해 h_n = u ∘ q_n 인 유일한 u: D -> T"""
    cocone = tuple(tuple(m) for m in cocone)
    if len(cocone) != system.size:
        raise NotACocone("공원뿔 사상 수가 노드 수와 다릅니다")
    _check_cocone(system, cocone, len(target))
    u: Dict[int, int] = {}
    for n, q in enumerate(colimit.canonical_maps):
        for a, c in enumerate(q):
            value = cocone[n][a]
            if u.setdefault(c, value) != value:
                raise NotACocone(f"극한 원소 {colimit.carrier[c]}의 상이 유일하지 않습니다")
    if len(u) != len(colimit.carrier):
        raise NotACocone("극한의 일부 원소가 어떤 노드의 상도 아닙니다")
    return tuple(u[c] for c in range(len(colimit.carrier)))


def is_decreasing_system(system: DirectedSetSystem) -> bool:
    """모든 전이 사상이 단사"""
    return all(len(set(t)) == len(t) for t in system.transitions)


def _require_decreasing(system: DirectedSetSystem) -> None:
    require_valid(system)
    if not is_decreasing_system(system):
        raise NotDecreasing("전이 사상이 단사가 아닌 시스템입니다")


def interior_d_system(system: DirectedSetSystem) -> DirectedSetSystem:
    """F^d(n) = F(shift(n)), 전이는 F(shift(n+1)) -> F(shift(n))"""
    _require_decreasing(system)
    grid = system.grid
    shift = [interior_shift(grid, n) for n in range(system.size)]
    objects = tuple(system.objects[shift[n]] for n in range(system.size))
    transitions = tuple(
        transition(system, shift[n], shift[n + 1]) for n in range(system.size - 1)
    )
    return DirectedSetSystem(grid, objects, transitions)


@dataclass(frozen=True)
class DirectedGroupSystem:
    """노드별 유한군과 준동형 전이 F(n+1) -> F(n)"""
    grid: LevelGrid
    groups: Tuple[FiniteGroup, ...]
    transitions: Tuple[GroupHom, ...]

    def __post_init__(self):
        if len(self.groups) != self.grid.size or len(self.transitions) != self.grid.size - 1:
            raise NotFunctorial("노드 수와 군/준동형 수가 맞지 않습니다")
        for n, hom in enumerate(self.transitions):
            if hom.source != self.groups[n + 1] or hom.target != self.groups[n]:
                raise NotFunctorial(f"전이 {n + 1} -> {n}의 정의역/공역이 노드 군과 다릅니다")

    def as_set_system(self) -> DirectedSetSystem:
        return DirectedSetSystem(
            self.grid,
            tuple(g.labels for g in self.groups),
            tuple(h.images for h in self.transitions),
        )


def group_transition(system: DirectedGroupSystem, low: int, high: int) -> GroupHom:
    current = GroupHom.identity(system.groups[high])
    for n in range(high - 1, low - 1, -1):
        current = system.transitions[n].compose(current)
    return current


def colimit_group(system: DirectedGroupSystem) -> ColimitResult:
    """전순서 그리드: D = F(가장 아래 노드), q_n = 아래 노드로의 합성"""
    bottom = system.groups[0]
    homs = [group_transition(system, 0, n) for n in range(len(system.groups))]
    maps = tuple(h.images for h in homs)
    _check_cocone(system.as_set_system(), maps, bottom.order)
    logger.debug(f"군 극한 계산: 위수 {bottom.order}")
    return ColimitResult(bottom.labels, maps, group=bottom)


def interior_d_group_system(system: DirectedGroupSystem) -> DirectedGroupSystem:
    if not all(h.is_injective for h in system.transitions):
        raise NotDecreasing("전이 준동형이 단사가 아닌 시스템입니다")
    grid = system.grid
    shift = [interior_shift(grid, n) for n in range(len(system.groups))]
    return DirectedGroupSystem(
        grid,
        tuple(system.groups[s] for s in shift),
        tuple(group_transition(system, shift[n], shift[n + 1]) for n in range(len(shift) - 1)),
    )


@dataclass(frozen=True)
class NaturalTransformation:
    """θ_n: F1(n) -> F2(n)"""
    source: DirectedSetSystem
    target: DirectedSetSystem
    maps: Tuple[Transition, ...]

    def __post_init__(self):
        object.__setattr__(self, "maps", tuple(tuple(m) for m in self.maps))
        if self.source.grid != self.target.grid:
            raise NotFunctorial("자연 변환의 두 시스템은 같은 그리드 위에 있어야 합니다")


def validate_naturality(theta: NaturalTransformation) -> SystemCheck:
    """F2(f) ∘ θ_{n+1} = θ_n ∘ F1(f)"""
    source, target = theta.source, theta.target
    if len(theta.maps) != source.size:
        return SystemCheck(False, "자연 변환 사상 수가 노드 수와 다릅니다")
    for n, m in enumerate(theta.maps):
        if len(m) != len(source.objects[n]) or any(
            not 0 <= y < len(target.objects[n]) for y in m
        ):
            return SystemCheck(False, f"노드 {n}의 사상이 잘못되었습니다")
    for n in range(source.size - 1):
        left = _compose(target.transitions[n], theta.maps[n + 1])
        right = _compose(theta.maps[n], source.transitions[n])
        if left != right:
            return SystemCheck(False, f"사각형 {theta.source.grid.describe(n + 1)}이 가환하지 않습니다")
    return SystemCheck(True)


def interior_d_transformation(theta: NaturalTransformation) -> NaturalTransformation:
    """θ^d_n = θ_{shift(n)}"""
    grid = theta.source.grid
    return NaturalTransformation(
        interior_d_system(theta.source),
        interior_d_system(theta.target),
        tuple(theta.maps[interior_shift(grid, n)] for n in range(theta.source.size)),
    )


def has_property_F_system(system: DirectedSetSystem) -> bool:
    """q(F(n)) ∖ q(F^d(n)) 들이 D ∖ q(F(1)) 을 서로소로 분할하는지"""
    _require_decreasing(system)
    colimit = colimit_set(system)
    grid = system.grid
    seen = 0
    for n in range(system.size):
        diff = colimit.image(n) & ~colimit.image(interior_shift(grid, n))
        if diff & seen:
            return False
        seen |= diff
    full = (1 << len(colimit.carrier)) - 1
    return seen == full & ~colimit.image(grid.top)


def _top_profile(system: DirectedSetSystem) -> Counter:
    colimit = colimit_set(system)
    tops: Dict[int, int] = {}
    for n, q in enumerate(colimit.canonical_maps):
        for c in q:
            tops[c] = n
    return Counter(tops.values())


def systems_isomorphic(first: DirectedSetSystem, second: DirectedSetSystem) -> bool:
    """감소 시스템의 그리드 항등 동형 (극한 원소별 최상위 노드의 중복집합 비교)"""
    if first.grid != second.grid:
        return False
    _require_decreasing(first)
    _require_decreasing(second)
    return _top_profile(first) == _top_profile(second)


def is_strict_system(system: DirectedSetSystem) -> bool:
    """F^d ≅ F"""
    return systems_isomorphic(system, interior_d_system(system))


@dataclass(frozen=True)
class Obstruction:
    """비어 있지 않은 F(high) 에서 빈 F(low) 로의 전이가 필요함"""
    low: int
    high: int
    description: str


def find_obstruction(sigma: GradualSubset, grid: LevelGrid) -> Optional[Obstruction]:
    values = sigma.map.values_on(grid.levels)
    for n in range(grid.size - 1):
        if values[n + 1] and not values[n]:
            upper = grid.describe(n + 1)
            lower = grid.describe(n)
            return Obstruction(
                n,
                n + 1,
                f"σ({upper}) = {sigma.ground.render(values[n + 1])} 에서 "
                f"σ({lower}) = ∅ 로 가는 사상이 없습니다",
            )
    return None


def subset_to_system(sigma: GradualSubset, grid: LevelGrid) -> DirectedSetSystem:
    """F(n) = σ(n). 포함이면 포함 사상, 아니면 아래 값의 첫 원소로 보냄"""
    if not grid.covers(sigma.map.breakpoints):
        missing = sorted(set(sigma.map.breakpoints) - set(grid.levels))
        raise GridTooCoarse(
            f"그리드에 경계점이 빠져 있습니다: {[format_rational(b) for b in missing]}"
        )
    obstruction = find_obstruction(sigma, grid)
    if obstruction is not None:
        raise NotRepresentable(obstruction.description)
    values = sigma.map.values_on(grid.levels)
    objects = tuple(tuple(sigma.ground.labels_of(m)) for m in values)
    transitions = []
    for n in range(grid.size - 1):
        lower = objects[n]
        position = {label: i for i, label in enumerate(lower)}
        # 0 번 대체는 σ(n+1) ⊄ σ(n) 일 때만 쓰이며, 선형 순서 위에서는 어떤 사상을 골라도 함자가 됨
        transitions.append(tuple(position.get(label, 0) for label in objects[n + 1]))
    return DirectedSetSystem(grid, objects, tuple(transitions))


def system_to_subset(system: DirectedSetSystem, ground: Optional[GroundSet] = None) -> GradualSubset:
    """σ(n) = q_n(F(n)) ⊆ D (ground가 주어지면 극한 원소 레이블로 대응)"""
    _require_decreasing(system)
    colimit = colimit_set(system)
    if ground is None:
        ground = GroundSet(colimit.carrier)
    position = [ground.index(label) for label in colimit.carrier]
    values = []
    for q in colimit.canonical_maps:
        mask = 0
        for c in q:
            mask |= 1 << position[c]
        values.append(mask)
    return GradualSubset(ground, StepMap(system.grid.levels, tuple(values)))


def subgroup_to_system(sigma: GradualSubgroup, grid: LevelGrid) -> DirectedGroupSystem:
    """감소 점진적 부분군의 부분군 사슬과 포함 준동형"""
    if not grid.covers(sigma.map.breakpoints):
        raise GridTooCoarse("그리드에 점진적 부분군의 경계점이 빠져 있습니다")
    masks = sigma.map.values_on(grid.levels)
    if any(upper & ~lower for lower, upper in zip(masks, masks[1:])):
        raise NotDecreasing("감소하지 않는 점진적 부분군입니다")
    parts = [subgroup_as_group(sigma.group, m) for m in masks]
    groups = tuple(p[0] for p in parts)
    transitions = []
    for n in range(len(parts) - 1):
        lower_group, lower_incl = parts[n]
        upper_group, upper_incl = parts[n + 1]
        position = {g: i for i, g in enumerate(lower_incl.images)}
        transitions.append(
            GroupHom(upper_group, lower_group, tuple(position[g] for g in upper_incl.images))
        )
    return DirectedGroupSystem(grid, groups, tuple(transitions))


def has_property_infF_system(system: DirectedSetSystem) -> bool:
    """극한 속의 부분집합으로서 (inf-F)"""
    sigma = system_to_subset(system)
    return has_property_infF(sigma)


@dataclass(frozen=True)
class RepresentabilityReport:
    sigma: GradualSubset
    grid: LevelGrid
    obstruction: Optional[Obstruction]
    checks: Dict[str, bool] = field(default_factory=dict)

    def lines(self) -> List[str]:
        out = [f"σ: {self.sigma.describe()}"]
        if self.obstruction is not None:
            out.append(f"장애: {self.obstruction.description}")
        for name, ok in self.checks.items():
            out.append(f"{name}: {'ok' if ok else 'FAIL'}")
        return out


def non_representable_witness() -> RepresentabilityReport:
    """σ(1/2) = X, 그 외 ∅ (X = {a}) 는 어떤 방향 시스템으로도 표현되지 않음"""
    ground = GroundSet(("a",))
    half = Fraction(1, 2)
    sigma = GradualSubset(ground, StepMap((half, ONE), (0, 1, 0, 0)))
    grid = LevelGrid.of([half])
    obstruction = find_obstruction(sigma, grid)
    finer = LevelGrid.of([Fraction(1, 4), half, Fraction(3, 4)])
    decreasing = GradualSubset(ground, StepMap((half, ONE), (1, 1, 0, 0)))
    increasing = GradualSubset(
        GroundSet(("a", "b")), StepMap((half, ONE), (1, 1, 3, 3))
    )
    checks = {
        "obstruction on {1/2, 1}": obstruction is not None,
        "obstruction on a finer grid": find_obstruction(sigma, finer) is not None,
        "decreasing subset has none": find_obstruction(decreasing, grid) is None,
        "decreasing subset is representable on a finer grid": _representable(decreasing, finer),
        "larger upper values are representable": _representable(increasing, grid),
    }
    logger.info(f"비표현 반례 점검: {checks}")
    return RepresentabilityReport(sigma, grid, obstruction, checks)


def _representable(sigma: GradualSubset, grid: LevelGrid) -> bool:
    try:
        require_valid(subset_to_system(sigma, grid))
    except NotRepresentable:
        return False
    return True
