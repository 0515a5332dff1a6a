"""
유한군 모듈

케일리 표로 주어지는 유한군, 부분군 생성, 정규성, 몫군, 준동형 사상.
대칭군과 이면체군은 sympy.combinatorics의 순열군에서 케일리 표를 만듭니다.
부분집합은 원소 인덱스의 비트마스크(int)입니다.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterable, List, Sequence, Tuple, Union

from sympy.combinatorics.named_groups import DihedralGroup, SymmetricGroup
from sympy.combinatorics.perm_groups import PermutationGroup
from sympy.combinatorics.permutations import Permutation

from app.config import get_settings
from app.core.elements import GroundSet
from app.core.errors import (
    GradualError,
    GroupTooLarge,
    NoIdentity,
    NoInverse,
    NotAHomomorphism,
    NotAssociative,
    NotNormal,
)

logger = logging.getLogger(__name__)


def members_of(mask: int) -> List[int]:
    out = []
    x = 0
    while mask:
        if mask & 1:
            out.append(x)
        mask >>= 1
        x += 1
    return out


def mask_of(elements: Iterable[int]) -> int:
    mask = 0
    for x in elements:
        mask |= 1 << x
    return mask


@dataclass(frozen=True)
class FiniteGroup:
    """케일리 표로 주어지는 유한군 (원소 = 인덱스 0..n-1)"""
    labels: Tuple[str, ...]
    table: Tuple[Tuple[int, ...], ...]
    identity: int
    inverses: Tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.labels)

    @property
    def ground(self) -> GroundSet:
        return GroundSet(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    @property
    def identity_mask(self) -> int:
        return 1 << self.identity

    def multiply(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        return self.inverses[a]

    def label(self, a: int) -> str:
        return self.labels[a]

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError as e:
            raise GradualError(f"군에 없는 원소: {label}") from e

    def mask(self, labels: Iterable[str]) -> int:
        return mask_of(self.index(label) for label in labels)

    def render(self, mask: int) -> str:
        return "{" + ", ".join(self.labels[x] for x in members_of(mask)) + "}"

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.multiply(x, a)
            k += 1
        return k

    @property
    def is_abelian(self) -> bool:
        n = self.order
        return all(self.table[a][b] == self.table[b][a] for a in range(n) for b in range(a + 1, n))


def _check_order(n: int) -> None:
    limit = get_settings().max_group_order
    if n > limit:
        raise GroupTooLarge(f"군의 위수 {n}이 허용 한도 {limit}를 넘습니다")


def _build(labels: Sequence[str], table: Sequence[Sequence[int]], check_associative: bool) -> FiniteGroup:
    n = len(labels)
    _check_order(n)
    if n == 0 or len(set(labels)) != n:
        raise GradualError("원소 레이블이 비었거나 중복됩니다")
    rows = tuple(tuple(int(v) for v in row) for row in table)
    if len(rows) != n or any(len(row) != n for row in rows):
        raise GradualError("케일리 표는 n×n이어야 합니다")
    if any(not 0 <= v < n for row in rows for v in row):
        raise GradualError("케일리 표 값이 원소 범위를 벗어납니다")
    identity = next(
        (e for e in range(n) if all(rows[e][x] == x and rows[x][e] == x for x in range(n))),
        None,
    )
    if identity is None:
        raise NoIdentity("항등원이 없습니다")
    inverses = []
    for a in range(n):
        inv = next((b for b in range(n) if rows[a][b] == identity and rows[b][a] == identity), None)
        if inv is None:
            raise NoInverse(f"원소 {labels[a]}의 역원이 없습니다")
        inverses.append(inv)
    if check_associative:
        for a in range(n):
            for b in range(n):
                ab = rows[a][b]
                for c in range(n):
                    if rows[ab][c] != rows[a][rows[b][c]]:
                        raise NotAssociative(
                            f"결합법칙 위반: ({labels[a]}{labels[b]}){labels[c]} != "
                            f"{labels[a]}({labels[b]}{labels[c]})"
                        )
    return FiniteGroup(tuple(labels), rows, identity, tuple(inverses))


def from_cayley(table: Sequence[Sequence[Union[int, str]]], labels: Sequence[str]) -> FiniteGroup:
    """케일리 표(레이블 또는 인덱스)로부터 검증된 군 생성"""
    labels = [str(label) for label in labels]
    position = {label: i for i, label in enumerate(labels)}
    rows = []
    for row in table:
        converted = []
        for v in row:
            if isinstance(v, str):
                if v not in position:
                    raise GradualError(f"케일리 표에 알 수 없는 원소: {v}")
                converted.append(position[v])
            else:
                converted.append(int(v))
        rows.append(converted)
    group = _build(labels, rows, check_associative=True)
    logger.debug(f"케일리 표 군 생성: 위수 {group.order}")
    return group


@lru_cache(maxsize=None)
def cyclic(n: int) -> FiniteGroup:
    """Z_n (레이블 "0".."n-1")"""
    if n < 1:
        raise GradualError("n은 1 이상이어야 합니다")
    labels = [str(k) for k in range(n)]
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return _build(labels, table, check_associative=False)


def _cycle_label(perm: Permutation) -> str:
    if perm.is_Identity:
        return "e"
    sep = "," if perm.size >= 10 else ""
    return "".join("(" + sep.join(str(k + 1) for k in cycle) + ")" for cycle in perm.cyclic_form)


def _from_permutation_group(group: PermutationGroup) -> FiniteGroup:
    _check_order(int(group.order()))
    perms = sorted(group.generate(), key=lambda p: p.array_form)
    position = {tuple(p.array_form): i for i, p in enumerate(perms)}
    # sympy의 곱 p*q는 p를 먼저 적용
    table = [[position[tuple((p * q).array_form)] for q in perms] for p in perms]
    return _build([_cycle_label(p) for p in perms], table, check_associative=False)


@lru_cache(maxsize=None)
def symmetric(n: int) -> FiniteGroup:
    """S_n (n ≤ max_symmetric_degree), 원소 레이블은 순환 표기"""
    if not 1 <= n <= get_settings().max_symmetric_degree:
        raise GroupTooLarge(f"대칭군 차수 {n}은 지원 범위를 벗어납니다")
    return _from_permutation_group(SymmetricGroup(n))


@lru_cache(maxsize=None)
def dihedral(n: int) -> FiniteGroup:
    """위수 2n의 이면체군 D_n"""
    if n < 1:
        raise GradualError("n은 1 이상이어야 합니다")
    return _from_permutation_group(DihedralGroup(n))


def direct_product(first: FiniteGroup, second: FiniteGroup) -> FiniteGroup:
    m = second.order
    labels = [f"({a},{b})" for a in first.labels for b in second.labels]
    table = [
        [
            first.multiply(i // m, j // m) * m + second.multiply(i % m, j % m)
            for j in range(first.order * m)
        ]
        for i in range(first.order * m)
    ]
    return _build(labels, table, check_associative=False)


def preset(name: str) -> FiniteGroup:
    """"cyclic:n", "symmetric:n", "dihedral:n" 형식의 이름으로 군 생성

    "cyclic:2 x cyclic:3"처럼 " x "로 이으면 직접곱입니다.
    """
    if " x " in name:
        parts = [preset(part.strip()) for part in name.split(" x ")]
        result = parts[0]
        for part in parts[1:]:
            result = direct_product(result, part)
        return result
    kind, _, arg = name.strip().partition(":")
    builders = {"cyclic": cyclic, "symmetric": symmetric, "dihedral": dihedral}
    if kind not in builders or not arg.isdigit():
        raise GradualError(f"알 수 없는 군 이름: {name}")
    return builders[kind](int(arg))


# 부분집합 연산


def setwise_product(group: FiniteGroup, first: int, second: int) -> int:
    """S1 * S2 = {s1 s2}"""
    out = 0
    right = members_of(second)
    for a in members_of(first):
        row = group.table[a]
        for b in right:
            out |= 1 << row[b]
    return out


def setwise_inverse(group: FiniteGroup, subset: int) -> int:
    return mask_of(group.inverse(a) for a in members_of(subset))


def conjugate(group: FiniteGroup, g: int, subset: int) -> int:
    """g S g⁻¹"""
    g_inv = group.inverse(g)
    return mask_of(group.multiply(group.multiply(g, s), g_inv) for s in members_of(subset))


def subgroup_generated(group: FiniteGroup, subset: int) -> int:
    """⟨S⟩ (빈 S는 {e})"""
    generators = members_of(subset)
    found = group.identity_mask
    frontier = [group.identity]
    while frontier:
        nxt = []
        for x in frontier:
            row = group.table[x]
            for s in generators:
                y = row[s]
                if not found >> y & 1:
                    found |= 1 << y
                    nxt.append(y)
        frontier = nxt
    return found


def is_subgroup(group: FiniteGroup, subset: int) -> bool:
    if not subset & group.identity_mask:
        return False
    if setwise_inverse(group, subset) & ~subset:
        return False
    return setwise_product(group, subset, subset) & ~subset == 0


def is_normal(group: FiniteGroup, subset: int) -> bool:
    if not is_subgroup(group, subset):
        return False
    return all(conjugate(group, g, subset) == subset for g in range(group.order))


def min_generators(group: FiniteGroup, subgroup: int) -> int:
    """부분군을 생성하는 최소 원소 수"""
    elements = members_of(subgroup)
    for t in range(len(elements) + 1):
        for combo in combinations(elements, t):
            if subgroup_generated(group, mask_of(combo)) == subgroup:
                return t
    raise GradualError("부분군이 아닙니다")


@dataclass(frozen=True)
class GroupHom:
    """군 준동형 사상 (생성 시 전수 검증)"""
    source: FiniteGroup
    target: FiniteGroup
    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if len(images) != self.source.order or any(not 0 <= y < self.target.order for y in images):
            raise NotAHomomorphism("사상의 크기 또는 값 범위가 잘못되었습니다")
        n = self.source.order
        for a in range(n):
            for b in range(n):
                if images[self.source.multiply(a, b)] != self.target.multiply(images[a], images[b]):
                    raise NotAHomomorphism(
                        f"f({self.source.label(a)}{self.source.label(b)}) != "
                        f"f({self.source.label(a)})f({self.source.label(b)})"
                    )

    @classmethod
    def identity(cls, group: FiniteGroup) -> "GroupHom":
        return cls(group, group, tuple(range(group.order)))

    def __call__(self, a: int) -> int:
        return self.images[a]

    def kernel(self) -> int:
        return mask_of(a for a, y in enumerate(self.images) if y == self.target.identity)

    def image(self, subset: int) -> int:
        return mask_of(self.images[a] for a in members_of(subset))

    def preimage(self, subset: int) -> int:
        return mask_of(a for a, y in enumerate(self.images) if subset >> y & 1)

    def compose(self, inner: "GroupHom") -> "GroupHom":
        """self ∘ inner"""
        if inner.target != self.source:
            raise NotAHomomorphism("합성할 수 없는 준동형 사상입니다")
        return GroupHom(inner.source, self.target, tuple(self.images[y] for y in inner.images))

    @property
    def is_injective(self) -> bool:
        return len(set(self.images)) == len(self.images)

    @property
    def is_surjective(self) -> bool:
        return len(set(self.images)) == self.target.order


def quotient(group: FiniteGroup, normal: int) -> Tuple[FiniteGroup, GroupHom]:
    """G/N 과 사영 p: G -> G/N"""
    if not is_normal(group, normal):
        raise NotNormal(f"{group.render(normal)}은 정규 부분군이 아닙니다")
    coset_of: Dict[int, int] = {}
    representatives: List[int] = []
    for g in range(group.order):
        if g in coset_of:
            continue
        index = len(representatives)
        representatives.append(g)
        for n in members_of(normal):
            coset_of[group.multiply(g, n)] = index
    labels = [f"[{group.label(r)}]" for r in representatives]
    table = [
        [coset_of[group.multiply(a, b)] for b in representatives] for a in representatives
    ]
    factor = _build(labels, table, check_associative=False)
    projection = GroupHom(group, factor, tuple(coset_of[g] for g in range(group.order)))
    return factor, projection


def subgroup_as_group(group: FiniteGroup, subgroup: int) -> Tuple[FiniteGroup, GroupHom]:
    """부분군을 독립된 군으로, 포함 사상과 함께"""
    if not is_subgroup(group, subgroup):
        raise GradualError(f"{group.render(subgroup)}은 부분군이 아닙니다")
    elements = members_of(subgroup)
    position = {g: i for i, g in enumerate(elements)}
    labels = [group.label(g) for g in elements]
    table = [[position[group.multiply(a, b)] for b in elements] for a in elements]
    sub = _build(labels, table, check_associative=False)
    return sub, GroupHom(sub, group, tuple(elements))


def order_profile(group: FiniteGroup) -> Tuple[int, ...]:
    """원소 위수의 정렬된 목록"""
    return tuple(sorted(group.element_order(a) for a in range(group.order)))
