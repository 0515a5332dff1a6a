"""
문서 변환 모듈

pydantic 문서 모델과 코어 값 사이의 변환. 출력 문서를 다시 읽으면 같은 코어 값이 됩니다.
"""
import json
from typing import Any, Dict, Union

from pydantic import TypeAdapter

from app.core.elements import GroundSet
from app.core.functorial import DirectedSetSystem, LevelGrid
from app.core.fuzzy import FuzzySubset
from app.core.gradual_groups import FuzzySubgroup
from app.core.groups import FiniteGroup, from_cayley, preset
from app.core.levels import IntervalPiece, format_rational
from app.core.subsets import GradualSubset
from app.models.schemas import (
    Document,
    FuzzySubgroupDocument,
    FuzzySubsetDocument,
    GradualSubsetDocument,
    GroupDocument,
    PieceModel,
    SystemDocument,
)

_ADAPTER = TypeAdapter(Document)


def parse_document(data: Union[str, bytes, Dict[str, Any]]):
    """JSON 텍스트 또는 dict를 문서 모델로 검증"""
    if isinstance(data, (str, bytes)):
        return _ADAPTER.validate_json(data)
    return _ADAPTER.validate_python(data)


def dump_document(document) -> str:
    return document.model_dump_json(indent=2)


def dump_dict(document) -> Dict[str, Any]:
    return json.loads(dump_document(document))


# 퍼지 부분집합


def to_fuzzy(document: FuzzySubsetDocument) -> FuzzySubset:
    return FuzzySubset.from_mapping(GroundSet(tuple(document.ground)), document.grades)


def from_fuzzy(mu: FuzzySubset) -> FuzzySubsetDocument:
    return FuzzySubsetDocument(
        ground=list(mu.ground.elements),
        grades={label: format_rational(g) for label, g in mu.as_mapping().items()},
    )


# 점진적 부분집합


def to_gradual(document: GradualSubsetDocument) -> GradualSubset:
    ground = GroundSet(tuple(document.ground))
    pieces = [
        (IntervalPiece(p.lo, p.hi, p.lo_closed, p.hi_closed), p.value) for p in document.pieces
    ]
    return GradualSubset.from_pieces(ground, pieces)


def from_gradual(sigma: GradualSubset) -> GradualSubsetDocument:
    pieces = [
        PieceModel(
            lo=format_rational(piece.lo),
            hi=format_rational(piece.hi),
            lo_closed=piece.lo_closed,
            hi_closed=piece.hi_closed,
            value=sigma.ground.labels_of(mask),
        )
        for piece, mask in sigma.map.pieces
    ]
    return GradualSubsetDocument(ground=list(sigma.ground.elements), pieces=pieces)


# 군


def to_group(document: GroupDocument) -> FiniteGroup:
    if document.preset is not None:
        return preset(document.preset)
    return from_cayley(document.table, document.elements)


def from_group(group: FiniteGroup) -> GroupDocument:
    return GroupDocument(
        elements=list(group.labels),
        table=[[group.label(v) for v in row] for row in group.table],
    )


def to_fuzzy_subgroup(document: FuzzySubgroupDocument) -> FuzzySubgroup:
    group = to_group(document.group)
    return FuzzySubgroup(group, FuzzySubset.from_mapping(group.ground, document.grades))


def from_fuzzy_subgroup(mu: FuzzySubgroup) -> FuzzySubgroupDocument:
    return FuzzySubgroupDocument(
        group=from_group(mu.group),
        grades={label: format_rational(g) for label, g in mu.fuzzy.as_mapping().items()},
    )


# 방향 시스템


def to_system(document: SystemDocument) -> DirectedSetSystem:
    return DirectedSetSystem(
        LevelGrid.of(document.levels),
        tuple(tuple(o) for o in document.objects),
        tuple(tuple(t) for t in document.transitions),
    )


def from_system(system: DirectedSetSystem) -> SystemDocument:
    return SystemDocument(
        levels=[format_rational(a) for a in system.grid.levels],
        objects=[list(o) for o in system.objects],
        transitions=[list(t) for t in system.transitions],
    )

