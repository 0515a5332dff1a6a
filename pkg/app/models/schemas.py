from pydantic import BaseModel, Field, model_validator
from typing import Annotated, Dict, List, Literal, Optional, Union
from enum import Enum


class ConvertDirection(str, Enum):
    TO_GRADUAL = "to-gradual"
    TO_GRADUAL_STRICT = "to-gradual-strict"
    TO_FUZZY = "to-fuzzy"
    TO_FUZZY_STRICT = "to-fuzzy-strict"
    TO_SYSTEM = "to-system"


class OperatorName(str, Enum):
    CLOSURE = "closure"
    INTERIOR = "interior"
    UNION = "union"
    INTERSECTION = "intersection"
    MODIFIED_INTERSECTION = "modified-intersection"


class GroupAction(str, Enum):
    CHECK_FUZZY_SUBGROUP = "check-fuzzy-subgroup"
    TO_GRADUAL = "to-gradual"
    PRODUCT = "product"
    NORMALITY = "normality"
    QUOTIENT = "quotient"


Rational = Annotated[
    str,
    Field(pattern=r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$", description="정확한 유리수 (\"p/q\")"),
]


# 문서 스키마
class PieceModel(BaseModel):
    lo: Rational = Field(description="구간 왼쪽 끝")
    hi: Rational = Field(description="구간 오른쪽 끝")
    lo_closed: bool = Field(default=True, description="왼쪽 끝 포함 여부")
    hi_closed: bool = Field(default=True, description="오른쪽 끝 포함 여부")
    value: List[str] = Field(default=[], description="구간 위의 값 (원소 레이블 목록)")


class FuzzySubsetDocument(BaseModel):
    kind: Literal["fuzzy-subset"] = "fuzzy-subset"
    ground: List[str] = Field(description="기저 집합 원소 레이블")
    grades: Dict[str, Rational] = Field(description="원소별 등급 (생략 시 0)")


class GradualSubsetDocument(BaseModel):
    kind: Literal["gradual-subset"] = "gradual-subset"
    ground: List[str] = Field(description="기저 집합 원소 레이블")
    pieces: List[PieceModel] = Field(description="(0,1]을 분할하는 조각 목록")


class GroupDocument(BaseModel):
    kind: Literal["group"] = "group"
    preset: Optional[str] = Field(default=None, description="cyclic:n, symmetric:n, dihedral:n (직접곱은 \" x \"로 연결)")
    elements: Optional[List[str]] = Field(default=None, description="원소 레이블")
    table: Optional[List[List[str]]] = Field(default=None, description="케일리 표 (레이블)")

    @model_validator(mode="after")
    def check_source(self) -> "GroupDocument":
        explicit = self.elements is not None and self.table is not None
        if (self.preset is not None) != explicit:
            return self
        raise ValueError("preset 또는 elements+table 중 정확히 하나가 필요합니다")


class FuzzySubgroupDocument(BaseModel):
    kind: Literal["fuzzy-subgroup"] = "fuzzy-subgroup"
    group: GroupDocument
    grades: Dict[str, Rational] = Field(description="원소별 등급 (생략 시 0)")


class SystemDocument(BaseModel):
    kind: Literal["system"] = "system"
    levels: List[Rational] = Field(description="그리드 경계점 (1 포함)")
    objects: List[List[str]] = Field(description="원자 노드별 객체 (0,b0), {b0}, …, {1}")
    transitions: List[List[int]] = Field(description="노드 n+1 -> n 전이 사상")


Document = Annotated[
    Union[
        FuzzySubsetDocument,
        GradualSubsetDocument,
        GroupDocument,
        FuzzySubgroupDocument,
        SystemDocument,
    ],
    Field(discriminator="kind"),
]


# 요청 / 응답 스키마
class ConvertRequest(BaseModel):
    document: Document
    direction: ConvertDirection


class OperatorRequest(BaseModel):
    op: OperatorName
    documents: List[GradualSubsetDocument] = Field(min_length=1)


class GroupRequest(BaseModel):
    action: GroupAction
    group: GroupDocument
    documents: List[
        Annotated[
            Union[FuzzySubsetDocument, FuzzySubgroupDocument, GradualSubsetDocument],
            Field(discriminator="kind"),
        ]
    ] = Field(
        default=[], description="군 원소 위의 퍼지/점진적 부분집합"
    )
    strict: bool = Field(default=True, description="to-gradual에서 ν̃ 사용 여부")


class ZIntRequest(BaseModel):
    x: int = 2
    window: Optional[int] = Field(default=None, ge=1)
    t_max: Optional[int] = Field(default=None, ge=1)


class EngineResponse(BaseModel):
    ok: bool = True
    lines: List[str] = []
    document: Optional[Document] = None
