"""
점진적 대수 예외 모듈

코어 연산이 입력 또는 성질 위반을 알릴 때 사용하는 예외 계층입니다.
CLI는 GradualError를 종료 코드 2로, API는 HTTP 422로 변환합니다.
"""
from typing import Any, Optional, Tuple


class GradualError(ValueError):
    """점진적 대수 오류 기본 클래스"""

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.details = details


# 레벨 / 구간
class GradeOutOfRange(GradualError):
    """등급 또는 레벨이 허용 범위를 벗어남"""


class NotInfCompact(GradualError):
    """inf-compact가 아닌 레벨 집합"""


class MissingOne(GradualError):
    """레벨 1을 포함하지 않는 집합"""


class Overlap(GradualError):
    """구간 조각이 겹침"""


class NotAPartition(GradualError):
    """구간 조각이 (0,1]을 빈틈없이 덮지 않음"""


class EmptyFamily(GradualError):
    """빈 패밀리"""


class GroundSetMismatch(GradualError):
    """서로 다른 기저 집합"""


# 점진적 부분집합 성질
class NotDecreasing(GradualError):
    """감소하지 않는 점진적 부분집합"""


class NotStrictDecreasing(GradualError):
    """엄격 감소가 아닌 점진적 부분집합"""


class PropertyFViolated(GradualError):
    """성질 (F) 위반"""

    def __init__(self, message: str, element: Optional[str] = None):
        super().__init__(message, element=element)
        self.element = element


class PropertyInfFViolated(GradualError):
    """성질 (inf-F) 위반"""

    def __init__(self, message: str, element: Optional[str] = None):
        super().__init__(message, element=element)
        self.element = element


# 군
class NotAssociative(GradualError):
    """결합법칙 위반"""


class NoIdentity(GradualError):
    """항등원 없음"""


class NoInverse(GradualError):
    """역원 없음"""


class NotASubgroup(GradualError):
    """부분군이 아닌 레벨 값"""


class NotNormal(GradualError):
    """정규 부분군이 아님"""


class NotIncluded(GradualError):
    """포함 관계 위반"""


class NotAHomomorphism(GradualError):
    """준동형 사상이 아님"""


class GroupTooLarge(GradualError):
    """허용 위수를 넘는 군"""


class EmptyLevelValue(GradualError):
    """점진적 부분군의 빈 레벨 값"""


class NotFuzzySubgroup(GradualError):
    """퍼지 부분군 부등식 위반"""

    def __init__(self, message: str, pair: Optional[Tuple[str, str]] = None):
        super().__init__(message, pair=pair)
        self.pair = pair


class LawViolated(GradualError):
    """계산된 양변이 일치하지 않음"""


# 함자 / 극한
class GridTooCoarse(GradualError):
    """그리드가 계단 함수의 경계점을 포함하지 않음"""


class NotFunctorial(GradualError):
    """전이 사상이 합성 법칙을 만족하지 않음"""


class NotACocone(GradualError):
    """공원뿔(cocone) 조건 위반"""


class NotRepresentable(GradualError):
    """방향 시스템으로 표현할 수 없는 점진적 부분집합"""
