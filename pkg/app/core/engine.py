"""
CLI/API 공용 명령 실행기

파싱된 문서와 명령 이름을 받아 코어 연산(변환, 연산자, 군 명령, 데모)을 실행하고
결과 문서와 요약 라인을 EngineResponse로 돌려줍니다.
"""
from typing import List, Optional, Sequence

from app.config import get_settings
from app.core.errors import GradualError
from app.core.functorial import LevelGrid, subset_to_system, system_to_subset
from app.core.fuzzy import nu, nu_tilde, upsilon, upsilon_tilde
from app.core.gradual_groups import (
    FuzzySubgroup,
    GradualSubgroup,
    is_normal_fuzzy,
    is_normal_gradual,
    nu_group,
    nu_tilde_group,
    normalize_mu1,
    product_report,
    quotient_gradual,
)
from app.core.groups import FiniteGroup
from app.core.subsets import (
    closure_c,
    intersection,
    interior_d,
    modified_intersection,
    union,
)
from app.core.worked_examples import run_worked_examples
from app.core.zint import zint_report
from app.models.documents import (
    from_fuzzy,
    from_fuzzy_subgroup,
    from_gradual,
    from_system,
    to_fuzzy,
    to_fuzzy_subgroup,
    to_gradual,
    to_group,
    to_system,
)
from app.models.schemas import (
    ConvertDirection,
    EngineResponse,
    FuzzySubgroupDocument,
    FuzzySubsetDocument,
    GradualSubsetDocument,
    GroupAction,
    GroupDocument,
    OperatorName,
    SystemDocument,
)


def _expect(document, kind, what: str):
    if not isinstance(document, kind):
        raise GradualError(f"{what} 문서가 필요합니다 (받은 종류: {document.kind})")
    return document


class GradualEngine:
    """CLI와 API가 공유하는 명령 실행기"""

    def __init__(self):
        self.settings = get_settings()

    def convert(self, document, direction: ConvertDirection) -> EngineResponse:
        """퍼지 <-> 점진적 부분집합 변환, 점진적 부분집합 <-> 방향 시스템 변환"""
        if isinstance(document, SystemDocument):
            if direction != ConvertDirection.TO_GRADUAL:
                raise GradualError("system 문서는 to-gradual 방향으로만 변환합니다")
            return EngineResponse(document=from_gradual(system_to_subset(to_system(document))))
        if direction == ConvertDirection.TO_SYSTEM:
            sigma = to_gradual(_expect(document, GradualSubsetDocument, "gradual-subset"))
            system = subset_to_system(sigma, LevelGrid.of(sigma.map.breakpoints))
            return EngineResponse(document=from_system(system))
        if direction in (ConvertDirection.TO_GRADUAL, ConvertDirection.TO_GRADUAL_STRICT):
            mu = to_fuzzy(_expect(document, FuzzySubsetDocument, "fuzzy-subset"))
            sigma = nu(mu) if direction == ConvertDirection.TO_GRADUAL else nu_tilde(mu)
            return EngineResponse(document=from_gradual(sigma))
        sigma = to_gradual(_expect(document, GradualSubsetDocument, "gradual-subset"))
        mu = upsilon(sigma) if direction == ConvertDirection.TO_FUZZY else upsilon_tilde(sigma)
        return EngineResponse(document=from_fuzzy(mu))

    def operator(self, op: OperatorName, documents: Sequence) -> EngineResponse:
        """c, d, ∪, ∩, ⊼"""
        if not documents:
            raise GradualError("입력 문서가 없습니다")
        subsets = [to_gradual(_expect(d, GradualSubsetDocument, "gradual-subset")) for d in documents]
        if op in (OperatorName.CLOSURE, OperatorName.INTERIOR):
            if len(subsets) != 1:
                raise GradualError(f"{op.value}는 입력 문서 하나만 받습니다")
            unary = closure_c if op == OperatorName.CLOSURE else interior_d
            return EngineResponse(document=from_gradual(unary(subsets[0])))
        family_ops = {
            OperatorName.UNION: union,
            OperatorName.INTERSECTION: intersection,
            OperatorName.MODIFIED_INTERSECTION: modified_intersection,
        }
        return EngineResponse(document=from_gradual(family_ops[op](subsets)))

    def group(
        self,
        action: GroupAction,
        group_document: GroupDocument,
        documents: Sequence,
        strict: bool = True,
    ) -> EngineResponse:
        """퍼지 부분군 / 점진적 부분군 명령"""
        group = to_group(group_document)
        if action == GroupAction.QUOTIENT:
            return self._quotient(group, documents)
        if action == GroupAction.NORMALITY and documents and isinstance(documents[0], GradualSubsetDocument):
            sigma = GradualSubgroup.from_subset(group, to_gradual(documents[0]))
            normal = is_normal_gradual(sigma)
            return EngineResponse(lines=[f"σ: {sigma.describe()}", f"normal: {normal}"])

        subgroups = [self._fuzzy_subgroup(group, d) for d in documents]
        if not subgroups:
            raise GradualError("퍼지 부분집합 문서가 필요합니다")
        if action == GroupAction.CHECK_FUZZY_SUBGROUP:
            mu = subgroups[0]
            return EngineResponse(
                lines=["valid fuzzy subgroup", f"normal: {is_normal_fuzzy(mu)}"],
                document=from_fuzzy_subgroup(normalize_mu1(mu).canonical),
            )
        if action == GroupAction.TO_GRADUAL:
            cls = normalize_mu1(subgroups[0])
            sigma = nu_tilde_group(cls) if strict else nu_group(cls)
            return EngineResponse(document=from_gradual(sigma.as_subset()))
        if action == GroupAction.NORMALITY:
            mu = subgroups[0]
            image = nu_tilde_group(normalize_mu1(mu))
            return EngineResponse(
                lines=[
                    f"normal: {is_normal_fuzzy(mu)}",
                    f"nu~ levels normal: {is_normal_gradual(image)}",
                ]
            )
        if len(subgroups) != 2:
            raise GradualError("product는 퍼지 부분집합 문서 두 개가 필요합니다")
        report = product_report(normalize_mu1(subgroups[0]), normalize_mu1(subgroups[1]))
        return EngineResponse(
            ok=report["equal"],
            lines=[
                f"nu~(mu1 mu2): {report['lhs'].describe()}",
                f"nu~(mu1) nu~(mu2): {report['rhs'].describe()}",
                "equal" if report["equal"] else "different",
            ],
        )

    def _fuzzy_subgroup(self, group: FiniteGroup, document) -> FuzzySubgroup:
        if isinstance(document, FuzzySubgroupDocument):
            mu = to_fuzzy_subgroup(document)
            if mu.group != group:
                raise GradualError("fuzzy-subgroup 문서의 군이 그룹 문서와 다릅니다")
            return mu
        mu = to_fuzzy(_expect(document, FuzzySubsetDocument, "fuzzy-subset"))
        return FuzzySubgroup(group, mu)

    def _quotient(self, group: FiniteGroup, documents: Sequence) -> EngineResponse:
        if len(documents) != 1:
            raise GradualError("quotient는 점진적 부분집합 문서 하나가 필요합니다")
        sigma = GradualSubgroup.from_subset(
            group, to_gradual(_expect(documents[0], GradualSubsetDocument, "gradual-subset"))
        )
        eta = quotient_gradual(sigma)
        lines = [
            f"{piece}: |G/σ| = {level.factor.order}, cosets {list(level.factor.labels)}"
            for piece, level in eta.levels.pieces
        ]
        return EngineResponse(lines=lines)

    def demo_zint(
        self, x: int = 2, window: Optional[int] = None, t_max: Optional[int] = None
    ) -> EngineResponse:
        report = zint_report(
            x,
            window if window is not None else self.settings.zint_window,
            t_max if t_max is not None else self.settings.zint_t_max,
        )
        return EngineResponse(ok=all(report.checks.values()), lines=report.lines())

    def worked_examples(self) -> EngineResponse:
        blocks = run_worked_examples()
        lines: List[str] = []
        for block in blocks:
            lines.extend(block.lines())
        return EngineResponse(ok=all(b.ok for b in blocks), lines=lines)
