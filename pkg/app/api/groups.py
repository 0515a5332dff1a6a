from fastapi import APIRouter, HTTPException

from app.core.engine import GradualEngine
from app.core.errors import GradualError
from app.models.schemas import EngineResponse, GroupRequest

router = APIRouter(prefix="/api/v1/groups", tags=["groups"])


@router.post("", response_model=EngineResponse)
async def run_group_action(request: GroupRequest) -> EngineResponse:
    """
    퍼지 부분군 / 점진적 부분군 명령

    check-fuzzy-subgroup, to-gradual, product, normality, quotient
    """
    try:
        return GradualEngine().group(
            request.action, request.group, request.documents, strict=request.strict
        )
    except GradualError as e:
        raise HTTPException(status_code=422, detail=f"군 명령 실패: {str(e)}")
    except Exception as e:
        raise HTTPException(status_code=500, detail=f"군 명령 실패: {str(e)}")
