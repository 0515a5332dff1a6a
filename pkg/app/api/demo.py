from fastapi import APIRouter, HTTPException

from app.core.engine import GradualEngine
from app.core.errors import GradualError
from app.models.schemas import EngineResponse, ZIntRequest

router = APIRouter(prefix="/api/v1/demo", tags=["demo"])


@router.post("/zint", response_model=EngineResponse)
async def demo_zint(request: ZIntRequest) -> EngineResponse:
    """
    ℤ 위 퍼지 부분군 합 (μ1+μ2)(x) 의 유계 창 근사
    """
    try:
        return GradualEngine().demo_zint(request.x, request.window, request.t_max)
    except GradualError as e:
        raise HTTPException(status_code=422, detail=f"데모 실패: {str(e)}")


@router.get("/examples", response_model=EngineResponse)
async def worked_examples() -> EngineResponse:
    """
    대표 예제 회귀 실행
    """
    try:
        return GradualEngine().worked_examples()
    except Exception as e:
        raise HTTPException(status_code=500, detail=f"예제 실행 실패: {str(e)}")
