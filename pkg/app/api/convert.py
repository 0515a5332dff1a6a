from fastapi import APIRouter, HTTPException

from app.core.engine import GradualEngine
from app.core.errors import GradualError
from app.models.schemas import ConvertRequest, EngineResponse

router = APIRouter(prefix="/api/v1/convert", tags=["convert"])


@router.post("", response_model=EngineResponse)
async def convert(request: ConvertRequest) -> EngineResponse:
    """
    퍼지 부분집합 <-> 점진적 부분집합 변환

    to-gradual(ν), to-gradual-strict(ν̃), to-fuzzy(υ), to-fuzzy-strict(υ̃), to-system(방향 시스템)
    system 문서는 to-gradual로 점진적 부분집합이 됩니다
    """
    try:
        return GradualEngine().convert(request.document, request.direction)
    except GradualError as e:
        raise HTTPException(status_code=422, detail=f"변환 실패: {str(e)}")
    except Exception as e:
        raise HTTPException(status_code=500, detail=f"변환 실패: {str(e)}")
