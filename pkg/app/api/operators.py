from fastapi import APIRouter, HTTPException

from app.core.engine import GradualEngine
from app.core.errors import GradualError
from app.models.schemas import EngineResponse, OperatorName, OperatorRequest

router = APIRouter(prefix="/api/v1/operators", tags=["operators"])


@router.post("", response_model=EngineResponse)
async def apply_operator(request: OperatorRequest) -> EngineResponse:
    """
    점진적 부분집합 연산자 적용

    closure, interior는 문서 하나, union, intersection, modified-intersection은 여러 문서
    """
    try:
        return GradualEngine().operator(request.op, request.documents)
    except GradualError as e:
        raise HTTPException(status_code=422, detail=f"연산 실패: {str(e)}")
    except Exception as e:
        raise HTTPException(status_code=500, detail=f"연산 실패: {str(e)}")


@router.get("")
async def list_operators():
    """
    지원 연산자 목록
    """
    return {"operators": [op.value for op in OperatorName]}
