import logging

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from app.api import convert_router, operators_router, groups_router, demo_router
from app.config import get_settings

settings = get_settings()
logging.basicConfig(level=settings.log_level)

app = FastAPI(
    title="Gradual Algebra API",
    description="점진적 원소, 부분집합, 부분군과 퍼지 부분집합 대응 계산 서비스",
    version="0.1.0",
)

# CORS 설정
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

# 라우터 등록
app.include_router(convert_router)
app.include_router(operators_router)
app.include_router(groups_router)
app.include_router(demo_router)


@app.get("/")
async def root():
    return {
        "message": "Gradual Algebra API",
        "version": "0.1.0",
        "docs": "/docs",
    }


@app.get("/health")
async def health_check():
    return {"status": "healthy"}


if __name__ == "__main__":
    import uvicorn
    uvicorn.run(app, host=settings.api_host, port=settings.api_port)
