from pydantic_settings import BaseSettings
from functools import lru_cache


class Settings(BaseSettings):
    # App
    app_env: str = "development"
    log_level: str = "INFO"

    # 난수 생성기 / 무작위 검사 규모
    random_seed: int = 1729
    property_cases: int = 500
    group_cases: int = 200
    system_cases: int = 200

    # 유한군 한도
    max_group_order: int = 120
    max_symmetric_degree: int = 5

    # ℤ 데모 기본값
    zint_window: int = 200
    zint_t_max: int = 6

    # API
    api_host: str = "0.0.0.0"
    api_port: int = 8000

    class Config:
        env_prefix = "GRADUAL_"
        env_file = ".env"
        env_file_encoding = "utf-8"


@lru_cache()
def get_settings() -> Settings:
    return Settings()
