"""
공통 테스트 설정

hypothesis 프로파일과 시드 고정 난수 생성기 픽스처를 등록합니다.
"""
import random

import pytest
from hypothesis import HealthCheck, settings as hypothesis_settings

from app.config import get_settings

_settings = get_settings()

hypothesis_settings.register_profile(
    "gradual",
    max_examples=_settings.property_cases,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
hypothesis_settings.load_profile("gradual")


@pytest.fixture
def app_settings():
    return _settings


@pytest.fixture
def rng():
    """시드 고정 난수 생성기"""
    return random.Random(_settings.random_seed)
