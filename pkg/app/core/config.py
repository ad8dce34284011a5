"""
실행 설정 (.env 권장)

- CHARVAR_SEED=0                 # 난수 샘플링 시드
- CHARVAR_TOL=1e-8               # 수치 검증 허용 오차 (상대값)
- CHARVAR_WINDOW=2               # J 생성원 window 폭
- CHARVAR_WORKERS=4              # verify 병렬 실행 워커 수
- CHARVAR_SAMPLES=100            # 샘플 집합당 점 개수
- CHARVAR_LOG_LEVEL=WARNING      # LOG_LEVEL 도 허용
"""

from __future__ import annotations

import logging
import os
import threading
from dataclasses import dataclass
from typing import Optional

from dotenv import load_dotenv

load_dotenv()

logger = logging.getLogger(__name__)

_LOG_LEVELS = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}


@dataclass(frozen=True)
class Settings:
    seed: int
    tolerance: float
    window: int
    workers: int
    samples: int
    log_level: str


def _get_env_first(*keys: str) -> Optional[str]:
    for k in keys:
        v = os.environ.get(k)
        if v:
            return v
    return None


def _parse_int(raw: Optional[str], default: int, minimum: int) -> int:
    if raw:
        try:
            value = int(raw)
            if value >= minimum:
                return value
        except ValueError:
            pass
    return default


def _parse_tolerance(raw: Optional[str]) -> float:
    if raw:
        try:
            tol = float(raw)
            return max(1e-15, min(1e-1, tol))
        except ValueError:
            pass
    return 1e-8


def _parse_log_level(raw: Optional[str]) -> str:
    level = (raw or "").strip().upper()
    return level if level in _LOG_LEVELS else "WARNING"


def load_settings() -> Settings:
    return Settings(
        seed=_parse_int(_get_env_first("CHARVAR_SEED"), 0, 0),
        tolerance=_parse_tolerance(_get_env_first("CHARVAR_TOL")),
        window=_parse_int(_get_env_first("CHARVAR_WINDOW"), 2, 0),
        workers=_parse_int(_get_env_first("CHARVAR_WORKERS"), 4, 1),
        samples=_parse_int(_get_env_first("CHARVAR_SAMPLES"), 100, 1),
        log_level=_parse_log_level(_get_env_first("CHARVAR_LOG_LEVEL", "LOG_LEVEL")),
    )


_CACHED_SETTINGS: Optional[Settings] = None
_SETTINGS_LOCK = threading.Lock()


def get_settings() -> Settings:
    global _CACHED_SETTINGS
    with _SETTINGS_LOCK:
        if _CACHED_SETTINGS is None:
            _CACHED_SETTINGS = load_settings()
            logger.debug("settings loaded: %s", _CACHED_SETTINGS)
        return _CACHED_SETTINGS


def reset_settings() -> None:
    """환경변수 변경 후 다시 읽도록 캐시를 비움 (테스트용)."""
    global _CACHED_SETTINGS
    with _SETTINGS_LOCK:
        _CACHED_SETTINGS = None
