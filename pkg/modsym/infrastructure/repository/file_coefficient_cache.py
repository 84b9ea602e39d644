import hashlib
import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Any

from modsym.application.port.coefficient_cache_port import CoefficientCachePort

logger = logging.getLogger(__name__)

CACHE_SCHEMA_VERSION = "1"


class FileCoefficientCache(CoefficientCachePort):
    """(kind, 스키마 버전, 키) 의 SHA-256 이름을 가진 JSON 파일로 계수표를 보관합니다."""

    def __init__(self, cache_dir: str | Path):
        self.cache_dir = Path(cache_dir)

    def _path(self, kind: str, key: dict[str, Any]) -> Path:
        material = json.dumps({"kind": kind, "schema": CACHE_SCHEMA_VERSION, "key": key}, sort_keys=True)
        digest = hashlib.sha256(material.encode("utf-8")).hexdigest()
        return self.cache_dir / kind / f"{digest}.json"

    def load(self, kind: str, key: dict[str, Any]) -> dict[str, Any] | None:
        path = self._path(kind, key)
        if not path.exists():
            logger.debug(f"[FileCoefficientCache] miss: {kind} {key}")
            return None
        try:
            with path.open("r", encoding="utf-8") as f:
                document = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            logger.warning(f"[FileCoefficientCache] 캐시 파일을 읽지 못해 무시합니다: {path} ({e})")
            return None
        if document.get("key") != key:
            logger.warning(f"[FileCoefficientCache] 키가 다른 캐시 파일을 무시합니다: {path}")
            return None
        logger.debug(f"[FileCoefficientCache] hit: {kind} {key}")
        return document.get("payload")

    def save(self, kind: str, key: dict[str, Any], payload: dict[str, Any]) -> None:
        path = self._path(kind, key)
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, temp_name = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as f:
                json.dump({"key": key, "payload": payload}, f, sort_keys=True)
            os.replace(temp_name, path)
        except OSError:
            if os.path.exists(temp_name):
                os.remove(temp_name)
            raise
