import json
from typing import Any

from modsym.application.port.coefficient_cache_port import CoefficientCachePort


class MemoryCoefficientCache(CoefficientCachePort):
    def __init__(self):
        self._store: dict[str, dict[str, Any]] = {}

    @staticmethod
    def _key(kind: str, key: dict[str, Any]) -> str:
        return json.dumps({"kind": kind, "key": key}, sort_keys=True)

    def load(self, kind: str, key: dict[str, Any]) -> dict[str, Any] | None:
        return self._store.get(self._key(kind, key))

    def save(self, kind: str, key: dict[str, Any], payload: dict[str, Any]) -> None:
        self._store[self._key(kind, key)] = payload
