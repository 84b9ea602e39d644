from abc import ABC, abstractmethod
from typing import Any


class CoefficientCachePort(ABC):
    @abstractmethod
    def load(self, kind: str, key: dict[str, Any]) -> dict[str, Any] | None:
        raise NotImplementedError

    @abstractmethod
    def save(self, kind: str, key: dict[str, Any], payload: dict[str, Any]) -> None:
        raise NotImplementedError
