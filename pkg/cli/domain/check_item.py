from dataclasses import dataclass


@dataclass(frozen=True)
class CheckItem:
    name: str
    passed: bool
    detail: str
