from dataclasses import dataclass


class ProjectiveLineError(ValueError):
    pass


@dataclass(frozen=True)
class ProjectiveLine:
    """P¹(F_p). (1:j) 는 인덱스 j, (0:1) 은 인덱스 p."""

    prime: int

    def __len__(self) -> int:
        return self.prime + 1

    def __iter__(self):
        for j in range(self.prime):
            yield 1, j
        yield 0, 1

    def normalize(self, c: int, d: int) -> tuple[int, int]:
        p = self.prime
        c, d = c % p, d % p
        if c == 0:
            if d == 0:
                raise ProjectiveLineError(f"(0:0) 은 P¹(F_{p}) 의 점이 아닙니다.")
            return 0, 1
        return 1, (d * pow(c, -1, p)) % p

    def index(self, c: int, d: int) -> int:
        c, d = self.normalize(c, d)
        return self.prime if c == 0 else d

    def contains(self, c: int, d: int) -> bool:
        return c % self.prime != 0 or d % self.prime != 0
