from typing import Literal

from pydantic import BaseModel, Field, field_validator, model_validator

from pball.domain.projective_point import as_cusp

Command = Literal["lp", "tate-q", "mtt", "sh-point", "cm-invariant", "check"]

# 실행 환경에만 관련된 필드. 출력 JSON 에는 넣지 않습니다 (스레드 수와 무관한 출력)
EXECUTION_FIELDS = {"threads", "cache_dir", "use_cache", "output"}


def principal_form(discriminant: int) -> tuple[int, int, int]:
    """판별식 D 의 주형식 (1, D mod 2, (D mod 2 − D)/4)."""
    b = discriminant % 2
    return 1, b, (b - discriminant) // 4


class RunConfig(BaseModel):
    command: Command = Field(..., description="하위 명령")
    curve: tuple[int, int, int, int, int] = Field(..., description="a1,a2,a3,a4,a6 (소수 도체의 최소 모형)")
    prime: int = Field(..., ge=5, description="도체 p")
    depth: int = Field(default=3, ge=1, le=12, description="덮개 깊이 n")
    level: int = Field(default=1, ge=1, le=3, description="CM 레벨 n")
    precision: int = Field(default=20, ge=4, le=400, description="상대 p진 정밀도 N")
    disc: int | None = Field(default=None, description="이차체 판별식 D")
    form: tuple[int, int, int] | None = Field(default=None, description="이차 형식 (A, B, C)")
    r: str = Field(default="0", description="sh-point 기준 첨점")
    conjugate: bool = Field(default=False, description="켤레 RM 점 (−A, −B, −C) 로 계산")
    recognize: int | None = Field(default=None, ge=1, description="Tate 매개화 후 Q(√D) 위의 점으로 인식할 때의 높이 상한 H")
    twist: tuple[int, int] | None = Field(default=None, description="lp 의 μ_f[−a/c, ∞] 부분 합 (a, c)")
    slack: int = Field(default=2, ge=0, description="MTT 잔차 허용 폭")
    radius: int = Field(default=3, ge=1, le=4, description="check 의 조화성 검사 반경")
    threads: int = Field(default=1, ge=1, le=64, description="작업 스레드 수")
    cache_dir: str | None = Field(default=None, description="계수 캐시 디렉터리")
    use_cache: bool = Field(default=True, description="디스크 캐시 사용 여부")
    output: str | None = Field(default=None, description="JSON 출력 파일")

    @field_validator("r")
    @classmethod
    def _cusp(cls, value: str) -> str:
        as_cusp(value)
        return value

    @model_validator(mode="after")
    def _quadratic_data(self) -> "RunConfig":
        if self.command in ("sh-point", "cm-invariant"):
            if self.disc is None and self.form is None:
                raise ValueError(f"{self.command} 에는 --disc 또는 --form 이 필요합니다.")
            if self.disc is not None and self.form is not None:
                a, b, c = self.form
                if b * b - 4 * a * c != self.disc:
                    raise ValueError(f"형식 {self.form} 의 판별식이 --disc {self.disc} 와 다릅니다.")
        return self

    def quadratic_form(self) -> tuple[int, int, int]:
        return self.form if self.form is not None else principal_form(self.disc)

    def echo(self) -> dict:
        return self.model_dump(mode="json", exclude=EXECUTION_FIELDS)
