import math
from typing import Any

from pydantic import BaseModel, Field

from padic.domain.padic_number import PadicNumber
from padic.domain.quad_ext_number import QuadExtNumber

SCHEMA_VERSION = "1.0"
SIGNIFICANT_DIGITS = 15


class PadicValue(BaseModel):
    valuation: int | None = Field(..., description="v_p(x). 0 이면 null")
    digits: str = Field(..., description="단위 부분의 p진 자릿수 (최상위 자리부터)")
    precision: int | None = Field(..., description="상대 정밀도. 0 이면 알려진 절대 정밀도 (정확한 0 이면 null)")

    @classmethod
    def from_padic(cls, x: PadicNumber) -> "PadicValue":
        if x.is_zero:
            known = None if x.valuation == math.inf else int(x.valuation)
            return cls(valuation=None, digits="0", precision=known)
        return cls(valuation=int(x.valuation), digits=x.digits(), precision=x.precision)


class QuadExtValue(BaseModel):
    a: PadicValue = Field(..., description="a + b·s 의 a")
    b: PadicValue = Field(..., description="a + b·s 의 b (s² = 비잉여)")

    @classmethod
    def from_quad(cls, x: QuadExtNumber) -> "QuadExtValue":
        return cls(a=PadicValue.from_padic(x.a), b=PadicValue.from_padic(x.b))

    @classmethod
    def from_label(cls, label: tuple[int, int], prime: int, level: int) -> "QuadExtValue":
        """mod p^n 좌표 라벨. 자릿수는 길이 n 으로 채웁니다."""
        return cls(a=_residue_value(label[0], prime, level), b=_residue_value(label[1], prime, level))


def _residue_value(coord: int, prime: int, level: int) -> PadicValue:
    return PadicValue.from_padic(PadicNumber.from_scaled(prime, coord, 0, level))


class ComplexValue(BaseModel):
    re: str = Field(..., description="실수부 (유효숫자 15자리)")
    im: str = Field(..., description="허수부 (유효숫자 15자리)")
    error_bound: str = Field(..., description="절단 오차 상한")

    @classmethod
    def from_mpc(cls, z, ctx, error_bound: float = 0.0) -> "ComplexValue":
        z = ctx.mpc(z)
        return cls(
            re=ctx.nstr(z.real, SIGNIFICANT_DIGITS),
            im=ctx.nstr(z.imag, SIGNIFICANT_DIGITS),
            error_bound=f"{error_bound:.3e}",
        )


class Conventions(BaseModel):
    nonresidue: int = Field(..., description="K_p = Q_p(s), s² = nonresidue 의 최소 비잉여")
    sqrt_sign: str = Field(..., description="√D 매장의 부호 규약")
    symbol_signs: str = Field(..., description="m^± 정규화 부호")
    fundamental_unit: tuple[int, int] | None = Field(default=None, description="ε = (x + y√D)/2 의 (x, y)")
    torsion_scale: int = Field(..., description="격자 확대 배수 t_E")
    t_bound: int = Field(..., description="확대 분모 상한")
    lattice_model: str = Field(..., description="복소 주기 격자의 정규화")


class ErrorDetail(BaseModel):
    code: str
    message: str


class ErrorResponse(BaseModel):
    schema_version: str = SCHEMA_VERSION
    error: ErrorDetail


class DocumentResponse(BaseModel):
    """모든 하위 명령 출력의 공통 머리."""

    schema_version: str = SCHEMA_VERSION
    command: str
    config: dict[str, Any] = Field(..., description="계산에 쓴 설정 (실행 환경 필드 제외)")
    conventions: Conventions
