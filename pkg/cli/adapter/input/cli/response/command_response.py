from pydantic import BaseModel, Field

from cli.adapter.input.cli.response.value_response import ComplexValue, DocumentResponse, PadicValue, QuadExtValue

Pair = tuple[int, int]


class InterpolationResponse(BaseModel):
    integers: Pair = Field(..., description="μ^±(Z_p)")
    multiples_of_p: Pair = Field(..., description="μ^±(pZ_p)")
    units: Pair = Field(..., description="μ^±(Z_p^×)")
    consistent: bool


class TwistedPartialResponse(BaseModel):
    a: int
    c: int
    integers: Pair
    units: Pair
    derivative: tuple[PadicValue, PadicValue]


class LpResponse(DocumentResponse):
    value: Pair = Field(..., description="L_p(E,1) 의 ± 성분 (정수)")
    derivative: tuple[PadicValue, PadicValue] = Field(..., description="∫ log⟨x⟩ dμ^± (깊이 n Riemann 합)")
    depth: int
    interpolation: InterpolationResponse
    twisted: TwistedPartialResponse | None = None


class TatePeriodResponse(DocumentResponse):
    q: PadicValue
    ord: int = Field(..., description="ord_p(q)")
    j_invariant: str
    j_agreement: int = Field(..., description="j(q) ≡ j(E) 가 맞는 상대 p진 자릿수")
    l_invariant: PadicValue = Field(..., description="log⁰⟨q⟩ / ord_p(q)")


class MttResponse(DocumentResponse):
    residual_valuation: float
    ord_part: Pair
    expected_ord: Pair = Field(..., description="(1 + a_p)·L(E,1)")
    l_value: Pair
    depth: int
    passed: bool


class CurvePointResponse(BaseModel):
    x: QuadExtValue
    y: QuadExtValue


class RecognitionResponse(BaseModel):
    component: int = Field(..., description="인식에 쓴 Λ_f 성분 (0 = +, 1 = −)")
    x: str
    y: str
    bound: int
    height: int
    precision: int
    matches_search: bool | None = Field(default=None, description="독립 점 탐색 결과와 일치 여부")


class StarkHeegnerResponse(DocumentResponse):
    form: tuple[int, int, int]
    discriminant: int
    gamma: tuple[str, str, str, str] = Field(..., description="γ_τ 의 성분 (a, b, c, d)")
    r: str
    pieces: int
    depth: int
    log_part: tuple[QuadExtValue, QuadExtValue] = Field(..., description="2·P_τ 의 log⁰ 부분")
    ord_part: tuple[str, str] = Field(..., description="2·P_τ 의 ord 부분")
    reduced_ord: tuple[int, int] = Field(..., description="ord 부분 mod ord_p(q)")
    points: tuple[CurvePointResponse | None, CurvePointResponse | None] = Field(
        ..., description="Tate 매개화한 E(K_p) 의 점 (항등원이면 null)"
    )
    recognition: RecognitionResponse | None = None


class EdgeResponse(BaseModel):
    edge: str
    label: QuadExtValue = Field(..., description="A(t_e) 의 mod p^n 좌표")
    coefficient: QuadExtValue = Field(..., description="log⁰⟨A(t_e)⟩")
    value: ComplexValue
    orientation: int
    terms: int
    flipped: bool


class PushforwardResponse(BaseModel):
    level: int
    cosets: int
    fixed_points: bool
    bijective: bool
    refines: bool
    passed: bool


class CmInvariantResponse(DocumentResponse):
    form: tuple[int, int, int]
    discriminant: int
    level: int
    omega1: ComplexValue
    omega2: ComplexValue
    discriminant_error: float = Field(..., description="모듈러 판별식으로 되짚은 Δ(E) 의 상대 오차")
    edges: list[EdgeResponse]
    shadow: ComplexValue = Field(..., description="계수를 모두 1 로 둔 합")
    shadow_distance: float = Field(..., description="그림자 합과 Λ_f 의 거리 / |ω₁|")
    shadow_passed: bool
    harmonicity: float = Field(..., description="고정 꼭짓점에서 변 값 합의 Λ_f 거리 / |ω₁|")
    pushforward: PushforwardResponse
    trace_residual: float = Field(..., description="레벨 n → n+1 대각합 호환 잔차 / |ω₁|")


class CheckItemResponse(BaseModel):
    name: str
    passed: bool
    detail: str


class CheckSuiteResponse(DocumentResponse):
    items: list[CheckItemResponse]
    passed: bool
