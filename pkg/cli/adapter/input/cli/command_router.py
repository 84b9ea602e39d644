import argparse
import json
import logging
import sys
import time
from pathlib import Path
from typing import Callable

from cli.adapter.input.cli.request.run_config import RunConfig
from cli.adapter.input.cli.response.command_response import (
    CheckItemResponse,
    CheckSuiteResponse,
    CmInvariantResponse,
    CurvePointResponse,
    EdgeResponse,
    InterpolationResponse,
    LpResponse,
    MttResponse,
    PushforwardResponse,
    RecognitionResponse,
    StarkHeegnerResponse,
    TatePeriodResponse,
    TwistedPartialResponse,
)
from cli.adapter.input.cli.response.value_response import (
    ComplexValue,
    Conventions,
    DocumentResponse,
    ErrorDetail,
    ErrorResponse,
    PadicValue,
    QuadExtValue,
)
from cli.domain.error_code import E_INTERNAL, EXIT_STATUS, InputError, classify
from cli.infrastructure.config.dependency_injection import Container, create_container
from config.settings import ComputeSettings
from modsym.domain.curve_data import CurveData, CurveValidationError
from padic.utils.quadratic import smallest_nonresidue
from pball.domain.oriented_edge import OrientedEdge
from pball.domain.vertex import Vertex
from shpoint.domain.recognition import HEIGHT_BOUNDS, RecognitionError, height_bounds, matches_search, point_search
from shpoint.utils.pell import norm_one_unit

logger = logging.getLogger(__name__)

COMMANDS = ("lp", "tate-q", "mtt", "sh-point", "cm-invariant", "check")
# check 항목 중 하나라도 실패하면 돌려주는 종료 상태
CHECK_FAILED_STATUS = 4
# 인식 결과와 비교할 독립 점 탐색의 높이
SEARCH_HEIGHT = 8

SQRT_SIGN = "√D = y·s, y 는 mod p 잉여가 작은 Hensel 올림"
SYMBOL_SIGNS = "m⁺[0,∞] ≥ 0 (0 이면 첫 0 아닌 성분 > 0), m⁻ 의 첫 0 아닌 성분 > 0"
LATTICE_MODEL = "Λ_f = Λ_E = Zω₁ + Zω₂ (Manin 상수 1, AGM 주기), 변 값은 t_E 배"


class CommandParser(argparse.ArgumentParser):
    def error(self, message: str):
        raise InputError(message)


def _int_tuple(text: str, size: int, flag: str) -> tuple[int, ...]:
    try:
        values = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise InputError(f"{flag} 는 쉼표로 구분한 정수여야 합니다: {text!r}")
    if len(values) != size:
        raise InputError(f"{flag} 에는 정수 {size}개가 필요합니다: {text!r}")
    return values


def parse_curve(text: str) -> tuple[int, int, int, int, int]:
    try:
        values = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise CurveValidationError(f"곡선 계수는 쉼표로 구분한 정수여야 합니다: {text!r}")
    if len(values) != 5:
        raise CurveValidationError(f"곡선 계수는 a1,a2,a3,a4,a6 다섯 개여야 합니다: {text!r}")
    return values


def build_parser() -> CommandParser:
    settings = ComputeSettings()
    parser = CommandParser(prog="plectic", description="소수 도체 타원곡선의 p진 L 함수, Stark–Heegner 점, plectic 불변량")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub = subparsers.add_parser(name)
        sub.add_argument("--curve", required=True, help="a1,a2,a3,a4,a6")
        sub.add_argument("--p", dest="prime", type=int, required=True)
        sub.add_argument("--depth", type=int, default=settings.depth)
        sub.add_argument("--level", type=int, default=1)
        sub.add_argument("--prec", dest="precision", type=int, default=settings.precision)
        sub.add_argument("--threads", type=int, default=settings.threads)
        sub.add_argument("--out", dest="output", default=None)
        sub.add_argument("--cache-dir", dest="cache_dir", default=None)
        sub.add_argument("--no-cache", dest="use_cache", action="store_false")
        sub.add_argument("--disc", type=int, default=None)
        sub.add_argument("--form", default=None, help="A,B,C")
        sub.add_argument("--r", default="0")
        sub.add_argument("--conjugate", action="store_true")
        sub.add_argument("--recognize", type=int, nargs="?", const=HEIGHT_BOUNDS[-1], default=None, metavar="H")
        sub.add_argument("--twist", default=None, help="a,c")
        sub.add_argument("--slack", type=int, default=2)
        sub.add_argument("--radius", type=int, default=3)
    return parser


def build_config(argv: list[str] | None) -> RunConfig:
    args = vars(build_parser().parse_args(argv))
    args["curve"] = parse_curve(args["curve"])
    if args["form"] is not None:
        args["form"] = _int_tuple(args["form"], 3, "--form")
    if args["twist"] is not None:
        args["twist"] = _int_tuple(args["twist"], 2, "--twist")
    return RunConfig(**args)


# ----------------------------------------------------------------------
# 출력 보조
# ----------------------------------------------------------------------
def _vertex_text(vertex: Vertex) -> str:
    return f"B({vertex.center},{vertex.level})"


def _edge_text(edge: OrientedEdge) -> str:
    return f"{_vertex_text(edge.source)}→{_vertex_text(edge.target)}"


def _conventions(container: Container, curve: CurveData, fundamental_unit=None) -> Conventions:
    return Conventions(
        nonresidue=smallest_nonresidue(curve.prime),
        sqrt_sign=SQRT_SIGN,
        symbol_signs=SYMBOL_SIGNS,
        fundamental_unit=fundamental_unit,
        torsion_scale=container.modular_symbol_usecase().torsion_scale(curve),
        t_bound=curve.t_bound,
        lattice_model=LATTICE_MODEL,
    )


def _header(container: Container, curve: CurveData, config: RunConfig, fundamental_unit=None) -> dict:
    return {
        "command": config.command,
        "config": config.echo(),
        "conventions": _conventions(container, curve, fundamental_unit),
    }


def render(document: DocumentResponse | ErrorResponse) -> str:
    return json.dumps(document.model_dump(mode="json"), sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def error_document(error: BaseException) -> tuple[int, str]:
    code = classify(error)
    if code == E_INTERNAL:
        logger.exception(f"[CommandRouter] 예기치 않은 오류: {error}")
    else:
        logger.error(f"[CommandRouter] {code}: {error}")
    return EXIT_STATUS[code], render(ErrorResponse(error=ErrorDetail(code=code, message=str(error))))


# ----------------------------------------------------------------------
# 하위 명령
# ----------------------------------------------------------------------
def run_lp(container: Container, curve: CurveData, config: RunConfig) -> tuple[DocumentResponse, int]:
    l_function = container.l_function_usecase()
    record = l_function.lp_value_and_derivative(curve, config.depth, config.precision)
    interpolation = l_function.interpolation(curve)
    twisted = None
    if config.twist is not None:
        partial = l_function.lp_partial_twisted(curve, *config.twist, config.depth, config.precision)
        twisted = TwistedPartialResponse(
            a=partial.a,
            c=partial.c,
            integers=partial.integers,
            units=partial.units,
            derivative=tuple(PadicValue.from_padic(x) for x in partial.derivative),
        )
    response = LpResponse(
        **_header(container, curve, config),
        value=record.value,
        derivative=tuple(PadicValue.from_padic(x) for x in record.derivative),
        depth=record.depth,
        interpolation=InterpolationResponse(
            integers=interpolation.integers,
            multiples_of_p=interpolation.multiples_of_p,
            units=interpolation.units,
            consistent=interpolation.consistent,
        ),
        twisted=twisted,
    )
    return response, 0


def run_tate_q(container: Container, curve: CurveData, config: RunConfig) -> tuple[DocumentResponse, int]:
    l_function = container.l_function_usecase()
    period = l_function.tate_period(curve, config.precision)
    response = TatePeriodResponse(
        **_header(container, curve, config),
        q=PadicValue.from_padic(period.q),
        ord=period.ord,
        j_invariant=str(period.j_invariant),
        j_agreement=l_function.j_agreement(period, config.precision),
        l_invariant=PadicValue.from_padic(period.l_invariant),
    )
    return response, 0


def run_mtt(container: Container, curve: CurveData, config: RunConfig) -> tuple[DocumentResponse, int]:
    record = container.l_function_usecase().mtt_check(curve, config.depth, config.precision, config.slack)
    response = MttResponse(
        **_header(container, curve, config),
        residual_valuation=record.residual_valuation,
        ord_part=record.ord_part,
        expected_ord=record.expected_ord,
        l_value=record.l_value,
        depth=record.depth,
        passed=record.passed,
    )
    return response, 0


def run_sh_point(container: Container, curve: CurveData, config: RunConfig) -> tuple[DocumentResponse, int]:
    usecase = container.stark_heegner_usecase()
    point = usecase.rm_point(curve, config.quadratic_form(), config.precision)
    if config.conjugate:
        point = point.conjugate()
    sh_point = usecase.stark_heegner(curve, point, config.depth, config.r)
    q_valuation = usecase.l_function.tate_period(curve, config.precision).ord
    images = [usecase.tate_parametrize(curve, sh_point, index, config.precision) for index in (0, 1)]

    recognition = None
    if config.recognize is not None:
        recognition = _recognize(usecase, curve, point, images, config.recognize)

    response = StarkHeegnerResponse(
        **_header(container, curve, config, norm_one_unit(point.discriminant)),
        form=point.form,
        discriminant=point.discriminant,
        gamma=tuple(str(x) for x in sh_point.gamma.gamma.entries),
        r=str(sh_point.r),
        pieces=sh_point.pieces,
        depth=sh_point.depth,
        log_part=tuple(QuadExtValue.from_quad(x) for x in sh_point.log_part),
        ord_part=tuple(str(x) for x in sh_point.ord_part),
        reduced_ord=sh_point.reduced_ord(q_valuation),
        points=tuple(
            None if image is None else CurvePointResponse(x=QuadExtValue.from_quad(image[0]), y=QuadExtValue.from_quad(image[1]))
            for image in images
        ),
        recognition=recognition,
    )
    return response, 0


def _recognize(usecase, curve: CurveData, point, images, limit: int) -> RecognitionResponse:
    last_error = None
    for component, image in enumerate(images):
        if image is None:
            continue
        try:
            found = usecase.recognize(curve, point, image, height_bounds(limit))
        except RecognitionError as e:
            last_error = e
            continue
        search = point_search(curve.coefficients, point.discriminant, min(SEARCH_HEIGHT, limit))
        return RecognitionResponse(
            component=component,
            x=repr(found.x),
            y=repr(found.y),
            bound=found.bound,
            height=found.height,
            precision=found.precision,
            matches_search=matches_search(found, search, curve.coefficients, point.discriminant, curve.t_bound),
        )
    raise last_error or RecognitionError("두 성분 모두 항등원이라 인식할 점이 없습니다.")


def run_cm_invariant(container: Container, curve: CurveData, config: RunConfig) -> tuple[DocumentResponse, int]:
    usecase = container.cm_heegner_usecase()
    ctx = usecase.ctx
    point = usecase.cm_point(curve, config.quadratic_form(), config.precision)
    lattice = usecase.complex_lattice(curve)
    lattice_report = usecase.lattice_report(curve)
    approx = usecase.plectic_invariant(curve, point, config.level)
    shadow_distance = approx.shadow_distance(lattice)
    pushforward = usecase.pushforward_check(point, config.level)
    trace = usecase.trace_compat_check(curve, point, config.level)

    edges = [
        EdgeResponse(
            edge=_edge_text(term.edge),
            label=QuadExtValue.from_label(term.label, point.prime, config.level),
            coefficient=QuadExtValue.from_quad(term.coefficient),
            value=ComplexValue.from_mpc(term.value.value, ctx, term.value.error_bound),
            orientation=term.value.orientation,
            terms=term.value.terms,
            flipped=term.value.flipped,
        )
        for term in approx.terms
    ]
    response = CmInvariantResponse(
        **_header(container, curve, config),
        form=point.form,
        discriminant=point.discriminant,
        level=config.level,
        omega1=ComplexValue.from_mpc(lattice.omega1, ctx),
        omega2=ComplexValue.from_mpc(lattice.omega2, ctx),
        discriminant_error=lattice_report.discriminant_error,
        edges=edges,
        shadow=ComplexValue.from_mpc(approx.shadow(ctx), ctx, approx.error_bound),
        shadow_distance=shadow_distance,
        shadow_passed=shadow_distance < usecase.tolerance,
        harmonicity=usecase.vertex_sum(curve, point, point.fixed_vertex),
        pushforward=PushforwardResponse(
            level=pushforward.level,
            cosets=pushforward.cosets,
            fixed_points=pushforward.fixed_points,
            bijective=pushforward.bijective,
            refines=pushforward.refines,
            passed=pushforward.passed,
        ),
        trace_residual=trace.residual,
    )
    return response, 0


def run_check(container: Container, curve: CurveData, config: RunConfig) -> tuple[DocumentResponse, int]:
    items = container.check_suite_usecase().run(curve, config.precision)
    passed = all(item.passed for item in items)
    response = CheckSuiteResponse(
        **_header(container, curve, config),
        items=[CheckItemResponse(name=item.name, passed=item.passed, detail=item.detail) for item in items],
        passed=passed,
    )
    return response, 0 if passed else CHECK_FAILED_STATUS


HANDLERS: dict[str, Callable[[Container, CurveData, RunConfig], tuple[DocumentResponse, int]]] = {
    "lp": run_lp,
    "tate-q": run_tate_q,
    "mtt": run_mtt,
    "sh-point": run_sh_point,
    "cm-invariant": run_cm_invariant,
    "check": run_check,
}


def run(config: RunConfig) -> tuple[int, str]:
    """설정 하나를 실행해 (종료 상태, JSON 문서) 를 돌려줍니다."""
    start = time.perf_counter()
    logger.info(f"[CommandRouter] {config.command} 시작: {config.echo()}")
    try:
        container = create_container(config.threads, config.cache_dir, config.use_cache, config.radius)
        curve = CurveData.from_coefficients(config.curve, config.prime)
        document, status = HANDLERS[config.command](container, curve, config)
    except Exception as e:
        return error_document(e)
    logger.info(f"[CommandRouter] {config.command} 종료: 상태 {status} ({time.perf_counter() - start:.2f}s)")
    return status, render(document)


def emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text + "\n")
        return
    path = Path(output)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text + "\n", encoding="utf-8")


def main(argv: list[str] | None = None) -> int:
    try:
        config = build_config(argv)
    except Exception as e:
        status, text = error_document(e)
        emit(text, None)
        return status
    status, text = run(config)
    emit(text, config.output)
    return status
