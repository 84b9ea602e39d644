from pydantic import ValidationError

from cmheegner.application.usecase.cm_heegner_usecase import TorusLabelError
from cmheegner.domain.cm_point import CMPointError
from cmheegner.domain.complex_lattice import ToleranceError
from lfun.application.usecase.l_function_usecase import GoodReductionError, TwistParameterError
from lfun.domain.period_j import StabilizerConstructionError
from measure.domain.kernel import KernelSingularityError
from modsym.application.usecase.modular_symbol_usecase import BadPrimeError
from modsym.domain.curve_data import CurveValidationError
from modsym.domain.eigen_symbol import EigenspaceDimensionError
from modsym.domain.manin_basis import ManinBasisError
from padic.domain.padic_number import PadicDivisionByZeroError, PrecisionExhaustedError, PrimeMismatchError
from padic.utils.quadratic import QuadraticResidueError
from shpoint.domain.recognition import RecognitionError
from shpoint.domain.rm_point import RMPointError
from shpoint.utils.pell import PellSolverError

E_CURVE = "E_CURVE"
E_PRIME = "E_PRIME"
E_PRECISION = "E_PRECISION"
E_INPUT = "E_INPUT"
E_RECOGNITION = "E_RECOGNITION"
E_INTERNAL = "E_INTERNAL"

EXIT_STATUS = {
    E_CURVE: 2,
    E_PRIME: 2,
    E_INPUT: 2,
    E_PRECISION: 3,
    E_RECOGNITION: 3,
    E_INTERNAL: 1,
}


class InputError(ValueError):
    pass


# 앞에서부터 처음 맞는 항목을 씁니다
_CODES: tuple[tuple[tuple[type[BaseException], ...], str], ...] = (
    ((CurveValidationError, EigenspaceDimensionError, GoodReductionError), E_CURVE),
    (
        (
            RMPointError,
            CMPointError,
            QuadraticResidueError,
            BadPrimeError,
            ManinBasisError,
            PrimeMismatchError,
            PellSolverError,
        ),
        E_PRIME,
    ),
    ((RecognitionError,), E_RECOGNITION),
    ((PrecisionExhaustedError, PadicDivisionByZeroError, ToleranceError, KernelSingularityError), E_PRECISION),
    ((InputError, ValidationError, TwistParameterError, StabilizerConstructionError, TorusLabelError), E_INPUT),
)


def classify(error: BaseException) -> str:
    for classes, code in _CODES:
        if isinstance(error, classes):
            return code
    return E_INTERNAL
