import pytest

from lfun.application.usecase.l_function_usecase import LFunctionUseCase
from measure.application.usecase.integration_usecase import IntegrationUseCase
from modsym.application.usecase.modular_symbol_usecase import ModularSymbolUseCase
from modsym.domain.curve_data import CurveData
from modsym.infrastructure.repository.memory_coefficient_cache import MemoryCoefficientCache

# 도체 11 (분할, a_p = +1, t_E = 5)
CURVE_11 = (0, -1, 1, -10, -20)
# 도체 37 (비분할, a_p = −1, L(E,1) = 0)
CURVE_37 = (0, 0, 1, -1, 0)


@pytest.fixture(scope="session")
def curve11() -> CurveData:
    return CurveData.from_coefficients(CURVE_11, 11)


@pytest.fixture(scope="session")
def curve37() -> CurveData:
    return CurveData.from_coefficients(CURVE_37, 37)


@pytest.fixture(scope="session")
def cache() -> MemoryCoefficientCache:
    return MemoryCoefficientCache()


@pytest.fixture(scope="session")
def symbols(cache) -> ModularSymbolUseCase:
    return ModularSymbolUseCase(cache)


@pytest.fixture(scope="session")
def integration() -> IntegrationUseCase:
    return IntegrationUseCase(threads=1)


@pytest.fixture(scope="session")
def l_function(symbols, integration, cache) -> LFunctionUseCase:
    return LFunctionUseCase(symbols, integration, cache)


@pytest.fixture(scope="session")
def eigen11(symbols, curve11):
    return symbols.eigen_symbol(curve11)


@pytest.fixture(scope="session")
def tate11(l_function, curve11):
    return l_function.tate_period(curve11, 20)
