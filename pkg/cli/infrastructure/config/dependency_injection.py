from dotenv import load_dotenv
from dependency_injector import containers, providers

from cli.application.usecase.check_suite_usecase import CheckSuiteUseCase
from cmheegner.application.usecase.cm_heegner_usecase import CMHeegnerUseCase
from config.cache_config import get_cache_dir
from config.settings import ComputeSettings
from lfun.application.usecase.l_function_usecase import LFunctionUseCase
from measure.application.usecase.integration_usecase import IntegrationUseCase
from modsym.application.usecase.modular_symbol_usecase import ModularSymbolUseCase
from modsym.infrastructure.repository.file_coefficient_cache import FileCoefficientCache
from modsym.infrastructure.repository.memory_coefficient_cache import MemoryCoefficientCache
from shpoint.application.usecase.stark_heegner_usecase import StarkHeegnerUseCase


class Container(containers.DeclarativeContainer):
    config = providers.Configuration()

    # Repositories
    coefficient_cache = providers.Selector(
        config.cache_kind,
        file=providers.Singleton(FileCoefficientCache, cache_dir=config.cache_dir),
        memory=providers.Singleton(MemoryCoefficientCache),
    )

    # Use cases
    integration_usecase = providers.Singleton(
        IntegrationUseCase,
        threads=config.threads,
    )

    modular_symbol_usecase = providers.Singleton(
        ModularSymbolUseCase,
        cache=coefficient_cache,
    )

    l_function_usecase = providers.Singleton(
        LFunctionUseCase,
        symbols=modular_symbol_usecase,
        integration=integration_usecase,
        cache=coefficient_cache,
    )

    stark_heegner_usecase = providers.Factory(
        StarkHeegnerUseCase,
        l_function=l_function_usecase,
        integration=integration_usecase,
    )

    cm_heegner_usecase = providers.Factory(
        CMHeegnerUseCase,
        symbols=modular_symbol_usecase,
        integration=integration_usecase,
        tolerance=config.cm_tolerance,
        dps=config.cm_dps,
    )

    check_suite_usecase = providers.Factory(
        CheckSuiteUseCase,
        symbols=modular_symbol_usecase,
        l_function=l_function_usecase,
        radius=config.radius,
    )


def create_container(
    threads: int | None = None,
    cache_dir: str | None = None,
    use_cache: bool = True,
    radius: int = 3,
) -> Container:
    load_dotenv()
    settings = ComputeSettings()

    container = Container()
    container.config.from_dict({
        "cache_kind": "file" if use_cache else "memory",
        "cache_dir": cache_dir if cache_dir is not None else (str(get_cache_dir()) if use_cache else ""),
        "threads": threads if threads is not None else settings.threads,
        "cm_tolerance": settings.cm_tolerance,
        "cm_dps": 30,
        "radius": radius,
    })
    return container
