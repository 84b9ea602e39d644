import json
import logging
import os
import sys
from typing import Any, Dict

from cli.adapter.input.cli.command_router import parse_curve, run
from cli.adapter.input.cli.request.run_config import RunConfig
from config.settings import ComputeSettings

logger = logging.getLogger(__name__)


def run_check_suite_once(
    curve: str | None = None,
    prime: int | None = None,
    radius: int = 3,
    threads: int | None = None,
    use_cache: bool = True,
) -> Dict[str, Any]:
    """
    정확한 불변량 모음(check) 을 한 번 실행하고 결과 문서를 돌려줍니다.

    설정 방식:
    - PLECTIC_CHECK_CURVE: 곡선 계수 (기본 0,-1,1,-10,-20)
    - PLECTIC_CHECK_PRIME: 도체 (기본 11)
    """
    settings = ComputeSettings()
    config = RunConfig(
        command="check",
        curve=parse_curve(curve or os.getenv("PLECTIC_CHECK_CURVE", "0,-1,1,-10,-20")),
        prime=prime or int(os.getenv("PLECTIC_CHECK_PRIME", "11")),
        precision=settings.precision,
        radius=radius,
        threads=threads or settings.threads,
        use_cache=use_cache,
    )
    status, text = run(config)
    document = json.loads(text)
    if status != 0:
        logger.warning(f"[CHECK-BATCH] 종료 상태 {status}")
    return {"status": status, "document": document}


if __name__ == "__main__":
    logging.basicConfig(level=logging.INFO, format="%(asctime)s - %(name)s - %(levelname)s - %(message)s")
    result = run_check_suite_once()
    sys.exit(result["status"])
