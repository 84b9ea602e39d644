import os
from dataclasses import dataclass
from dotenv import load_dotenv

load_dotenv()


@dataclass
class CacheSettings:
    # 계수표(a_m, j 급수) 디스크 캐시 위치
    cache_dir: str = os.getenv("PLECTIC_CACHE_DIR", os.path.join("~", ".cache", "plectic-toolkit"))


@dataclass
class ComputeSettings:
    threads: int = int(os.getenv("PLECTIC_THREADS", "1"))
    precision: int = int(os.getenv("PLECTIC_PRECISION", "20"))
    depth: int = int(os.getenv("PLECTIC_DEPTH", "3"))
    cm_tolerance: float = float(os.getenv("PLECTIC_CM_TOLERANCE", "1e-5"))


@dataclass
class LogSettings:
    level: str = os.getenv("PLECTIC_LOG_LEVEL", "INFO")
