from pathlib import Path

from config.settings import CacheSettings

# 프로세스 전역 캐시 디렉터리 (처음 쓸 때 만듭니다)
_cache_dir: Path | None = None


def get_cache_dir() -> Path:
    global _cache_dir
    if _cache_dir is None:
        _cache_dir = Path(CacheSettings().cache_dir).expanduser()
        _cache_dir.mkdir(parents=True, exist_ok=True)
    return _cache_dir
