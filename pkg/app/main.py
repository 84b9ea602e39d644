import logging
import sys

from dotenv import load_dotenv

from cli.adapter.input.cli.command_router import main
from config.settings import LogSettings

load_dotenv()

# 로깅 설정 - stdout 은 JSON 전용이라 stderr 로 보냅니다
logging.basicConfig(
    level=LogSettings().level.upper(),
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    datefmt="%Y-%m-%d %H:%M:%S",
    stream=sys.stderr,
)


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
