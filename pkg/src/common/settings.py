# 実行時設定（.env / 環境変数）
from dotenv import load_dotenv
import logging
import os

load_dotenv()


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise RuntimeError(f"環境変数 {name} は整数で指定してください: {raw!r}")


# 既定の探索上限（レポートに毎回出力する）
DEFAULT_ARITY = _int_env("CATCOM_ARITY", 4)  # N
DEFAULT_SIZE = _int_env("CATCOM_SIZE", 3)  # K
DEFAULT_DEPTH = _int_env("CATCOM_DEPTH", 5)  # D
DEFAULT_MODEL_BOUND = _int_env("CATCOM_MODEL_BOUND", 4)  # B
DEFAULT_WORD_LEN = _int_env("CATCOM_WORD_LEN", 8)  # L

# 並列度の上限
THREADS = max(1, _int_env("CATCOM_THREADS", 1))

# 資源の上限
TERM_CEILING = _int_env("CATCOM_TERM_CEILING", 400_000)
CLONE_CEILING = _int_env("CATCOM_CLONE_CEILING", 200_000)
MODEL_CEILING = _int_env("CATCOM_MODEL_CEILING", 2_000_000)

# 検証器の網羅範囲
VALIDATE_ARITY = _int_env("CATCOM_VALIDATE_ARITY", 3)
VALIDATE_CASES = _int_env("CATCOM_VALIDATE_CASES", 200_000)

LOG_LEVEL = os.getenv("CATCOM_LOG_LEVEL", "WARNING").upper()


def configure_logging(verbose: bool = False) -> None:
    """ルートロガーを設定する。ログは stderr、レポートは stdout に分ける。"""
    level = logging.INFO if verbose else getattr(logging, LOG_LEVEL, logging.WARNING)
    logging.basicConfig(
        level=level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
